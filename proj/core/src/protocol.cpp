#include "tropattack/protocol.hpp"

namespace tropattack {

namespace {

void require_instance_shapes(const TropMatrix& m, const TropMatrix& h) {
    if (!m.is_square() || !h.is_square() || m.rows() != h.rows()) {
        throw DimensionError("protocol: m and h must be square and the same size");
    }
}

}  // namespace

Transcript run_protocol(const ProtocolInstance& inst) {
    require_instance_shapes(inst.m, inst.h);
    if (inst.m_exp < 1 || inst.n_exp < 1) {
        throw InputError("run_protocol: exponents must be >= 1");
    }
    MatrixPair base{inst.m, inst.h};
    MatrixPair alice = semidirect_power(base, inst.m_exp, PowerMode::kClosedForm);
    MatrixPair bob = semidirect_power(base, inst.n_exp, PowerMode::kClosedForm);

    Transcript tr;
    tr.a = alice.first;
    tr.b = bob.first;
    // Alice holds h^(o m), Bob h^(o n); each finishes with the other side's
    // public message.
    tr.k_a = mat_add(mat_add(tr.a, tr.b),
                     mat_add(alice.second, mat_mul(tr.b, alice.second)));
    tr.k_b = mat_add(mat_add(tr.a, tr.b),
                     mat_add(bob.second, mat_mul(tr.a, bob.second)));
    if (!(tr.k_a == tr.k_b)) {
        throw ProtocolInvariantError("run_protocol: derived keys disagree");
    }
    return tr;
}

TropMatrix derive_shared_key_from_exponent(const TropMatrix& a, const TropMatrix& b,
                                           const TropMatrix& h,
                                           std::optional<long long> m_exp,
                                           std::optional<long long> n_exp) {
    if (!h.is_square() || a.rows() != h.rows() || a.cols() != h.cols() ||
        b.rows() != h.rows() || b.cols() != h.cols()) {
        throw DimensionError("derive_shared_key_from_exponent: shape mismatch");
    }
    if ((m_exp && *m_exp < 1) || (n_exp && *n_exp < 1)) {
        throw InputError("derive_shared_key_from_exponent: exponents must be >= 1");
    }
    if (!m_exp && !n_exp) {
        throw InputError("derive_shared_key_from_exponent: need at least one exponent");
    }
    TropMatrix f = mat_add(TropMatrix::identity(h.rows()), h);

    auto equal_case = [&](long long e) {
        return mat_add(mat_mul(a, mat_pow(f, e)), mat_mul(h, mat_pow(f, e - 1)));
    };

    if (m_exp && n_exp) {
        if (*m_exp > *n_exp) return mat_mul(a, mat_pow(f, *n_exp));
        if (*n_exp > *m_exp) return mat_mul(b, mat_pow(f, *m_exp));
        return equal_case(*n_exp);
    }

    // One exponent known: the entrywise order of the messages decides which
    // formula applies.
    Ordering ord = mat_partial_order(a, b);
    if (n_exp) {
        if (ord == Ordering::kEq) return equal_case(*n_exp);
        if (ord == Ordering::kGt) return mat_mul(a, mat_pow(f, *n_exp));
        throw InputError(
            "derive_shared_key_from_exponent: key needs the other exponent (a < b)");
    }
    if (ord == Ordering::kEq) return equal_case(*m_exp);
    if (ord == Ordering::kLt) return mat_mul(b, mat_pow(f, *m_exp));
    throw InputError("derive_shared_key_from_exponent: key needs the other exponent (a > b)");
}

bool order_implications_check(const TropMatrix& a, const TropMatrix& b, long long m_exp,
                              long long n_exp) {
    Ordering ord = mat_partial_order(a, b);
    bool a_ge_b = ord == Ordering::kEq || ord == Ordering::kGt;
    bool b_ge_a = ord == Ordering::kEq || ord == Ordering::kLt;
    if (m_exp > n_exp && !a_ge_b) return false;
    if (n_exp > m_exp && !b_ge_a) return false;
    if (ord == Ordering::kGt && !(m_exp > n_exp)) return false;
    if (ord == Ordering::kLt && !(n_exp > m_exp)) return false;
    return true;
}

}  // namespace tropattack
