#include "tropattack/attack.hpp"

#include <chrono>
#include <optional>
#include <string>

#include "tropattack/disclog.hpp"
#include "tropattack/protocol.hpp"
#include "tropattack/scalar.hpp"
#include "tropattack/spectral.hpp"

namespace tropattack {

namespace {

struct RecoveredExponent {
    long long value = 0;
    bool trivial = false;  // found because the message equals m itself
};

// Exponent of one message in the lambda(h) <= 0 regime: either the message
// is m itself (exponent 1) or it appears in the short chain v f^l,
// l = 0..d-2 (exponent l+2). Messages of larger exponents have already
// stabilized and were caught by the Kleene comparison upstream.
std::optional<RecoveredExponent> scan_stable_regime(const TropMatrix& msg,
                                                    const TropMatrix& m, const TropMatrix& v,
                                                    const TropMatrix& f) {
    if (msg == m) return RecoveredExponent{1, true};
    TropMatrix cur = v;
    int d = f.rows();
    for (int l = 0; l <= d - 2; ++l) {
        if (cur == msg) return RecoveredExponent{l + 2, false};
        if (l < d - 2) cur = mat_mul(cur, f);
    }
    return std::nullopt;
}

}  // namespace

TropMatrix easy_case_key(const TropMatrix& m, const TropMatrix& h) {
    if (!m.is_square() || !h.is_square() || m.rows() != h.rows()) {
        throw DimensionError("easy_case_key: m and h must be square and the same size");
    }
    TropScalar lambda = max_cycle_mean(h);
    if (TropScalar(0) < lambda) {
        throw SpectrumError("easy_case_key: lambda(h) > 0, messages do not stabilize");
    }
    return mat_mul(mat_add(m, h), kleene_star(h));
}

AttackResult recover_key(const TropMatrix& m, const TropMatrix& h, const TropMatrix& a,
                         const TropMatrix& b, const AttackOptions& opts) {
    auto started = std::chrono::steady_clock::now();
    if (!m.is_square() || !h.is_square() || m.rows() != h.rows()) {
        throw DimensionError("recover_key: m and h must be square and the same size");
    }
    if (a.rows() != m.rows() || a.cols() != m.cols() || b.rows() != m.rows() ||
        b.cols() != m.cols()) {
        throw DimensionError("recover_key: messages must match the key size");
    }
    int d = m.rows();

    TropScalar lambda = max_cycle_mean(h);
    TropMatrix f = mat_add(TropMatrix::identity(d), h);
    TropMatrix v = mat_add(mat_mul(m, f), h);

    AttackResult res;
    std::optional<RecoveredExponent> m_rec;
    std::optional<RecoveredExponent> n_rec;

    if (!(TropScalar(0) < lambda)) {
        TropMatrix stable = easy_case_key(m, h);
        if (a == stable || b == stable) {
            res.key = stable;
            res.branch = AttackBranch::kEasyKleene;
            res.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
            return res;
        }
        // Neither message reached the fixpoint, so both exponents are at
        // most d and sit in the short chain.
        m_rec = scan_stable_regime(a, m, v, f);
        n_rec = scan_stable_regime(b, m, v, f);
        if (!m_rec || !n_rec) {
            throw AttackFailure(
                "recover_key: lambda(h) <= 0 but a message matches neither the fixpoint "
                "nor any power below the stabilization index; transcript is not genuine");
        }
        res.branch = (m_rec->trivial || n_rec->trivial) ? AttackBranch::kTrivialMessage
                                                        : AttackBranch::kSmallPower;
    } else {
        Ordering ord = mat_partial_order(a, b);
        if (ord == Ordering::kIncomparable) {
            throw AttackFailure(
                "recover_key: messages are incomparable; genuine messages of a growing "
                "instance form a chain");
        }

        // Only the exponent of the smaller message is needed: for a > b the
        // key is a (I+h)^n, for a < b it is b (I+h)^m, for a tie either
        // exponent works.
        bool need_m = (ord == Ordering::kLt || ord == Ordering::kEq);
        bool need_n = (ord == Ordering::kGt || ord == Ordering::kEq);

        auto recover_one = [&](const TropMatrix& msg) -> RecoveredExponent {
            if (msg == m) return RecoveredExponent{1, true};
            DisclogOptions dopts;
            dopts.light = opts.light_disclog;
            dopts.monotone_accel = true;  // f = I oplus h >= I by construction
            dopts.full_verify = false;
            try {
                DisclogResult dres = solve_disclog(DisclogInstance{msg, v, f}, dopts);
                return RecoveredExponent{dres.t + 2, false};
            } catch (const TropError& e) {
                throw AttackFailure(std::string("recover_key: discrete-log recovery failed "
                                                "(lambda(h) = ") +
                                    to_string(lambda) + "): " + e.what());
            }
        };

        if (need_m) m_rec = recover_one(a);
        if (need_n && ord == Ordering::kEq) {
            n_rec = m_rec;  // a == b, same instance either way
        } else if (need_n) {
            n_rec = recover_one(b);
        }
        res.branch = ((m_rec && m_rec->trivial) || (n_rec && n_rec->trivial))
                         ? AttackBranch::kTrivialMessage
                         : AttackBranch::kDisclog;
    }

    std::optional<long long> m_exp;
    std::optional<long long> n_exp;
    if (m_rec) m_exp = m_rec->value;
    if (n_rec) n_exp = n_rec->value;
    res.key = derive_shared_key_from_exponent(a, b, h, m_exp, n_exp);
    res.m_recovered = m_exp;
    res.n_recovered = n_exp;

    if (m_exp && n_exp) {
        // Replay the honest-party computation as a cross-check.
        TropMatrix hm = adjoint_power(h, *m_exp);
        TropMatrix replay = mat_add(mat_add(a, b), mat_add(hm, mat_mul(b, hm)));
        if (!(replay == res.key)) {
            throw AttackFailure(
                "recover_key: recovered exponents do not reproduce the derived key");
        }
    }

    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return res;
}

}  // namespace tropattack
