#include "tropattack/disclog.hpp"

#include <utility>
#include <vector>

#include "int_kernel.hpp"
#include "tropattack/csr.hpp"
#include "tropattack/spectral.hpp"

namespace tropattack {

namespace {

bool entrywise_ge(const TropMatrix& x, const TropMatrix& y) {
    Ordering ord = mat_partial_order(x, y);
    return ord == Ordering::kEq || ord == Ordering::kGt;
}

// v f^t with lazily grown cache of repeated squarings of f.
TropMatrix apply_power(const TropMatrix& v, const TropMatrix& f,
                       std::vector<TropMatrix>& squares, long long t) {
    TropMatrix result = v;
    int bit = 0;
    while (t >> bit) {
        if (bit >= static_cast<int>(squares.size())) {
            squares.push_back(squares.empty() ? f
                                              : mat_mul(squares.back(), squares.back()));
        }
        if ((t >> bit) & 1) result = mat_mul(result, squares[bit]);
        ++bit;
    }
    return result;
}

std::optional<long long> scan_linear(const TropMatrix& a, const TropMatrix& v,
                                     const TropMatrix& f, long long tmax) {
    if (a.integer_entries() && v.integer_entries() && f.integer_entries()) {
        detail::PackedMatrix pa = detail::pack(a);
        detail::PackedMatrix cur = detail::pack(v);
        detail::PackedMatrix pf = detail::pack(f);
        detail::PackedMatrix tmp;
        for (long long t = 0; t <= tmax; ++t) {
            if (detail::packed_equal(cur, pa)) return t;
            if (t < tmax) {
                detail::packed_mul(cur, pf, tmp);
                std::swap(cur, tmp);
            }
        }
        return std::nullopt;
    }
    TropMatrix cur = v;
    for (long long t = 0; t <= tmax; ++t) {
        if (cur == a) return t;
        if (t < tmax) cur = mat_mul(cur, f);
    }
    return std::nullopt;
}

// Binary search for the smallest t with v f^t >= a; valid because the power
// sequence is entrywise nondecreasing when f >= I. Equality can only occur
// at that first point.
std::optional<long long> scan_monotone(const TropMatrix& a, const TropMatrix& v,
                                       const TropMatrix& f,
                                       std::vector<TropMatrix>& squares, long long tmax) {
    long long lo = 0;
    long long hi = tmax;
    if (!entrywise_ge(apply_power(v, f, squares, tmax), a)) return std::nullopt;
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (entrywise_ge(apply_power(v, f, squares, mid), a)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (apply_power(v, f, squares, lo) == a) return lo;
    return std::nullopt;
}

}  // namespace

DisclogResult solve_disclog(const DisclogInstance& inst, const DisclogOptions& opts) {
    const TropMatrix& a = inst.a;
    const TropMatrix& v = inst.v;
    const TropMatrix& f = inst.f;
    if (!f.is_square()) throw DimensionError("solve_disclog: f is not square");
    if (v.cols() != f.rows() || a.rows() != v.rows() || a.cols() != v.cols()) {
        throw DimensionError("solve_disclog: a, v, f shapes are inconsistent");
    }
    int d = f.rows();

    TropScalar lambda = max_cycle_mean(f);
    if (lambda.is_neg_inf()) {
        throw SpectrumError("solve_disclog: f is acyclic, powers vanish");
    }
    if (lambda == TropScalar(0)) {
        throw PeriodicAmbiguityError(
            "solve_disclog: lambda = 0, high powers repeat and t cannot be pinned");
    }

    std::vector<TropMatrix> squares;
    long long tmax = power_stability_threshold(d) - 1;  // (d-1)^2

    std::optional<long long> direct;
    if (opts.monotone_accel && entrywise_ge(f, TropMatrix::identity(d))) {
        direct = scan_monotone(a, v, f, squares, tmax);
    } else {
        direct = scan_linear(a, v, f, tmax);
    }
    if (direct) {
        DisclogResult res;
        res.t = *direct;
        res.branch = DisclogBranch::kDirectCatch;
        res.verified = true;  // the scan compared v f^t with a directly
        return res;
    }

    // Above the stability threshold the cycle columns of v f^t equal
    // (t * lambda) + v C S^(t mod l), so each candidate residue k yields at
    // most one offset mu and t = mu / lambda.
    CriticalCycle z = find_critical_cycle(f);
    CsrTriple csr = build_csr_from_cycle(f, z, lambda);
    int l = z.length();
    TropMatrix cur = mat_mul(v, csr.c);

    for (int k = 0; k < l; ++k) {
        if (k > 0) {
            TropMatrix next(cur.rows(), cur.cols());
            for (int p = 0; p < l; ++p) {
                int from = z.nodes[p];
                int to = z.nodes[(p + 1) % l];
                const TropScalar& w = csr.s.at(from, to);
                for (int i = 0; i < cur.rows(); ++i) {
                    next.at(i, to) = trop_mul(cur.at(i, from), w);
                }
            }
            cur = std::move(next);
        }

        bool consistent = true;
        bool have_mu = false;
        TropScalar mu;
        for (std::size_t idx = 0; idx < z.nodes.size() && consistent; ++idx) {
            if (opts.light && idx > 0) break;
            int col = z.nodes[idx];
            for (int row = 0; row < a.rows(); ++row) {
                const TropScalar& lhs = a.at(row, col);
                const TropScalar& rhs = cur.at(row, col);
                if (lhs.is_neg_inf() != rhs.is_neg_inf()) {
                    consistent = false;
                    break;
                }
                if (lhs.is_neg_inf()) continue;
                TropScalar diff = trop_mul(lhs, trop_neg(rhs));
                if (!have_mu) {
                    mu = diff;
                    have_mu = true;
                } else if (mu != diff) {
                    consistent = false;
                    break;
                }
            }
        }
        if (!consistent || !have_mu) continue;

        TropScalar t_exact = rational_div(mu, lambda);
        if (!t_exact.is_integer()) continue;
        long long t = t_exact.as_integer();
        if (t < power_stability_threshold(d)) continue;
        if (t % l != k) continue;

        DisclogResult res;
        res.t = t;
        res.branch = DisclogBranch::kCsrPeriodic;
        res.mu = mu;
        res.verified = opts.full_verify && apply_power(v, f, squares, t) == a;
        return res;
    }

    throw NotFoundError("solve_disclog: no exponent consistent with the instance");
}

WellDefinedness disclog_well_defined(const TropMatrix& v, const TropMatrix& f) {
    if (!f.is_square() || v.cols() != f.rows()) {
        throw DimensionError("disclog_well_defined: v, f shapes are inconsistent");
    }
    bool v_finite = true;
    for (const auto& e : v.entries()) {
        if (e.is_neg_inf()) {
            v_finite = false;
            break;
        }
    }
    if (!v_finite || !is_irreducible(f)) return WellDefinedness::kIndeterminate;
    return max_cycle_mean(f) == TropScalar(0) ? WellDefinedness::kNotWellDefined
                                              : WellDefinedness::kWellDefined;
}

}  // namespace tropattack
