#pragma once

#include <vector>

#include "tropattack/spectral.hpp"

namespace tropattack {

// Smallest exponent from which the cycle-based expansion of matrix powers
// is guaranteed to hold for a d x d matrix.
inline long long power_stability_threshold(int d) {
    long long k = d - 1;
    return k * k + 1;
}

// Cycle-based factorization of high matrix powers. For a matrix f with
// maximum cycle mean lambda and critical cycle Z of length l, powers
// f^t with t >= power_stability_threshold(d) decompose as
//   f^t = (t * lambda) + C S^(t mod l) R  oplus  b^t
// where b is f with the rows and columns of Z's critical component erased.
struct CsrTriple {
    TropMatrix c;
    TropMatrix s;
    TropMatrix r;
    TropScalar lambda;
    CriticalCycle cycle;
};

struct BMatrix {
    TropMatrix matrix;
    std::vector<int> removed;  // sorted node indices whose rows/cols are -inf
};

// Builds C, S, R for a critical cycle z of f. lambda must be the maximum
// cycle mean of f; z is verified and rejected with InputError otherwise.
CsrTriple build_csr_from_cycle(const TropMatrix& f, const CriticalCycle& z,
                               const TropScalar& lambda);

// C S^(t mod l) R (or, with include_r = false, just C S^(t mod l)). The S
// powers are applied as column permutations plus scalar shifts, never by
// dense multiplication.
TropMatrix csr_term(const CsrTriple& csr, long long t, bool include_r);

// Copy of f with the given rows and columns erased to -inf.
BMatrix b_matrix(const TropMatrix& f, const std::vector<int>& removed);

struct ExpansionSides {
    TropMatrix lhs;  // f^t computed directly
    TropMatrix rhs;  // cycle-based expansion
};

// Both sides of the expansion above, computed independently, for tests and
// diagnostics. Requires t >= power_stability_threshold(d) and a non-(-inf)
// maximum cycle mean.
ExpansionSides csr_expansion_residual(const TropMatrix& f, long long t);

}  // namespace tropattack
