#pragma once

#include "tropattack/matrix.hpp"

namespace tropattack {

struct MatrixPair {
    TropMatrix first;
    TropMatrix second;

    friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

// Adjoint product a o b = a oplus b oplus (a otimes b). Associative, and the
// all--inf matrix is neutral on both sides.
TropMatrix adjoint_product(const TropMatrix& a, const TropMatrix& b);

// n-th adjoint power a oplus a^2 oplus ... oplus a^n, n >= 1, by repeated
// squaring in the adjoint product.
TropMatrix adjoint_power(const TropMatrix& a, long long n);

// Semidirect product (m, g) * (a, h) = (m oplus a oplus h oplus m otimes h,
// g o h).
MatrixPair semidirect_product(const MatrixPair& p, const MatrixPair& q);

enum class PowerMode {
    kInductive,   // repeated squaring of pairs in the semidirect product
    kClosedForm,  // direct formula for the k-th power, k >= 1
};

// k-th semidirect power of (m, h), k >= 1. The closed form evaluates
//   ((m (I oplus h) oplus h) (I oplus h)^(k-2), h^(o k))   for k >= 2
// and both modes agree on every input.
MatrixPair semidirect_power(const MatrixPair& p, long long k,
                            PowerMode mode = PowerMode::kClosedForm);

}  // namespace tropattack
