#include "tropattack/semidirect.hpp"

namespace tropattack {

TropMatrix adjoint_product(const TropMatrix& a, const TropMatrix& b) {
    return mat_add(mat_add(a, b), mat_mul(a, b));
}

TropMatrix adjoint_power(const TropMatrix& a, long long n) {
    if (!a.is_square()) throw DimensionError("adjoint_power: matrix is not square");
    if (n < 1) throw InputError("adjoint_power: exponent must be >= 1");
    // The all--inf matrix is neutral for the adjoint product, so plain
    // square-and-multiply applies.
    TropMatrix acc = TropMatrix::all_neg_inf(a.rows(), a.cols());
    TropMatrix base = a;
    while (n > 0) {
        if (n & 1) acc = adjoint_product(acc, base);
        n >>= 1;
        if (n > 0) base = adjoint_product(base, base);
    }
    return acc;
}

MatrixPair semidirect_product(const MatrixPair& p, const MatrixPair& q) {
    const TropMatrix& m = p.first;
    const TropMatrix& g = p.second;
    const TropMatrix& a = q.first;
    const TropMatrix& h = q.second;
    MatrixPair out;
    out.first = mat_add(mat_add(m, a), mat_add(h, mat_mul(m, h)));
    out.second = adjoint_product(g, h);
    return out;
}

MatrixPair semidirect_power(const MatrixPair& p, long long k, PowerMode mode) {
    if (!p.first.is_square() || p.first.rows() != p.second.rows() ||
        p.first.cols() != p.second.cols()) {
        throw DimensionError("semidirect_power: pair members must be square and same size");
    }
    if (k < 1) throw InputError("semidirect_power: exponent must be >= 1");
    if (k == 1) return p;

    if (mode == PowerMode::kInductive) {
        // No neutral pair exists, so track whether the accumulator is live.
        MatrixPair acc;
        bool have = false;
        MatrixPair base = p;
        long long rem = k;
        while (rem > 0) {
            if (rem & 1) {
                acc = have ? semidirect_product(acc, base) : base;
                have = true;
            }
            rem >>= 1;
            if (rem > 0) base = semidirect_product(base, base);
        }
        return acc;
    }

    const TropMatrix& m = p.first;
    const TropMatrix& h = p.second;
    TropMatrix f = mat_add(TropMatrix::identity(h.rows()), h);
    TropMatrix v = mat_add(mat_mul(m, f), h);
    MatrixPair out;
    out.first = mat_mul(v, mat_pow(f, k - 2));
    out.second = adjoint_power(h, k);
    return out;
}

}  // namespace tropattack
