#pragma once

#include <initializer_list>
#include <vector>

#include "tropattack/scalar.hpp"

namespace tropattack {

// Entrywise comparison outcome. mat_partial_order returns the strongest
// relation that holds, so only kEq, kLt, kGt and kIncomparable ever come
// back; kLe/kGe are provided for callers that want to test weak relations.
enum class Ordering { kEq, kLt, kGt, kLe, kGe, kIncomparable };

// Dense matrix over the max-plus semiring, row-major.
class TropMatrix {
public:
    TropMatrix() = default;  // 0x0 placeholder

    TropMatrix(int rows, int cols, TropScalar fill = TropScalar::neg_inf())
        : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
        entries_.assign(static_cast<std::size_t>(rows) * cols, fill);
    }

    static TropMatrix identity(int n) {
        TropMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = TropScalar(0);
        return m;
    }

    static TropMatrix all_zeros(int rows, int cols) {
        return TropMatrix(rows, cols, TropScalar(0));
    }

    static TropMatrix all_neg_inf(int rows, int cols) {
        return TropMatrix(rows, cols, TropScalar::neg_inf());
    }

    static TropMatrix from_rows(std::initializer_list<std::initializer_list<TropScalar>> rows);
    static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    const TropScalar& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    TropScalar& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<TropScalar>& entries() const { return entries_; }

    // True when every entry is an integer or -inf (no proper fractions).
    bool integer_entries() const;

    friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<TropScalar> entries_;
};

// Entrywise max. Shapes must agree.
TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);

// Max-plus product: c_ij = max_k (a_ik + b_kj). Inner dimensions must agree.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

// t-th max-plus power of a square matrix by repeated squaring; t = 0 gives
// the identity.
TropMatrix mat_pow(const TropMatrix& a, long long t);

// Strongest entrywise relation between two same-shaped matrices.
Ordering mat_partial_order(const TropMatrix& a, const TropMatrix& b);

// Adds s to every entry (tropical scalar multiple).
TropMatrix scalar_mul(const TropScalar& s, const TropMatrix& a);

TropMatrix transpose(const TropMatrix& a);

}  // namespace tropattack
