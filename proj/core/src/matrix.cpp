#include "tropattack/matrix.hpp"

#include <string>

#include "int_kernel.hpp"

namespace tropattack {

namespace {

std::string shape(const TropMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

TropMatrix mul_generic(const TropMatrix& a, const TropMatrix& b) {
    TropMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const TropScalar& aik = a.at(i, k);
            if (aik.is_neg_inf()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const TropScalar& bkj = b.at(k, j);
                if (bkj.is_neg_inf()) continue;
                TropScalar cand = trop_mul(aik, bkj);
                if (c.at(i, j) < cand) c.at(i, j) = cand;
            }
        }
    }
    return c;
}

}  // namespace

TropMatrix TropMatrix::from_rows(
    std::initializer_list<std::initializer_list<TropScalar>> rows) {
    std::vector<std::vector<TropScalar>> data;
    data.reserve(rows.size());
    for (const auto& row : rows) data.emplace_back(row);
    return from_rows(data);
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
    int r = static_cast<int>(rows.size());
    if (r == 0) throw DimensionError("from_rows: no rows");
    int c = static_cast<int>(rows.front().size());
    TropMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) {
            throw DimensionError("from_rows: ragged rows");
        }
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool TropMatrix::integer_entries() const {
    for (const auto& e : entries_) {
        if (e.is_finite() && e.den() != 1) return false;
    }
    return true;
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("mat_add: shapes " + shape(a) + " and " + shape(b) + " differ");
    }
    TropMatrix c = a;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (c.at(i, j) < b.at(i, j)) c.at(i, j) = b.at(i, j);
        }
    }
    return c;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions " + shape(a) + " * " + shape(b) +
                             " do not match");
    }
    if (a.integer_entries() && b.integer_entries()) {
        detail::PackedMatrix pa = detail::pack(a);
        detail::PackedMatrix pb = detail::pack(b);
        detail::PackedMatrix pc;
        detail::packed_mul(pa, pb, pc);
        return detail::unpack(pc);
    }
    return mul_generic(a, b);
}

TropMatrix mat_pow(const TropMatrix& a, long long t) {
    if (!a.is_square()) throw DimensionError("mat_pow: matrix is not square (" + shape(a) + ")");
    if (t < 0) throw InputError("mat_pow: negative exponent");
    TropMatrix result = TropMatrix::identity(a.rows());
    TropMatrix base = a;
    while (t > 0) {
        if (t & 1) result = mat_mul(result, base);
        t >>= 1;
        if (t > 0) base = mat_mul(base, base);
    }
    return result;
}

Ordering mat_partial_order(const TropMatrix& a, const TropMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("mat_partial_order: shapes " + shape(a) + " and " + shape(b) +
                             " differ");
    }
    bool le = true;
    bool ge = true;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            auto cmp = a.at(i, j) <=> b.at(i, j);
            if (cmp == std::strong_ordering::less) ge = false;
            if (cmp == std::strong_ordering::greater) le = false;
        }
    }
    if (le && ge) return Ordering::kEq;
    if (le) return Ordering::kLt;
    if (ge) return Ordering::kGt;
    return Ordering::kIncomparable;
}

TropMatrix scalar_mul(const TropScalar& s, const TropMatrix& a) {
    TropMatrix c = a;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            c.at(i, j) = trop_mul(s, c.at(i, j));
        }
    }
    return c;
}

TropMatrix transpose(const TropMatrix& a) {
    TropMatrix c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            c.at(j, i) = a.at(i, j);
        }
    }
    return c;
}

}  // namespace tropattack
