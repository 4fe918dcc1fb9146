#pragma once

// Internal fast path for matrices whose entries are all integers or -inf.
// Entries are packed into int64 with a reserved sentinel for -inf, and the
// max-plus product runs as a flat loop with overflow-checked additions.
// Not installed; shared between matrix.cpp and disclog.cpp only.

#include <cstdint>
#include <limits>
#include <vector>

#include "tropattack/errors.hpp"
#include "tropattack/matrix.hpp"

namespace tropattack::detail {

inline constexpr std::int64_t kNegInfPacked = std::numeric_limits<std::int64_t>::min();

struct PackedMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> v;

    std::int64_t at(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }
};

inline PackedMatrix pack(const TropMatrix& m) {
    PackedMatrix p;
    p.rows = m.rows();
    p.cols = m.cols();
    p.v.resize(static_cast<std::size_t>(p.rows) * p.cols);
    const auto& e = m.entries();
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
        p.v[idx] = e[idx].is_neg_inf() ? kNegInfPacked : e[idx].num();
    }
    return p;
}

inline TropMatrix unpack(const PackedMatrix& p) {
    TropMatrix m(p.rows, p.cols);
    for (int i = 0; i < p.rows; ++i) {
        for (int j = 0; j < p.cols; ++j) {
            std::int64_t x = p.at(i, j);
            m.at(i, j) = (x == kNegInfPacked) ? TropScalar::neg_inf() : TropScalar(x);
        }
    }
    return m;
}

// out = a otimes b. out must not alias a or b.
inline void packed_mul(const PackedMatrix& a, const PackedMatrix& b, PackedMatrix& out) {
    out.rows = a.rows;
    out.cols = b.cols;
    out.v.assign(static_cast<std::size_t>(a.rows) * b.cols, kNegInfPacked);
    for (int i = 0; i < a.rows; ++i) {
        std::int64_t* crow = out.v.data() + static_cast<std::size_t>(i) * b.cols;
        const std::int64_t* arow = a.v.data() + static_cast<std::size_t>(i) * a.cols;
        for (int k = 0; k < a.cols; ++k) {
            std::int64_t aik = arow[k];
            if (aik == kNegInfPacked) continue;
            const std::int64_t* brow = b.v.data() + static_cast<std::size_t>(k) * b.cols;
            for (int j = 0; j < b.cols; ++j) {
                std::int64_t bkj = brow[j];
                if (bkj == kNegInfPacked) continue;
                std::int64_t sum = 0;
                if (__builtin_add_overflow(aik, bkj, &sum)) {
                    throw OverflowError("mat_mul: entry exceeds 64-bit range");
                }
                if (sum > crow[j]) crow[j] = sum;
            }
        }
    }
}

inline bool packed_equal(const PackedMatrix& a, const PackedMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.v == b.v;
}

}  // namespace tropattack::detail
