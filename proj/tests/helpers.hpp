#pragma once

// doctest glue on top of the shared reference implementations: pretty
// printers so failed matrix comparisons show both operands.

#include "doctest.h"

#include "tropattack/io.hpp"

#include "oracles.hpp"

namespace tropattack {

inline doctest::String toString(const TropMatrix& m) {
    if (m.rows() == 0) return "<empty>";
    return ("\n" + matrix_to_tsv(m)).c_str();
}

inline doctest::String toString(const TropScalar& s) { return to_string(s).c_str(); }

}  // namespace tropattack
