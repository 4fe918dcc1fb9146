#pragma once

#include <optional>

#include "tropattack/matrix.hpp"

namespace tropattack {

// Tropical discrete-log instance: recover t >= 0 from a = v f^t.
// a and v are m x d, f is d x d.
struct DisclogInstance {
    TropMatrix a;
    TropMatrix v;
    TropMatrix f;
};

enum class DisclogBranch {
    kDirectCatch,  // found by scanning small powers directly
    kCsrPeriodic,  // found through the periodic cycle-based factorization
};

struct DisclogOptions {
    // Check the periodic column identity at a single critical node instead
    // of all of them.
    bool light = false;
    // Replace the step-1 linear scan with binary search; only valid when
    // f >= I entrywise (the power sequence is then monotone), checked and
    // ignored otherwise.
    bool monotone_accel = false;
    // Recompute v f^t for the recovered t and compare against a.
    bool full_verify = true;
};

struct DisclogResult {
    long long t = 0;
    DisclogBranch branch = DisclogBranch::kDirectCatch;
    std::optional<TropScalar> mu;  // offset t * lambda, present on the periodic branch
    bool verified = false;
};

// Solves the instance. Requires lambda(f) != -inf (SpectrumError) and
// lambda(f) != 0 (PeriodicAmbiguityError: with lambda = 0 the powers
// eventually cycle and no algorithm can pin t). Throws NotFoundError when no
// consistent exponent exists.
DisclogResult solve_disclog(const DisclogInstance& inst, const DisclogOptions& opts = {});

enum class WellDefinedness {
    kWellDefined,     // v finite everywhere, f irreducible, lambda != 0
    kNotWellDefined,  // v finite everywhere, f irreducible, lambda == 0
    kIndeterminate,   // outside the hypotheses; no verdict either way
};

// Whether the map t -> v f^t is injective for t above the stability
// threshold, as far as the finite/irreducible criterion can tell.
WellDefinedness disclog_well_defined(const TropMatrix& v, const TropMatrix& f);

}  // namespace tropattack
