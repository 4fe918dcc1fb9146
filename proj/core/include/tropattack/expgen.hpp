#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropattack/matrix.hpp"
#include "tropattack/rng.hpp"

namespace tropattack {

enum class GenKind {
    kRandomFinite,           // i.i.d. uniform integer entries
    kSpecialThreeComponent,  // block construction with >= 3 critical components
};

struct GenSpec {
    int d = 0;
    GenKind kind = GenKind::kRandomFinite;
    long long lo = -100;  // entry range for kRandomFinite
    long long hi = 100;
    std::uint64_t seed = 0;
};

// d x d matrix with i.i.d. uniform integer entries in [lo, hi].
TropMatrix gen_uniform_matrix(int d, long long lo, long long hi, std::uint64_t seed);
TropMatrix gen_uniform_matrix(int d, long long lo, long long hi, Rng& rng);

// The pre-substitution 0/-inf stage of the special construction: a block
// diagonal pattern whose diagonal blocks each contain a cycle of weight-0
// arcs. k1 and k2 are the block boundaries (blocks are [0,k1), [k1,k2),
// [k2,d)).
struct SpecialPattern {
    TropMatrix pattern;
    int k1 = 0;
    int k2 = 0;
};

SpecialPattern gen_special_zero_pattern(int d, Rng& rng);

// Full special construction: the 0/-inf pattern, then every -inf entry
// replaced by a uniform draw from [-100,-1], a uniform offset from [1,100]
// added to the whole matrix, and a diagonal similarity with uniform
// [-100,100] diagonal applied. The result is finite (hence irreducible),
// has maximum cycle mean equal to the offset (> 0), and its critical graph
// splits into at least three strongly connected components for d >= 6.
TropMatrix gen_special_matrix(const GenSpec& spec);
TropMatrix gen_special_matrix(int d, Rng& rng);

// Conjugation by a diagonal matrix: entry (i,j) becomes h_ij - diag_i +
// diag_j. Preserves cycle weights, hence the maximum cycle mean and the
// critical graph.
TropMatrix scale_by_diagonal(const TropMatrix& h, const std::vector<long long>& diag);

struct ExperimentRecord {
    int d = 0;
    int trial = 0;
    std::uint64_t seed = 0;  // derived per-trial stream seed
    GenKind kind = GenKind::kRandomFinite;
    bool success = false;
    std::string branch;
    double elapsed_ms = 0.0;
    long long m_exp = 0;
    long long n_exp = 0;
};

struct DimSummary {
    int d = 0;
    GenKind kind = GenKind::kRandomFinite;
    int trials = 0;
    double success_rate = 0.0;
    double mean_ms = 0.0;
    double max_ms = 0.0;
};

struct TrialsOutput {
    std::vector<ExperimentRecord> records;
    std::vector<DimSummary> summary;
};

// End-to-end protocol + attack trials. Per dimension d, runs trials_per_dim
// independent instances: h per kind (resampled until lambda(h) > 0), m
// uniform in [-100,100], exponents uniform in [(d-1)^2+1, d^2]. Each trial
// draws from its own stream derived from (seed, d, trial), so results do
// not depend on scheduling; timing covers the attack call only. Failed
// trials are recorded (never thrown) and, when counterexample_dir is
// nonempty, archived there as JSON. threads <= 0 selects the hardware
// concurrency.
TrialsOutput run_trials(const std::vector<int>& dims, int trials_per_dim, GenKind kind,
                        std::uint64_t seed, int threads = 0,
                        const std::string& counterexample_dir = "");

const char* gen_kind_name(GenKind kind);

}  // namespace tropattack
