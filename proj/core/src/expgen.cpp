#include "tropattack/expgen.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <thread>

#include "tropattack/attack.hpp"
#include "tropattack/csr.hpp"
#include "tropattack/io.hpp"
#include "tropattack/protocol.hpp"
#include "tropattack/spectral.hpp"

namespace tropattack {

namespace {

// True when the 0-weight digraph of a block pattern contains a cycle.
bool pattern_has_cycle(const TropMatrix& block) {
    int n = block.rows();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    auto dfs = [&](auto& self, int v) -> bool {
        state[v] = 1;
        for (int w = 0; w < n; ++w) {
            if (block.at(v, w).is_neg_inf()) continue;
            if (state[w] == 1) return true;
            if (state[w] == 0 && self(self, w)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (state[v] == 0 && dfs(dfs, v)) return true;
    }
    return false;
}

// A size x size 0/-inf pattern with -inf diagonal, roughly one third of the
// off-diagonal entries zero, resampled until it contains a cycle. Size-1
// blocks (possible only for d < 6) carry a weight-0 self-loop instead.
TropMatrix gen_block_pattern(int size, Rng& rng) {
    if (size == 1) return TropMatrix::all_zeros(1, 1);
    while (true) {
        TropMatrix block(size, size);
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                if (i == j) continue;
                if (rng.uniform_int(0, 2) == 0) block.at(i, j) = TropScalar(0);
            }
        }
        if (pattern_has_cycle(block)) return block;
    }
}

std::pair<int, int> pick_block_boundaries(int d, Rng& rng) {
    if (d >= 6) {
        int k1 = static_cast<int>(std::llround(d / 3.0));
        k1 = std::clamp(k1, 2, d - 4);
        int k2 = static_cast<int>(rng.uniform_int(k1 + 2, d - 2));
        return {k1, k2};
    }
    // Degraded small-d split: as even as possible, up to three blocks.
    switch (d) {
        case 2: return {1, 2};
        case 3: return {1, 2};
        case 4: return {2, 3};
        default: return {2, 4};  // d == 5
    }
}

}  // namespace

const char* gen_kind_name(GenKind kind) {
    return kind == GenKind::kRandomFinite ? "uniform" : "special";
}

TropMatrix gen_uniform_matrix(int d, long long lo, long long hi, Rng& rng) {
    if (d < 1) throw InputError("gen_uniform_matrix: dimension must be >= 1");
    if (lo > hi) throw InputError("gen_uniform_matrix: empty entry range");
    TropMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m.at(i, j) = TropScalar(rng.uniform_int(lo, hi));
        }
    }
    return m;
}

TropMatrix gen_uniform_matrix(int d, long long lo, long long hi, std::uint64_t seed) {
    Rng rng(seed);
    return gen_uniform_matrix(d, lo, hi, rng);
}

SpecialPattern gen_special_zero_pattern(int d, Rng& rng) {
    if (d < 2) throw InputError("gen_special_zero_pattern: dimension must be >= 2");
    auto [k1, k2] = pick_block_boundaries(d, rng);
    SpecialPattern out{TropMatrix(d, d), k1, k2};
    int bounds[4] = {0, k1, k2, d};
    for (int bidx = 0; bidx < 3; ++bidx) {
        int lo = bounds[bidx];
        int size = bounds[bidx + 1] - lo;
        if (size <= 0) continue;
        TropMatrix block = gen_block_pattern(size, rng);
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                out.pattern.at(lo + i, lo + j) = block.at(i, j);
            }
        }
    }
    return out;
}

TropMatrix gen_special_matrix(int d, Rng& rng) {
    SpecialPattern sp = gen_special_zero_pattern(d, rng);
    TropMatrix h = sp.pattern;
    // Substitute the -inf entries with negative weights, then lift the whole
    // matrix: the original 0-cycles become the unique critical cycles with
    // mean exactly the lift.
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (h.at(i, j).is_neg_inf()) h.at(i, j) = TropScalar(rng.uniform_int(-100, -1));
        }
    }
    TropScalar lift(rng.uniform_int(1, 100));
    h = scalar_mul(lift, h);

    std::vector<long long> diag(d);
    for (int i = 0; i < d; ++i) diag[i] = rng.uniform_int(-100, 100);
    return scale_by_diagonal(h, diag);
}

TropMatrix gen_special_matrix(const GenSpec& spec) {
    if (spec.kind != GenKind::kSpecialThreeComponent) {
        throw InputError("gen_special_matrix: wrong generator kind");
    }
    Rng rng(spec.seed);
    return gen_special_matrix(spec.d, rng);
}

TropMatrix scale_by_diagonal(const TropMatrix& h, const std::vector<long long>& diag) {
    if (!h.is_square() || static_cast<int>(diag.size()) != h.rows()) {
        throw DimensionError("scale_by_diagonal: diagonal size must match the matrix");
    }
    TropMatrix out = h;
    for (int i = 0; i < h.rows(); ++i) {
        for (int j = 0; j < h.cols(); ++j) {
            if (!out.at(i, j).is_finite()) continue;
            out.at(i, j) = trop_mul(out.at(i, j),
                                    trop_mul(TropScalar(-diag[i]), TropScalar(diag[j])));
        }
    }
    return out;
}

namespace {

const char* branch_name(AttackBranch b) {
    switch (b) {
        case AttackBranch::kEasyKleene: return "easy_kleene";
        case AttackBranch::kTrivialMessage: return "trivial_message";
        case AttackBranch::kSmallPower: return "small_power";
        case AttackBranch::kDisclog: return "disclog";
    }
    return "unknown";
}

ExperimentRecord run_one_trial(int d, int trial, GenKind kind, std::uint64_t base_seed,
                               const std::string& counterexample_dir) {
    ExperimentRecord rec;
    rec.d = d;
    rec.trial = trial;
    rec.kind = kind;
    rec.seed = Rng::derive(base_seed, static_cast<std::uint64_t>(d),
                           static_cast<std::uint64_t>(trial));
    Rng rng(rec.seed);

    // H per kind, resampled until lambda(h) > 0 (the special construction
    // already guarantees it).
    TropMatrix h;
    while (true) {
        h = (kind == GenKind::kSpecialThreeComponent) ? gen_special_matrix(d, rng)
                                                      : gen_uniform_matrix(d, -100, 100, rng);
        if (TropScalar(0) < max_cycle_mean(h)) break;
    }
    TropMatrix m = gen_uniform_matrix(d, -100, 100, rng);
    long long lo = power_stability_threshold(d);
    long long hi = static_cast<long long>(d) * d;
    rec.m_exp = rng.uniform_int(lo, hi);
    rec.n_exp = rng.uniform_int(lo, hi);

    Transcript tr = run_protocol({m, h, rec.m_exp, rec.n_exp});

    auto started = std::chrono::steady_clock::now();
    try {
        AttackResult attack_res = recover_key(m, h, tr.a, tr.b);
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        rec.success = (attack_res.key == tr.k_a);
        rec.branch = branch_name(attack_res.branch);
    } catch (const TropError& e) {
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        rec.success = false;
        rec.branch = std::string("failed:") + e.code();
    }

    if (!rec.success && !counterexample_dir.empty()) {
        std::filesystem::create_directories(counterexample_dir);
        auto path = std::filesystem::path(counterexample_dir) /
                    ("cex_d" + std::to_string(d) + "_trial" + std::to_string(trial) + ".json");
        save_instance(path,
                      {{"m", m}, {"h", h}, {"a", tr.a}, {"b", tr.b}, {"key", tr.k_a}},
                      {{"m_exp", rec.m_exp},
                       {"n_exp", rec.n_exp},
                       {"d", d},
                       {"trial", trial},
                       {"seed", static_cast<long long>(rec.seed)}});
    }
    return rec;
}

}  // namespace

TrialsOutput run_trials(const std::vector<int>& dims, int trials_per_dim, GenKind kind,
                        std::uint64_t seed, int threads, const std::string& counterexample_dir) {
    if (trials_per_dim < 0) throw InputError("run_trials: negative trial count");
    TrialsOutput out;
    struct Task {
        int d;
        int trial;
    };
    std::vector<Task> tasks;
    for (int d : dims) {
        for (int t = 0; t < trials_per_dim; ++t) tasks.push_back({d, t});
    }
    out.records.resize(tasks.size());

    int worker_count = threads > 0
                           ? threads
                           : std::max(1u, std::thread::hardware_concurrency());
    worker_count = std::min<int>(worker_count, std::max<std::size_t>(tasks.size(), 1));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            out.records[idx] =
                run_one_trial(tasks[idx].d, tasks[idx].trial, kind, seed, counterexample_dir);
        }
    };
    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (int i = 0; i < worker_count; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (int d : dims) {
        DimSummary s;
        s.d = d;
        s.kind = kind;
        for (const auto& rec : out.records) {
            if (rec.d != d) continue;
            s.trials += 1;
            s.success_rate += rec.success ? 1.0 : 0.0;
            s.mean_ms += rec.elapsed_ms;
            s.max_ms = std::max(s.max_ms, rec.elapsed_ms);
        }
        if (s.trials > 0) {
            s.success_rate /= s.trials;
            s.mean_ms /= s.trials;
        }
        out.summary.push_back(s);
    }
    return out;
}

}  // namespace tropattack
