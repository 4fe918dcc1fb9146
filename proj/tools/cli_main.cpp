// Command-line front end: protocol simulation, key recovery, discrete-log
// solving, instance generation, benchmark sweeps, and a golden selftest.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tropattack/attack.hpp"
#include "tropattack/demo_instances.hpp"
#include "tropattack/disclog.hpp"
#include "tropattack/errors.hpp"
#include "tropattack/expgen.hpp"
#include "tropattack/io.hpp"
#include "tropattack/protocol.hpp"
#include "tropattack/selftest.hpp"
#include "tropattack/spectral.hpp"

namespace {

using tropattack::TropMatrix;
using json = nlohmann::ordered_json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TROPATTACK_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 1;
}

void print_matrix(const TropMatrix& m, const std::string& format) {
    if (format == "tsv") {
        std::cout << tropattack::matrix_to_tsv(m);
    } else {
        std::cout << tropattack::serialize_matrix(m);
    }
}

const char* attack_branch_name(tropattack::AttackBranch b) {
    switch (b) {
        case tropattack::AttackBranch::kEasyKleene: return "easy_kleene";
        case tropattack::AttackBranch::kTrivialMessage: return "trivial_message";
        case tropattack::AttackBranch::kSmallPower: return "small_power";
        case tropattack::AttackBranch::kDisclog: return "disclog";
    }
    return "unknown";
}

int run_protocol_cmd(const std::string& m_path, const std::string& h_path, long long m_exp,
                     long long n_exp, const std::string& out_a, const std::string& out_b,
                     const std::string& out_k, const std::string& format) {
    TropMatrix m = tropattack::load_matrix(m_path);
    TropMatrix h = tropattack::load_matrix(h_path);
    tropattack::Transcript tr = tropattack::run_protocol({m, h, m_exp, n_exp});
    tropattack::save_matrix(out_a, tr.a);
    tropattack::save_matrix(out_b, tr.b);
    tropattack::save_matrix(out_k, tr.k_a);
    if (format == "tsv") {
        std::cout << tropattack::matrix_to_tsv(tr.k_a);
    } else {
        json report{{"a", out_a}, {"b", out_b}, {"key", out_k}};
        std::cout << report.dump() << "\n";
    }
    return 0;
}

int run_attack_cmd(const std::string& m_path, const std::string& h_path,
                   const std::string& a_path, const std::string& b_path,
                   const std::string& out_k, bool light, const std::string& format) {
    TropMatrix m = tropattack::load_matrix(m_path);
    TropMatrix h = tropattack::load_matrix(h_path);
    TropMatrix a = tropattack::load_matrix(a_path);
    TropMatrix b = tropattack::load_matrix(b_path);
    tropattack::AttackOptions opts;
    opts.light_disclog = light;
    tropattack::AttackResult res = tropattack::recover_key(m, h, a, b, opts);
    tropattack::save_matrix(out_k, res.key);
    if (format == "tsv") {
        std::cout << tropattack::matrix_to_tsv(res.key);
    } else {
        json report{{"branch", attack_branch_name(res.branch)},
                    {"m", res.m_recovered ? json(*res.m_recovered) : json(nullptr)},
                    {"n", res.n_recovered ? json(*res.n_recovered) : json(nullptr)},
                    {"key", out_k},
                    {"elapsed_ms", res.elapsed_ms}};
        std::cout << report.dump() << "\n";
    }
    return 0;
}

int run_disclog_cmd(const std::string& a_path, const std::string& v_path,
                    const std::string& f_path, bool light, bool no_verify, bool monotone,
                    const std::string& format) {
    tropattack::DisclogInstance inst{tropattack::load_matrix(a_path),
                                     tropattack::load_matrix(v_path),
                                     tropattack::load_matrix(f_path)};
    tropattack::DisclogOptions opts;
    opts.light = light;
    opts.full_verify = !no_verify;
    opts.monotone_accel = monotone;
    tropattack::DisclogResult res = tropattack::solve_disclog(inst, opts);
    if (format == "tsv") {
        std::cout << res.t << "\n";
    } else {
        json report{{"t", res.t},
                    {"branch", res.branch == tropattack::DisclogBranch::kDirectCatch
                                   ? "direct_catch"
                                   : "csr_periodic"},
                    {"mu", res.mu ? json(to_string(*res.mu)) : json(nullptr)},
                    {"verified", res.verified}};
        std::cout << report.dump() << "\n";
    }
    return 0;
}

int run_gen_cmd(const std::string& kind, int d, long long lo, long long hi, std::uint64_t seed,
                const std::string& out, const std::string& format) {
    tropattack::Rng rng(seed);
    TropMatrix m;
    if (kind == "special") {
        m = tropattack::gen_special_matrix(d, rng);
    } else {
        m = tropattack::gen_uniform_matrix(d, lo, hi, rng);
    }
    if (out.empty()) {
        print_matrix(m, format);
    } else {
        tropattack::save_matrix(out, m);
        std::cout << out << "\n";
    }
    return 0;
}

int run_bench_cmd(std::vector<int> dims, int trials, const std::string& kind, int threads,
                  std::uint64_t seed, const std::string& out, const std::string& summary_path,
                  const std::string& cex_dir) {
    std::vector<tropattack::GenKind> kinds;
    if (kind == "uniform" || kind == "both") kinds.push_back(tropattack::GenKind::kRandomFinite);
    if (kind == "special" || kind == "both") {
        kinds.push_back(tropattack::GenKind::kSpecialThreeComponent);
    }
    std::vector<tropattack::ExperimentRecord> records;
    std::vector<tropattack::DimSummary> summary;
    for (auto k : kinds) {
        tropattack::TrialsOutput res =
            tropattack::run_trials(dims, trials, k, seed, threads, cex_dir);
        records.insert(records.end(), res.records.begin(), res.records.end());
        summary.insert(summary.end(), res.summary.begin(), res.summary.end());
    }
    if (!out.empty()) tropattack::write_records_csv(out, records);
    if (!summary_path.empty()) tropattack::write_summary_csv(summary_path, summary);
    std::cout << tropattack::summary_csv(summary);
    return 0;
}

int run_selftest_cmd() {
    auto checks = tropattack::run_selftest();
    bool all_ok = true;
    for (const auto& c : checks) {
        if (c.passed) {
            std::cout << "ok " << c.name << "\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << " (" << checks.size()
              << " checks)\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical max-plus key-exchange toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = default_seed();

    // protocol
    auto* protocol = app.add_subcommand("protocol", "simulate the key exchange");
    std::string p_m, p_h, p_out_a = "A.json", p_out_b = "B.json", p_out_k = "K.json";
    long long p_mexp = 0, p_nexp = 0;
    protocol->add_option("--M", p_m, "public matrix M (json)")->required();
    protocol->add_option("--H", p_h, "public matrix H (json)")->required();
    protocol->add_option("--m", p_mexp, "first party's secret exponent")->required();
    protocol->add_option("--n", p_nexp, "second party's secret exponent")->required();
    protocol->add_option("--out-a", p_out_a, "output path for message A");
    protocol->add_option("--out-b", p_out_b, "output path for message B");
    protocol->add_option("--out-k", p_out_k, "output path for the shared key");
    protocol->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    // attack
    auto* attack = app.add_subcommand("attack", "recover the shared key from public data");
    std::string a_m, a_h, a_a, a_b, a_out_k = "K.json";
    bool a_light = false;
    attack->add_option("--M", a_m, "public matrix M (json)")->required();
    attack->add_option("--H", a_h, "public matrix H (json)")->required();
    attack->add_option("--A", a_a, "first exchanged message (json)")->required();
    attack->add_option("--B", a_b, "second exchanged message (json)")->required();
    attack->add_option("--out-k", a_out_k, "output path for the recovered key");
    attack->add_flag("--light", a_light, "single-column periodic check");
    attack->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    // disclog
    auto* disclog = app.add_subcommand("disclog", "solve A = V F^t for t");
    std::string d_a, d_v, d_f;
    bool d_light = false, d_no_verify = false, d_monotone = false;
    disclog->add_option("--A", d_a, "target matrix A (json)")->required();
    disclog->add_option("--V", d_v, "coefficient matrix V (json)")->required();
    disclog->add_option("--F", d_f, "base matrix F (json)")->required();
    disclog->add_flag("--light", d_light, "single-column periodic check");
    disclog->add_flag("--no-verify", d_no_verify, "skip the final full recomputation");
    disclog->add_flag("--monotone", d_monotone, "binary-search the low range (needs F >= I)");
    disclog->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random matrix");
    std::string g_kind = "uniform", g_out;
    int g_d = 10;
    long long g_lo = -100, g_hi = 100;
    gen->add_option("--kind", g_kind)->check(CLI::IsMember({"uniform", "special"}));
    gen->add_option("--d", g_d, "dimension")->required();
    gen->add_option("--lo", g_lo, "smallest entry (uniform kind)");
    gen->add_option("--hi", g_hi, "largest entry (uniform kind)");
    gen->add_option("--seed", seed, "rng seed (default: TROPATTACK_SEED or 1)");
    gen->add_option("--out", g_out, "output path (stdout when omitted)");
    gen->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    // bench
    auto* bench = app.add_subcommand("bench", "timed attack sweeps over random instances");
    std::vector<int> b_dims{10, 20, 50};
    int b_trials = 100, b_threads = 0;
    std::string b_kind = "both", b_out, b_summary, b_cex;
    bench->add_option("--dims", b_dims, "dimensions to sweep")->delimiter(',');
    bench->add_option("--trials", b_trials, "trials per dimension");
    bench->add_option("--kind", b_kind)->check(CLI::IsMember({"uniform", "special", "both"}));
    bench->add_option("--threads", b_threads, "worker threads (0 = hardware)");
    bench->add_option("--seed", seed, "rng seed (default: TROPATTACK_SEED or 1)");
    bench->add_option("--out", b_out, "records csv path");
    bench->add_option("--summary", b_summary, "summary csv path");
    bench->add_option("--cex-dir", b_cex, "directory for failed-instance archives");

    // selftest
    app.add_subcommand("selftest", "run the built-in golden instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (protocol->parsed()) {
            return run_protocol_cmd(p_m, p_h, p_mexp, p_nexp, p_out_a, p_out_b, p_out_k, format);
        }
        if (attack->parsed()) {
            return run_attack_cmd(a_m, a_h, a_a, a_b, a_out_k, a_light, format);
        }
        if (disclog->parsed()) {
            return run_disclog_cmd(d_a, d_v, d_f, d_light, d_no_verify, d_monotone, format);
        }
        if (gen->parsed()) {
            return run_gen_cmd(g_kind, g_d, g_lo, g_hi, seed, g_out, format);
        }
        if (bench->parsed()) {
            return run_bench_cmd(b_dims, b_trials, b_kind, b_threads, seed, b_out, b_summary,
                                 b_cex);
        }
        return run_selftest_cmd();
    } catch (const tropattack::TropError& e) {
        json err{{"code", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"code", "internal_error"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
