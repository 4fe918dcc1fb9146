#include "tropattack/selftest.hpp"

#include "tropattack/attack.hpp"
#include "tropattack/csr.hpp"
#include "tropattack/demo_instances.hpp"
#include "tropattack/disclog.hpp"
#include "tropattack/protocol.hpp"
#include "tropattack/spectral.hpp"

namespace tropattack {

namespace {

void add_check(std::vector<SelftestCheck>& out, const std::string& name, bool passed,
               const std::string& detail = "") {
    out.push_back({name, passed, passed ? "" : detail});
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
    std::vector<SelftestCheck> out;

    const DemoInstance easy = demo_easy_instance();
    const DemoInstance hard = demo_disclog_instance();
    const DemoDisclogData dl = demo_disclog_data();

    try {
        add_check(out, "easy_lambda_zero", max_cycle_mean(easy.h) == TropScalar(0),
                  "expected lambda 0");

        Transcript tr = run_protocol({easy.m, easy.h, easy.m_exp, easy.n_exp});
        add_check(out, "easy_protocol_messages",
                  tr.a == easy.expected_a && tr.b == easy.expected_b, "message mismatch");
        add_check(out, "easy_protocol_key", tr.k_a == easy.expected_key, "key mismatch");

        AttackResult ar = recover_key(easy.m, easy.h, tr.a, tr.b);
        add_check(out, "easy_attack",
                  ar.branch == AttackBranch::kEasyKleene && ar.key == easy.expected_key,
                  "wrong branch or key");
    } catch (const TropError& e) {
        add_check(out, "easy_instance", false, std::string("threw: ") + e.what());
    }

    try {
        add_check(out, "disclog_lambda_six",
                  max_cycle_mean(hard.h) == TropScalar(dl.lambda), "expected lambda 6");

        Transcript tr = run_protocol({hard.m, hard.h, hard.m_exp, hard.n_exp});
        add_check(out, "disclog_protocol_messages",
                  tr.a == hard.expected_a && tr.b == hard.expected_b, "message mismatch");
        add_check(out, "disclog_protocol_key", tr.k_a == hard.expected_key, "key mismatch");

        TropMatrix f = mat_add(TropMatrix::identity(4), hard.h);
        TropMatrix v = mat_add(mat_mul(hard.m, f), hard.h);
        add_check(out, "disclog_f_v", f == dl.f && v == dl.v, "aux matrix mismatch");

        CriticalCycle cyc{dl.cycle};
        add_check(out, "disclog_cycle_critical",
                  is_critical_cycle(f, cyc.nodes, TropScalar(dl.lambda)),
                  "stored cycle not critical");

        CsrTriple csr = build_csr_from_cycle(f, cyc, TropScalar(dl.lambda));
        add_check(out, "disclog_cycle_factors",
                  csr.c == dl.c && csr.s == dl.s && csr.r == dl.c, "factor mismatch");
        bool constant = true;
        for (long long k = 0; k < 4; ++k) {
            if (csr_term(csr, k, true) != dl.csr_product) constant = false;
        }
        add_check(out, "disclog_csr_product", constant, "product not constant over k");

        DisclogResult res = solve_disclog({tr.a, v, f});
        add_check(out, "disclog_exponent",
                  res.t == dl.t && res.mu.has_value() && *res.mu == TropScalar(dl.mu) &&
                      res.branch == DisclogBranch::kCsrPeriodic && res.verified,
                  "wrong exponent or offset");

        AttackResult ar = recover_key(hard.m, hard.h, tr.a, tr.b);
        add_check(out, "disclog_attack",
                  ar.branch == AttackBranch::kDisclog && ar.key == hard.expected_key &&
                      ar.m_recovered && *ar.m_recovered == hard.m_exp,
                  "wrong branch, key, or exponent");
    } catch (const TropError& e) {
        add_check(out, "disclog_instance", false, std::string("threw: ") + e.what());
    }

    return out;
}

}  // namespace tropattack
