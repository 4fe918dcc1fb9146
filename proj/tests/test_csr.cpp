#include <optional>

#include "doctest.h"
#include "helpers.hpp"

#include "tropattack/csr.hpp"
#include "tropattack/demo_instances.hpp"
#include "tropattack/expgen.hpp"

using namespace tropattack;
using testutil::mat;
using testutil::ni;
using testutil::random_matrix;
using testutil::sum_of_powers;

namespace {

// A random matrix together with its cycle factorization, skipping draws
// whose digraph is acyclic.
struct FactoredInstance {
    TropMatrix f;
    TropScalar lambda;
    CsrTriple csr;
};

std::optional<FactoredInstance> draw_factored(Rng& rng, int d, int neginf_percent) {
    TropMatrix f = random_matrix(rng, d, d, -30, 30, neginf_percent);
    TropScalar lambda = max_cycle_mean(f);
    if (!lambda.is_finite()) return std::nullopt;
    CriticalCycle z = find_critical_cycle(f);
    return FactoredInstance{f, lambda, build_csr_from_cycle(f, z, lambda)};
}

}  // namespace

TEST_CASE("cycle factors match the known 4x4 instance") {
    DemoDisclogData dl = demo_disclog_data();
    CriticalCycle z = find_critical_cycle(dl.f);
    CsrTriple csr = build_csr_from_cycle(dl.f, z, TropScalar(6));
    CHECK(csr.c == dl.c);
    CHECK(csr.r == dl.c);  // symmetric instance: R equals C
    CHECK(csr.s == dl.s);
    CHECK(csr.lambda == TropScalar(6));

    for (long long k = 0; k < 8; ++k) {
        CHECK(csr_term(csr, k, true) == dl.csr_product);
    }
}

TEST_CASE("cycle factors of a 1x1 matrix normalize to zero") {
    TropMatrix f = mat({{7}});
    CriticalCycle z{{0}};
    CsrTriple csr = build_csr_from_cycle(f, z, TropScalar(7));
    CHECK(csr.c == mat({{0}}));
    CHECK(csr.s == mat({{0}}));
    CHECK(csr.r == mat({{0}}));
}

TEST_CASE("build_csr_from_cycle rejects non-critical cycles") {
    DemoDisclogData dl = demo_disclog_data();
    CHECK_THROWS_AS(build_csr_from_cycle(dl.f, CriticalCycle{{0, 1}}, TropScalar(6)),
                    InputError);
    CHECK_THROWS_AS(build_csr_from_cycle(dl.f, CriticalCycle{{0, 1, 3, 2}}, TropScalar(5)),
                    InputError);
}

TEST_CASE("csr_term is periodic and reduces the exponent") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.uniform_int(2, 6));
        auto inst = draw_factored(rng, d, 35);
        if (!inst) continue;
        long long l = inst->csr.cycle.length();
        for (long long t = 0; t < 2 * l; ++t) {
            CHECK(csr_term(inst->csr, t, true) == csr_term(inst->csr, t + l, true));
            CHECK(csr_term(inst->csr, t, false) == csr_term(inst->csr, t + l, false));
        }
    }
}

TEST_CASE("csr_term without R agrees on the cycle's columns") {
    Rng rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.uniform_int(2, 6));
        auto inst = draw_factored(rng, d, 30);
        if (!inst) continue;
        long long l = inst->csr.cycle.length();
        for (long long t = 0; t < l; ++t) {
            TropMatrix with_r = csr_term(inst->csr, t, true);
            TropMatrix without_r = csr_term(inst->csr, t, false);
            for (int node : inst->csr.cycle.nodes) {
                for (int i = 0; i < d; ++i) {
                    CHECK(with_r.at(i, node) == without_r.at(i, node));
                }
            }
        }
    }
}

TEST_CASE("s powers computed by permutation match dense products") {
    Rng rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        int d = static_cast<int>(rng.uniform_int(2, 6));
        auto inst = draw_factored(rng, d, 30);
        if (!inst) continue;
        long long l = inst->csr.cycle.length();
        for (long long t = 0; t < l; ++t) {
            TropMatrix dense = mat_mul(mat_mul(inst->csr.c, mat_pow(inst->csr.s, t % l)),
                                       inst->csr.r);
            CHECK(csr_term(inst->csr, t, true) == dense);
        }
    }
}

TEST_CASE("normalized cycle power has the series metric") {
    Rng rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        int d = static_cast<int>(rng.uniform_int(2, 6));
        TropMatrix f = random_matrix(rng, d, d, -30, 30, 30);
        TropScalar lambda = max_cycle_mean(f);
        if (!lambda.is_finite()) continue;
        CriticalCycle z = find_critical_cycle(f);
        TropMatrix g = scalar_mul(trop_neg(lambda), f);
        TropMatrix gl = mat_pow(g, z.length());
        CHECK(metric_matrix(gl) == sum_of_powers(gl, 1, d));
    }
}

TEST_CASE("b_matrix erases rows and columns") {
    DemoDisclogData dl = demo_disclog_data();
    CHECK(b_matrix(dl.f, {}).matrix == dl.f);
    CHECK(b_matrix(dl.f, {0, 1, 2, 3}).matrix == TropMatrix::all_neg_inf(4, 4));
    BMatrix b = b_matrix(dl.f, {1});
    for (int i = 0; i < 4; ++i) {
        CHECK(b.matrix.at(1, i).is_neg_inf());
        CHECK(b.matrix.at(i, 1).is_neg_inf());
    }
    CHECK(b.matrix.at(0, 2) == dl.f.at(0, 2));
    CHECK_THROWS_AS(b_matrix(dl.f, {4}), InputError);
    CHECK_THROWS_AS(b_matrix(dl.f, {-1}), InputError);
}

TEST_CASE("power expansion holds on random small matrices") {
    Rng rng(79);
    int tested = 0;
    while (tested < 40) {
        int d = static_cast<int>(rng.uniform_int(1, 8));
        TropMatrix f = random_matrix(rng, d, d, -25, 25, 30);
        if (!max_cycle_mean(f).is_finite()) continue;
        ++tested;
        long long l = find_critical_cycle(f).length();
        long long start = power_stability_threshold(d);
        for (long long t = start; t <= start + 2 * l; ++t) {
            ExpansionSides sides = csr_expansion_residual(f, t);
            CHECK(sides.lhs == sides.rhs);
        }
    }
}

TEST_CASE("power expansion holds on a finite 5x5 matrix at t=17") {
    Rng rng(83);
    TropMatrix f = random_matrix(rng, 5, 5, -25, 25, 0);
    ExpansionSides sides = csr_expansion_residual(f, 17);
    CHECK(sides.lhs == sides.rhs);
}

TEST_CASE("power expansion holds on a three-block 9x9 matrix across a period") {
    Rng rng(89);
    TropMatrix h = gen_special_matrix(9, rng);
    for (long long t = 65; t <= 80; ++t) {
        ExpansionSides sides = csr_expansion_residual(h, t);
        CHECK(sides.lhs == sides.rhs);
    }
}

TEST_CASE("power expansion in dimension one") {
    TropMatrix f = mat({{-3}});
    ExpansionSides sides = csr_expansion_residual(f, 5);
    CHECK(sides.lhs == mat({{-15}}));
    CHECK(sides.rhs == mat({{-15}}));
}

TEST_CASE("power expansion input guards") {
    DemoDisclogData dl = demo_disclog_data();
    CHECK_THROWS_AS(csr_expansion_residual(dl.f, 3), InputError);  // below threshold
    CHECK_THROWS_AS(csr_expansion_residual(TropMatrix::all_neg_inf(2, 2), 5), SpectrumError);
}

TEST_CASE("stability threshold values") {
    CHECK(power_stability_threshold(1) == 1);
    CHECK(power_stability_threshold(4) == 10);
    CHECK(power_stability_threshold(10) == 82);
    CHECK(power_stability_threshold(50) == 2402);
}
