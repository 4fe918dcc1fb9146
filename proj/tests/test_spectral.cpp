#include "doctest.h"
#include "helpers.hpp"

#include "tropattack/demo_instances.hpp"
#include "tropattack/spectral.hpp"

using namespace tropattack;
using testutil::enumerate_cycles;
using testutil::mat;
using testutil::ni;
using testutil::random_matrix;
using testutil::sum_of_powers;

namespace {

// Shifts every entry down by the maximum cycle mean, making the result's
// maximum cycle mean exactly zero. Handy for building metric-matrix inputs.
TropMatrix normalized(const TropMatrix& f) {
    TropScalar lambda = max_cycle_mean(f);
    REQUIRE(lambda.is_finite());
    return scalar_mul(trop_neg(lambda), f);
}

}  // namespace

TEST_CASE("max_cycle_mean on the demo instances") {
    CHECK(max_cycle_mean(demo_easy_instance().h) == TropScalar(0));
    CHECK(max_cycle_mean(demo_disclog_instance().h) == TropScalar(6));
    CHECK(max_cycle_mean(mat({{5}})) == TropScalar(5));
    CHECK_THROWS_AS(max_cycle_mean(TropMatrix(2, 3)), DimensionError);
}

TEST_CASE("max_cycle_mean of an acyclic digraph is -inf") {
    TropMatrix f = TropMatrix::from_rows({{ni(), TropScalar(3)}, {ni(), ni()}});
    CHECK(max_cycle_mean(f) == ni());
    CHECK(max_cycle_mean(TropMatrix::all_neg_inf(4, 4)) == ni());
}

TEST_CASE("max_cycle_mean handles fractional means") {
    // Single 2-cycle of weight 3 + 4: mean 7/2.
    TropMatrix f = TropMatrix::from_rows({{ni(), TropScalar(3)}, {TropScalar(4), ni()}});
    CHECK(max_cycle_mean(f) == TropScalar::ratio(7, 2));
}

TEST_CASE("max_cycle_mean equals transpose's") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rng.uniform_int(1, 6));
        TropMatrix f = random_matrix(rng, d, d, -30, 30, 40);
        CHECK(max_cycle_mean(f) == max_cycle_mean(transpose(f)));
    }
}

TEST_CASE("max_cycle_mean and critical_arcs match exhaustive enumeration") {
    Rng rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        int d = static_cast<int>(rng.uniform_int(1, 6));
        TropMatrix f = random_matrix(rng, d, d, -30, 30, 45);
        auto oracle = enumerate_cycles(f);
        CHECK(max_cycle_mean(f) == oracle.lambda);
        if (oracle.lambda.is_finite()) {
            std::set<std::pair<int, int>> expect(oracle.best_arcs.begin(),
                                                 oracle.best_arcs.end());
            CHECK(critical_arcs(f, oracle.lambda) == expect);
        }
    }
}

TEST_CASE("critical_arcs on the demo disclog instance") {
    DemoDisclogData dl = demo_disclog_data();
    auto arcs = critical_arcs(dl.f, TropScalar(6));
    CHECK(arcs.count({0, 1}) == 1);
    CHECK(arcs.count({1, 3}) == 1);
    CHECK(arcs.count({3, 2}) == 1);
    CHECK(arcs.count({2, 0}) == 1);
    CHECK(critical_arcs(mat({{0}}), TropScalar(0)) ==
          std::set<std::pair<int, int>>{{0, 0}});
    CHECK_THROWS_AS(critical_arcs(dl.f, ni()), SpectrumError);
}

TEST_CASE("find_critical_cycle is deterministic and critical") {
    DemoDisclogData dl = demo_disclog_data();
    CriticalCycle z = find_critical_cycle(dl.f);
    CHECK(z.nodes == dl.cycle);
    CHECK(z.length() == 4);
    CHECK(is_critical_cycle(dl.f, z.nodes, TropScalar(6)));

    CriticalCycle loop = find_critical_cycle(mat({{0}}));
    CHECK(loop.nodes == std::vector<int>{0});

    CHECK_THROWS_AS(find_critical_cycle(TropMatrix::all_neg_inf(3, 3)), SpectrumError);
}

TEST_CASE("find_critical_cycle mean verified by direct summation") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        int d = static_cast<int>(rng.uniform_int(2, 6));
        TropMatrix f = random_matrix(rng, d, d, -30, 30, 30);
        TropScalar lambda = max_cycle_mean(f);
        if (!lambda.is_finite()) continue;
        CriticalCycle z = find_critical_cycle(f);
        TropScalar total(0);
        for (int i = 0; i < z.length(); ++i) {
            total = trop_mul(total, f.at(z.nodes[i], z.nodes[(i + 1) % z.length()]));
        }
        CHECK(rational_div(total, TropScalar(z.length())) == lambda);
        CHECK(is_critical_cycle(f, z.nodes, lambda));
    }
}

TEST_CASE("is_critical_cycle rejects junk") {
    DemoDisclogData dl = demo_disclog_data();
    CHECK_FALSE(is_critical_cycle(dl.f, {0, 1}, TropScalar(6)));           // wrong mean
    CHECK_FALSE(is_critical_cycle(dl.f, {0, 0}, TropScalar(6)));           // repeated node
    CHECK_FALSE(is_critical_cycle(dl.f, {0, 7}, TropScalar(6)));           // out of range
    CHECK_FALSE(is_critical_cycle(dl.f, {}, TropScalar(6)));               // empty
    CHECK_FALSE(is_critical_cycle(dl.f, {0, 1, 3, 2}, TropScalar(5)));     // wrong lambda
    // Also accepts rotations of the canonical cycle, not just the one the
    // finder returns.
    CHECK(is_critical_cycle(dl.f, {1, 3, 2, 0}, TropScalar(6)));
}

TEST_CASE("critical_component") {
    DemoDisclogData dl = demo_disclog_data();
    CriticalCycle z = find_critical_cycle(dl.f);
    CHECK(critical_component(dl.f, z) == std::vector<int>{0, 1, 2, 3});

    CriticalCycle loop{{0}};
    CHECK(critical_component(mat({{0}}), loop) == std::vector<int>{0});

    CriticalCycle bogus{{0, 1}};
    CHECK_THROWS_AS(critical_component(dl.f, bogus), InputError);
}

TEST_CASE("metric_matrix basics") {
    TropMatrix eps = TropMatrix::all_neg_inf(3, 3);
    CHECK(metric_matrix(eps) == eps);

    TropMatrix h = demo_easy_instance().h;
    CHECK(metric_matrix(h) == sum_of_powers(h, 1, 3));

    CHECK_THROWS_AS(metric_matrix(demo_disclog_instance().h), SpectrumError);
}

TEST_CASE("metric_matrix equals the direct series on random inputs") {
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int d = static_cast<int>(rng.uniform_int(1, 5));
        TropMatrix f = random_matrix(rng, d, d, -30, 30, 35);
        if (!max_cycle_mean(f).is_finite()) continue;
        TropMatrix g = normalized(f);
        CHECK(metric_matrix(g) == sum_of_powers(g, 1, d));
    }
}

TEST_CASE("kleene_star basics and idempotence") {
    CHECK(kleene_star(TropMatrix::all_neg_inf(3, 3)) == TropMatrix::identity(3));

    DemoInstance easy = demo_easy_instance();
    TropMatrix key = mat_mul(mat_add(easy.m, easy.h), kleene_star(easy.h));
    CHECK(key == easy.expected_key);

    Rng rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        int d = static_cast<int>(rng.uniform_int(1, 5));
        TropMatrix f = random_matrix(rng, d, d, -30, 30, 35);
        if (!max_cycle_mean(f).is_finite()) continue;
        TropMatrix star = kleene_star(normalized(f));
        CHECK(mat_mul(star, star) == star);
        CHECK(star == mat_add(TropMatrix::identity(d), metric_matrix(normalized(f))));
    }
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(TropMatrix::from_rows({{ni(), TropScalar(0)}, {TropScalar(0), ni()}})));
    CHECK_FALSE(is_irreducible(TropMatrix::from_rows({{TropScalar(0), TropScalar(0)},
                                                      {ni(), TropScalar(0)}})));
    Rng rng(53);
    CHECK(is_irreducible(random_matrix(rng, 6, 6, -5, 5, 0)));  // all finite
    CHECK(is_irreducible(mat({{0}})));
}

TEST_CASE("analyze_spectrum bundles the pieces") {
    DemoDisclogData dl = demo_disclog_data();
    SpectralSummary s = analyze_spectrum(dl.f);
    CHECK(s.lambda == TropScalar(6));
    CHECK(s.irreducible);
    CHECK(s.critical_arcs == critical_arcs(dl.f, s.lambda));
}

TEST_CASE("metric_matrix detects divergence from positive diagonal walks") {
    // lambda = 1 > 0: the series must be rejected.
    CHECK_THROWS_AS(metric_matrix(mat({{1}})), SpectrumError);
}
