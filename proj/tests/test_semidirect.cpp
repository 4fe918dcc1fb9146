#include "doctest.h"
#include "helpers.hpp"

#include "tropattack/demo_instances.hpp"
#include "tropattack/semidirect.hpp"
#include "tropattack/spectral.hpp"

#include <cstdint>

using namespace tropattack;
using testutil::mat;
using testutil::random_matrix;
using testutil::sum_of_powers;

TEST_CASE("adjoint product basics") {
    TropMatrix a = mat({{1, 2}, {3, 4}});
    TropMatrix e = TropMatrix::all_neg_inf(2, 2);
    CHECK(adjoint_product(a, e) == a);
    CHECK(adjoint_product(e, a) == a);

    TropMatrix h = demo_easy_instance().h;
    CHECK(adjoint_product(h, h) == mat_add(h, mat_mul(h, h)));
}

TEST_CASE("adjoint product is associative") {
    Rng rng(211);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng.uniform_int(0, 5));
        TropMatrix a = random_matrix(rng, d, d, -40, 40, 20);
        TropMatrix b = random_matrix(rng, d, d, -40, 40, 20);
        TropMatrix c = random_matrix(rng, d, d, -40, 40, 20);
        CHECK(adjoint_product(adjoint_product(a, b), c) ==
              adjoint_product(a, adjoint_product(b, c)));
    }
}

TEST_CASE("adjoint product distributes over entrywise max") {
    Rng rng(223);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng.uniform_int(0, 3));
        TropMatrix a = random_matrix(rng, d, d, -40, 40, 10);
        TropMatrix b = random_matrix(rng, d, d, -40, 40, 10);
        TropMatrix c = random_matrix(rng, d, d, -40, 40, 10);
        CHECK(adjoint_product(mat_add(a, b), c) ==
              mat_add(adjoint_product(a, c), adjoint_product(b, c)));
        CHECK(adjoint_product(c, mat_add(a, b)) ==
              mat_add(adjoint_product(c, a), adjoint_product(c, b)));
    }
}

TEST_CASE("adjoint power matches the sum of ordinary powers") {
    Rng rng(227);
    for (int trial = 0; trial < 15; ++trial) {
        int d = 1 + static_cast<int>(rng.uniform_int(0, 4));
        TropMatrix a = random_matrix(rng, d, d, -30, 30, 15);
        CHECK(adjoint_power(a, 1) == a);
        CHECK(adjoint_power(a, 7) == sum_of_powers(a, 1, 7));
    }
}

TEST_CASE("adjoint power splits multiplicatively") {
    Rng rng(229);
    for (int trial = 0; trial < 15; ++trial) {
        int d = 2 + static_cast<int>(rng.uniform_int(0, 3));
        TropMatrix a = random_matrix(rng, d, d, -30, 30, 15);
        long long m1 = rng.uniform_int(1, 6);
        long long m2 = rng.uniform_int(1, 6);
        CHECK(adjoint_power(a, m1 + m2) ==
              adjoint_product(adjoint_power(a, m1), adjoint_power(a, m2)));
    }
}

TEST_CASE("adjoint power stabilizes at the metric matrix when lambda <= 0") {
    Rng rng(233);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + static_cast<int>(rng.uniform_int(0, 3));
        TropMatrix a = random_matrix(rng, d, d, -50, -1, 20);
        REQUIRE(!(TropScalar(0) < max_cycle_mean(a)));
        TropMatrix plus = metric_matrix(a);
        CHECK(adjoint_power(a, d) == plus);
        CHECK(adjoint_power(a, d + 3) == plus);
    }
}

TEST_CASE("adjoint power rejects non-positive exponents") {
    TropMatrix a = mat({{1}});
    CHECK_THROWS_AS(adjoint_power(a, 0), InputError);
    CHECK_THROWS_AS(adjoint_power(a, -2), InputError);
}

TEST_CASE("semidirect product squares as expected") {
    Rng rng(239);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 1 + static_cast<int>(rng.uniform_int(0, 4));
        TropMatrix m = random_matrix(rng, d, d, -30, 30, 10);
        TropMatrix h = random_matrix(rng, d, d, -30, 30, 10);
        MatrixPair sq = semidirect_product({m, h}, {m, h});
        TropMatrix expect_first = mat_add(mat_add(m, h), mat_mul(m, h));
        CHECK(sq.first == expect_first);
        TropMatrix i_plus_h = mat_add(TropMatrix::identity(d), h);
        CHECK(sq.first == mat_add(mat_mul(m, i_plus_h), h));
        CHECK(sq.second == adjoint_power(h, 2));
    }
}

TEST_CASE("semidirect product is associative on pairs") {
    Rng rng(241);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng.uniform_int(0, 4));
        MatrixPair p{random_matrix(rng, d, d, -25, 25, 15),
                     random_matrix(rng, d, d, -25, 25, 15)};
        MatrixPair q{random_matrix(rng, d, d, -25, 25, 15),
                     random_matrix(rng, d, d, -25, 25, 15)};
        MatrixPair r{random_matrix(rng, d, d, -25, 25, 15),
                     random_matrix(rng, d, d, -25, 25, 15)};
        MatrixPair left = semidirect_product(semidirect_product(p, q), r);
        MatrixPair right = semidirect_product(p, semidirect_product(q, r));
        CHECK(left == right);
    }
}

TEST_CASE("semidirect power closed form") {
    DemoInstance demo = demo_disclog_instance();
    MatrixPair base{demo.m, demo.h};

    MatrixPair one = semidirect_power(base, 1);
    CHECK(one == base);

    MatrixPair alice = semidirect_power(base, demo.m_exp);
    CHECK(alice.first == demo.expected_a);

    for (long long k = 2; k <= 10; ++k) {
        MatrixPair closed = semidirect_power(base, k, PowerMode::kClosedForm);
        MatrixPair inductive = semidirect_power(base, k, PowerMode::kInductive);
        CHECK(closed == inductive);
    }

    CHECK_THROWS_AS(semidirect_power(base, 0), InputError);
    CHECK_THROWS_AS(semidirect_power(base, -4), InputError);
}

TEST_CASE("semidirect power of the zero pair") {
    TropMatrix e = TropMatrix::all_neg_inf(3, 3);
    MatrixPair p = semidirect_power({e, e}, 2);
    CHECK(p.first == e);
    CHECK(p.second == e);
}

TEST_CASE("semidirect power first component oracle") {
    // first((M,H)^k) = M (I + H + ... + H^{k-1}) + H (I + H + ... + H^{k-2})
    Rng rng(251);
    for (int trial = 0; trial < 12; ++trial) {
        int d = 1 + static_cast<int>(rng.uniform_int(0, 4));
        TropMatrix m = random_matrix(rng, d, d, -20, 20, 10);
        TropMatrix h = random_matrix(rng, d, d, -20, 20, 10);
        long long k = rng.uniform_int(2, 9);
        MatrixPair pk = semidirect_power({m, h}, k);
        TropMatrix expect = mat_add(mat_mul(m, sum_of_powers(h, 0, k - 1)),
                                    mat_mul(h, sum_of_powers(h, 0, k - 2)));
        CHECK(pk.first == expect);
        CHECK(pk.second == adjoint_power(h, k));
    }
}
