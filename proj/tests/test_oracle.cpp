#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "logdet/generators.hpp"
#include "logdet/oracle.hpp"
#include "test_support.hpp"

using namespace logdet;

TEST_CASE("exact_logdet on hand-checked matrices") {
    std::vector<Triplet> triplets;
    for (Index i = 0; i < 6; ++i) {
        triplets.push_back({i, i, 1.0});
    }
    const auto identity = SparseSpdMatrix::from_triplets(6, std::move(triplets));
    CHECK(exact_logdet(identity) == 0.0);

    const auto pair =
        SparseSpdMatrix::from_triplets(2, {{0, 0, 4}, {0, 1, -1}, {1, 0, -1}, {1, 1, 4}});
    CHECK(exact_logdet(pair) == doctest::Approx(std::log(15.0)).epsilon(1e-14));

    CHECK(exact_logdet(grid_laplacian({2, 2})) ==
          doctest::Approx(std::log(192.0)).epsilon(1e-14));
}

TEST_CASE("exact_logdet respects the dense limit") {
    const auto a = grid_laplacian({4, 2});
    CHECK_THROWS_AS(exact_logdet(a, 15), TooLargeForOracleError);
    CHECK(std::isfinite(exact_logdet(a, 16)));
}

TEST_CASE("exact_logdet rejects indefinite input") {
    const auto a =
        SparseSpdMatrix::from_triplets(2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}});
    CHECK_THROWS_AS(exact_logdet(a), NotPositiveDefiniteError);
}

TEST_CASE("exact_logdet agrees with dense elimination") {
    using logdet::testing::dense_from_sparse;
    using logdet::testing::lu_logdet;
    for (Index n : {Index{2}, Index{17}, Index{40}, Index{64}}) {
        const auto a = random_dd_spd(n, 4, 999 + n);
        const double mine = exact_logdet(a);
        const double brute = lu_logdet(dense_from_sparse(a), n);
        CHECK(std::abs(mine - brute) / std::abs(brute) < 1e-10);
    }
}

TEST_CASE("one-dimensional grid determinants have a closed form") {
    // det L(N,1) = N + 1 from the tridiagonal recurrence.
    for (Index n : {Index{2}, Index{5}, Index{31}, Index{100}}) {
        const auto a = grid_laplacian({n, 1});
        CHECK(exact_logdet(a) ==
              doctest::Approx(std::log(static_cast<double>(n + 1))).epsilon(1e-12));
    }
}

TEST_CASE("principal_minor_logdet") {
    const auto a = grid_laplacian({2, 2});
    CHECK(principal_minor_logdet(a, std::vector<Index>{}) == 0.0);
    CHECK(principal_minor_logdet(a, std::vector<Index>{0}) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-14));
    CHECK(principal_minor_logdet(a, std::vector<Index>{0, 1}) ==
          doctest::Approx(std::log(15.0)).epsilon(1e-14));
    CHECK(principal_minor_logdet(a, std::vector<Index>{0, 1, 2, 3}) ==
          doctest::Approx(std::log(192.0)).epsilon(1e-14));

    CHECK_THROWS_AS(principal_minor_logdet(a, std::vector<Index>{0, 4}), IndexOutOfRangeError);
    CHECK_THROWS_AS(principal_minor_logdet(a, std::vector<Index>{1, 1}), DomainError);
    CHECK_THROWS_AS(principal_minor_logdet(a, std::vector<Index>{2, 1}), DomainError);
}

TEST_CASE("hadamard_fischer_check equality cases") {
    const auto a = grid_laplacian({2, 2});
    const std::vector<Index> alpha{0, 2};
    CHECK(hadamard_fischer_check(a, alpha, alpha));

    std::vector<Triplet> triplets;
    for (Index i = 0; i < 6; ++i) {
        triplets.push_back({i, i, 2.0 + double(i)});
    }
    const auto diag = SparseSpdMatrix::from_triplets(6, std::move(triplets));
    CHECK(hadamard_fischer_check(diag, std::vector<Index>{0, 2}, std::vector<Index>{3, 5}));
}

TEST_CASE("hadamard_fischer_check fuzz") {
    std::mt19937_64 rng(4242);
    int checked = 0;
    while (checked < 400) {
        const Index n = 2 + rng() % 9;
        const auto a = random_dd_spd(n, 3, rng());
        auto draw_set = [&]() {
            std::vector<Index> s;
            for (Index i = 0; i < n; ++i) {
                if (rng() % 2 == 0) {
                    s.push_back(i);
                }
            }
            return s;
        };
        CHECK(hadamard_fischer_check(a, draw_set(), draw_set()));
        ++checked;
    }
}
