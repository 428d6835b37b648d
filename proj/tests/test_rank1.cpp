#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sta/rank1.hpp"

using namespace sta;

TEST_CASE("rank-1 distance and weight satisfy the pythagorean identity") {
    for (std::uint64_t seed : {1, 2, 3}) {
        HomPoly P = random_gaussian_poly(3, 4, FieldMode::Real, seed);
        Rank1Result res = best_rank1(P);
        double norm2 = std::pow(apolar_norm(P), 2);
        CHECK(res.dist1 * res.dist1 + res.w * res.w == doctest::Approx(norm2).epsilon(1e-10));
        CHECK(res.spectral_lower_bound == doctest::Approx(std::abs(res.w)));
        CHECK(res.v.norm() == doctest::Approx(1.0));
        CHECK(res.iterations >= 0);
    }
}

TEST_CASE("binary quartics match the angular grid maximizer") {
    for (std::uint64_t seed : {11, 12, 13}) {
        HomPoly P = random_gaussian_poly(2, 4, FieldMode::Real, seed);
        Rank1Result res = best_rank1(P);
        double grid = oracles::grid_max_abs(P, 200000);
        CHECK(res.spectral_lower_bound >= grid * (1.0 - 1e-6));
        CHECK(res.spectral_lower_bound <= grid * (1.0 + 1e-6));
    }
}

TEST_CASE("exact rank-1 tensors are reproduced") {
    Eigen::VectorXcd v(3);
    v << 2.0 / 3.0, -2.0 / 3.0, 1.0 / 3.0;
    Eigen::MatrixXcd V(3, 1);
    V.col(0) = v;
    Eigen::VectorXd w(1);
    w << -1.75;
    HomPoly P = from_decomposition(w, V, 3, FieldMode::Real);
    Rank1Result res = best_rank1(P);
    CHECK(res.w == doctest::Approx(-1.75));
    CHECK(res.dist1 < 1e-10);
    CHECK(std::abs(res.v.dot(v.real())) == doctest::Approx(1.0));
}

TEST_CASE("complex tensors are rejected") {
    HomPoly P = random_gaussian_poly(3, 3, FieldMode::Complex, 5);
    CHECK_THROWS_AS(best_rank1(P), Error);
}
