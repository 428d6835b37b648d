#include "doctest.h"

#include <cmath>

#include "sta/hankel.hpp"
#include "sta/poly.hpp"
#include "sta/random.hpp"

using namespace sta;

TEST_CASE("hankel of x1^3 has a single nonzero entry") {
    Eigen::VectorXcd e1(2);
    e1 << 1.0, 0.0;
    HomPoly P = veronese(e1, 3, FieldMode::Real);
    HankelMatrix H = build_hankel(P, 1);
    CHECK(H.data.rows() == 2);  // degree-1 exponents
    CHECK(H.data.cols() == 3);  // degree-2 exponents
    int row = H.rows->index_of({1, 0});
    int col = H.cols->index_of({2, 0});
    CHECK(std::abs(H.data(row, col) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(H.data.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("hankel entries depend only on the exponent sum") {
    HomPoly P = random_gaussian_poly(3, 4, FieldMode::Complex, 7);
    HankelMatrix H = build_hankel(P, 2);
    auto full = P.basis_ptr();
    for (int a = 0; a < H.rows->size(); ++a) {
        for (int b = 0; b < H.cols->size(); ++b) {
            Exponent sum = H.rows->exponent(a);
            const Exponent& beta = H.cols->exponent(b);
            for (int i = 0; i < 3; ++i) sum[i] += beta[i];
            CHECK(std::abs(H.data(a, b) - P.coeffs()[full->index_of(sum)]) == 0.0);
        }
    }
    CHECK_THROWS_AS(build_hankel(P, 0), InvalidDegreeSplit);
    CHECK_THROWS_AS(build_hankel(P, 4), InvalidDegreeSplit);
}

TEST_CASE("hankel of a veronese point is the rank-1 outer pattern") {
    Rng rng(13);
    Eigen::VectorXcd v = rng.gaussian_complex_vector(3);
    v /= v.norm();
    HomPoly P = veronese(v, 4, FieldMode::Complex);
    HankelMatrix H = build_hankel(P, 1);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H.data);
    CHECK(svd.singularValues()[1] < 1e-13);
}

TEST_CASE("theta recovers the direction of a veronese point") {
    Rng rng(17);
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        Eigen::VectorXcd v = (mode == FieldMode::Real)
                                 ? rng.gaussian_vector(4).cast<Complex>().eval()
                                 : rng.gaussian_complex_vector(4);
        v /= v.norm();
        v = phase_fix(v);
        HomPoly P = veronese(v, 3, mode) * Complex(2.5, 0.0);
        ThetaResult t = theta_full(P);
        CHECK((t.u - v).norm() < 1e-12);
        CHECK(t.sigma2 < 1e-12 * t.sigma1);
        CHECK_FALSE(t.near_degenerate);
    }
}

TEST_CASE("theta is unit and phase-fixed on random input") {
    HomPoly P = random_gaussian_poly(4, 3, FieldMode::Complex, 19);
    Eigen::VectorXcd u = theta(P);
    CHECK(u.norm() == doctest::Approx(1.0));
    int k;
    u.cwiseAbs().maxCoeff(&k);
    CHECK(std::abs(u[k].imag()) < 1e-14);
    CHECK(u[k].real() > 0.0);
}

TEST_CASE("phase_fix rotates the largest component onto the positive axis") {
    Eigen::VectorXcd u(2);
    u << Complex(0.0, -2.0), Complex(1.0, 0.0);
    Eigen::VectorXcd fixed = phase_fix(u);
    CHECK(fixed[0].real() == doctest::Approx(2.0));
    CHECK(std::abs(fixed[0].imag()) < 1e-15);
    CHECK(std::abs(fixed.norm() - u.norm()) < 1e-15);
    CHECK_THROWS_AS(phase_fix(Eigen::VectorXcd::Zero(3)), ZeroVector);
}

TEST_CASE("singular_gap matches theta_full and flags zero input") {
    HomPoly P = random_gaussian_poly(3, 3, FieldMode::Real, 23);
    auto [s1, s2] = singular_gap(P);
    ThetaResult t = theta_full(P);
    CHECK(s1 == doctest::Approx(t.sigma1));
    CHECK(s2 == doctest::Approx(t.sigma2));
    CHECK(s1 >= s2);
    CHECK_THROWS_AS(theta_full(HomPoly::zero(3, 3, FieldMode::Real)), ZeroPolynomial);
}
