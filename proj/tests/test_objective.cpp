#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sta/objective.hpp"
#include "sta/random.hpp"

using namespace sta;

namespace {

Decomposition random_decomposition(Rng& rng, int n, int r, FieldMode mode) {
    Eigen::MatrixXcd V(n, r);
    Eigen::VectorXd w(r);
    for (int j = 0; j < r; ++j) {
        Eigen::VectorXcd v = (mode == FieldMode::Real)
                                 ? rng.gaussian_vector(n).cast<Complex>().eval()
                                 : rng.gaussian_complex_vector(n);
        V.col(j) = v / v.norm();
        double mag = 0.5 + 1.5 * rng.uniform();
        w[j] = (mode == FieldMode::Real && rng.uniform() < 0.5) ? -mag : mag;
    }
    return Decomposition{w, V, mode};
}

}  // namespace

TEST_CASE("objective value equals half the squared apolar residual") {
    Rng rng(3);
    HomPoly P = random_gaussian_poly(3, 4, FieldMode::Complex, 11);
    Decomposition p = random_decomposition(rng, 3, 2, FieldMode::Complex);
    HomPoly approx = from_decomposition(p.w, p.V, 4, FieldMode::Complex);
    double expected = 0.5 * std::pow(apolar_norm(approx - P), 2);
    CHECK(objective_value(p, P) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("objective expands into gram, cross, and norm terms") {
    Rng rng(5);
    HomPoly P = random_gaussian_poly(3, 3, FieldMode::Complex, 13);
    Decomposition p = random_decomposition(rng, 3, 2, FieldMode::Complex);
    double gram = 0.0, cross = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex s = (p.V.col(i).adjoint() * p.V.col(j)).value();
            gram += p.w[i] * p.w[j] * std::real(std::pow(s, 3));
        }
        cross += p.w[i] * std::real(apolar(veronese(p.V.col(i), 3, FieldMode::Complex), P));
    }
    double norm2 = std::pow(apolar_norm(P), 2);
    CHECK(objective_value(p, P) ==
          doctest::Approx(0.5 * (gram - 2.0 * cross + norm2)).epsilon(1e-12));
}

TEST_CASE("closed-form gradient matches central differences") {
    Rng rng(7);
    int cfg = 0;
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        for (auto [n, d, r] : {std::tuple{2, 3, 1}, {3, 4, 2}, {4, 5, 2}}) {
            HomPoly P = random_gaussian_poly(n, d, mode, 100 + cfg++);
            Decomposition p = random_decomposition(rng, n, r, mode);
            Eigen::VectorXd G = gradient_real(p, P);
            Eigen::VectorXd fd = oracles::fd_gradient(P, p);
            CHECK((G - fd).norm() / std::max(1.0, fd.norm()) < 1e-6);
        }
    }
}

TEST_CASE("closed-form hessian matches central differences") {
    Rng rng(9);
    int cfg = 0;
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        for (auto [n, d, r] : {std::tuple{2, 3, 1}, {3, 4, 2}}) {
            HomPoly P = random_gaussian_poly(n, d, mode, 200 + cfg++);
            Decomposition p = random_decomposition(rng, n, r, mode);
            Eigen::MatrixXd H = hessian_real(p, P);
            Eigen::MatrixXd fd = oracles::fd_hessian(P, p);
            CHECK((H - fd).norm() / std::max(1.0, fd.norm()) < 1e-4);
            CHECK((H - H.transpose()).norm() < 1e-10);
        }
    }
}

TEST_CASE("gradient vanishes at exact decompositions") {
    Rng rng(11);
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        Decomposition p = random_decomposition(rng, 4, 3, mode);
        if (mode == FieldMode::Complex) p.w = p.w.cwiseAbs();
        HomPoly P = from_decomposition(p.w, p.V, 4, mode);
        CHECK(gradient_real(p, P).norm() < 1e-10);
    }
}

TEST_CASE("K transform is invertible and maps complex to real derivatives") {
    int n = 3, r = 2;
    Eigen::MatrixXcd K = k_matrix(n, r);
    Eigen::MatrixXcd Kinv = k_matrix_inverse(n, r);
    int m = r + 2 * n * r;
    CHECK((K * Kinv - Eigen::MatrixXcd::Identity(m, m)).norm() < 1e-14);
    CHECK((Kinv * K - Eigen::MatrixXcd::Identity(m, m)).norm() < 1e-14);

    Rng rng(13);
    HomPoly P = random_gaussian_poly(n, 4, FieldMode::Complex, 301);
    Decomposition p = random_decomposition(rng, n, r, FieldMode::Complex);
    ComplexDerivatives cd = complex_derivatives(p, P);
    Eigen::VectorXd G = k_transform_gradient(cd.G_C, n, r);
    Eigen::MatrixXd H = k_transform_hessian(cd.H_C, n, r);
    CHECK((G - gradient_real(p, P)).norm() < 1e-10);
    CHECK((H - hessian_real(p, P)).norm() < 1e-9);
}

TEST_CASE("bundle stitches value, derivatives, and projections together") {
    Rng rng(15);
    HomPoly P = random_gaussian_poly(3, 3, FieldMode::Real, 401);
    Decomposition p = random_decomposition(rng, 3, 2, FieldMode::Real);
    DerivativeBundle b = bundle(p, P);
    CHECK(b.f_val == doctest::Approx(objective_value(p, P)));
    CHECK((b.G_R - gradient_real(p, P)).norm() == 0.0);
    CHECK((b.G_proj - b.basis.Q.transpose() * b.G_R).norm() < 1e-14);
    CHECK((b.H_proj - b.basis.Q.transpose() * b.H_R * b.basis.Q).norm() < 1e-12);
    int k = p.r() + p.r() * (2 * p.n() - 1);
    CHECK(b.G_proj.size() == k);
    CHECK(b.H_proj.rows() == k);
}

TEST_CASE("real-mode gradients keep the imaginary block at zero") {
    Rng rng(17);
    HomPoly P = random_gaussian_poly(3, 4, FieldMode::Real, 501);
    Decomposition p = random_decomposition(rng, 3, 2, FieldMode::Real);
    Eigen::VectorXd G = gradient_real(p, P);
    // layout (w, Re v, Im v): the Im section is zero at real points
    CHECK(G.tail(2 * 3).norm() == 0.0);
}
