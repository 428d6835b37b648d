#include "sta/objective.hpp"

namespace sta {

namespace {

Complex pow_int(Complex base, int e) {
    Complex acc(1.0, 0.0);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Shared intermediates of the derivative blocks. S(i,j) = v_i^* v_j; the
// evaluation-side quantities use Pbar (conjugated coefficients).
struct BlockData {
    int n, r, d;
    Eigen::MatrixXcd S;
    Eigen::MatrixXcd Sd;    // S^d elementwise
    Eigen::MatrixXcd Sd1;   // S^(d-1)
    Eigen::MatrixXcd Sd2;   // S^(d-2)
    std::vector<Complex> pbar_val;          // Pbar(v_j)
    std::vector<Eigen::VectorXcd> pbar_grad;
    std::vector<Eigen::MatrixXcd> pbar_hess;
};

BlockData block_data(const Decomposition& p, const HomPoly& P, bool with_hess) {
    p.validate();
    if (p.n() != P.n())
        throw DimensionMismatch("objective: decomposition and polynomial disagree in dimension");
    BlockData bd;
    bd.n = p.n();
    bd.r = p.r();
    bd.d = P.d();
    bd.S = p.V.adjoint() * p.V;
    bd.Sd.resize(bd.r, bd.r);
    bd.Sd1.resize(bd.r, bd.r);
    bd.Sd2.resize(bd.r, bd.r);
    for (int i = 0; i < bd.r; ++i)
        for (int j = 0; j < bd.r; ++j) {
            const Complex s2 = pow_int(bd.S(i, j), bd.d - 2);
            bd.Sd2(i, j) = s2;
            bd.Sd1(i, j) = s2 * bd.S(i, j);
            bd.Sd(i, j) = bd.Sd1(i, j) * bd.S(i, j);
        }
    const HomPoly pbar = conj_poly(P);
    bd.pbar_val.resize(bd.r);
    bd.pbar_grad.resize(bd.r);
    if (with_hess) bd.pbar_hess.resize(bd.r);
    for (int j = 0; j < bd.r; ++j) {
        bd.pbar_val[j] = eval(pbar, p.V.col(j));
        bd.pbar_grad[j] = grad_eval(pbar, p.V.col(j));
        if (with_hess) bd.pbar_hess[j] = hess_eval(pbar, p.V.col(j));
    }
    return bd;
}

// G1 (r real) and G2 (n x r complex) of the gradient proposition.
void gradient_blocks(const BlockData& bd, const Decomposition& p,
                     Eigen::VectorXd& G1, Eigen::MatrixXcd& G2) {
    G1.resize(bd.r);
    G2.resize(bd.n, bd.r);
    for (int j = 0; j < bd.r; ++j) {
        double s = 0.0;
        for (int i = 0; i < bd.r; ++i) s += p.w[i] * std::real(bd.Sd(j, i));
        G1[j] = s - std::real(bd.pbar_val[j]);
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(bd.n);
        for (int i = 0; i < bd.r; ++i)
            acc += p.w[i] * bd.Sd1(i, j) * p.V.col(i).conjugate();
        G2.col(j) = static_cast<double>(bd.d) * p.w[j] * acc - p.w[j] * bd.pbar_grad[j];
    }
}

// A (r x r real), B (nr x r complex, row-block i, column j), and the
// block-diagonal C plus full D (both nr x nr complex).
void hessian_blocks(const BlockData& bd, const Decomposition& p, Eigen::MatrixXd& A,
                    Eigen::MatrixXcd& B, Eigen::MatrixXcd& C, Eigen::MatrixXcd& D) {
    const int n = bd.n, r = bd.r;
    const double d = static_cast<double>(bd.d);
    A = bd.Sd.real();
    B.setZero(n * r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            Eigen::VectorXcd blk =
                d * p.w[i] * bd.Sd1(j, i) * p.V.col(j).conjugate();
            if (i == j) {
                Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
                for (int l = 0; l < r; ++l)
                    acc += p.w[l] * bd.Sd1(l, i) * p.V.col(l).conjugate();
                blk += d * acc - bd.pbar_grad[i];
            }
            B.block(i * n, j, n, 1) = blk;
        }
    }
    C.setZero(n * r, n * r);
    for (int j = 0; j < r; ++j) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 0; i < r; ++i)
            M += p.w[i] * p.w[j] * bd.Sd2(i, j) *
                 (p.V.col(i).conjugate() * p.V.col(i).conjugate().transpose());
        C.block(j * n, j * n, n, n) =
            d * (d - 1.0) * M - p.w[j] * bd.pbar_hess[j];
    }
    D.setZero(n * r, n * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            D.block(i * n, j * n, n, n) =
                d * p.w[i] * p.w[j] * bd.Sd2(i, j) *
                (bd.S(i, j) * Eigen::MatrixXcd::Identity(n, n) +
                 (d - 1.0) * (p.V.col(j) * p.V.col(i).adjoint()));
}

}  // namespace

double objective_value(const Decomposition& p, const HomPoly& P) {
    if (p.n() != P.n())
        throw DimensionMismatch("objective_value: dimension mismatch");
    const HomPoly diff = from_decomposition(p.w, p.V, P.d(), p.mode) - P;
    return 0.5 * std::real(apolar(diff, diff));
}

Eigen::VectorXd gradient_real(const Decomposition& p, const HomPoly& P) {
    const BlockData bd = block_data(p, P, false);
    Eigen::VectorXd G1;
    Eigen::MatrixXcd G2;
    gradient_blocks(bd, p, G1, G2);
    const int n = bd.n, r = bd.r;
    Eigen::VectorXd G(r + 2 * n * r);
    G.head(r) = G1;
    for (int j = 0; j < r; ++j) {
        G.segment(r + j * n, n) = G2.col(j).real();
        G.segment(r + n * r + j * n, n) = -G2.col(j).imag();
    }
    return G;
}

Eigen::MatrixXd hessian_real(const Decomposition& p, const HomPoly& P) {
    const BlockData bd = block_data(p, P, true);
    Eigen::MatrixXd A;
    Eigen::MatrixXcd B, C, D;
    hessian_blocks(bd, p, A, B, C, D);
    const int n = bd.n, r = bd.r;
    const int m = n * r;
    Eigen::MatrixXd H(r + 2 * m, r + 2 * m);
    const Eigen::MatrixXcd CD = C + D;
    const Eigen::MatrixXcd DC = D - C;
    H.topLeftCorner(r, r) = A;
    H.block(0, r, r, m) = B.real().transpose();
    H.block(0, r + m, r, m) = -B.imag().transpose();
    H.block(r, 0, m, r) = B.real();
    H.block(r + m, 0, m, r) = -B.imag();
    H.block(r, r, m, m) = CD.real();
    H.block(r, r + m, m, m) = -CD.imag();
    H.block(r + m, r, m, m) = DC.imag();
    H.block(r + m, r + m, m, m) = DC.real();
    return H;
}

ComplexDerivatives complex_derivatives(const Decomposition& p, const HomPoly& P) {
    const BlockData bd = block_data(p, P, true);
    Eigen::VectorXd G1;
    Eigen::MatrixXcd G2;
    gradient_blocks(bd, p, G1, G2);
    Eigen::MatrixXd A;
    Eigen::MatrixXcd B, C, D;
    hessian_blocks(bd, p, A, B, C, D);
    const int n = bd.n, r = bd.r;
    const int m = n * r;
    ComplexDerivatives out;
    out.G_C.resize(r + 2 * m);
    out.G_C.head(r) = G1.cast<Complex>();
    for (int j = 0; j < r; ++j) {
        out.G_C.segment(r + j * n, n) = 0.5 * G2.col(j);
        out.G_C.segment(r + m + j * n, n) = 0.5 * G2.col(j).conjugate();
    }
    const Eigen::MatrixXcd Bt = 0.5 * B;
    const Eigen::MatrixXcd Ct = 0.5 * C;
    const Eigen::MatrixXcd Dt = 0.5 * D;
    out.H_C.resize(r + 2 * m, r + 2 * m);
    out.H_C.topLeftCorner(r, r) = A.cast<Complex>();
    out.H_C.block(0, r, r, m) = Bt.transpose();
    out.H_C.block(0, r + m, r, m) = Bt.conjugate().transpose();
    out.H_C.block(r, 0, m, r) = Bt;
    out.H_C.block(r + m, 0, m, r) = Bt.conjugate();
    out.H_C.block(r, r, m, m) = Ct;
    out.H_C.block(r, r + m, m, m) = Dt.transpose();
    out.H_C.block(r + m, r, m, m) = Dt;
    out.H_C.block(r + m, r + m, m, m) = Ct.conjugate();
    return out;
}

Eigen::MatrixXcd k_matrix(int n, int r) {
    const int m = n * r;
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(r + 2 * m, r + 2 * m);
    K.topLeftCorner(r, r).setIdentity();
    const Complex iu(0.0, 1.0);
    K.block(r, r, m, m) = Eigen::MatrixXcd::Identity(m, m);
    K.block(r, r + m, m, m) = iu * Eigen::MatrixXcd::Identity(m, m);
    K.block(r + m, r, m, m) = Eigen::MatrixXcd::Identity(m, m);
    K.block(r + m, r + m, m, m) = -iu * Eigen::MatrixXcd::Identity(m, m);
    return K;
}

Eigen::MatrixXcd k_matrix_inverse(int n, int r) {
    const int m = n * r;
    Eigen::MatrixXcd Kinv = Eigen::MatrixXcd::Zero(r + 2 * m, r + 2 * m);
    Kinv.topLeftCorner(r, r).setIdentity();
    Eigen::MatrixXcd K = k_matrix(n, r);
    Kinv.bottomRightCorner(2 * m, 2 * m) =
        0.5 * K.bottomRightCorner(2 * m, 2 * m).adjoint();
    return Kinv;
}

Eigen::VectorXd k_transform_gradient(const Eigen::VectorXcd& G_C, int n, int r) {
    const int m = n * r;
    if (G_C.size() != r + 2 * m)
        throw DimensionMismatch("k_transform_gradient: block shapes do not match (r, nr, nr)");
    const Eigen::VectorXcd out = k_matrix(n, r).transpose() * G_C;
    const double residue = out.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-8)
        throw NonRealResult("k_transform_gradient: imaginary residue above 1e-8");
    return out.real();
}

Eigen::MatrixXd k_transform_hessian(const Eigen::MatrixXcd& H_C, int n, int r) {
    const int m = n * r;
    if (H_C.rows() != r + 2 * m || H_C.cols() != r + 2 * m)
        throw DimensionMismatch("k_transform_hessian: block shapes do not match (r, nr, nr)");
    const Eigen::MatrixXcd K = k_matrix(n, r);
    const Eigen::MatrixXcd out = K.transpose() * H_C * K;
    const double residue = out.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-8)
        throw NonRealResult("k_transform_hessian: imaginary residue above 1e-8");
    return out.real();
}

DerivativeBundle bundle(const Decomposition& p, const HomPoly& P) {
    DerivativeBundle b;
    b.f_val = objective_value(p, P);
    b.G_R = gradient_real(p, P);
    b.H_R = hessian_real(p, P);
    b.basis = tangent_basis(p);
    b.G_proj = b.basis.Q.transpose() * b.G_R;
    b.H_proj = b.basis.Q.transpose() * b.H_R * b.basis.Q;
    return b;
}

}  // namespace sta
