#include "sta/manifold.hpp"

#include <cmath>
#include <sstream>

namespace sta {

namespace {

Complex pow_int(Complex base, int e) {
    Complex acc(1.0, 0.0);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace

void Decomposition::validate() const {
    if (w.size() != V.cols())
        throw DimensionMismatch("Decomposition: weight count does not match column count");
    if (r() < 1) throw DimensionMismatch("Decomposition: rank must be >= 1");
    for (int j = 0; j < r(); ++j) {
        if (std::abs(V.col(j).norm() - 1.0) > 1e-9) {
            std::ostringstream msg;
            msg << "Decomposition: column " << j << " has norm " << V.col(j).norm();
            throw NotNormalized(msg.str());
        }
        if (mode == FieldMode::Real && V.col(j).imag().norm() > 1e-12)
            throw NotNormalized("Decomposition: complex column in real mode");
    }
}

HomPoly project_pi(const Eigen::VectorXcd& v, const HomPoly& Q) {
    const double vnorm = v.norm();
    if (vnorm == 0.0) throw ZeroVector("project_pi: direction vector is zero");
    const HomPoly phi = veronese(v, Q.d(), Q.mode());
    const Complex coef = apolar(phi, Q) / std::pow(vnorm, 2.0 * Q.d());
    return phi * coef;
}

VeronesePoint retract_veronese(const HomPoly& P, const HomPoly& Q, FieldMode mode) {
    const HomPoly cand = P + Q;
    ThetaResult th;
    try {
        th = theta_full(cand);
    } catch (const ZeroPolynomial&) {
        throw DegenerateRetraction("retract_veronese: P+Q has a zero Hankel matrix");
    }
    VeronesePoint out;
    const Complex z = eval(cand, th.u.conjugate());
    if (mode == FieldMode::Real) {
        Eigen::VectorXd u_re = th.u.real();
        const double un = u_re.norm();
        if (un == 0.0)
            throw DegenerateRetraction("retract_veronese: singular vector has no real part");
        u_re /= un;
        out.u = u_re.cast<Complex>();
        out.w = std::real(eval(cand, out.u));
    } else {
        const double arg = std::arg(z);
        out.w = std::abs(z);
        out.u = th.u * std::exp(Complex(0.0, arg / P.d()));
    }
    return out;
}

TangentBasis tangent_basis(const Decomposition& p) {
    p.validate();
    const int n = p.n();
    const int r = p.r();
    const int k = 2 * n - 1;
    TangentBasis B;
    B.blocks.reserve(r);
    B.Q = Eigen::MatrixXd::Zero(r + 2 * n * r, r + k * r);
    B.Q.topLeftCorner(r, r).setIdentity();
    for (int i = 0; i < r; ++i) {
        Eigen::VectorXd u(2 * n);
        u.head(n) = p.V.col(i).real();
        u.tail(n) = p.V.col(i).imag();
        const Eigen::MatrixXd proj =
            Eigen::MatrixXd::Identity(2 * n, 2 * n) - u * u.transpose();
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(proj);
        const Eigen::MatrixXd Qf = qr.householderQ();
        Eigen::MatrixXd block = Qf.leftCols(k);
        B.blocks.push_back(block);
        // rows r..r+nr hold the real parts, rows r+nr.. the imaginary parts
        B.Q.block(r + i * n, r + i * k, n, k) = block.topRows(n);
        B.Q.block(r + n * r + i * n, r + i * k, n, k) = block.bottomRows(n);
    }
    return B;
}

HomPoly veronese_differential(const Eigen::VectorXcd& v, const Eigen::VectorXcd& u,
                              int d, FieldMode mode) {
    const int n = static_cast<int>(v.size());
    auto basis = MonomialBasis::get(n, d);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(basis->size());
    for (int idx = 0; idx < basis->size(); ++idx) {
        const Exponent& a = basis->exponent(idx);
        Complex s(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            Complex prod(1.0, 0.0);
            for (int t = 0; t < n; ++t)
                prod *= pow_int(v[t], t == i ? a[t] - 1 : a[t]);
            s += static_cast<double>(a[i]) * prod * u[i];
        }
        c[idx] = s;
    }
    return HomPoly(basis, std::move(c), mode);
}

Decomposition retract_product(const Decomposition& p, const Eigen::VectorXd& step,
                              const TangentBasis& B, int d) {
    const int n = p.n();
    const int r = p.r();
    if (step.size() != B.Q.cols())
        throw DimensionMismatch("retract_product: step length does not match tangent basis");
    const Eigen::VectorXd lift = B.Q * step;

    Decomposition out;
    out.mode = p.mode;
    out.w.resize(r);
    out.V.resize(n, r);
    for (int j = 0; j < r; ++j) {
        const double wstar = lift[j];
        Eigen::VectorXcd vstar(n);
        for (int i = 0; i < n; ++i)
            vstar[i] = Complex(lift[r + j * n + i], lift[r + n * r + j * n + i]);
        const HomPoly Pj = veronese(p.V.col(j), d, p.mode) * Complex(p.w[j], 0.0);
        HomPoly tg = veronese(p.V.col(j), d, p.mode) * Complex(wstar, 0.0) +
                     veronese_differential(p.V.col(j), vstar, d, p.mode) *
                         Complex(p.w[j], 0.0);
        VeronesePoint block;
        try {
            block = retract_veronese(Pj, tg, p.mode);
        } catch (const DegenerateRetraction& e) {
            std::ostringstream msg;
            msg << e.what() << " (block " << j << ")";
            throw DegenerateRetraction(msg.str());
        }
        out.w[j] = block.w;
        out.V.col(j) = block.u;
    }
    return out;
}

double apolar_distance(const Decomposition& a, const Decomposition& b, int d) {
    const HomPoly pa = from_decomposition(a.w, a.V, d, a.mode);
    const HomPoly pb = from_decomposition(b.w, b.V, d, b.mode);
    return apolar_norm(pa - pb);
}

}  // namespace sta
