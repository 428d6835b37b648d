#include "sta/hankel.hpp"

#include <sstream>

namespace sta {

HankelMatrix build_hankel(const HomPoly& P, int k) {
    if (k < 1 || k > P.d() - 1) {
        std::ostringstream msg;
        msg << "build_hankel: split degree " << k << " outside 1.." << (P.d() - 1);
        throw InvalidDegreeSplit(msg.str());
    }
    HankelMatrix H;
    H.k = k;
    H.d_minus_k = P.d() - k;
    H.rows = MonomialBasis::get(P.n(), k);
    H.cols = MonomialBasis::get(P.n(), P.d() - k);
    H.data.resize(H.rows->size(), H.cols->size());
    Exponent sum(P.n());
    for (int i = 0; i < H.rows->size(); ++i) {
        const Exponent& a = H.rows->exponent(i);
        for (int j = 0; j < H.cols->size(); ++j) {
            const Exponent& b = H.cols->exponent(j);
            for (int t = 0; t < P.n(); ++t) sum[t] = a[t] + b[t];
            H.data(i, j) = P.coeffs()[P.basis().index_of(sum)];
        }
    }
    return H;
}

Eigen::VectorXcd phase_fix(const Eigen::VectorXcd& u) {
    int k = 0;
    u.cwiseAbs().maxCoeff(&k);
    const Complex s = u[k];
    if (std::abs(s) == 0.0) throw ZeroVector("phase_fix: zero vector has no phase");
    return u * (std::conj(s) / std::abs(s));
}

ThetaResult theta_full(const HomPoly& P) {
    if (P.coeffs().norm() == 0.0)
        throw ZeroPolynomial("theta: zero polynomial has no singular vector");
    const HankelMatrix H = build_hankel(P, 1);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H.data, Eigen::ComputeThinU);
    ThetaResult result;
    result.u = phase_fix(svd.matrixU().col(0));
    result.sigma1 = svd.singularValues()[0];
    result.sigma2 = svd.singularValues().size() > 1 ? svd.singularValues()[1] : 0.0;
    result.near_degenerate =
        result.sigma2 > (1.0 - 1e-10) * result.sigma1 && result.sigma1 > 0.0;
    return result;
}

Eigen::VectorXcd theta(const HomPoly& P) { return theta_full(P).u; }

std::pair<double, double> singular_gap(const HomPoly& P) {
    const HankelMatrix H = build_hankel(P, 1);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H.data);
    const auto& s = svd.singularValues();
    return {s[0], s.size() > 1 ? s[1] : 0.0};
}

}  // namespace sta
