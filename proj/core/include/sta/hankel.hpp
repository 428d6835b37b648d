#ifndef STA_HANKEL_HPP
#define STA_HANKEL_HPP

#include <Eigen/Dense>

#include "sta/poly.hpp"

namespace sta {

// Catalecticant matrix of P for the degree split (k, d-k). Rows are indexed
// by the exponents of degree k, columns by degree d-k, both graded-lex.
// Entry (alpha, beta) = p_{alpha+beta}, so it depends only on alpha+beta.
struct HankelMatrix {
    int k;
    int d_minus_k;
    std::shared_ptr<const MonomialBasis> rows;
    std::shared_ptr<const MonomialBasis> cols;
    Eigen::MatrixXcd data;
};

// Requires 1 <= k <= d-1.
HankelMatrix build_hankel(const HomPoly& P, int k);

// First left singular vector of the (1, d-1) Hankel matrix together with
// the leading singular pair. The phase is fixed so the largest-magnitude
// component is real positive; near_degenerate flags sigma1 ~ sigma2, where
// the vector is not uniquely determined.
struct ThetaResult {
    Eigen::VectorXcd u;
    double sigma1;
    double sigma2;
    bool near_degenerate;
};

ThetaResult theta_full(const HomPoly& P);

// Unit-norm first left singular vector of the (1, d-1) Hankel matrix.
Eigen::VectorXcd theta(const HomPoly& P);

// First two singular values of the (1, d-1) Hankel matrix.
std::pair<double, double> singular_gap(const HomPoly& P);

// Rotates so the largest-magnitude component is real positive.
Eigen::VectorXcd phase_fix(const Eigen::VectorXcd& u);

}  // namespace sta

#endif
