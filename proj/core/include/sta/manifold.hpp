#ifndef STA_MANIFOLD_HPP
#define STA_MANIFOLD_HPP

#include <vector>

#include <Eigen/Dense>

#include "sta/hankel.hpp"
#include "sta/poly.hpp"

namespace sta {

// Point on the product manifold: weights times unit directions. Complex
// mode keeps w_i > 0 with phases absorbed into the columns; real mode keeps
// V real and allows signed nonzero weights.
struct Decomposition {
    Eigen::VectorXd w;   // r weights
    Eigen::MatrixXcd V;  // n x r, unit columns
    FieldMode mode;

    int r() const { return static_cast<int>(w.size()); }
    int n() const { return static_cast<int>(V.rows()); }
    // Throws NotNormalized / DimensionMismatch when the invariants fail.
    void validate() const;
};

// Orthonormal basis of the tangent space at a decomposition, as the columns
// of Q = diag(I_r, M). Per column i, blocks[i] stacks [Q_{i,re}; Q_{i,im}]:
// the first 2n-1 columns of the pivoted-QR orthogonal factor of
// I_{2n} - u_i u_i^t with u_i = (Re v_i; Im v_i).
struct TangentBasis {
    Eigen::MatrixXd Q;                    // (r+2nr) x (r+(2n-1)r)
    std::vector<Eigen::MatrixXd> blocks;  // r entries of 2n x (2n-1)
};

// Orthogonal projection of Q onto the line through Phi(v):
// (apolar(Phi(v), Q)/||v||^{2d}) Phi(v). Invariant under scaling of v.
HomPoly project_pi(const Eigen::VectorXcd& v, const HomPoly& Q);

// Rank-1 point w Phi(u) with unit u.
struct VeronesePoint {
    double w;
    Eigen::VectorXcd u;
};

// Projects P+Q back to the Veronese manifold through the top singular pair
// of its (1, d-1) Hankel matrix: u = theta(P+Q), z = (P+Q)(conj u).
// Complex mode returns w = |z| with the phase of z spread over u as
// e^{i arg(z)/d}; real mode keeps the signed real weight w = z.
// Satisfies R_P(0) = P and P + tQ - R_P(tQ) = O(t^2) for tangent Q.
VeronesePoint retract_veronese(const HomPoly& P, const HomPoly& Q, FieldMode mode);

TangentBasis tangent_basis(const Decomposition& p);

// Product retraction in local coordinates: lifts the step through B.Q,
// forms per-block tangent polynomials
//   tg_j = w*_j Phi(v_j) + w_j DPhi(v_j) v*_j
// and retracts each block of the degree-d product. step has length
// r + r(2n-1).
Decomposition retract_product(const Decomposition& p, const Eigen::VectorXd& step,
                              const TangentBasis& B, int d);

// Coefficients of the Veronese differential DPhi(v) applied to u:
// at exponent alpha, sum_i alpha_i v^(alpha - e_i) u_i.
HomPoly veronese_differential(const Eigen::VectorXcd& v, const Eigen::VectorXcd& u,
                              int d, FieldMode mode);

// Apolar distance between the polynomials two decompositions represent.
double apolar_distance(const Decomposition& a, const Decomposition& b, int d);

}  // namespace sta

#endif
