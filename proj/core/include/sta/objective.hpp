#ifndef STA_OBJECTIVE_HPP
#define STA_OBJECTIVE_HPP

#include <Eigen/Dense>

#include "sta/manifold.hpp"
#include "sta/poly.hpp"

namespace sta {

// f, its exact first and second derivatives in the ambient real coordinates
// (w_1..w_r, Re v_1..Re v_r, Im v_1..Im v_r), and their projections onto
// the tangent basis. H_R and H_proj are symmetric; G_proj = Q^t G_R and
// H_proj = Q^t H_R Q have dimension r + r(2n-1) = 2nr.
struct DerivativeBundle {
    double f_val;
    Eigen::VectorXd G_R;
    Eigen::MatrixXd H_R;
    Eigen::VectorXd G_proj;
    Eigen::MatrixXd H_proj;
    TangentBasis basis;
};

// 1/2 ||sum_i w_i Phi(v_i) - P||_d^2.
double objective_value(const Decomposition& p, const HomPoly& P);

// Closed-form gradient (G1, Re G2, -Im G2) with
//   G1_j = sum_i w_i Re((v_j^* v_i)^d) - Re(Pbar(v_j))
//   G2_j = d sum_i w_i w_j (v_i^* v_j)^{d-1} conj(v_i) - w_j grad Pbar(v_j)
// where Pbar has conjugated coefficients.
Eigen::VectorXd gradient_real(const Decomposition& p, const HomPoly& P);

// Closed-form Hessian assembled from the blocks
//   A    = Re[(v_i^* v_j)^d]
//   B_ij = d w_i (v_j^* v_i)^{d-1} conj(v_j)
//          + delta_ij (d sum_l w_l (v_l^* v_i)^{d-1} conj(v_l) - grad Pbar(v_i))
//   C_j  = d(d-1) sum_i w_i w_j (v_i^* v_j)^{d-2} conj(v_i) conj(v_i)^t
//          - w_j hess Pbar(v_j)                       (block diagonal)
//   D_ij = d w_i w_j (v_i^* v_j)^{d-2} ((v_i^* v_j) I_n + (d-1) v_j v_i^*)
// as H^R = [[A, Re(B)^t, -Im(B)^t], [Re B, Re(C+D), -Im(C+D)],
//           [-Im B, Im(D-C), Re(D-C)]].
Eigen::MatrixXd hessian_real(const Decomposition& p, const HomPoly& P);

// Derivatives in stacked complex form: G_C = (G1, G2/2, conj(G2/2)) and
// H_C with blocks [[A, Bt^t, conj(Bt)^t], [Bt, Ct, Dt^t],
// [conj(Bt), Dt, conj(Ct)]] where Bt, Ct, Dt are half of B, C, D. The K
// transform maps these onto gradient_real / hessian_real exactly.
struct ComplexDerivatives {
    Eigen::VectorXcd G_C;  // r + 2nr
    Eigen::MatrixXcd H_C;  // (r + 2nr)^2
};

ComplexDerivatives complex_derivatives(const Decomposition& p, const HomPoly& P);

// K = diag(I_r, J) with J = [[I, iI], [I, -iI]] acting on the stacked
// (v, conj v) blocks; K^{-1} = diag(I_r, J^{-1}) with J^{-1} = (1/2) J^*.
Eigen::MatrixXcd k_matrix(int n, int r);
Eigen::MatrixXcd k_matrix_inverse(int n, int r);

// K^t G_C; the result must be real up to 1e-8 residue (NonRealResult).
Eigen::VectorXd k_transform_gradient(const Eigen::VectorXcd& G_C, int n, int r);

// K^t H_C K with the same realness contract.
Eigen::MatrixXd k_transform_hessian(const Eigen::MatrixXcd& H_C, int n, int r);

// Computes tangent basis, value, derivatives, and projections at p.
DerivativeBundle bundle(const Decomposition& p, const HomPoly& P);

}  // namespace sta

#endif
