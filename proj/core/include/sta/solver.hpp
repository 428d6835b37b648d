#ifndef STA_SOLVER_HPP
#define STA_SOLVER_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sta/manifold.hpp"
#include "sta/objective.hpp"
#include "sta/poly.hpp"

namespace sta {

enum class SolverMode { trust_region, plain_newton };

struct SolverOptions {
    int max_iters = 200;
    double radius_floor = 1e-3;
    double iterate_tol = 1e-6;
    double rho_accept = 0.2;
    double rho_enlarge = 0.6;
    // Relative condition-number cutoff for the pseudoinverse Newton solve.
    double pinv_threshold = 1e12;
    SolverMode mode = SolverMode::trust_region;
};

enum class StopReason {
    running,
    radius_floor,
    max_iters,
    iterate_converged,
    diverged,
    degenerate_retraction,
};

const char* stop_reason_name(StopReason reason);

// One iteration record. delta and rho are meaningful in trust-region mode
// only; grad_norm is the projected gradient norm before the step.
struct TraceRow {
    int k;
    double f;
    double delta;
    double rho;
    bool accepted;
    double grad_norm;
    std::string branch;
};

struct ApproxResult {
    Decomposition decomposition;
    double residual;  // ||sum w_i Phi(v_i) - P||_d = sqrt(2 f)
    int iterations;
    std::vector<TraceRow> trace;
    StopReason termination;
    std::vector<std::string> warnings;
};

// -H^+ G through a symmetric eigendecomposition; eigenvalues below
// max|lambda| / pinv_threshold are treated as zero.
Eigen::VectorXd solve_newton_step(const Eigen::MatrixXd& H, const Eigen::VectorXd& G,
                                  double pinv_threshold);

struct DoglegStep {
    Eigen::VectorXd step;
    // newton: interior Newton point; steepest: boundary steepest descent
    // (also the non-convex fallback); segment: Cauchy-to-Newton boundary
    // crossing; cauchy_guard: constrained Cauchy fallback when the selected
    // candidate had non-positive model decrease.
    std::string branch;
    double model_decrease;  // m(0) - m(step)
};

// Dogleg solution of min m(u) = G^t u + u^t H u / 2 over ||u|| <= delta.
DoglegStep dogleg(const Eigen::VectorXd& G, const Eigen::MatrixXd& H, double delta,
                  double pinv_threshold = 1e12);

// rho > 0.6 enlarges to min(2 ||step||, delta_max); otherwise the radius
// contracts smoothly by 1/3 + (2/3)/(1 + e^(-14(rho - 1/3))).
double update_radius(double rho, double delta, double step_norm, double delta_max);

// Delta_0 = min(0.1 sqrt((d/r) sum w_i^2), delta_max), delta_max = ||P||_d / 2.
std::pair<double, double> initial_radius(const Decomposition& p0, const HomPoly& P);

// Riemannian Newton iteration with dogleg trust region. Accepts a step when
// rho exceeds rho_accept; stops at the radius floor, when consecutive
// accepted iterates are closer than iterate_tol in apolar norm, or at
// max_iters. Returns the best accepted point.
ApproxResult rns_tr(const HomPoly& P, const Decomposition& p0,
                    const SolverOptions& opts = {});

// Plain Newton variant: full pseudoinverse Newton steps, no acceptance
// test; reports divergence after 5 consecutive objective increases.
ApproxResult rns(const HomPoly& P, const Decomposition& p0,
                 const SolverOptions& opts = {});

}  // namespace sta

#endif
