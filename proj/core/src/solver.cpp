#include "sta/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sta/errors.hpp"

namespace sta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unreduced objective along a tentative step in tangent coordinates.
double model_value(const Eigen::VectorXd& G, const Eigen::MatrixXd& H,
                   const Eigen::VectorXd& u) {
    return G.dot(u) + 0.5 * u.dot(H * u);
}

void warn_above_generic_rank(const HomPoly& P, int r, std::vector<std::string>& warnings) {
    if (P.d() < 3) return;
    long grank = generic_rank(P.n(), P.d());
    if (r >= grank) {
        warnings.push_back("requested rank " + std::to_string(r) +
                           " is not below the generic rank " + std::to_string(grank) +
                           "; the set of rank-" + std::to_string(r) +
                           " tensors need not be closed and a best approximation may not exist");
    }
}

}  // namespace

const char* stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::running: return "running";
        case StopReason::radius_floor: return "radius_floor";
        case StopReason::max_iters: return "max_iters";
        case StopReason::iterate_converged: return "iterate_converged";
        case StopReason::diverged: return "diverged";
        case StopReason::degenerate_retraction: return "degenerate_retraction";
    }
    return "unknown";
}

Eigen::VectorXd solve_newton_step(const Eigen::MatrixXd& H, const Eigen::VectorXd& G,
                                  double pinv_threshold) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
    const Eigen::VectorXd& lam = eig.eigenvalues();
    double lam_max = lam.cwiseAbs().maxCoeff();
    Eigen::VectorXd coeffs = eig.eigenvectors().transpose() * G;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(lam.size());
    if (lam_max > 0.0) {
        double cutoff = lam_max / pinv_threshold;
        for (int i = 0; i < lam.size(); ++i) {
            if (std::abs(lam[i]) > cutoff) inv[i] = coeffs[i] / lam[i];
        }
    }
    return -(eig.eigenvectors() * inv);
}

DoglegStep dogleg(const Eigen::VectorXd& G, const Eigen::MatrixXd& H, double delta,
                  double pinv_threshold) {
    DoglegStep out;
    double gnorm = G.norm();
    if (gnorm == 0.0) {
        out.step = Eigen::VectorXd::Zero(G.size());
        out.branch = "newton";
        out.model_decrease = 0.0;
        return out;
    }

    Eigen::VectorXd p_newton = solve_newton_step(H, G, pinv_threshold);
    if (p_newton.norm() <= delta) {
        out.step = p_newton;
        out.branch = "newton";
    } else {
        double ghg = G.dot(H * G);
        if (ghg <= 0.0) {
            // Model is non-convex along the gradient: take the boundary
            // steepest-descent step.
            out.step = -(delta / gnorm) * G;
            out.branch = "steepest";
        } else {
            Eigen::VectorXd p_cauchy = -(gnorm * gnorm / ghg) * G;
            if (p_cauchy.norm() >= delta) {
                out.step = -(delta / gnorm) * G;
                out.branch = "steepest";
            } else {
                // Positive root of ||p_c + t (p_n - p_c)||^2 = delta^2.
                Eigen::VectorXd dvec = p_newton - p_cauchy;
                double a = dvec.squaredNorm();
                double b = 2.0 * p_cauchy.dot(dvec);
                double c = p_cauchy.squaredNorm() - delta * delta;
                double disc = std::max(0.0, b * b - 4.0 * a * c);
                double t = (-b + std::sqrt(disc)) / (2.0 * a);
                out.step = p_cauchy + t * dvec;
                out.branch = "segment";
            }
        }
    }

    out.model_decrease = -model_value(G, H, out.step);
    if (out.model_decrease <= 0.0) {
        // Degenerate pseudoinverse directions can make the candidate ascend
        // the model; fall back to a Cauchy step clipped to the region.
        double ghg = G.dot(H * G);
        double tau = (ghg > 0.0) ? std::min(gnorm * gnorm / ghg, delta / gnorm)
                                 : delta / gnorm;
        out.step = -tau * G;
        out.branch = "cauchy_guard";
        out.model_decrease = -model_value(G, H, out.step);
    }
    return out;
}

double update_radius(double rho, double delta, double step_norm, double delta_max) {
    if (rho > 0.6) return std::min(2.0 * step_norm, delta_max);
    // Smooth contraction: factor 1/3 for very poor agreement, near 1 for
    // rho just under the enlargement threshold. exp overflow saturates the
    // sigmoid, so rho = -inf contracts by exactly 1/3.
    double factor = 1.0 / 3.0 + (2.0 / 3.0) / (1.0 + std::exp(-14.0 * (rho - 1.0 / 3.0)));
    return std::min(factor * delta, delta_max);
}

std::pair<double, double> initial_radius(const Decomposition& p0, const HomPoly& P) {
    double delta_max = 0.5 * apolar_norm(P);
    double wsq = p0.w.squaredNorm();
    double delta0 =
        0.1 * std::sqrt(static_cast<double>(P.d()) / static_cast<double>(p0.r()) * wsq);
    delta0 = std::min(delta0, delta_max);
    if (delta0 == 0.0) {
        throw DegenerateInitialPoint("initial point has zero weights; trust region collapses");
    }
    return {delta0, delta_max};
}

ApproxResult rns_tr(const HomPoly& P, const Decomposition& p0, const SolverOptions& opts) {
    ApproxResult res;
    res.termination = StopReason::max_iters;
    warn_above_generic_rank(P, p0.r(), res.warnings);

    auto [delta, delta_max] = initial_radius(p0, P);

    Decomposition current = p0;
    DerivativeBundle cur = bundle(current, P);
    Decomposition best = current;
    double best_f = cur.f_val;

    int k = 0;
    for (; k < opts.max_iters; ++k) {
        DoglegStep dl = dogleg(cur.G_proj, cur.H_proj, delta, opts.pinv_threshold);

        TraceRow row;
        row.k = k;
        row.f = cur.f_val;
        row.delta = delta;
        row.grad_norm = cur.G_proj.norm();
        row.branch = dl.branch;

        Decomposition candidate;
        double cand_f = kInf;
        bool retraction_ok = true;
        try {
            candidate = retract_product(current, dl.step, cur.basis, P.d());
            cand_f = objective_value(candidate, P);
        } catch (const DegenerateRetraction&) {
            retraction_ok = false;
        }

        double rho;
        if (!retraction_ok || !std::isfinite(cand_f) || dl.model_decrease <= 0.0) {
            rho = -kInf;
        } else {
            rho = (cur.f_val - cand_f) / dl.model_decrease;
        }

        bool accepted = rho > opts.rho_accept;
        row.rho = rho;
        row.accepted = accepted;
        res.trace.push_back(row);

        bool converged = false;
        if (accepted) {
            converged = apolar_distance(candidate, current, P.d()) < opts.iterate_tol;
            current = candidate;
            cur = bundle(current, P);
            if (cur.f_val < best_f) {
                best = current;
                best_f = cur.f_val;
            }
        }

        delta = update_radius(rho, delta, dl.step.norm(), delta_max);

        if (converged) {
            res.termination = StopReason::iterate_converged;
            ++k;
            break;
        }
        if (delta <= opts.radius_floor) {
            res.termination = StopReason::radius_floor;
            ++k;
            break;
        }
    }

    res.decomposition = best;
    res.residual = std::sqrt(std::max(0.0, 2.0 * best_f));
    res.iterations = k;
    return res;
}

ApproxResult rns(const HomPoly& P, const Decomposition& p0, const SolverOptions& opts) {
    ApproxResult res;
    res.termination = StopReason::max_iters;
    warn_above_generic_rank(P, p0.r(), res.warnings);

    Decomposition current = p0;
    DerivativeBundle cur = bundle(current, P);
    Decomposition best = current;
    double best_f = cur.f_val;
    int increases = 0;

    int k = 0;
    for (; k < opts.max_iters; ++k) {
        Eigen::VectorXd step = solve_newton_step(cur.H_proj, cur.G_proj, opts.pinv_threshold);

        TraceRow row;
        row.k = k;
        row.f = cur.f_val;
        row.delta = 0.0;
        row.rho = 0.0;
        row.accepted = true;
        row.grad_norm = cur.G_proj.norm();
        row.branch = "newton";
        res.trace.push_back(row);

        Decomposition next;
        try {
            next = retract_product(current, step, cur.basis, P.d());
        } catch (const DegenerateRetraction&) {
            res.termination = StopReason::degenerate_retraction;
            ++k;
            break;
        }

        double dist = apolar_distance(next, current, P.d());
        double prev_f = cur.f_val;
        current = next;
        cur = bundle(current, P);
        if (cur.f_val < best_f) {
            best = current;
            best_f = cur.f_val;
        }

        if (cur.f_val > prev_f) {
            if (++increases >= 5) {
                res.termination = StopReason::diverged;
                ++k;
                break;
            }
        } else {
            increases = 0;
        }

        if (dist < opts.iterate_tol) {
            res.termination = StopReason::iterate_converged;
            ++k;
            break;
        }
    }

    res.decomposition = best;
    res.residual = std::sqrt(std::max(0.0, 2.0 * best_f));
    res.iterations = k;
    return res;
}

}  // namespace sta
