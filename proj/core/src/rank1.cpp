#include "sta/rank1.hpp"

#include <cmath>
#include <vector>

#include "sta/errors.hpp"
#include "sta/init.hpp"
#include "sta/random.hpp"
#include "sta/solver.hpp"

namespace sta {

Rank1Result best_rank1(const HomPoly& P, const Rank1Options& opts) {
    if (P.mode() != FieldMode::Real) {
        throw Error("best_rank1 expects a real tensor");
    }
    int n = P.n();

    SolverOptions sopts;
    sopts.mode = SolverMode::plain_newton;
    sopts.max_iters = opts.max_iters;

    std::vector<Decomposition> starts;
    {
        auto [p0, report] = shd_init(P, 1, opts.seed);
        starts.push_back(std::move(p0));
    }
    Rng rng(opts.seed);
    for (int s = 0; s < opts.random_restarts; ++s) {
        Eigen::VectorXd dir = rng.gaussian_vector(n);
        double nrm = dir.norm();
        if (nrm == 0.0) {
            --s;
            continue;
        }
        dir /= nrm;
        Eigen::MatrixXcd V(n, 1);
        V.col(0) = dir.cast<Complex>();
        Eigen::VectorXd w(1);
        w[0] = std::real(eval(P, V.col(0)));
        starts.push_back(Decomposition{w, V, FieldMode::Real});
    }

    Rank1Result best{};
    bool have = false;
    for (const Decomposition& p0 : starts) {
        ApproxResult run = rns(P, p0, sopts);
        Eigen::VectorXd v = run.decomposition.V.col(0).real();
        double nrm = v.norm();
        if (nrm == 0.0) continue;
        v /= nrm;
        // Reading the weight off the direction keeps dist1^2 + w^2 = ||P||^2
        // exact at the reported point.
        double w = std::real(eval(P, v.cast<Complex>()));
        if (!have || std::abs(w) > std::abs(best.w)) {
            Eigen::VectorXd ww(1);
            ww[0] = w;
            Eigen::MatrixXcd V(n, 1);
            V.col(0) = v.cast<Complex>();
            HomPoly approx = from_decomposition(ww, V, P.d(), FieldMode::Real);
            best.w = w;
            best.v = v;
            best.spectral_lower_bound = std::abs(w);
            best.dist1 = apolar_norm(approx - P);
            best.iterations = run.iterations;
            have = true;
        }
    }
    if (!have) throw DegenerateInitialPoint("all rank-1 refinements collapsed");
    return best;
}

}  // namespace sta
