#include "sta/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "sta/errors.hpp"
#include "sta/examples.hpp"
#include "sta/init.hpp"
#include "sta/random.hpp"
#include "sta/rank1.hpp"

namespace sta {

namespace {

int worker_count(int trials) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(hw == 0 ? 1 : hw);
    if (const char* env = std::getenv("STA_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) workers = std::min(workers, cap);
        } catch (const std::exception&) {
        }
    }
    return std::max(1, std::min(workers, trials));
}

// Decorrelates the initialisation stream from the trial's data stream.
std::uint64_t init_seed_for(std::uint64_t seed, int trial) {
    return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1);
}

TrialRow run_trial(const ExperimentSpec& spec, int trial) {
    TrialRow row{trial, 0.0, 0.0, 0, false};
    auto t0 = std::chrono::steady_clock::now();
    try {
        Rng rng(spec.seed + static_cast<std::uint64_t>(trial));

        Eigen::MatrixXcd V(spec.n, spec.r);
        for (int j = 0; j < spec.r; ++j) {
            V.col(j) = (spec.mode == FieldMode::Real)
                           ? rng.gaussian_vector(spec.n).cast<Complex>().eval()
                           : rng.gaussian_complex_vector(spec.n);
        }
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(spec.r);
        HomPoly exact = from_decomposition(ones, V, spec.d, spec.mode);

        HomPoly target = exact;
        if (spec.epsilon > 0.0) {
            HomPoly noise =
                scale_to_norm(random_gaussian_poly(spec.n, spec.d, spec.mode, rng), spec.epsilon);
            target = exact + noise;
        }

        std::uint64_t iseed = init_seed_for(spec.seed, trial);
        auto [p0, report] = (spec.init_method == "random")
                                ? random_init(target, spec.r, iseed)
                                : shd_init(target, spec.r, iseed);

        ApproxResult result = (spec.solver.mode == SolverMode::plain_newton)
                                  ? rns(target, p0, spec.solver)
                                  : rns_tr(target, p0, spec.solver);

        HomPoly approx =
            from_decomposition(result.decomposition.w, result.decomposition.V, spec.d, spec.mode);
        double dist = apolar_norm(approx - exact);
        row.err = (spec.epsilon > 0.0) ? dist / spec.epsilon : dist;
        row.iterations = result.iterations;
    } catch (const Error&) {
        row.failed = true;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

}  // namespace

double lower_median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    return xs[(xs.size() - 1) / 2];
}

ExperimentSummary run_perturbation(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw DimensionMismatch("need at least one trial");
    ExperimentSummary summary;
    summary.absolute_residual = (spec.epsilon <= 0.0);
    summary.rows.resize(spec.trials);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= spec.trials) return;
            summary.rows[t] = run_trial(spec, t);
        }
    };
    int workers = worker_count(spec.trials);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<double> errs;
    double time_sum = 0.0;
    long iter_sum = 0;
    summary.failures = 0;
    for (const TrialRow& row : summary.rows) {
        if (row.failed) {
            ++summary.failures;
            continue;
        }
        errs.push_back(row.err);
        time_sum += row.seconds;
        iter_sum += row.iterations;
    }
    if (errs.empty()) {
        summary.err_min = summary.err_med = summary.err_max = 0.0;
        summary.avg_time_seconds = 0.0;
        summary.avg_iterations = 0;
        return summary;
    }
    summary.err_min = *std::min_element(errs.begin(), errs.end());
    summary.err_max = *std::max_element(errs.begin(), errs.end());
    summary.err_med = lower_median(errs);
    summary.avg_time_seconds = time_sum / static_cast<double>(errs.size());
    summary.avg_iterations =
        static_cast<int>(std::lround(static_cast<double>(iter_sum) / static_cast<double>(errs.size())));
    return summary;
}

namespace {

NamedExampleReport rank1_report(const std::string& name, const HomPoly& P, std::uint64_t seed) {
    NamedExampleReport rep;
    rep.name = name;
    rep.n = P.n();
    rep.d = P.d();
    rep.r = 1;
    rep.trials = 1;
    rep.rank1 = true;
    rep.tensor_norm_apolar = apolar_norm(P);

    auto [p0, init_report] = shd_init(P, 1, seed);
    HomPoly init_approx = from_decomposition(p0.w, p0.V, P.d(), P.mode());
    rep.dist_init_l2 = coeff_l2_norm(init_approx - P);
    rep.dist_init_apolar = apolar_norm(init_approx - P);

    auto t0 = std::chrono::steady_clock::now();
    Rank1Options opts;
    opts.seed = seed;
    Rank1Result best = best_rank1(P, opts);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    rep.w_signed = best.w;
    rep.w_abs = best.spectral_lower_bound;
    rep.iterations = best.iterations;
    rep.dist_best_apolar = best.dist1;
    Eigen::VectorXd w1(1);
    w1[0] = best.w;
    Eigen::MatrixXcd V1(P.n(), 1);
    V1.col(0) = best.v.cast<Complex>();
    HomPoly best_approx = from_decomposition(w1, V1, P.d(), P.mode());
    rep.dist_best_l2 = coeff_l2_norm(best_approx - P);
    return rep;
}

NamedExampleReport multirank_report(const std::string& name, const HomPoly& P, int r,
                                    int trials, std::uint64_t seed) {
    NamedExampleReport rep;
    rep.name = name;
    rep.n = P.n();
    rep.d = P.d();
    rep.r = r;
    rep.trials = trials;
    rep.rank1 = false;
    rep.tensor_norm_apolar = apolar_norm(P);

    long iter_sum = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
        auto [p0, init_report] = shd_init(P, r, seed + static_cast<std::uint64_t>(t));
        ApproxResult result = rns_tr(P, p0);
        rep.residuals.push_back(result.residual);
        iter_sum += result.iterations;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    rep.res_min = *std::min_element(rep.residuals.begin(), rep.residuals.end());
    rep.res_max = *std::max_element(rep.residuals.begin(), rep.residuals.end());
    rep.res_med = lower_median(rep.residuals);
    rep.avg_iterations =
        static_cast<int>(std::lround(static_cast<double>(iter_sum) / static_cast<double>(trials)));
    return rep;
}

}  // namespace

NamedExampleReport run_named_example(const std::string& name, int n, int r, int trials,
                                     std::uint64_t seed) {
    if (name == "ex42") {
        return rank1_report(name, alternating_reciprocal_tensor(n > 0 ? n : 10), seed);
    }
    if (name == "ex43") {
        return rank1_report(name, alternating_log_tensor(n > 0 ? n : 10), seed);
    }
    if (name == "ex44") {
        return rank1_report(name, sine_sum_tensor(n > 0 ? n : 10), seed);
    }
    if (name == "ex45") {
        HomPoly P = weighted_cubic_coupling_tensor(n > 0 ? n : 10);
        return multirank_report(name, P, r > 0 ? r : 10, trials > 0 ? trials : 10, seed);
    }
    if (name == "ex46") {
        HomPoly P = complex_cubic_coupling_tensor(n > 0 ? n : 10);
        return multirank_report(name, P, r > 0 ? r : 10, trials > 0 ? trials : 10, seed);
    }
    throw ParseError("unknown example name: " + name +
                     " (expected ex42, ex43, ex44, ex45, or ex46)");
}

}  // namespace sta
