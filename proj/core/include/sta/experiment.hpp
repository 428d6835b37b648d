#ifndef STA_EXPERIMENT_HPP
#define STA_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sta/poly.hpp"
#include "sta/solver.hpp"

namespace sta {

struct ExperimentSpec {
    int n = 10;
    int d = 4;
    int r = 1;
    FieldMode mode = FieldMode::Real;
    double epsilon = 1e-2;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string init_method = "shd";  // "shd" or "random"
    SolverOptions solver;
};

struct TrialRow {
    int trial;
    double err;
    double seconds;
    int iterations;
    bool failed;
};

struct ExperimentSummary {
    double err_min;
    double err_med;  // lower middle of the sorted errors
    double err_max;
    double avg_time_seconds;
    int avg_iterations;  // rounded to nearest integer
    std::vector<TrialRow> rows;
    int failures;
    // epsilon == 0 reports absolute residuals instead of err / epsilon.
    bool absolute_residual;
};

// Recovery-error experiment: per trial, an exact rank-r tensor with Gaussian
// generators is perturbed by epsilon times a unit-norm Gaussian tensor,
// initialised and solved, and err = ||result - exact|| / epsilon recorded.
// Trials run on a worker pool (capped by the STA_THREADS environment
// variable) with per-trial generators seeded seed + trial, so results do not
// depend on scheduling. Timing covers initialisation plus solve. Failed
// trials are excluded from the statistics.
ExperimentSummary run_perturbation(const ExperimentSpec& spec);

struct NamedExampleReport {
    std::string name;
    int n, d, r;
    int trials;
    bool rank1;
    double tensor_norm_apolar;
    // Rank-1 reports: signed weight, spectral lower bound |w|, and the
    // rank-1 distances at the initial and refined points in both the
    // coefficient and apolar norms.
    double w_signed = 0.0;
    double w_abs = 0.0;
    double dist_init_l2 = 0.0;
    double dist_best_l2 = 0.0;
    double dist_init_apolar = 0.0;
    double dist_best_apolar = 0.0;
    int iterations = 0;
    double seconds = 0.0;
    // Multi-rank reports: apolar residuals over independent seeds.
    std::vector<double> residuals;
    double res_min = 0.0;
    double res_med = 0.0;
    double res_max = 0.0;
    int avg_iterations = 0;
};

// Runs one of the named tensors ex42..ex46 with its canonical defaults
// (overridable n / rank / trials). ex42..ex44 are rank-1 spectral reports;
// ex45 / ex46 are rank-r approximations over `trials` seeds.
NamedExampleReport run_named_example(const std::string& name, int n = 0, int r = 0,
                                     int trials = 0, std::uint64_t seed = 0);

// Lower-middle median of an unsorted sample.
double lower_median(std::vector<double> xs);

}  // namespace sta

#endif
