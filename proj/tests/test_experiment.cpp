#include "doctest.h"

#include <algorithm>
#include <cstdlib>

#include "sta/experiment.hpp"

using namespace sta;

namespace {

ExperimentSpec tiny_spec() {
    ExperimentSpec spec;
    spec.n = 4;
    spec.d = 3;
    spec.r = 1;
    spec.mode = FieldMode::Real;
    spec.epsilon = 1e-2;
    spec.trials = 6;
    spec.seed = 42;
    return spec;
}

}  // namespace

TEST_CASE("lower median picks the lower middle value") {
    CHECK(lower_median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(lower_median({4.0, 3.0, 2.0, 1.0}) == 2.0);
    CHECK(lower_median({5.0}) == 5.0);
}

TEST_CASE("perturbation summary statistics match the per-trial rows") {
    ExperimentSummary s = run_perturbation(tiny_spec());
    REQUIRE(s.rows.size() == 6);
    CHECK(s.failures == 0);
    std::vector<double> errs;
    double tsum = 0.0;
    long isum = 0;
    for (const TrialRow& row : s.rows) {
        CHECK_FALSE(row.failed);
        CHECK(row.err >= 0.0);
        CHECK(row.seconds >= 0.0);
        errs.push_back(row.err);
        tsum += row.seconds;
        isum += row.iterations;
    }
    CHECK(s.err_min == *std::min_element(errs.begin(), errs.end()));
    CHECK(s.err_max == *std::max_element(errs.begin(), errs.end()));
    CHECK(s.err_med == lower_median(errs));
    CHECK(s.avg_time_seconds == doctest::Approx(tsum / 6.0));
    CHECK(s.avg_iterations == static_cast<int>(std::lround(isum / 6.0)));
    // trial indices are in order after the merge
    for (int t = 0; t < 6; ++t) CHECK(s.rows[t].trial == t);
}

TEST_CASE("per-trial errors do not depend on scheduling") {
    ExperimentSummary a = run_perturbation(tiny_spec());
    setenv("STA_THREADS", "1", 1);
    ExperimentSummary b = run_perturbation(tiny_spec());
    unsetenv("STA_THREADS");
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].err == b.rows[i].err);  // bitwise: same seed, same work
        CHECK(a.rows[i].iterations == b.rows[i].iterations);
    }
}

TEST_CASE("zero perturbation reports absolute residuals") {
    ExperimentSpec spec = tiny_spec();
    spec.epsilon = 0.0;
    spec.trials = 3;
    ExperimentSummary s = run_perturbation(spec);
    CHECK(s.absolute_residual);
    CHECK(s.err_max < 1e-8);  // exact tensors are recovered
}

TEST_CASE("complex perturbation trials succeed") {
    ExperimentSpec spec = tiny_spec();
    spec.mode = FieldMode::Complex;
    spec.trials = 4;
    spec.r = 2;
    ExperimentSummary s = run_perturbation(spec);
    CHECK(s.failures == 0);
    CHECK(s.err_med > 0.0);
    CHECK(s.err_med < 10.0);  // err is measured relative to epsilon
}

TEST_CASE("named example dispatch validates names and reports shapes") {
    CHECK_THROWS_AS(run_named_example("ex99"), ParseError);
    NamedExampleReport rep = run_named_example("ex42", 4);
    CHECK(rep.rank1);
    CHECK(rep.n == 4);
    CHECK(rep.d == 3);
    CHECK(rep.w_abs == doctest::Approx(std::abs(rep.w_signed)));
    CHECK(rep.dist_best_l2 > 0.0);
    CHECK(rep.dist_best_apolar > 0.0);
    CHECK(rep.dist_best_apolar <= rep.dist_init_apolar + 1e-12);
}

TEST_CASE("multi-rank example reports residual spread over seeds") {
    NamedExampleReport rep = run_named_example("ex45", 5, 3, 3);
    CHECK_FALSE(rep.rank1);
    CHECK(rep.residuals.size() == 3);
    CHECK(rep.res_min <= rep.res_med);
    CHECK(rep.res_med <= rep.res_max);
    CHECK(rep.res_med == lower_median(rep.residuals));
}
