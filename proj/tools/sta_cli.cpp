#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sta/errors.hpp"
#include "sta/experiment.hpp"
#include "sta/init.hpp"
#include "sta/io.hpp"
#include "sta/rank1.hpp"
#include "sta/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

struct ApproxArgs {
    std::string input;
    int rank = 1;
    std::string init = "shd";
    std::string mode = "tr";
    std::uint64_t seed = 0;
    std::string out;
    std::string trace;
};

int run_approx(const ApproxArgs& args) {
    sta::HomPoly P = sta::read_poly_json(args.input);

    auto [p0, init_report] = (args.init == "random")
                                 ? sta::random_init(P, args.rank, args.seed)
                                 : sta::shd_init(P, args.rank, args.seed);

    sta::SolverOptions opts;
    opts.mode = (args.mode == "newton") ? sta::SolverMode::plain_newton
                                        : sta::SolverMode::trust_region;
    sta::ApproxResult result = (opts.mode == sta::SolverMode::plain_newton)
                                   ? sta::rns(P, p0, opts)
                                   : sta::rns_tr(P, p0, opts);

    std::cout << "n: " << P.n() << "\nd: " << P.d() << "\nfield: "
              << (P.mode() == sta::FieldMode::Real ? "real" : "complex")
              << "\nrank: " << args.rank << "\n";
    std::cout.precision(12);
    std::cout << "init_method: " << init_report.method
              << "\ninit_residual: " << init_report.residual_at_init
              << "\nresidual: " << result.residual
              << "\niterations: " << result.iterations
              << "\ntermination: " << sta::stop_reason_name(result.termination) << "\n";
    for (const std::string& w : init_report.warnings) std::cerr << "warning: " << w << "\n";
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";

    if (!args.out.empty()) {
        sta::write_decomposition_json(args.out, result.decomposition, P.d());
    }
    if (!args.trace.empty()) {
        sta::write_trace_csv(args.trace, result.trace);
    }
    return kExitOk;
}

int run_rank1(const std::string& input) {
    sta::HomPoly P = sta::read_poly_json(input);
    if (P.mode() != sta::FieldMode::Real) {
        throw sta::ParseError(input + ": rank1 requires a real tensor");
    }
    sta::Rank1Result result = sta::best_rank1(P);
    std::cout.precision(12);
    std::cout << "w: " << result.w << "\nspectral_lower_bound: " << result.spectral_lower_bound
              << "\nrank1_distance: " << result.dist1
              << "\niterations: " << result.iterations << "\nv:";
    for (int i = 0; i < result.v.size(); ++i) std::cout << ' ' << result.v[i];
    std::cout << "\n";
    return kExitOk;
}

int run_bench_perturb(const sta::ExperimentSpec& spec) {
    sta::ExperimentSummary summary = sta::run_perturbation(spec);
    if (summary.absolute_residual) {
        std::cerr << "note: eps = 0, err columns contain absolute residuals\n";
    }
    if (summary.failures > 0) {
        std::cerr << "note: " << summary.failures << " of " << spec.trials
                  << " trials failed and were excluded\n";
    }
    std::cout << sta::perturbation_csv(summary, spec.r, spec.epsilon);
    return kExitOk;
}

int run_bench_example(const std::string& name, int n, int r, int trials, std::uint64_t seed) {
    sta::NamedExampleReport rep = sta::run_named_example(name, n, r, trials, seed);
    std::cout.precision(12);
    std::cout << "example: " << rep.name << "\nn: " << rep.n << "\nd: " << rep.d
              << "\nrank: " << rep.r << "\ntensor_norm: " << rep.tensor_norm_apolar << "\n";
    if (rep.rank1) {
        std::cout << "w: " << rep.w_signed << "\nspectral_lower_bound: " << rep.w_abs
                  << "\nrank1_distance_coeff_l2: " << rep.dist_best_l2
                  << "\nrank1_distance_apolar: " << rep.dist_best_apolar
                  << "\ninit_distance_coeff_l2: " << rep.dist_init_l2
                  << "\ninit_distance_apolar: " << rep.dist_init_apolar
                  << "\niterations: " << rep.iterations << "\nseconds: " << rep.seconds << "\n";
    } else {
        std::cout << "trials: " << rep.trials << "\nresidual_min: " << rep.res_min
                  << "\nresidual_med: " << rep.res_med << "\nresidual_max: " << rep.res_max
                  << "\navg_iterations: " << rep.avg_iterations << "\nseconds: " << rep.seconds
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-rank approximation of symmetric tensors"};
    app.require_subcommand(1);

    ApproxArgs approx_args;
    CLI::App* approx = app.add_subcommand("approx", "Best rank-r approximation of a tensor");
    approx->add_option("--input", approx_args.input, "Tensor JSON file")->required();
    approx->add_option("--rank", approx_args.rank, "Target rank")
        ->required()
        ->check(CLI::PositiveNumber);
    approx->add_option("--init", approx_args.init, "Initialisation method")
        ->check(CLI::IsMember({"shd", "random"}));
    approx->add_option("--mode", approx_args.mode, "Solver mode")
        ->check(CLI::IsMember({"tr", "newton"}));
    approx->add_option("--seed", approx_args.seed, "Random seed");
    approx->add_option("--out", approx_args.out, "Write the decomposition JSON here");
    approx->add_option("--trace", approx_args.trace, "Write the iteration trace CSV here");

    std::string rank1_input;
    CLI::App* rank1 = app.add_subcommand("rank1", "Best rank-1 approximation and spectral bound");
    rank1->add_option("--input", rank1_input, "Tensor JSON file")->required();

    CLI::App* bench = app.add_subcommand("bench", "Benchmark drivers");
    bench->require_subcommand(1);

    sta::ExperimentSpec spec;
    std::string field = "real";
    CLI::App* perturb = bench->add_subcommand("perturb", "Perturbation recovery experiment");
    perturb->add_option("--n", spec.n, "Number of variables")->required()->check(CLI::PositiveNumber);
    perturb->add_option("--d", spec.d, "Degree")->required()->check(CLI::PositiveNumber);
    perturb->add_option("--rank", spec.r, "Rank")->required()->check(CLI::PositiveNumber);
    perturb->add_option("--eps", spec.epsilon, "Perturbation size")->required()
        ->check(CLI::NonNegativeNumber);
    perturb->add_option("--trials", spec.trials, "Number of trials")->check(CLI::PositiveNumber);
    perturb->add_option("--field", field, "Scalar field")->check(CLI::IsMember({"real", "complex"}));
    perturb->add_option("--seed", spec.seed, "Random seed");
    perturb->add_option("--init", spec.init_method, "Initialisation method")
        ->check(CLI::IsMember({"shd", "random"}));

    std::string example_name;
    int example_n = 0, example_rank = 0, example_trials = 0;
    std::uint64_t example_seed = 0;
    CLI::App* example = bench->add_subcommand("example", "Named example tensors");
    example->add_option("--name", example_name, "ex42, ex43, ex44, ex45, or ex46")->required();
    example->add_option("--n", example_n, "Override the number of variables")
        ->check(CLI::PositiveNumber);
    example->add_option("--rank", example_rank, "Override the rank")->check(CLI::PositiveNumber);
    example->add_option("--trials", example_trials, "Override the trial count")
        ->check(CLI::PositiveNumber);
    example->add_option("--seed", example_seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(approx)) return run_approx(approx_args);
        if (app.got_subcommand(rank1)) return run_rank1(rank1_input);
        if (bench->got_subcommand(perturb)) {
            spec.mode = (field == "complex") ? sta::FieldMode::Complex : sta::FieldMode::Real;
            return run_bench_perturb(spec);
        }
        if (bench->got_subcommand(example)) {
            return run_bench_example(example_name, example_n, example_rank, example_trials,
                                     example_seed);
        }
    } catch (const sta::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sta::Error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitOk;
}
