// Command-line surface: compute single quantities, sweep mu, run the
// verification suite, fuzz for findings, and run the 2x2 brute-force oracle.
// JSON in (matrix files), canonical JSON out (stdout); timing goes to stderr
// so reruns with the same seed are byte-identical on stdout.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seminorm/engine.hpp"
#include "seminorm/errors.hpp"
#include "seminorm/harness.hpp"
#include "seminorm/linalg.hpp"
#include "seminorm/matrix_io.hpp"
#include "seminorm/version.hpp"

namespace {

using nlohmann::json;
using namespace seminorm;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

void emit_report(const json& command, const json& results, const json& findings) {
  json report{{"tool_version", kToolVersion},
              {"command", command},
              {"results", results},
              {"findings", findings}};
  std::string out = canonical_dump(report);
  out += '\n';
  std::fwrite(out.data(), 1, out.size(), stdout);
  std::fflush(stdout);
}

json seminorm_result_to_json(const SeminormResult& r) {
  return json{{"value", r.value},
              {"converged", r.converged},
              {"starts_agreeing", r.starts_agreeing},
              {"iterations_total", r.iterations_total},
              {"witness", state_to_json(r.witness)}};
}

struct ComputeArgs {
  std::string matrix_file;
  std::string mean = "arithmetic";
  double mu = 0.5;
  std::string states = "mixed";
  std::uint64_t seed = 1;
};

int run_compute(const ComputeArgs& args) {
  const ComplexMatrix a = matrix_from_file(args.matrix_file);
  SeminormQuery q;
  q.matrix = a;
  q.mean = mean_kind_from_string(args.mean);
  q.mu = args.mu;
  q.state_class = state_class_from_string(args.states);
  q.config.seed = args.seed;

  const SeminormProblem problem(a);
  const SeminormResult r = problem.solve(q.mean, q.mu, q.state_class, q.config);

  json results{{"seminorm", seminorm_result_to_json(r)},
               {"numerical_radius", problem.radius().value},
               {"operator_norm", problem.op_norm()},
               {"crawford", crawford(a)},
               {"spectral_radius", spectral_radius(a)}};
  json command{{"verb", "compute"},   {"matrix", args.matrix_file},
               {"mean", args.mean},   {"mu", args.mu},
               {"states", args.states}, {"seed", args.seed}};
  emit_report(command, results, json::array());
  return kExitOk;
}

struct SweepArgs {
  std::string matrix_file;
  std::string mean = "arithmetic";
  int steps = 10;
  std::string states = "mixed";
  std::uint64_t seed = 1;
};

int run_sweep(const SweepArgs& args) {
  if (args.steps < 1) throw InputError("--steps must be >= 1");
  const ComplexMatrix a = matrix_from_file(args.matrix_file);
  std::vector<double> mus;
  for (int i = 0; i <= args.steps; ++i) {
    mus.push_back(static_cast<double>(i) / args.steps);
  }
  OptimizerConfig cfg;
  cfg.seed = args.seed;
  const MuSweepResult sweep = mu_sweep(a, mean_kind_from_string(args.mean), mus,
                                       state_class_from_string(args.states), cfg);
  json points = json::array();
  for (const auto& p : sweep.points) {
    points.push_back(json{{"mu", p.mu}, {"value", p.value}});
  }
  json results{{"points", std::move(points)},
               {"numerical_radius", sweep.numerical_radius},
               {"operator_norm", sweep.operator_norm},
               {"endpoints_consistent", sweep.endpoints_consistent},
               {"worst_endpoint_gap", sweep.worst_endpoint_gap}};
  json command{{"verb", "sweep"},   {"matrix", args.matrix_file},
               {"mean", args.mean}, {"steps", args.steps},
               {"states", args.states}, {"seed", args.seed}};
  emit_report(command, results, json::array());
  return kExitOk;
}

struct VerifyArgs {
  std::vector<int> dims{2, 3, 4};
  int trials = 50;
  std::uint64_t seed = 42;
  std::vector<std::string> checks;
};

int run_verify(const VerifyArgs& args) {
  TrialConfig cfg;
  cfg.dims = args.dims;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.checks = args.checks;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }

  const SuiteReport report = run_suite(cfg);
  json findings = json::array();
  for (const auto& c : report.checks) {
    if (c.is_violation(cfg.relative_tolerance)) findings.push_back(c.to_json());
  }
  json command{{"verb", "verify"},
               {"dims", args.dims},
               {"trials", args.trials},
               {"seed", args.seed},
               {"checks", args.checks}};
  emit_report(command, report.to_json(), findings);
  return report.fail_count > 0 ? kExitPropertyFailure : kExitOk;
}

struct FuzzArgs {
  std::string property;
  std::string mean = "arithmetic";
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<int> dims;
};

int run_fuzz(const FuzzArgs& args) {
  FuzzResult result;
  try {
    result = fuzz_property(args.property, mean_kind_from_string(args.mean),
                           args.trials, args.seed, args.dims);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  json findings = json::array();
  for (const auto& c : result.findings) findings.push_back(c.to_json());
  json results{{"trials", result.trials_run},
               {"evaluations", result.evaluations},
               {"finding_count", static_cast<int>(result.findings.size())}};
  json command{{"verb", "fuzz"},   {"property", args.property},
               {"mean", args.mean}, {"trials", args.trials},
               {"seed", args.seed}, {"dims", args.dims}};
  emit_report(command, results, findings);
  // Fuzzing is a report-only hunt: findings never fail the invocation.
  return kExitOk;
}

struct OracleArgs {
  std::string matrix_file;
  std::string mean = "arithmetic";
  double mu = 0.5;
  int grid = 2048;
};

int run_oracle(const OracleArgs& args) {
  const ComplexMatrix a = matrix_from_file(args.matrix_file);
  if (a.dim() != 2) {
    throw InputError("oracle requires a 2x2 matrix, got n = " + std::to_string(a.dim()));
  }
  double value = 0.0;
  try {
    value = oracle_2x2(a, mean_kind_from_string(args.mean), args.mu, args.grid);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  json results{{"value", value}, {"grid", args.grid}};
  json command{{"verb", "oracle"}, {"matrix", args.matrix_file},
               {"mean", args.mean}, {"mu", args.mu}, {"grid", args.grid}};
  emit_report(command, results, json::array());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mean-interpolated semi-norms on matrix algebras"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "seminorm value plus v, |A|, m, r");
  compute->add_option("--matrix", compute_args.matrix_file, "matrix JSON file")->required();
  compute->add_option("--mean", compute_args.mean, "arithmetic|geometric|harmonic")->required();
  compute->add_option("--mu", compute_args.mu, "interpolation parameter in [0,1]")->required();
  compute->add_option("--states", compute_args.states, "pure|mixed (default mixed)");
  compute->add_option("--seed", compute_args.seed, "optimizer seed");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "seminorm over K+1 evenly spaced mu values");
  sweep->add_option("--matrix", sweep_args.matrix_file, "matrix JSON file")->required();
  sweep->add_option("--mean", sweep_args.mean, "arithmetic|geometric|harmonic")->required();
  sweep->add_option("--steps", sweep_args.steps, "number of steps K")->required();
  sweep->add_option("--states", sweep_args.states, "pure|mixed (default mixed)");
  sweep->add_option("--seed", sweep_args.seed, "optimizer seed");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the property-check suite");
  verify->add_option("--dims", verify_args.dims, "dimensions, e.g. 2,3,4")->delimiter(',');
  verify->add_option("--trials", verify_args.trials, "trials per check variant");
  verify->add_option("--seed", verify_args.seed, "suite seed");
  verify->add_option("--checks", verify_args.checks, "comma-separated check filter")->delimiter(',');

  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "report-only findings hunt for one property");
  fuzz->add_option("--property", fuzz_args.property, "check name, triangle, or class_gap")->required();
  fuzz->add_option("--mean", fuzz_args.mean, "arithmetic|geometric|harmonic");
  fuzz->add_option("--trials", fuzz_args.trials, "number of random instances");
  fuzz->add_option("--seed", fuzz_args.seed, "fuzz seed");
  fuzz->add_option("--dims", fuzz_args.dims, "dimensions, e.g. 2,3")->delimiter(',');

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "2x2 brute-force grid value");
  oracle->add_option("--matrix", oracle_args.matrix_file, "matrix JSON file")->required();
  oracle->add_option("--mean", oracle_args.mean, "arithmetic|geometric|harmonic")->required();
  oracle->add_option("--mu", oracle_args.mu, "interpolation parameter in [0,1]")->required();
  oracle->add_option("--grid", oracle_args.grid, "grid resolution (default 2048)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (compute->parsed()) code = run_compute(compute_args);
    else if (sweep->parsed()) code = run_sweep(sweep_args);
    else if (verify->parsed()) code = run_verify(verify_args);
    else if (fuzz->parsed()) code = run_fuzz(fuzz_args);
    else if (oracle->parsed()) code = run_oracle(oracle_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "timing_seconds=%.3f\n", seconds);
  return code;
}
