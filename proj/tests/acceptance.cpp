// Acceptance suite: one pass/fail line per criterion, exit 1 if any fail.
// The CLI binary is located via SEMINORM_CLI (or argv[1]).

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "seminorm/engine.hpp"
#include "seminorm/harness.hpp"
#include "seminorm/linalg.hpp"
#include "seminorm/mean.hpp"
#include "seminorm/parallel.hpp"
#include "seminorm/rng.hpp"

using namespace seminorm;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& text) {
  std::printf("C%-2d %s  %s\n", criterion, pass ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void note(const std::string& text) {
  std::printf("     note: %s\n", text.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr MeanKind kMeans[] = {MeanKind::arithmetic, MeanKind::geometric,
                               MeanKind::harmonic};
constexpr double kMus[] = {0.0, 0.25, 0.5, 0.75, 1.0};

ComplexMatrix nilpotent_example() {
  ComplexMatrix a(2);
  a(0, 1) = 2.0;
  return a;
}

ComplexMatrix random_ginibre(int dim, std::uint64_t seed) {
  return generate(GeneratorKind::ginibre, dim, seed).a;
}

OptimizerConfig lean_config(std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.starts = 8;
  cfg.max_iterations = 200;
  cfg.seed = seed;
  return cfg;
}

// ---------------------------------------------------------------------------

void criterion1() {
  const auto t0 = Clock::now();
  const ComplexMatrix a = nilpotent_example();
  const SeminormProblem prob(a);
  const double v = prob.radius().value;
  const double nm = prob.op_norm();
  const double sn =
      prob.solve(MeanKind::arithmetic, 0.5, StateClass::pure, lean_config(42)).value;
  const double oracle = oracle_2x2(a, MeanKind::arithmetic, 0.5, 2048);
  const double sqrt2 = std::numbers::sqrt2;
  const double lower = nm / sqrt2;

  const bool ok = std::abs(v - 1.0) <= 1e-8 && std::abs(nm - 2.0) <= 1e-10 &&
                  std::abs(sn - sqrt2) <= 1e-6 && std::abs(oracle - sqrt2) <= 1e-4 &&
                  sn >= lower - 1e-9 && seconds_since(t0) < 1.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "nilpotent worked example: v=%.9f |A|=%.11f |A|_nabla=%.8f "
                "oracle=%.8f (%.2fs)",
                v, nm, sn, oracle, seconds_since(t0));
  verdict(1, ok, buf);
  note("the value sqrt(3/2) ~ 1.2247 sometimes quoted for this matrix is an "
       "erratum: it violates the lower bound |A|/sqrt(2) = sqrt(2) <= |A|_nabla, "
       "and both the optimizer and the grid oracle give sqrt(2)");
}

void criterion2() {
  const auto t0 = Clock::now();
  const int matrices = 50;
  struct Case {
    double gap = 0.0;
  };
  std::vector<double> worst(matrices, 0.0);
  parallel_for(matrices, [&](size_t i) {
    const ComplexMatrix a = random_ginibre(2, mix_seed(42, 200 + i));
    const SeminormProblem prob(a);
    double w = 0.0;
    for (const MeanKind mean : kMeans) {
      for (const double mu : kMus) {
        const double engine = prob.solve(mean, mu, StateClass::pure, lean_config(42)).value;
        const double oracle = oracle_2x2(a, mean, mu, 2048);
        const double gap = std::abs(engine - oracle) / std::max(1.0, oracle);
        w = std::max(w, gap);
      }
    }
    worst[i] = w;
  });
  const double gap = *std::max_element(worst.begin(), worst.end());
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "oracle equivalence, 50 x 3 x 5 cases: worst relative gap %.3e "
                "(tol 1e-3), %.1fs (budget 60s)",
                gap, elapsed);
  verdict(2, gap <= 1e-3 && elapsed < 60.0, buf);
}

void criterion3() {
  const int matrices = 200;
  std::vector<double> worst(matrices, 0.0);
  parallel_for(matrices, [&](size_t i) {
    const int dim = 2 + static_cast<int>(i % 5);
    const ComplexMatrix a = random_ginibre(dim, mix_seed(42, 300 + i));
    const SeminormProblem prob(a);
    const double scale = std::max(1.0, prob.op_norm());
    double w = 0.0;
    for (const MeanKind mean : kMeans) {
      const double at0 = prob.solve(mean, 0.0, StateClass::pure, lean_config(42)).value;
      const double at1 = prob.solve(mean, 1.0, StateClass::pure, lean_config(42)).value;
      w = std::max(w, std::abs(at0 - prob.radius().value) / scale);
      w = std::max(w, std::abs(at1 - prob.op_norm()) / scale);
    }
    worst[i] = w;
  });
  const double gap = *std::max_element(worst.begin(), worst.end());
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "endpoint identities on 200 matrices, dims 2-6: worst gap %.3e "
                "(tol 1e-6)",
                gap);
  verdict(3, gap <= 1e-6, buf);
}

void criterion4() {
  const int matrices = 500;
  std::vector<double> worst(matrices, 0.0);
  parallel_for(matrices, [&](size_t i) {
    const int dim = 2 + static_cast<int>(i % 5);
    const ComplexMatrix a = random_ginibre(dim, mix_seed(42, 400 + i));
    const SeminormProblem prob(a);
    const double v = prob.radius().value;
    const double nm = prob.op_norm();
    const double scale = std::max(1.0, nm);
    double w = 0.0;  // most negative slack, flipped
    for (const MeanKind mean : kMeans) {
      for (const double mu : kMus) {
        const double sn = prob.solve(mean, mu, StateClass::pure, lean_config(42)).value;
        const double env = seminorm_upper_envelope(a, mean, mu);
        const double slack = std::min({sn - v, nm - sn, env - sn});
        w = std::min(w, slack / scale);
      }
    }
    worst[i] = w;
  });
  const double slack = *std::min_element(worst.begin(), worst.end());
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "sandwich+envelope on 500 x 3 x 5: worst relative slack %.3e "
                "(allowed >= -1e-7)",
                slack);
  verdict(4, slack >= -1e-7, buf);
}

void criterion5() {
  const int pairs = 500;
  std::vector<double> worst(pairs, 0.0);
  parallel_for(pairs, [&](size_t i) {
    const int dim = 2 + static_cast<int>(i % 5);
    const ComplexMatrix a = random_ginibre(dim, mix_seed(42, 500 + 2 * i));
    const ComplexMatrix b = random_ginibre(dim, mix_seed(42, 501 + 2 * i));
    const SeminormProblem pa(a), pb(b), psum(a + b);
    const double sa = pa.solve(MeanKind::arithmetic, 0.5, StateClass::pure, lean_config(42)).value;
    const double sb = pb.solve(MeanKind::arithmetic, 0.5, StateClass::pure, lean_config(42)).value;
    const double ssum =
        psum.solve(MeanKind::arithmetic, 0.5, StateClass::pure, lean_config(42)).value;
    const double scale = std::max(1.0, pa.op_norm() + pb.op_norm());
    worst[i] = (sa + sb - ssum) / scale;
  });
  const double slack = *std::min_element(worst.begin(), worst.end());
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "triangle inequality for nabla on 500 pairs: worst relative slack "
                "%.3e (allowed >= -1e-7)",
                slack);
  verdict(5, slack >= -1e-7, buf);
}

void criterion6() {
  const int matrices = 100;
  std::vector<double> worst(matrices, 0.0);
  parallel_for(matrices, [&](size_t i) {
    const int dim = 2 + static_cast<int>(i % 5);
    const ComplexMatrix a = generate(GeneratorKind::normal, dim, mix_seed(42, 600 + i)).a;
    const SeminormProblem prob(a);
    const double v = prob.radius().value;
    const double nm = prob.op_norm();
    const double scale = std::max(1.0, nm);
    double w = 0.0;
    for (const MeanKind mean : kMeans) {
      for (const double mu : kMus) {
        const double sn = prob.solve(mean, mu, StateClass::pure, lean_config(42)).value;
        w = std::max({w, std::abs(sn - v) / scale, std::abs(sn - nm) / scale});
      }
    }
    worst[i] = w;
  });
  const double gap = *std::max_element(worst.begin(), worst.end());
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "normal collapse on 100 matrices: worst gap %.3e (tol 1e-7)", gap);
  verdict(6, gap <= 1e-7, buf);
}

void criterion7() {
  bool ok = true;
  double worst = 0.0;
  for (const MeanKind mean : kMeans) {
    const AxiomReport report = verify_axioms(mean, 10000, 42);
    ok = ok && report.all_pass();
    worst = std::max(worst, report.worst_residual());
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "mean/path axiom suite, 1e4 triples per mean: worst residual %.3e "
                "(tol 1e-12)",
                worst);
  verdict(7, ok && worst <= 1e-12, buf);
}

void criterion8() {
  const std::vector<std::string> assert_names = {
      "mixed_schwarz", "lemma32_product", "jensen_state",    "thm34_first",
      "cor_nu_first",  "alpha_bound",     "crawford_lower",  "sqrt2_nabla",
      "crawford_nabla_proof", "nilpotent_sigma_zero"};
  const std::vector<std::string> report_only_names = {"thm34_second",
                                                      "crawford_nabla_stated"};

  TrialConfig cfg;
  cfg.trials = 200;
  cfg.seed = 42;
  cfg.dims = {2, 3, 4};
  cfg.checks = assert_names;
  cfg.checks.insert(cfg.checks.end(), report_only_names.begin(), report_only_names.end());
  const SuiteReport report = run_suite(cfg);

  std::map<std::string, int> fails, counts;
  bool payloads_ok = true;
  for (const auto& c : report.checks) {
    ++counts[c.name];
    if (c.status == CheckStatus::fail) ++fails[c.name];
    if (c.status == CheckStatus::report_only &&
        c.is_violation(cfg.relative_tolerance) && c.counterexample.is_null()) {
      payloads_ok = false;
    }
  }

  bool ok = payloads_ok;
  for (const auto& name : assert_names) {
    const int f = fails.count(name) ? fails.at(name) : 0;
    if (f > 0) ok = false;
    std::printf("     %-22s %6d instances, %d failures, worst slack %+.3e\n",
                name.c_str(), counts[name], f, report.worst_relative_slack.at(name));
  }
  for (const auto& name : report_only_names) {
    std::printf("     %-22s %6d instances (report-only), worst slack %+.3e\n",
                name.c_str(), counts[name], report.worst_relative_slack.at(name));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "section-3 bounds, 200 trials x dims {2,3,4}: %d assert-mode "
                "failure(s), report-only payloads %s",
                report.fail_count, payloads_ok ? "complete" : "MISSING");
  verdict(8, ok, buf);
  if (fails.count("crawford_nabla_proof")) {
    note("every failure is crawford_nabla_proof: the asserted bound "
         "|a|_nabla^2 >= v(a) m(a*a) is not scale-invariant (a = 2*identity "
         "already violates it) and fails on a few percent of 2x2 instances; "
         "counterexamples with full payloads are in the suite report");
  }
}

void criterion9() {
  const int matrices = 50;
  std::vector<int> bad(matrices, 0);
  parallel_for(matrices, [&](size_t i) {
    const int dim = 2 + static_cast<int>(i % 3);
    const ComplexMatrix a = random_ginibre(dim, mix_seed(42, 900 + i));
    ComplexMatrix neg = a;
    neg *= Complex(-1.0);
    const auto same =
        check_equality_characterization(a, a, 1e-6, mix_seed(42, 950 + i), lean_config(42));
    const auto opp =
        check_equality_characterization(a, neg, 1e-6, mix_seed(42, 970 + i), lean_config(42));
    const bool ok = same.status == CheckStatus::pass &&
                    same.details.at("equality_holds").get<bool>() &&
                    same.details.at("witness_holds").get<bool>() &&
                    opp.status == CheckStatus::pass &&
                    !opp.details.at("equality_holds").get<bool>() &&
                    !opp.details.at("witness_holds").get<bool>();
    bad[i] = ok ? 0 : 1;
  });
  const int failures = std::accumulate(bad.begin(), bad.end(), 0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "equality characterization on 50 matrices: %d inconsistent "
                "case(s) (biconditional + vanishing imaginary part at 1e-6)",
                failures);
  verdict(9, failures == 0, buf);
}

void criterion10() {
  const int queries = 60;
  std::vector<double> order_slack(queries, 0.0), arith_gap(queries, 0.0);
  parallel_for(queries, [&](size_t i) {
    const int dim = 2 + static_cast<int>(i % 4);
    const ComplexMatrix a = random_ginibre(dim, mix_seed(42, 1000 + i));
    const SeminormProblem prob(a);
    const double scale = std::max(1.0, prob.op_norm());
    const MeanKind mean = kMeans[i % 3];
    const double mu = kMus[1 + (i % 3)];  // 0.25, 0.5, 0.75
    const double pure = prob.solve(mean, mu, StateClass::pure, lean_config(42)).value;
    const double mixed = prob.solve(mean, mu, StateClass::mixed, lean_config(42)).value;
    order_slack[i] = (mixed - pure) / scale;
    if (mean == MeanKind::arithmetic) arith_gap[i] = std::abs(mixed - pure) / scale;
  });
  const double worst_order = *std::min_element(order_slack.begin(), order_slack.end());
  const double worst_arith = *std::max_element(arith_gap.begin(), arith_gap.end());
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "state classes on 60 queries: min(mixed-pure)=%.3e (allowed >= "
                "-1e-7), arithmetic agreement gap %.3e (tol 1e-6)",
                worst_order, worst_arith);
  verdict(10, worst_order >= -1e-7 && worst_arith <= 1e-6, buf);
}

// --- criterion 11: CLI determinism + exit codes + total runtime -------------

std::string cli_path_global;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const std::string cmd = cli_path_global + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 1 << 16> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void criterion11(Clock::time_point suite_start) {
  const std::string flags = "verify --dims 2,3,4 --trials 50 --seed 42";
  const CliRun r1 = run_cli(flags);
  const CliRun r2 = run_cli(flags);
  const bool identical = !r1.out.empty() && r1.out == r2.out;
  const bool exit_zero = r1.exit_code == 0 && r2.exit_code == 0;

  const auto bad_path = std::filesystem::temp_directory_path() / "seminorm_acceptance_bad.json";
  std::ofstream(bad_path) << R"({"n": 2, "entries": [[0.0, 0.0], [1.0]]})";
  const CliRun corrupt =
      run_cli("compute --matrix " + bad_path.string() + " --mean arithmetic --mu 0.5");
  const bool corrupt_ok = corrupt.exit_code == 2;

  const double total = seconds_since(suite_start);
  const bool in_budget = total < 300.0;

  char buf[220];
  std::snprintf(buf, sizeof(buf),
                "CLI contract: byte-identical=%s exit(verify)=%d/%d (expected 0) "
                "exit(corrupt)=%d (expected 2), total acceptance %.0fs (budget 300s)",
                identical ? "yes" : "NO", r1.exit_code, r2.exit_code,
                corrupt.exit_code, total);
  verdict(11, identical && exit_zero && corrupt_ok && in_budget, buf);
  if (identical && !exit_zero) {
    note("the verify exit code is 1 because the assert-mode crawford_nabla_proof "
         "defect (see C8) fires within these 50 trials; determinism itself holds "
         "byte-for-byte");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    cli_path_global = argv[1];
  } else if (const char* env = std::getenv("SEMINORM_CLI")) {
    cli_path_global = env;
  } else {
    cli_path_global = "./tools/seminorm";
  }

  const auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11(t0);

  std::printf("%d of 11 criteria failed (%.0fs total)\n", g_failures, seconds_since(t0));
  return g_failures > 0 ? 1 : 0;
}
