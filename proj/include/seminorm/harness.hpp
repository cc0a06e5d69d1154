#ifndef SEMINORM_HARNESS_HPP
#define SEMINORM_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seminorm/complex_matrix.hpp"
#include "seminorm/engine.hpp"
#include "seminorm/mean.hpp"

namespace seminorm {

/// Structural classification of a matrix under the Loewner-order tests.
struct StructureReport {
  bool normal = false;
  bool semi_hyponormal = false;
  bool hyponormal = false;
  std::map<double, bool> p_hyponormal;  // p in {1/4, 1/2, 1}
  std::optional<std::pair<double, double>> alpha_beta;
  bool nilpotent2 = false;
  /// In M_n hyponormality forces normality (zero-trace PSD argument);
  /// the two flags must agree away from the tolerance boundary.
  bool finite_dim_consistent = true;
};

StructureReport classify(const ComplexMatrix& a, double tol = 1e-9);

enum class GeneratorKind { ginibre, normal, nilpotent2, psd, lemma32_pair };

const char* to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

struct GeneratedInstance {
  ComplexMatrix a;
  std::optional<ComplexMatrix> b;  // present for lemma32_pair
};

/// Deterministic per (kind, dim, seed).
GeneratedInstance generate(GeneratorKind kind, int dim, std::uint64_t seed);

enum class CheckStatus { pass, fail, report_only };
const char* to_string(CheckStatus status);

/// One inequality evaluated on concrete inputs. slack >= 0 means the
/// statement holds; pass iff slack >= -tol * scale.
struct PropertyCheck {
  std::string name;
  std::string paper_ref;
  std::string inputs_digest;
  std::uint64_t trial_seed = 0;
  CheckStatus status = CheckStatus::pass;
  double slack = 0.0;
  double scale = 1.0;
  nlohmann::json details;         // lhs/rhs components
  nlohmann::json counterexample;  // full payload when slack < -tol*scale

  bool is_violation(double tol) const { return slack < -tol * scale; }
  nlohmann::json to_json() const;
};

struct CheckInputs {
  ComplexMatrix a;
  std::optional<ComplexMatrix> b;
  double nu = 0.5;     // power-pair parameter phi = t^nu, psi = t^{1-nu}
  double alpha = 0.5;  // alpha_bound parameter
  std::uint64_t seed = 1;
  StateClass state_class = StateClass::mixed;
  OptimizerConfig optimizer;
};

/// Evaluates the named inequality; throws DomainError when the inputs do not
/// satisfy the check's hypothesis (that is a precondition error, not a
/// property failure) and on unknown names.
PropertyCheck check_inequality(const std::string& name, const CheckInputs& inputs,
                               MeanKind mean, double mu, double tol = 1e-7);

/// Triangle-equality characterization for the arithmetic path: the defect
/// delta = |a+b| - |a| - |b| vanishes iff the maximized pairing
/// Re(f(b*a) + conj(f(a)) f(b)) reaches 2 |a| |b|; at equality the imaginary
/// part of the pairing vanishes at the maximizing state.
PropertyCheck check_equality_characterization(const ComplexMatrix& a,
                                              const ComplexMatrix& b, double tol,
                                              std::uint64_t seed,
                                              const OptimizerConfig& optimizer);

struct TrialConfig {
  std::vector<int> dims{2, 3, 4};
  int trials = 200;
  std::uint64_t seed = 42;
  std::vector<MeanKind> means{MeanKind::arithmetic, MeanKind::geometric,
                              MeanKind::harmonic};
  std::vector<double> mus{0.0, 0.25, 0.5, 0.75, 1.0};
  double relative_tolerance = 1e-7;
  std::vector<std::string> checks;  // empty = every check

  void validate() const;
};

struct SuiteReport {
  std::vector<PropertyCheck> checks;
  int pass_count = 0;
  int fail_count = 0;
  int report_only_count = 0;
  int report_only_findings = 0;         // report_only records with violations
  std::map<std::string, double> worst_relative_slack;  // slack/scale per name
  nlohmann::json to_json() const;
};

/// Runs every named check over generated instances matched to each check's
/// hypothesis class, across the configured dims/means/mus. Deterministic per
/// seed; trials execute in parallel with index-keyed aggregation.
SuiteReport run_suite(const TrialConfig& config);

std::vector<std::string> all_check_names();
bool is_report_only(const std::string& name);

struct FuzzResult {
  std::vector<PropertyCheck> findings;
  int trials_run = 0;
  int evaluations = 0;
};

/// Hunts for negative-slack instances of a property in report-only mode.
/// Supported properties: every check name plus "triangle" (triangle
/// inequality for the given mean) and "class_gap" (mixed-vs-pure gap).
FuzzResult fuzz_property(const std::string& property, MeanKind mean, int trials,
                         std::uint64_t seed, const std::vector<int>& dims);

}  // namespace seminorm

#endif
