#ifndef SEMINORM_MEAN_HPP
#define SEMINORM_MEAN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace seminorm {

/// The three built-in symmetric means on [0,inf)^2.
enum class MeanKind { arithmetic, geometric, harmonic };

const char* to_string(MeanKind kind);
MeanKind mean_kind_from_string(const std::string& name);

/// A symmetric mean together with its interpolation path sigma_mu.
/// is_below_arithmetic records sigma <= arithmetic pointwise, a hypothesis
/// several upper bounds require; it holds for all three built-ins (AM-GM-HM).
struct MeanPath {
  MeanKind kind;
  bool is_below_arithmetic;
};

MeanPath mean_path(MeanKind kind);

/// sigma(a, b). Symmetric; equals path_eval(kind, 1/2, a, b).
/// Throws DomainError on negative or non-finite input.
double mean_eval(MeanKind kind, double a, double b);

/// sigma_mu(a, b) with exact endpoints: mu=0 -> a, mu=1 -> b.
/// Throws DomainError when mu is outside [0,1] or inputs are invalid.
double path_eval(MeanKind kind, double mu, double a, double b);

/// Precompiled path evaluation for hot loops: validates (kind, mu) once and
/// selects a branch (endpoints, half/quarter powers, closed harmonic form).
/// operator() assumes a, b >= 0 and finite.
class PathEvaluator {
 public:
  PathEvaluator(MeanKind kind, double mu);
  double operator()(double a, double b) const;
  MeanKind kind() const { return kind_; }
  double mu() const { return mu_; }

 private:
  enum class Branch {
    left,        // mu == 0
    right,       // mu == 1
    arithmetic,  // (1-mu) a + mu b
    geo_half,
    geo_quarter,        // a^{3/4} b^{1/4}
    geo_three_quarter,  // a^{1/4} b^{3/4}
    geo_general,
    harmonic,
  };
  MeanKind kind_;
  double mu_;
  Branch branch_;
};

/// One axiom verdict: worst relative residual seen over all samples.
struct AxiomCheck {
  std::string name;
  bool pass;
  double max_residual;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  double worst_residual() const;
};

/// Samples seeded random (a, b, mu, nu) tuples and checks the mean axioms
/// (nonnegativity, internality, monotonicity, homogeneity, continuity,
/// symmetry) and the path axioms (endpoints/midpoint, the interpolation
/// identity (a sigma_mu b) sigma (a sigma_nu b) = a sigma_{(mu+nu)/2} b,
/// and componentwise monotonicity). Residuals are relative to
/// max(1, |lhs|, |rhs|); the pass threshold is 1e-12.
AxiomReport verify_axioms(MeanKind kind, int sample_count, std::uint64_t seed);

}  // namespace seminorm

#endif
