#ifndef SEMINORM_ENGINE_HPP
#define SEMINORM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "seminorm/complex_matrix.hpp"
#include "seminorm/mean.hpp"
#include "seminorm/state.hpp"

namespace seminorm {

struct OptimizerConfig {
  int starts = 32;
  int max_iterations = 500;
  double gradient_tolerance = 1e-10;
  double objective_tolerance = 1e-12;
  double finite_difference_step = 1e-6;
  std::uint64_t seed = 1;

  void validate() const;
};

struct SeminormQuery {
  ComplexMatrix matrix;
  MeanKind mean = MeanKind::arithmetic;
  double mu = 0.5;
  StateClass state_class = StateClass::mixed;
  OptimizerConfig config;
};

struct SeminormResult {
  double value = 0.0;
  State witness;
  bool converged = false;
  int starts_agreeing = 0;
  long iterations_total = 0;
};

/// u sigma_mu w with u = |f(a)|^2 and w = f(a*a); the square of the quantity
/// whose supremum over states defines the semi-norm.
double objective(const ComplexMatrix& a, MeanKind mean, double mu, const State& s);

struct NumericalRadiusResult {
  double value = 0.0;
  PureState witness;
  double theta = 0.0;
};

/// v(A) = max_theta lambda_max(Re(e^{-i theta} A)) on a 720-point grid with
/// golden-section refinement; the witness is the top eigenvector at the
/// optimal angle, so |<A x, x>| = v(A) at the witness.
NumericalRadiusResult numerical_radius(const ComplexMatrix& a);

/// Crawford number m(A): distance from the origin to the numerical range,
/// max(0, max_theta lambda_min(Re(e^{-i theta} A))).
double crawford(const ComplexMatrix& a);

/// Brute-force 2x2 value over pure states x = (cos phi, e^{i psi} sin phi)
/// on a grid x grid lattice with one 10x local refinement pass.
double oracle_2x2(const ComplexMatrix& a, MeanKind mean, double mu,
                  int grid = 2048);

/// Precomputed per-matrix context shared by repeated solves: the Gram matrix,
/// the operator norm with its top right-singular vector, and the numerical
/// radius with its witness (the analytic optimizer seeds).
class SeminormProblem {
 public:
  explicit SeminormProblem(ComplexMatrix a);

  const ComplexMatrix& matrix() const { return a_; }
  double op_norm() const { return op_norm_; }
  const NumericalRadiusResult& radius() const { return radius_; }
  const PureState& top_singular_vector() const { return top_singular_; }

  SeminormResult solve(MeanKind mean, double mu, StateClass cls,
                       const OptimizerConfig& cfg) const;

 private:
  ComplexMatrix a_;
  double op_norm_ = 0.0;
  NumericalRadiusResult radius_;
  PureState top_singular_;
};

/// sqrt(sup over states of u sigma_mu w), by multi-start projected gradient
/// ascent (unit sphere for pure states, normalized full factors L with
/// rho = L L*/tr(L L*) for mixed states).
SeminormResult compute_seminorm(const SeminormQuery& q);

struct MuSweepPoint {
  double mu = 0.0;
  double value = 0.0;
};

struct MuSweepResult {
  std::vector<MuSweepPoint> points;
  double numerical_radius = 0.0;
  double operator_norm = 0.0;
  bool endpoints_consistent = true;  // mu=0 vs v(A), mu=1 vs ||A||
  double worst_endpoint_gap = 0.0;   // relative to max(1, ||A||)
};

MuSweepResult mu_sweep(const ComplexMatrix& a, MeanKind mean,
                       const std::vector<double>& mus, StateClass cls,
                       const OptimizerConfig& cfg);

/// sqrt(v(A)^2 sigma_mu ||A||^2), the cheap a-priori cap.
double seminorm_upper_envelope(const ComplexMatrix& a, MeanKind mean, double mu);

struct StateOptimum {
  State witness;
  double value = 0.0;
  bool converged = false;
  int starts_agreeing = 0;
  long iterations_total = 0;
};

/// Generic multi-start ascent of an arbitrary real state functional (may be
/// negative). seed_states are tried first, then seeded random starts up to
/// cfg.starts. step_scale calibrates the finite-difference step.
StateOptimum maximize_over_states(
    int dim, StateClass cls, const std::function<double(const State&)>& fn,
    const OptimizerConfig& cfg, const std::vector<State>& seed_states,
    double step_scale = 1.0);

}  // namespace seminorm

#endif
