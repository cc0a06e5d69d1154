#ifndef SEMINORM_LINALG_HPP
#define SEMINORM_LINALG_HPP

#include <vector>

#include "seminorm/complex_matrix.hpp"

namespace seminorm {

/// Full spectral decomposition of a Hermitian matrix.
/// values ascending; vectors[k] is the (orthonormal) eigenvector of values[k].
struct HermitianEigen {
  std::vector<double> values;
  std::vector<std::vector<Complex>> vectors;

  double lambda_min() const { return values.front(); }
  double lambda_max() const { return values.back(); }

  /// V f(Lambda) V* for a scalar map on the eigenvalues.
  ComplexMatrix recompose(const std::vector<double>& mapped) const;
};

/// Cyclic complex Jacobi. The input must be Hermitian within tol times its
/// Frobenius norm (it is symmetrized by averaging with the adjoint before
/// iterating). Throws ShapeError / DomainError / ConvergenceError.
HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol = 1e-10);

/// Largest singular value, sqrt(lambda_max(A*A)).
double operator_norm(const ComplexMatrix& a);

/// |A| = (A*A)^{1/2}.
ComplexMatrix abs_matrix(const ComplexMatrix& a);

/// H^p for Hermitian H with spectrum >= -tol*||H||; eigenvalues in the
/// tolerance band below zero are clamped to 0, and 0^0 := 1.
/// Throws NotPsdError when the spectrum dips below the band.
ComplexMatrix psd_power(const ComplexMatrix& h, double p, double tol = 1e-9);

struct LoewnerResult {
  bool leq;
  double witness;  // lambda_min(B - A)
};

/// A <= B in the Loewner order, up to tol * max(1, ||A||, ||B||).
LoewnerResult loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                          double tol = 1e-9);

/// Gelfand iteration with repeated squaring and per-step normalization.
/// Stops when successive estimates agree to 1e-8 relative or after 48
/// squarings; returns exactly 0 when some power vanishes.
double spectral_radius(const ComplexMatrix& a);

/// Scalar-function catalog for the Hermitian functional calculus.
struct ScalarFunction {
  enum class Kind { power, exponential, logarithm, square };
  Kind kind = Kind::power;
  double exponent = 1.0;

  static ScalarFunction power(double p);
  static ScalarFunction exp();
  static ScalarFunction log();
  static ScalarFunction square();

  double operator()(double t) const;
};

/// f(H) by eigendecomposition. log requires lambda_min > tol; fractional
/// powers clamp the tolerance band below zero like psd_power.
ComplexMatrix apply_scalar_function(const ComplexMatrix& h,
                                    const ScalarFunction& f,
                                    double tol = 1e-9);

}  // namespace seminorm

#endif
