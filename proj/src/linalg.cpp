#include "seminorm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seminorm/errors.hpp"

namespace seminorm {

namespace {

constexpr int kJacobiSweepBudget = 60;
constexpr double kJacobiOffTol = 1e-12;

double offdiag_frobenius(const ComplexMatrix& h) {
  double s = 0.0;
  const int n = h.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix HermitianEigen::recompose(const std::vector<double>& mapped) const {
  const int n = static_cast<int>(values.size());
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lk = mapped[static_cast<size_t>(k)];
    if (lk == 0.0) continue;
    const auto& v = vectors[static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i) {
      const Complex vi = v[static_cast<size_t>(i)] * lk;
      for (int j = 0; j < n; ++j) {
        out(i, j) += vi * std::conj(v[static_cast<size_t>(j)]);
      }
    }
  }
  return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol) {
  const int n = h.dim();
  if (n == 0) throw ShapeError("cannot decompose an empty matrix");
  if (!h.all_finite()) throw DomainError("matrix has non-finite entries");

  const double hnorm = h.frobenius_norm();
  if (h.hermitian_defect() > tol * std::max(hnorm, 1e-300)) {
    throw DomainError("matrix is not Hermitian within tolerance");
  }

  // Work on the symmetrized copy (H + H*)/2.
  ComplexMatrix a = h;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
    a(i, i) = Complex(a(i, i).real(), 0.0);
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double off_target = kJacobiOffTol * std::max(hnorm, 1e-300);

  int sweep = 0;
  double off = offdiag_frobenius(a);
  while (off > off_target && sweep < kJacobiSweepBudget) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= off_target / std::max(1, n)) continue;

        // Unitary 2x2 rotation annihilating a(p,q): with gamma = |apq| e^{i phi},
        // the rotation column is (c, t*c*e^{-i phi}) where t solves the usual
        // real Jacobi equation for the block [[app, |apq|], [|apq|, aqq]].
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Small root of |apq|(1 - t^2) + t(aqq - app) = 0.
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex phase = apq / g;             // e^{i phi}
        const Complex s = t * c * std::conj(phase);  // sigma e^{-i phi}

        // Columns p, q of A and V: col_p' = c*col_p + s*col_q,
        // col_q' = -conj(s)*col_p + c*col_q; then matching row update on A.
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + s * akq;
          a(k, q) = -std::conj(s) * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(s) * aqk;
          a(q, k) = -s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + s * vkq;
          v(k, q) = -std::conj(s) * vkp + c * vkq;
        }
      }
    }
    off = offdiag_frobenius(a);
    ++sweep;
  }
  if (off > off_target) {
    throw ConvergenceError("Jacobi sweep budget exhausted", off);
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out;
  out.values.resize(static_cast<size_t>(n));
  out.vectors.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<size_t>(k)];
    out.values[static_cast<size_t>(k)] = a(src, src).real();
    auto& vec = out.vectors[static_cast<size_t>(k)];
    vec.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vec[static_cast<size_t>(i)] = v(i, src);
  }
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.dim() == 0) return 0.0;
  if (a.frobenius_norm() == 0.0) return 0.0;
  const auto eig = hermitian_eigen(gram(a));
  return std::sqrt(std::max(0.0, eig.lambda_max()));
}

ComplexMatrix abs_matrix(const ComplexMatrix& a) {
  const auto eig = hermitian_eigen(gram(a));
  std::vector<double> mapped(eig.values.size());
  for (size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = std::sqrt(std::max(0.0, eig.values[k]));
  }
  return eig.recompose(mapped);
}

ComplexMatrix psd_power(const ComplexMatrix& h, double p, double tol) {
  if (p < 0.0) throw DomainError("psd_power exponent must be nonnegative");
  const auto eig = hermitian_eigen(h);
  const double scale = std::max(std::abs(eig.lambda_min()), std::abs(eig.lambda_max()));
  if (eig.lambda_min() < -tol * std::max(scale, 1e-300)) {
    throw NotPsdError("matrix is not positive semidefinite within tolerance",
                      eig.lambda_min());
  }
  std::vector<double> mapped(eig.values.size());
  for (size_t k = 0; k < mapped.size(); ++k) {
    const double lk = std::max(0.0, eig.values[k]);
    mapped[k] = (lk == 0.0 && p == 0.0) ? 1.0 : std::pow(lk, p);
  }
  return eig.recompose(mapped);
}

LoewnerResult loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                          double tol) {
  if (a.dim() != b.dim()) throw ShapeError("dimension mismatch in Loewner comparison");
  if (a.hermitian_defect() > 1e-8 * std::max(1.0, a.frobenius_norm()) ||
      b.hermitian_defect() > 1e-8 * std::max(1.0, b.frobenius_norm())) {
    throw DomainError("Loewner comparison requires Hermitian operands");
  }
  // The difference of two nearly-equal Hermitian matrices can be dominated by
  // rounding; symmetrize it explicitly instead of re-testing its defect.
  ComplexMatrix d = b - a;
  const int n = d.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (d(i, j) + std::conj(d(j, i)));
      d(i, j) = m;
      d(j, i) = std::conj(m);
    }
    d(i, i) = Complex(d(i, i).real(), 0.0);
  }
  const auto eig = hermitian_eigen(d, 1.0);
  const double witness = eig.lambda_min();
  const double scale = std::max({1.0, operator_norm(a), operator_norm(b)});
  return LoewnerResult{witness >= -tol * scale, witness};
}

double spectral_radius(const ComplexMatrix& a) {
  const int n = a.dim();
  if (n == 0) return 0.0;

  // r_k = ||A^{2^k}||^{1/2^k} via normalized squaring: m ~ A^p / e^{log_scale}.
  ComplexMatrix m = a;
  double log_scale = 0.0;
  double power = 1.0;
  double prev = -1.0;
  for (int k = 0; k <= 48; ++k) {
    const double norm = m.frobenius_norm();
    if (norm == 0.0) return 0.0;
    const double est = std::exp((log_scale + std::log(norm)) / power);
    if (prev >= 0.0 && std::abs(est - prev) <= 1e-8 * std::max(1.0, est)) {
      return est;
    }
    prev = est;
    m *= Complex(1.0 / norm);
    m = m * m;
    log_scale = 2.0 * (log_scale + std::log(norm));
    power *= 2.0;
  }
  return prev;
}

ScalarFunction ScalarFunction::power(double p) {
  if (p < 0.0) throw DomainError("scalar power exponent must be nonnegative");
  return ScalarFunction{Kind::power, p};
}
ScalarFunction ScalarFunction::exp() { return ScalarFunction{Kind::exponential, 0.0}; }
ScalarFunction ScalarFunction::log() { return ScalarFunction{Kind::logarithm, 0.0}; }
ScalarFunction ScalarFunction::square() { return ScalarFunction{Kind::square, 2.0}; }

double ScalarFunction::operator()(double t) const {
  switch (kind) {
    case Kind::power: return (t == 0.0 && exponent == 0.0) ? 1.0 : std::pow(t, exponent);
    case Kind::exponential: return std::exp(t);
    case Kind::logarithm: return std::log(t);
    case Kind::square: return t * t;
  }
  return 0.0;
}

ComplexMatrix apply_scalar_function(const ComplexMatrix& h,
                                    const ScalarFunction& f, double tol) {
  const auto eig = hermitian_eigen(h);
  const double scale = std::max(std::abs(eig.lambda_min()), std::abs(eig.lambda_max()));

  const bool fractional = f.kind == ScalarFunction::Kind::power &&
                          f.exponent != std::floor(f.exponent);
  if (f.kind == ScalarFunction::Kind::logarithm && eig.lambda_min() <= tol) {
    throw DomainError("log requires a strictly positive spectrum");
  }
  if (fractional && eig.lambda_min() < -tol * std::max(scale, 1e-300)) {
    throw NotPsdError("fractional power requires a nonnegative spectrum",
                      eig.lambda_min());
  }

  std::vector<double> mapped(eig.values.size());
  for (size_t k = 0; k < mapped.size(); ++k) {
    double lk = eig.values[k];
    if (fractional) lk = std::max(0.0, lk);
    mapped[k] = f(lk);
  }
  return eig.recompose(mapped);
}

}  // namespace seminorm
