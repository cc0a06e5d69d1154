#ifndef SEMINORM_COMPLEX_MATRIX_HPP
#define SEMINORM_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

namespace seminorm {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  ComplexMatrix(int n, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int n) { return ComplexMatrix(n); }
  static ComplexMatrix diag(const std::vector<Complex>& d);

  int dim() const { return n_; }
  Complex& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<Complex>& entries() const { return e_; }
  std::vector<Complex>& entries() { return e_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// max_ij |H_ij - conj(H_ji)| relative to the Frobenius norm.
  double hermitian_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  /// y = A x
  std::vector<Complex> apply(const std::vector<Complex>& x) const;

 private:
  int n_ = 0;
  std::vector<Complex> e_;
};

/// A* A, Hermitian by construction (numerically symmetrized).
ComplexMatrix gram(const ComplexMatrix& a);

double vector_norm(const std::vector<Complex>& x);

/// <x, y> = sum_i conj(y_i) x_i  (linear in the first argument).
Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y);

}  // namespace seminorm

#endif
