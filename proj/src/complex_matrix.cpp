#include "seminorm/complex_matrix.hpp"

#include <cmath>

#include "seminorm/errors.hpp"

namespace seminorm {

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries)
    : n_(n), e_(std::move(entries)) {
  if (n < 0 || e_.size() != static_cast<size_t>(n) * n) {
    throw ShapeError("entry count does not match a square matrix of the given dimension");
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<Complex>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : e_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : e_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double ComplexMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw ShapeError("dimension mismatch in matrix addition");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw ShapeError("dimension mismatch in matrix subtraction");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : e_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw ShapeError("dimension mismatch in matrix product");
  const int n = a.n_;
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ShapeError("dimension mismatch in matrix-vector product");
  }
  std::vector<Complex> y(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
    g(i, i) = Complex(g(i, i).real(), 0.0);
  }
  return g;
}

double vector_norm(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  if (x.size() != y.size()) throw ShapeError("dimension mismatch in inner product");
  Complex s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += std::conj(y[i]) * x[i];
  return s;
}

}  // namespace seminorm
