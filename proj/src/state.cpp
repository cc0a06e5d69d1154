#include "seminorm/state.hpp"

#include <cmath>
#include <string>

#include "seminorm/errors.hpp"
#include "seminorm/linalg.hpp"

namespace seminorm {

int state_dim(const State& s) {
  return std::visit([](const auto& v) { return v.dim(); }, s);
}

PureState make_pure(std::vector<Complex> x) {
  const double n = vector_norm(x);
  if (!std::isfinite(n) || n == 0.0) {
    throw DomainError("pure state vector must be nonzero and finite");
  }
  if (std::abs(n - 1.0) > 1e-12) {
    if (std::abs(n - 1.0) > 1e-6) {
      throw DomainError("pure state vector is far from unit norm");
    }
    for (auto& z : x) z /= n;
  }
  return PureState{std::move(x)};
}

MixedState make_mixed(ComplexMatrix rho) {
  if (!rho.all_finite()) throw DomainError("density matrix has non-finite entries");
  const double fro = std::max(rho.frobenius_norm(), 1e-300);
  if (rho.hermitian_defect() > 1e-10 * fro) {
    throw DomainError("density matrix is not Hermitian within tolerance");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-12) {
    throw DomainError("density matrix trace differs from 1");
  }
  const auto eig = hermitian_eigen(rho);
  if (eig.lambda_min() < -1e-10) {
    throw DomainError("density matrix has eigenvalue " +
                      std::to_string(eig.lambda_min()) + " below tolerance");
  }
  return MixedState{std::move(rho)};
}

Complex state_eval(const PureState& s, const ComplexMatrix& a) {
  if (a.dim() != s.dim()) throw ShapeError("state/matrix dimension mismatch");
  return inner(a.apply(s.x), s.x);
}

Complex state_eval(const MixedState& s, const ComplexMatrix& a) {
  if (a.dim() != s.dim()) throw ShapeError("state/matrix dimension mismatch");
  const int n = a.dim();
  Complex t = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t += s.rho(i, j) * a(j, i);
  return t;
}

Complex state_eval(const State& s, const ComplexMatrix& a) {
  return std::visit([&](const auto& v) { return state_eval(v, a); }, s);
}

MixedState pure_to_mixed(const PureState& s) {
  const int n = s.dim();
  ComplexMatrix rho(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rho(i, j) = s.x[static_cast<size_t>(i)] * std::conj(s.x[static_cast<size_t>(j)]);
  return MixedState{std::move(rho)};
}

const char* to_string(StateClass c) {
  return c == StateClass::pure ? "pure" : "mixed";
}

StateClass state_class_from_string(const std::string& name) {
  if (name == "pure") return StateClass::pure;
  if (name == "mixed") return StateClass::mixed;
  throw DomainError("unknown state class \"" + name + "\" (expected pure or mixed)");
}

PureState random_pure_state(int dim, Rng& rng) {
  std::vector<Complex> x(static_cast<size_t>(dim));
  double norm = 0.0;
  while (norm == 0.0) {
    for (auto& z : x) z = rng.complex_gaussian();
    norm = vector_norm(x);
  }
  for (auto& z : x) z /= norm;
  return PureState{std::move(x)};
}

MixedState random_mixed_state(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw DomainError("mixed state rank must lie in [1, dim]");
  // L is dim x rank; rho = L L* / tr(L L*).
  std::vector<std::vector<Complex>> cols(static_cast<size_t>(rank));
  for (auto& c : cols) {
    c.resize(static_cast<size_t>(dim));
    for (auto& z : c) z = rng.complex_gaussian();
  }
  ComplexMatrix rho(dim);
  double tr = 0.0;
  for (const auto& c : cols) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        rho(i, j) += c[static_cast<size_t>(i)] * std::conj(c[static_cast<size_t>(j)]);
      }
      tr += std::norm(c[static_cast<size_t>(i)]);
    }
  }
  if (tr == 0.0) return random_mixed_state(dim, rank, rng);
  rho *= Complex(1.0 / tr);
  // Exact unit trace after rounding.
  Complex t = rho.trace();
  rho(dim - 1, dim - 1) += 1.0 - t.real();
  return MixedState{std::move(rho)};
}

State random_state(int dim, StateClass kind, int rank, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x57a7e));
  if (kind == StateClass::pure) return random_pure_state(dim, rng);
  return random_mixed_state(dim, rank, rng);
}

}  // namespace seminorm
