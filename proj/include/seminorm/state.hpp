#ifndef SEMINORM_STATE_HPP
#define SEMINORM_STATE_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "seminorm/complex_matrix.hpp"
#include "seminorm/rng.hpp"

namespace seminorm {

/// Vector state: a |-> <a x, x> for a unit vector x.
struct PureState {
  std::vector<Complex> x;
  int dim() const { return static_cast<int>(x.size()); }
};

/// Density-matrix state: a |-> tr(rho a); rho Hermitian PSD with unit trace.
struct MixedState {
  ComplexMatrix rho;
  int dim() const { return rho.dim(); }
};

using State = std::variant<PureState, MixedState>;

int state_dim(const State& s);

/// Builds a validated pure state (normalizes within 1e-12, rejects further off).
PureState make_pure(std::vector<Complex> x);

/// Validates the density-matrix invariants (Hermitian 1e-10, trace 1e-12,
/// lambda_min >= -1e-10) and returns the state.
MixedState make_mixed(ComplexMatrix rho);

/// f(A): <A x, x> for pure states, tr(rho A) for mixed states.
Complex state_eval(const State& s, const ComplexMatrix& a);
Complex state_eval(const PureState& s, const ComplexMatrix& a);
Complex state_eval(const MixedState& s, const ComplexMatrix& a);

/// rho = x x*.
MixedState pure_to_mixed(const PureState& s);

enum class StateClass { pure, mixed };

const char* to_string(StateClass c);
StateClass state_class_from_string(const std::string& name);

/// Deterministic per seed. Pure: normalized complex-Gaussian vector
/// (uniform on the sphere). Mixed: rho = L L* / tr(L L*) with a
/// dim x rank complex-Gaussian factor.
State random_state(int dim, StateClass kind, int rank, std::uint64_t seed);

PureState random_pure_state(int dim, Rng& rng);
MixedState random_mixed_state(int dim, int rank, Rng& rng);

}  // namespace seminorm

#endif
