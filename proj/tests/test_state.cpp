#include <doctest.h>

#include <cmath>
#include <numbers>

#include "seminorm/errors.hpp"
#include "seminorm/linalg.hpp"
#include "seminorm/state.hpp"
#include "test_support.hpp"

using namespace seminorm;
using seminorm::testing::random_matrix;
using seminorm::testing::random_psd;

namespace {

ComplexMatrix nilpotent_example() {
  ComplexMatrix a(2);
  a(0, 1) = 2.0;
  return a;
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("state_eval examples") {
  const ComplexMatrix a = nilpotent_example();
  const PureState e2 = make_pure({Complex(0.0), Complex(1.0)});
  CHECK(std::abs(state_eval(e2, a)) <= 1e-15);

  // x = (1, 1)/sqrt(2): Ax = (sqrt(2), 0), <Ax, x> = 1.
  const double s = 1.0 / std::numbers::sqrt2;
  const PureState plus = make_pure({Complex(s), Complex(s)});
  CHECK(state_eval(plus, a).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(state_eval(plus, a).imag()) <= 1e-14);

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= Complex(0.5);
  const MixedState rho = make_mixed(half);
  CHECK(state_eval(rho, ComplexMatrix::diag({0.0, 4.0})).real() == doctest::Approx(2.0));
}

TEST_CASE("state_eval of the identity is 1") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(4));
    const State p{random_pure_state(dim, rng)};
    const State m{random_mixed_state(dim, 1 + static_cast<int>(rng.uniform_index(dim)), rng)};
    CHECK(std::abs(state_eval(p, ComplexMatrix::identity(dim)) - Complex(1.0)) <= 1e-12);
    CHECK(std::abs(state_eval(m, ComplexMatrix::identity(dim)) - Complex(1.0)) <= 1e-12);
  }
}

TEST_CASE("state_eval dimension mismatch") {
  const PureState e1 = make_pure({Complex(1.0), Complex(0.0)});
  CHECK_THROWS_AS(state_eval(e1, ComplexMatrix::identity(3)), ShapeError);
}

TEST_CASE("pure_to_mixed outer products") {
  const MixedState m1 = pure_to_mixed(make_pure({Complex(1.0), Complex(0.0)}));
  CHECK((m1.rho - ComplexMatrix::diag({1.0, 0.0})).frobenius_norm() <= 1e-15);
  const MixedState m2 = pure_to_mixed(make_pure({Complex(0.0), Complex(1.0)}));
  CHECK((m2.rho - ComplexMatrix::diag({0.0, 1.0})).frobenius_norm() <= 1e-15);

  const double s = 1.0 / std::numbers::sqrt2;
  const MixedState m3 = pure_to_mixed(make_pure({Complex(s), Complex(s)}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(m3.rho(i, j).real() == doctest::Approx(0.5));
}

TEST_CASE("pure and lifted mixed functionals agree") {
  Rng rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(4));
    const PureState x = random_pure_state(dim, rng);
    const MixedState rho = pure_to_mixed(x);
    const ComplexMatrix a = random_matrix(dim, rng);
    const double norm_a = operator_norm(a);
    CHECK(std::abs(state_eval(x, a) - state_eval(rho, a)) <= 1e-12 * std::max(1.0, norm_a));
  }
}

TEST_CASE("random_state determinism and construction") {
  const State a = random_state(2, StateClass::pure, 1, 7);
  const State b = random_state(2, StateClass::pure, 1, 7);
  CHECK(std::get<PureState>(a).x == std::get<PureState>(b).x);

  const State m = random_state(3, StateClass::mixed, 3, 7);
  const auto& rho = std::get<MixedState>(m).rho;
  CHECK(std::abs(rho.trace() - Complex(1.0)) <= 1e-12);

  const State r1 = random_state(3, StateClass::mixed, 1, 7);
  const auto eig = hermitian_eigen(std::get<MixedState>(r1).rho);
  int above = 0;
  for (const double v : eig.values) {
    if (v > 1e-10) ++above;
  }
  CHECK(above == 1);
}

TEST_CASE("rank-1 mixed state matches some pure state") {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(3));
    const MixedState rho = random_mixed_state(dim, 1, rng);
    const auto eig = hermitian_eigen(rho.rho);
    const PureState top{eig.vectors.back()};
    for (int k = 0; k < 8; ++k) {
      const ComplexMatrix a = random_matrix(dim, rng);
      CHECK(std::abs(state_eval(rho, a) - state_eval(top, a)) <=
            1e-10 * std::max(1.0, operator_norm(a)));
    }
  }
}

TEST_CASE("Cauchy-Schwarz for states") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(4));
    const ComplexMatrix a = random_matrix(dim, rng);
    const double nm = operator_norm(a);
    State s;
    if (trial % 2 == 0) {
      s = State{random_pure_state(dim, rng)};
    } else {
      s = State{random_mixed_state(dim, 1 + static_cast<int>(rng.uniform_index(dim)), rng)};
    }
    const double lhs = std::norm(state_eval(s, a));
    const double rhs = state_eval(s, gram(a)).real();
    CHECK(lhs <= rhs + 1e-10 * nm * nm);
  }
}

TEST_CASE("positivity of PSD expectations") {
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(3));
    const ComplexMatrix h = random_psd(dim, rng);
    const double nm = operator_norm(h);
    const State s{random_mixed_state(dim, dim, rng)};
    const Complex v = state_eval(s, h);
    CHECK(std::abs(v.imag()) <= 1e-12 * std::max(1.0, nm));
    CHECK(v.real() >= -1e-10 * std::max(1.0, nm));
  }
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(make_pure({Complex(0.0), Complex(0.0)}), DomainError);
  CHECK_THROWS_AS(make_pure({Complex(2.0), Complex(0.0)}), DomainError);
  ComplexMatrix bad = ComplexMatrix::diag({0.7, 0.7});  // trace 1.4
  CHECK_THROWS_AS(make_mixed(bad), DomainError);
  Rng rng(1);
  CHECK_THROWS_AS(random_mixed_state(2, 3, rng), DomainError);
  CHECK_THROWS_AS(state_class_from_string("thermal"), DomainError);
}

} // TEST_SUITE
