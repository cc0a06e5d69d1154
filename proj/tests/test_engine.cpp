#include <doctest.h>

#include <cmath>
#include <numbers>

#include "seminorm/engine.hpp"
#include "seminorm/errors.hpp"
#include "seminorm/linalg.hpp"
#include "test_support.hpp"

using namespace seminorm;
using seminorm::testing::random_matrix;

namespace {

// Closed forms for A = [[0, 2], [0, 0]] over pure states x with t = |x_2|^2:
// u = 4t(1-t), w = 4t.
//   arithmetic 1/2: max of 2t(2-t) on [0,1] is 2 at t = 1       -> sqrt(2)
//   geometric  1/2: max of 4t sqrt(1-t) is 8/(3 sqrt 3) at t=2/3 -> 1.2408064788027995
//   harmonic   1/2: max of 8t(1-t)/(2-t) is 24-16 sqrt 2
//                   at t = 2 - sqrt 2                            -> 4 - 2 sqrt 2
constexpr double kNilArithmetic = 1.4142135623730951;
constexpr double kNilGeometric = 1.2408064788027995;
constexpr double kNilHarmonic = 1.1715728752538097;

ComplexMatrix nilpotent_example() {
  ComplexMatrix a(2);
  a(0, 1) = 2.0;
  return a;
}

ComplexMatrix normal_example() {
  // U diag(2, -1+i, 0.5i) U* with a hand-picked unitary mixing.
  const double c = std::cos(0.6), s = std::sin(0.6);
  ComplexMatrix u = ComplexMatrix::identity(3);
  u(0, 0) = c;
  u(0, 1) = -s;
  u(1, 0) = s;
  u(1, 1) = c;
  ComplexMatrix v = ComplexMatrix::identity(3);
  v(1, 1) = std::exp(Complex(0.0, 0.9));
  const ComplexMatrix w = u * v;
  return w * ComplexMatrix::diag({2.0, Complex(-1.0, 1.0), Complex(0.0, 0.5)}) *
         w.adjoint();
}

OptimizerConfig quick_config(std::uint64_t seed = 1) {
  OptimizerConfig cfg;
  cfg.starts = 12;
  cfg.max_iterations = 300;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("objective on hand-evaluated states") {
  const ComplexMatrix a = nilpotent_example();
  const State e2{make_pure({Complex(0.0), Complex(1.0)})};
  // u = 0, w = 4: arithmetic midpoint gives 2.
  CHECK(objective(a, MeanKind::arithmetic, 0.5, e2) == doctest::Approx(2.0));

  for (MeanKind k : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::harmonic}) {
    for (const double mu : {0.0, 0.3, 1.0}) {
      const State s{make_pure({Complex(0.6), Complex(0.8)})};
      CHECK(objective(ComplexMatrix::identity(2), k, mu, s) == doctest::Approx(1.0));
    }
  }

  // x = (1,1)/sqrt(2): u = 1, w = 2, geometric midpoint sqrt(2).
  const double s = 1.0 / std::numbers::sqrt2;
  const State plus{make_pure({Complex(s), Complex(s)})};
  CHECK(objective(a, MeanKind::geometric, 0.5, plus) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
}

TEST_CASE("seminorm of the nilpotent example matches the closed forms") {
  const ComplexMatrix a = nilpotent_example();
  SeminormQuery q;
  q.matrix = a;
  q.mu = 0.5;
  q.state_class = StateClass::pure;
  q.config = quick_config();

  q.mean = MeanKind::arithmetic;
  CHECK(compute_seminorm(q).value == doctest::Approx(kNilArithmetic).epsilon(1e-6));
  q.mean = MeanKind::geometric;
  CHECK(compute_seminorm(q).value == doctest::Approx(kNilGeometric).epsilon(1e-6));
  q.mean = MeanKind::harmonic;
  CHECK(compute_seminorm(q).value == doctest::Approx(kNilHarmonic).epsilon(1e-6));
}

TEST_CASE("oracle_2x2 confirms the closed forms independently") {
  const ComplexMatrix a = nilpotent_example();
  CHECK(oracle_2x2(a, MeanKind::arithmetic, 0.5, 1024) ==
        doctest::Approx(kNilArithmetic).epsilon(1e-5));
  CHECK(oracle_2x2(a, MeanKind::geometric, 0.5, 1024) ==
        doctest::Approx(kNilGeometric).epsilon(1e-5));
  CHECK(oracle_2x2(a, MeanKind::harmonic, 0.5, 1024) ==
        doctest::Approx(kNilHarmonic).epsilon(1e-5));
}

TEST_CASE("oracle_2x2 basic cases and validation") {
  CHECK(oracle_2x2(ComplexMatrix::identity(2), MeanKind::geometric, 0.3, 256) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(oracle_2x2(ComplexMatrix::diag({0.0, 1.0}), MeanKind::arithmetic, 0.0, 512) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK_THROWS_AS(oracle_2x2(ComplexMatrix::identity(3), MeanKind::arithmetic, 0.5),
                  ShapeError);
  CHECK_THROWS_AS(oracle_2x2(ComplexMatrix::identity(2), MeanKind::arithmetic, 1.5),
                  DomainError);
}

TEST_CASE("numerical radius") {
  const auto nil = numerical_radius(nilpotent_example());
  CHECK(nil.value == doctest::Approx(1.0).epsilon(1e-8));
  // The witness attains the radius.
  CHECK(std::abs(state_eval(nil.witness, nilpotent_example())) ==
        doctest::Approx(nil.value).epsilon(1e-9));

  CHECK(numerical_radius(ComplexMatrix::diag({1.0, Complex(0.0, 1.0)})).value ==
        doctest::Approx(1.0).epsilon(1e-9));

  Rng rng(41);
  const ComplexMatrix h = seminorm::testing::random_hermitian(4, rng);
  const auto eig = hermitian_eigen(h);
  const double expected = std::max(std::abs(eig.lambda_min()), std::abs(eig.lambda_max()));
  CHECK(numerical_radius(h).value == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("crawford number") {
  CHECK(crawford(ComplexMatrix::diag({1.0, 2.0})) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(crawford(nilpotent_example()) == doctest::Approx(0.0));
  CHECK(crawford(ComplexMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mu_sweep endpoints and normal collapse") {
  const ComplexMatrix a = nilpotent_example();
  const auto sweep = mu_sweep(a, MeanKind::arithmetic, {0.0, 0.5, 1.0},
                              StateClass::pure, quick_config());
  REQUIRE(sweep.points.size() == 3);
  CHECK(sweep.points[0].value == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(sweep.points[1].value == doctest::Approx(kNilArithmetic).epsilon(1e-5));
  CHECK(sweep.points[2].value == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(sweep.endpoints_consistent);

  const ComplexMatrix n = normal_example();
  const double nm = operator_norm(n);
  const auto ns = mu_sweep(n, MeanKind::geometric, {0.0, 0.25, 0.75, 1.0},
                           StateClass::pure, quick_config());
  for (const auto& p : ns.points) {
    CHECK(std::abs(p.value - nm) <= 1e-6 * std::max(1.0, nm));
  }

  const auto single = mu_sweep(a, MeanKind::harmonic, {0.0}, StateClass::pure,
                               quick_config());
  CHECK(single.points[0].value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("upper envelope") {
  const ComplexMatrix a = nilpotent_example();
  // v = 1, |A| = 2: sqrt((1 + 4)/2)
  CHECK(seminorm_upper_envelope(a, MeanKind::arithmetic, 0.5) ==
        doctest::Approx(std::sqrt(2.5)).epsilon(1e-9));
  CHECK(seminorm_upper_envelope(ComplexMatrix::identity(4), MeanKind::harmonic, 0.7) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(seminorm_upper_envelope(a, MeanKind::geometric, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("sandwich, envelope and endpoint identities on random matrices") {
  Rng rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(4));
    const ComplexMatrix a = random_matrix(dim, rng);
    const SeminormProblem prob(a);
    const double v = prob.radius().value;
    const double nm = prob.op_norm();
    const double s = std::max(1.0, nm);
    for (MeanKind k : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::harmonic}) {
      for (const double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto r = prob.solve(k, mu, StateClass::pure, quick_config());
        CHECK(r.value >= v - 1e-7 * s);
        CHECK(r.value <= nm + 1e-7 * s);
        CHECK(r.value <= seminorm_upper_envelope(a, k, mu) + 1e-7 * s);
        // The reported value squares back to the witness objective.
        CHECK(std::abs(r.value * r.value - objective(a, k, mu, r.witness)) <=
              1e-9 * std::max(1.0, r.value * r.value));
      }
      const auto r0 = prob.solve(k, 0.0, StateClass::pure, quick_config());
      CHECK(std::abs(r0.value - v) <= 1e-6 * s);
      const auto r1 = prob.solve(k, 1.0, StateClass::pure, quick_config());
      CHECK(std::abs(r1.value - nm) <= 1e-6 * s);
    }
  }
}

TEST_CASE("homogeneity and definiteness") {
  Rng rng(43);
  const ComplexMatrix a = random_matrix(3, rng);
  const SeminormProblem pa(a);
  const Complex lambda(1.3, -0.7);
  ComplexMatrix la = a;
  la *= lambda;
  const SeminormProblem pla(la);
  for (MeanKind k : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::harmonic}) {
    const double base = pa.solve(k, 0.5, StateClass::pure, quick_config()).value;
    const double scaled = pla.solve(k, 0.5, StateClass::pure, quick_config()).value;
    CHECK(std::abs(scaled - std::abs(lambda) * base) <=
          1e-7 * std::max(1.0, std::abs(lambda) * base));
    CHECK(base >= pa.radius().value - 1e-9);
    CHECK(pa.radius().value > 0.0);
  }

  SeminormQuery zero;
  zero.matrix = ComplexMatrix::zero(3);
  zero.mean = MeanKind::geometric;
  zero.mu = 0.5;
  zero.config = quick_config();
  CHECK(compute_seminorm(zero).value == 0.0);
}

TEST_CASE("mixed class dominates pure and agrees for the arithmetic path") {
  Rng rng(44);
  for (int trial = 0; trial < 4; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform_index(3));
    const ComplexMatrix a = random_matrix(dim, rng);
    const SeminormProblem prob(a);
    const double s = std::max(1.0, prob.op_norm());
    for (MeanKind k : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::harmonic}) {
      const double pure = prob.solve(k, 0.5, StateClass::pure, quick_config()).value;
      const double mixed = prob.solve(k, 0.5, StateClass::mixed, quick_config()).value;
      CHECK(mixed >= pure - 1e-7 * s);
      if (k == MeanKind::arithmetic) CHECK(std::abs(mixed - pure) <= 1e-6 * s);
    }
  }
}

TEST_CASE("engine matches the oracle on random 2x2 inputs") {
  Rng rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = random_matrix(2, rng);
    const SeminormProblem prob(a);
    for (MeanKind k : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::harmonic}) {
      const double mu = rng.uniform();
      const double engine = prob.solve(k, mu, StateClass::pure, quick_config()).value;
      const double oracle = oracle_2x2(a, k, mu, 1024);
      CHECK(std::abs(engine - oracle) <= 1e-3 * std::max(1.0, oracle));
    }
  }
}

TEST_CASE("identical queries are bitwise deterministic") {
  Rng rng(46);
  const ComplexMatrix a = random_matrix(3, rng);
  SeminormQuery q;
  q.matrix = a;
  q.mean = MeanKind::geometric;
  q.mu = 0.25;
  q.state_class = StateClass::mixed;
  q.config = quick_config(99);
  const auto r1 = compute_seminorm(q);
  const auto r2 = compute_seminorm(q);
  CHECK(r1.value == r2.value);
  CHECK(r1.iterations_total == r2.iterations_total);
}

TEST_CASE("maximize_over_states handles sign-indefinite functionals") {
  // max over states of Re f(H) for Hermitian H is lambda_max, even when the
  // whole range is negative.
  const ComplexMatrix h = ComplexMatrix::diag({-3.0, -1.0});
  const auto opt = maximize_over_states(
      2, StateClass::mixed,
      [&](const State& s) { return state_eval(s, h).real(); }, quick_config(), {},
      3.0);
  CHECK(opt.value == doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("query validation") {
  SeminormQuery q;
  q.matrix = nilpotent_example();
  q.mu = 2.0;
  CHECK_THROWS_AS(compute_seminorm(q), DomainError);
  q.mu = 0.5;
  q.config.starts = 0;
  CHECK_THROWS_AS(compute_seminorm(q), DomainError);
}

} // TEST_SUITE
