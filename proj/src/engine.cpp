#include "seminorm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "seminorm/errors.hpp"
#include "seminorm/linalg.hpp"

namespace seminorm {

void OptimizerConfig::validate() const {
  if (starts < 1 || max_iterations < 1) {
    throw DomainError("optimizer counts must be >= 1");
  }
  if (!(gradient_tolerance > 0.0) || !(objective_tolerance > 0.0) ||
      !(finite_difference_step > 0.0)) {
    throw DomainError("optimizer tolerances must be positive");
  }
}

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 40;
constexpr double kClampU = 1e-14;

using Params = std::vector<double>;
using ObjectiveFn = std::function<double(const Params&)>;

double param_norm(const Params& p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return std::sqrt(s);
}

// Retraction: scale back to the unit sphere of the ambient parameter space
// (unit vector for pure states, unit-Frobenius factor for mixed states).
void retract(Params& p) {
  const double n = param_norm(p);
  if (n < 1e-12) {
    std::fill(p.begin(), p.end(), 0.0);
    p[0] = 1.0;
    return;
  }
  for (double& v : p) v /= n;
}

struct UW {
  double u = 0.0;  // |f(a)|^2
  double w = 0.0;  // f(a*a)
};

// Pure state from raw parameters (normalized internally): f(a) = <Ax, x>,
// f(a*a) = ||Ax||^2.
UW uw_pure(const ComplexMatrix& a, const Params& p) {
  const int n = a.dim();
  thread_local std::vector<Complex> x, y;
  x.resize(static_cast<size_t>(n));
  y.resize(static_cast<size_t>(n));
  double nrm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    x[static_cast<size_t>(i)] = {p[2 * static_cast<size_t>(i)],
                                 p[2 * static_cast<size_t>(i) + 1]};
    nrm2 += std::norm(x[static_cast<size_t>(i)]);
  }
  if (nrm2 == 0.0) {
    x[0] = 1.0;
    nrm2 = 1.0;
  }
  for (int i = 0; i < n; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  Complex fa = 0.0;
  double w = 0.0;
  for (int i = 0; i < n; ++i) {
    fa += std::conj(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(i)];
    w += std::norm(y[static_cast<size_t>(i)]);
  }
  return UW{std::norm(fa) / (nrm2 * nrm2), w / nrm2};
}

// Mixed state rho = L L*/tr(L L*) from the raw factor entries:
// tr(rho a) = sum_k c_k* A c_k / tr, f(a*a) = sum_k ||A c_k||^2 / tr.
UW uw_mixed(const ComplexMatrix& a, const Params& p) {
  const int n = a.dim();
  thread_local std::vector<Complex> c, y;
  c.resize(static_cast<size_t>(n));
  y.resize(static_cast<size_t>(n));
  Complex fa = 0.0;
  double w = 0.0, tr = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const size_t base = 2 * (static_cast<size_t>(i) * n + k);
      c[static_cast<size_t>(i)] = {p[base], p[base + 1]};
      tr += std::norm(c[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (int j = 0; j < n; ++j) s += a(i, j) * c[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = s;
    }
    for (int i = 0; i < n; ++i) {
      fa += std::conj(c[static_cast<size_t>(i)]) * y[static_cast<size_t>(i)];
      w += std::norm(y[static_cast<size_t>(i)]);
    }
  }
  if (tr == 0.0) return UW{0.0, 0.0};
  return UW{std::norm(fa) / (tr * tr), w / tr};
}

struct AscentOutcome {
  Params params;
  double value = 0.0;  // search objective at the final point
  int iterations = 0;
};

// Projected gradient ascent with central finite differences, backtracking
// line search and renormalization retraction. The accepted step length is
// remembered and doubled for the next iteration: near maxima that are
// degenerate in the ambient coordinates (quartic along the approach) a
// fixed unit step degrades to O(1/k^2) convergence, while growing steps
// restore a geometric rate.
AscentOutcome ascend(const ObjectiveFn& search, Params p,
                     const OptimizerConfig& cfg, double fd_step) {
  retract(p);
  double f = search(p);
  Params grad(p.size()), trial(p.size());
  double step_init = 1.0;
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    // Central differences on the ambient parameters; the objective is
    // scale-invariant, so projecting out the radial component leaves the
    // tangential gradient.
    Params probe = p;
    for (size_t k = 0; k < p.size(); ++k) {
      const double save = probe[k];
      probe[k] = save + fd_step;
      const double fp = search(probe);
      probe[k] = save - fd_step;
      const double fm = search(probe);
      probe[k] = save;
      grad[k] = (fp - fm) / (2.0 * fd_step);
    }
    double radial = 0.0;
    for (size_t k = 0; k < p.size(); ++k) radial += grad[k] * p[k];
    double gn2 = 0.0;
    for (size_t k = 0; k < p.size(); ++k) {
      grad[k] -= radial * p[k];
      gn2 += grad[k] * grad[k];
    }
    if (std::sqrt(gn2) <= cfg.gradient_tolerance * std::max(1.0, std::abs(f))) {
      break;
    }

    double step = step_init;
    bool accepted = false;
    double f_new = f;
    int halvings = 0;
    for (; halvings < kMaxHalvings; ++halvings) {
      for (size_t k = 0; k < p.size(); ++k) trial[k] = p[k] + step * grad[k];
      retract(trial);
      const double ft = search(trial);
      if (ft >= f + kArmijo * step * gn2) {
        accepted = true;
        f_new = ft;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    // The first Armijo-acceptable step can badly overshoot the peak along
    // the ray (tiny gain each iteration); keep halving while that improves.
    Params refine(p.size());
    while (halvings + 1 < kMaxHalvings) {
      const double half = step * 0.5;
      for (size_t k = 0; k < p.size(); ++k) refine[k] = p[k] + half * grad[k];
      retract(refine);
      const double fr = search(refine);
      if (fr <= f_new) break;
      step = half;
      f_new = fr;
      trial.swap(refine);
      ++halvings;
    }
    step_init = std::clamp(step * 2.0, 1.0, 1e8);
    const double gain = f_new - f;
    p.swap(trial);
    f = f_new;
    if (gain <= cfg.objective_tolerance * std::max(1.0, std::abs(f))) break;
  }
  return AscentOutcome{std::move(p), f, iter};
}

struct StartResult {
  Params params;
  double exact = 0.0;
  int iterations = 0;
};

struct MultiStartOutcome {
  Params best_params;
  double best = 0.0;
  bool converged = false;
  int starts_agreeing = 0;
  long iterations_total = 0;
};

// Deterministic reduction: maximum over starts, ties to the lowest index.
MultiStartOutcome multi_start(const ObjectiveFn& search, const ObjectiveFn& exact,
                              const std::vector<Params>& seeds,
                              const OptimizerConfig& cfg, double fd_step) {
  std::vector<StartResult> results;
  results.reserve(seeds.size());
  for (const auto& seed : seeds) {
    AscentOutcome out = ascend(search, seed, cfg, fd_step);
    StartResult r;
    r.exact = exact(out.params);
    r.params = std::move(out.params);
    r.iterations = out.iterations;
    results.push_back(std::move(r));
  }
  size_t best_idx = 0;
  MultiStartOutcome mo;
  for (size_t i = 0; i < results.size(); ++i) {
    mo.iterations_total += results[i].iterations;
    if (results[i].exact > results[best_idx].exact) best_idx = i;
  }
  mo.best = results[best_idx].exact;
  mo.best_params = std::move(results[best_idx].params);
  const double agree_tol = cfg.objective_tolerance * std::max(1.0, std::abs(mo.best));
  double second = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < results.size(); ++i) {
    if (std::abs(results[i].exact - mo.best) <= agree_tol) ++mo.starts_agreeing;
    if (i != best_idx) second = std::max(second, results[i].exact);
  }
  mo.converged = results.size() >= 2 && (mo.best - second) <= agree_tol;
  return mo;
}

Params pure_params_from_vector(const std::vector<Complex>& x) {
  Params p(2 * x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    p[2 * i] = x[i].real();
    p[2 * i + 1] = x[i].imag();
  }
  return p;
}

Params mixed_params_from_factor(const ComplexMatrix& l) {
  const int n = l.dim();
  Params p(2 * static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const size_t base = 2 * (static_cast<size_t>(i) * n + j);
      p[base] = l(i, j).real();
      p[base + 1] = l(i, j).imag();
    }
  }
  return p;
}

// Rank-1 lift: L whose first column is x reproduces rho = x x* exactly.
Params mixed_params_from_vector(const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  ComplexMatrix l(n);
  for (int i = 0; i < n; ++i) l(i, 0) = x[static_cast<size_t>(i)];
  return mixed_params_from_factor(l);
}

PureState pure_state_from_params(const Params& p) {
  std::vector<Complex> x(p.size() / 2);
  for (size_t i = 0; i < x.size(); ++i) x[i] = {p[2 * i], p[2 * i + 1]};
  const double n = vector_norm(x);
  if (n == 0.0) {
    x.assign(x.size(), 0.0);
    x[0] = 1.0;
  } else {
    for (auto& z : x) z /= n;
  }
  return PureState{std::move(x)};
}

MixedState mixed_state_from_params(int dim, const Params& p) {
  ComplexMatrix rho(dim);
  double tr = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < dim; ++k) {
        const size_t bi = 2 * (static_cast<size_t>(i) * dim + k);
        const size_t bj = 2 * (static_cast<size_t>(j) * dim + k);
        s += Complex(p[bi], p[bi + 1]) * std::conj(Complex(p[bj], p[bj + 1]));
      }
      rho(i, j) = s;
      if (i == j) tr += s.real();
    }
  }
  if (tr == 0.0) {
    rho = ComplexMatrix::identity(dim);
    tr = dim;
  }
  rho *= Complex(1.0 / tr);
  return MixedState{std::move(rho)};
}

std::vector<Params> random_seeds(int dim, StateClass cls, int count,
                                 std::uint64_t seed) {
  std::vector<Params> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng(mix_seed(seed, 1000 + static_cast<std::uint64_t>(i)));
    if (cls == StateClass::pure) {
      out.push_back(pure_params_from_vector(random_pure_state(dim, rng).x));
    } else {
      ComplexMatrix l(dim);
      for (auto& z : l.entries()) z = rng.complex_gaussian();
      out.push_back(mixed_params_from_factor(l));
    }
  }
  return out;
}

ComplexMatrix hermitian_part_rotated(const ComplexMatrix& a, double theta) {
  const Complex phase = std::exp(Complex(0.0, -theta));
  const int n = a.dim();
  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Complex v = 0.5 * (phase * a(i, j) + std::conj(phase * a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
    h(i, i) = Complex(h(i, i).real(), 0.0);
  }
  return h;
}

struct ThetaSweep {
  double theta = 0.0;
  double value = 0.0;
};

// Maximizes the chosen extremal eigenvalue of Re(e^{-i theta} A) over theta:
// 720-point grid, then golden-section refinement of the best bracket.
ThetaSweep sweep_extremal(const ComplexMatrix& a, bool top) {
  constexpr int kGrid = 720;
  constexpr double kThetaWindow = 1e-10;
  const double two_pi = 2.0 * std::numbers::pi;

  auto eval = [&](double theta) {
    const auto eig = hermitian_eigen(hermitian_part_rotated(a, theta));
    return top ? eig.lambda_max() : eig.lambda_min();
  };

  int best_k = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGrid; ++k) {
    const double v = eval(two_pi * k / kGrid);
    if (v > best_v) {
      best_v = v;
      best_k = k;
    }
  }

  double lo = two_pi * (best_k - 1) / kGrid;
  double hi = two_pi * (best_k + 1) / kGrid;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  while (hi - lo > kThetaWindow) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = eval(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = eval(x1);
    }
  }
  const double theta_ref = 0.5 * (lo + hi);
  const double v_ref = eval(theta_ref);
  // The bracket is only locally unimodal; never fall below the grid value.
  if (v_ref >= best_v) return ThetaSweep{theta_ref, v_ref};
  return ThetaSweep{two_pi * best_k / kGrid, best_v};
}

void require_square_finite(const ComplexMatrix& a) {
  if (a.dim() == 0) throw ShapeError("matrix must be nonempty");
  if (!a.all_finite()) throw DomainError("matrix has non-finite entries");
}

}  // namespace

double objective(const ComplexMatrix& a, MeanKind mean, double mu,
                 const State& s) {
  require_square_finite(a);
  if (state_dim(s) != a.dim()) throw ShapeError("state/matrix dimension mismatch");
  const PathEvaluator path(mean, mu);
  UW uw;
  if (const auto* ps = std::get_if<PureState>(&s)) {
    uw = uw_pure(a, pure_params_from_vector(ps->x));
  } else {
    const auto& ms = std::get<MixedState>(s);
    const double u = std::norm(state_eval(ms, a));
    const double w = std::max(0.0, state_eval(ms, gram(a)).real());
    uw = UW{u, w};
  }
  return path(uw.u, uw.w);
}

NumericalRadiusResult numerical_radius(const ComplexMatrix& a) {
  require_square_finite(a);
  const int n = a.dim();
  NumericalRadiusResult out;
  if (a.frobenius_norm() == 0.0) {
    std::vector<Complex> e1(static_cast<size_t>(n));
    e1[0] = 1.0;
    out.witness = PureState{std::move(e1)};
    return out;
  }
  const ThetaSweep sweep = sweep_extremal(a, /*top=*/true);
  const auto eig = hermitian_eigen(hermitian_part_rotated(a, sweep.theta));
  out.value = sweep.value;
  out.theta = sweep.theta;
  out.witness = PureState{eig.vectors.back()};
  return out;
}

double crawford(const ComplexMatrix& a) {
  require_square_finite(a);
  if (a.frobenius_norm() == 0.0) return 0.0;
  const ThetaSweep sweep = sweep_extremal(a, /*top=*/false);
  return std::max(0.0, sweep.value);
}

SeminormProblem::SeminormProblem(ComplexMatrix a) : a_(std::move(a)) {
  require_square_finite(a_);
  const int n = a_.dim();
  if (a_.frobenius_norm() == 0.0) {
    std::vector<Complex> e1(static_cast<size_t>(n));
    e1[0] = 1.0;
    top_singular_ = PureState{e1};
    radius_.witness = PureState{std::move(e1)};
    return;
  }
  const auto eig = hermitian_eigen(gram(a_));
  op_norm_ = std::sqrt(std::max(0.0, eig.lambda_max()));
  top_singular_ = PureState{eig.vectors.back()};
  radius_ = numerical_radius(a_);
}

SeminormResult SeminormProblem::solve(MeanKind mean, double mu, StateClass cls,
                                      const OptimizerConfig& cfg) const {
  cfg.validate();
  const PathEvaluator path(mean, mu);
  const bool clamp_u = (mean == MeanKind::geometric || mean == MeanKind::harmonic) &&
                       mu > 0.0 && mu < 1.0;
  const double fd_step = cfg.finite_difference_step * std::max(1.0, op_norm_);
  const int n = a_.dim();

  SeminormResult result;

  if (cls == StateClass::pure) {
    ObjectiveFn exact = [this, path](const Params& p) {
      const UW uw = uw_pure(a_, p);
      return path(uw.u, uw.w);
    };
    ObjectiveFn search = exact;
    if (clamp_u) {
      search = [this, path](const Params& p) {
        const UW uw = uw_pure(a_, p);
        return path(std::max(uw.u, kClampU), uw.w);
      };
    }
    std::vector<Params> seeds;
    seeds.push_back(pure_params_from_vector(top_singular_.x));
    seeds.push_back(pure_params_from_vector(radius_.witness.x));
    const int randoms = std::max(0, cfg.starts - static_cast<int>(seeds.size()));
    for (auto& s : random_seeds(n, StateClass::pure, randoms, cfg.seed)) {
      seeds.push_back(std::move(s));
    }
    MultiStartOutcome mo = multi_start(search, exact, seeds, cfg, fd_step);
    result.value = std::sqrt(std::max(0.0, mo.best));
    result.witness = pure_state_from_params(mo.best_params);
    result.converged = mo.converged;
    result.starts_agreeing = mo.starts_agreeing;
    result.iterations_total = mo.iterations_total;
    return result;
  }

  // Mixed class: run the cheap pure solve first and lift its winner into the
  // seed list, so the mixed value can never fall below the pure value.
  SeminormResult pure_result = solve(mean, mu, StateClass::pure, cfg);

  ObjectiveFn exact = [this, path](const Params& p) {
    const UW uw = uw_mixed(a_, p);
    return path(uw.u, uw.w);
  };
  ObjectiveFn search = exact;
  if (clamp_u) {
    search = [this, path](const Params& p) {
      const UW uw = uw_mixed(a_, p);
      return path(std::max(uw.u, kClampU), uw.w);
    };
  }

  std::vector<Params> seeds;
  seeds.push_back(mixed_params_from_vector(std::get<PureState>(pure_result.witness).x));
  seeds.push_back(mixed_params_from_vector(top_singular_.x));
  seeds.push_back(mixed_params_from_vector(radius_.witness.x));
  {
    ComplexMatrix l = ComplexMatrix::identity(n);
    l *= Complex(1.0 / std::sqrt(static_cast<double>(n)));
    seeds.push_back(mixed_params_from_factor(l));
  }
  const int randoms = std::max(0, cfg.starts - static_cast<int>(seeds.size()));
  for (auto& s : random_seeds(n, StateClass::mixed, randoms, cfg.seed)) {
    seeds.push_back(std::move(s));
  }

  MultiStartOutcome mo = multi_start(search, exact, seeds, cfg, fd_step);
  result.value = std::sqrt(std::max(0.0, mo.best));
  result.witness = mixed_state_from_params(n, mo.best_params);
  result.converged = mo.converged;
  result.starts_agreeing = mo.starts_agreeing;
  result.iterations_total = mo.iterations_total + pure_result.iterations_total;
  return result;
}

SeminormResult compute_seminorm(const SeminormQuery& q) {
  const SeminormProblem problem(q.matrix);
  return problem.solve(q.mean, q.mu, q.state_class, q.config);
}

MuSweepResult mu_sweep(const ComplexMatrix& a, MeanKind mean,
                       const std::vector<double>& mus, StateClass cls,
                       const OptimizerConfig& cfg) {
  const SeminormProblem problem(a);
  MuSweepResult out;
  out.numerical_radius = problem.radius().value;
  out.operator_norm = problem.op_norm();
  const double scale = std::max(1.0, problem.op_norm());
  for (const double mu : mus) {
    const SeminormResult r = problem.solve(mean, mu, cls, cfg);
    out.points.push_back(MuSweepPoint{mu, r.value});
    double gap = 0.0;
    if (mu == 0.0) gap = std::abs(r.value - out.numerical_radius) / scale;
    if (mu == 1.0) gap = std::abs(r.value - out.operator_norm) / scale;
    out.worst_endpoint_gap = std::max(out.worst_endpoint_gap, gap);
  }
  out.endpoints_consistent = out.worst_endpoint_gap <= 1e-6;
  return out;
}

double seminorm_upper_envelope(const ComplexMatrix& a, MeanKind mean, double mu) {
  const double v = numerical_radius(a).value;
  const double norm = operator_norm(a);
  return std::sqrt(path_eval(mean, mu, v * v, norm * norm));
}

double oracle_2x2(const ComplexMatrix& a, MeanKind mean, double mu, int grid) {
  if (a.dim() != 2) throw ShapeError("the brute-force oracle requires a 2x2 matrix");
  require_square_finite(a);
  if (grid < 8) throw DomainError("oracle grid must be at least 8");
  const PathEvaluator path(mean, mu);

  const Complex a00 = a(0, 0), a01 = a(0, 1), a10 = a(1, 0), a11 = a(1, 1);
  const ComplexMatrix g = gram(a);
  const double g00 = g(0, 0).real(), g11 = g(1, 1).real();
  const Complex g01 = g(0, 1);

  // x = (cos phi, e^{i psi} sin phi):
  //   f(a)   = c^2 a00 + cs e^{i psi} a01 + cs e^{-i psi} a10 + s^2 a11
  //   f(a*a) = c^2 g00 + 2 cs Re(e^{i psi} g01) + s^2 g11
  auto eval = [&](double c, double s, double cpsi, double spsi) {
    const Complex eip(cpsi, spsi);
    const Complex fa = c * c * a00 + c * s * (eip * a01 + std::conj(eip) * a10) +
                       s * s * a11;
    const double w = c * c * g00 + 2.0 * c * s * (eip * g01).real() + s * s * g11;
    return path(std::norm(fa), std::max(0.0, w));
  };

  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;
  const double h_phi = half_pi / (grid - 1);
  const double h_psi = two_pi / grid;

  std::vector<double> cpsi(static_cast<size_t>(grid)), spsi(static_cast<size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    cpsi[static_cast<size_t>(j)] = std::cos(h_psi * j);
    spsi[static_cast<size_t>(j)] = std::sin(h_psi * j);
  }

  double best = -1.0;
  double best_phi = 0.0, best_psi = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double phi = h_phi * i;
    const double c = std::cos(phi), s = std::sin(phi);
    for (int j = 0; j < grid; ++j) {
      const double v = eval(c, s, cpsi[static_cast<size_t>(j)], spsi[static_cast<size_t>(j)]);
      if (v > best) {
        best = v;
        best_phi = phi;
        best_psi = h_psi * j;
      }
    }
  }

  // One local refinement pass around the best cell at 10x resolution.
  const int refine = 21;
  for (int i = 0; i < refine; ++i) {
    double phi = best_phi + (i - (refine - 1) / 2) * (h_phi / 10.0);
    phi = std::clamp(phi, 0.0, half_pi);
    const double c = std::cos(phi), s = std::sin(phi);
    for (int j = 0; j < refine; ++j) {
      const double psi = best_psi + (j - (refine - 1) / 2) * (h_psi / 10.0);
      const double v = eval(c, s, std::cos(psi), std::sin(psi));
      if (v > best) best = v;
    }
  }
  return std::sqrt(std::max(0.0, best));
}

StateOptimum maximize_over_states(int dim, StateClass cls,
                                  const std::function<double(const State&)>& fn,
                                  const OptimizerConfig& cfg,
                                  const std::vector<State>& seed_states,
                                  double step_scale) {
  cfg.validate();
  if (dim < 1) throw ShapeError("state dimension must be positive");

  ObjectiveFn objective_of_params;
  if (cls == StateClass::pure) {
    objective_of_params = [&fn](const Params& p) {
      return fn(State{pure_state_from_params(p)});
    };
  } else {
    objective_of_params = [&fn, dim](const Params& p) {
      return fn(State{mixed_state_from_params(dim, p)});
    };
  }

  std::vector<Params> seeds;
  for (const auto& s : seed_states) {
    if (cls == StateClass::pure) {
      if (const auto* ps = std::get_if<PureState>(&s)) {
        seeds.push_back(pure_params_from_vector(ps->x));
      } else {
        // Best pure approximation: top eigenvector of the density matrix.
        const auto eig = hermitian_eigen(std::get<MixedState>(s).rho);
        seeds.push_back(pure_params_from_vector(eig.vectors.back()));
      }
    } else {
      if (const auto* ps = std::get_if<PureState>(&s)) {
        seeds.push_back(mixed_params_from_vector(ps->x));
      } else {
        seeds.push_back(mixed_params_from_factor(
            psd_power(std::get<MixedState>(s).rho, 0.5, 1e-8)));
      }
    }
  }
  const int randoms = std::max(1, cfg.starts - static_cast<int>(seeds.size()));
  for (auto& s : random_seeds(dim, cls, randoms, cfg.seed)) {
    seeds.push_back(std::move(s));
  }

  const double fd_step = cfg.finite_difference_step * std::max(1.0, step_scale);
  MultiStartOutcome mo =
      multi_start(objective_of_params, objective_of_params, seeds, cfg, fd_step);

  StateOptimum out;
  out.value = mo.best;
  out.converged = mo.converged;
  out.starts_agreeing = mo.starts_agreeing;
  out.iterations_total = mo.iterations_total;
  if (cls == StateClass::pure) {
    out.witness = State{pure_state_from_params(mo.best_params)};
  } else {
    out.witness = State{mixed_state_from_params(dim, mo.best_params)};
  }
  return out;
}

}  // namespace seminorm
