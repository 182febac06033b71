#pragma once

// Euler-Poincare flows on a centered semi-direct product, reconstruction of
// the group trajectory, and diagnostics (energy, spatial momentum, discrete
// action variations).
//
// Sign conventions with m = (mu, gamma) = dl/dxi:
//   right-invariant  mu' = -ad*_xi mu - xi_v <> gamma,  gamma' = -xi_g <3 gamma
//   left-invariant   both right-hand sides negated
// Reconstruction: right  d/dt (g, v) = (xi_g g, xi_g.v + xi_v.g)
//                 left   d/dt (g, v) = (g xi_g, g.xi_v + v.xi_g)

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csdp/algebra.hpp"
#include "csdp/core.hpp"
#include "csdp/random.hpp"

namespace csdp {

enum class Orientation { right, left };

// Raised when the reconstructed group element leaves GL(n) numerically.
class SingularTrajectory : public SingularMatrix {
 public:
  SingularTrajectory(std::size_t step, double determinant)
      : SingularMatrix("reconstruction left GL(n) at step " + std::to_string(step), determinant), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// l(xi_g, xi_v) = 1/2 sum_i wg_i c_i^2 + 1/2 sum_j wv_j d_j^2 with c, d the
// coordinates of xi_g in the matrix-unit basis and of xi_v in the instance's
// vector basis.
template <ActionPair A>
class QuadraticLagrangian {
 public:
  using vector_type = typename A::vector_type;
  using covector_type = typename A::covector_type;

  QuadraticLagrangian(A act, std::vector<double> weights_g, std::vector<double> weights_v)
      : act_(std::move(act)),
        weights_g_(std::move(weights_g)),
        weights_v_(std::move(weights_v)),
        basis_(act_.vector_basis()),
        dual_(act_.covector_basis()) {
    const std::size_t n = act_.n();
    if (weights_g_.size() != n * n) throw std::invalid_argument("weights_g must have n^2 entries");
    if (weights_v_.size() != basis_.size()) throw std::invalid_argument("weights_v must have dim V entries");
    for (double w : weights_g_)
      if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("Lagrangian weights must be positive");
    for (double w : weights_v_)
      if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("Lagrangian weights must be positive");
  }

  static QuadraticLagrangian unit(A act) {
    const std::size_t dim_g = act.n() * act.n();
    const std::size_t dim_v = act.vector_basis().size();
    return QuadraticLagrangian(std::move(act), std::vector<double>(dim_g, 1.0), std::vector<double>(dim_v, 1.0));
  }

  const A& instance() const noexcept { return act_; }
  const std::vector<double>& weights_g() const noexcept { return weights_g_; }
  const std::vector<double>& weights_v() const noexcept { return weights_v_; }
  const std::vector<vector_type>& vector_basis() const noexcept { return basis_; }

  std::vector<double> coordinates(const vector_type& v) const {
    std::vector<double> d(basis_.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = act_.pairing(dual_[j], v);
    return d;
  }

  vector_type from_coordinates(const std::vector<double>& d) const {
    if (d.size() != basis_.size()) throw DimensionMismatch("coordinate vector has the wrong length");
    vector_type v = act_.zero_vector();
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] != 0.0) v += d[j] * basis_[j];
    return v;
  }

  double value(const Algebra<A>& xi) const { return value_g(xi.xi_g) + value_v(xi.xi_v); }

  double value_g(const Matrix& xi_g) const {
    double acc = 0.0;
    const auto c = xi_g.data();
    for (std::size_t i = 0; i < c.size(); ++i) acc += weights_g_[i] * c[i] * c[i];
    return 0.5 * acc;
  }

  double value_v(const vector_type& v) const {
    const auto d = coordinates(v);
    double acc = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) acc += weights_v_[j] * d[j] * d[j];
    return 0.5 * acc;
  }

  Matrix momentum_g(const Matrix& xi_g) const {
    Matrix mu(xi_g.n());
    const auto c = xi_g.data();
    for (std::size_t i = 0; i < c.size(); ++i) mu.data()[i] = weights_g_[i] * c[i];
    return mu;
  }

  // dl/dv for any V-valued argument; the gamma component of legendre().
  covector_type momentum_v(const vector_type& v) const {
    const auto d = coordinates(v);
    covector_type gamma = act_.zero_covector();
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] != 0.0) gamma += (weights_v_[j] * d[j]) * dual_[j];
    return gamma;
  }

  Coalgebra<A> legendre(const Algebra<A>& xi) const { return {momentum_g(xi.xi_g), momentum_v(xi.xi_v)}; }

  Algebra<A> inverse_legendre(const Coalgebra<A>& m) const {
    Matrix xi_g(m.mu.n());
    const auto a = m.mu.data();
    for (std::size_t i = 0; i < a.size(); ++i) xi_g.data()[i] = a[i] / weights_g_[i];
    std::vector<double> d(basis_.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = act_.pairing(m.gamma, basis_[j]) / weights_v_[j];
    return {std::move(xi_g), from_coordinates(d)};
  }

 private:
  A act_;
  std::vector<double> weights_g_;
  std::vector<double> weights_v_;
  std::vector<vector_type> basis_;
  std::vector<covector_type> dual_;
};

// Random positive weights in [lo, hi].
template <ActionPair A>
QuadraticLagrangian<A> random_lagrangian(const A& act, Sampler& sampler, double lo = 0.5, double hi = 2.0) {
  std::vector<double> wg(act.n() * act.n());
  std::vector<double> wv(act.vector_basis().size());
  for (double& w : wg) w = sampler.uniform(lo, hi);
  for (double& w : wv) w = sampler.uniform(lo, hi);
  return QuadraticLagrangian<A>(act, std::move(wg), std::move(wv));
}

template <ActionPair A>
double energy(const QuadraticLagrangian<A>& l, const Algebra<A>& xi) {
  return l.value(xi);
}

template <ActionPair A>
Coalgebra<A> ep_rhs_right(const Algebra<A>& xi, const QuadraticLagrangian<A>& l) {
  const A& act = l.instance();
  const Coalgebra<A> m = l.legendre(xi);
  Matrix mu_dot = -(coad_g(xi.xi_g, m.mu) + diamond(xi.xi_v, m.gamma, act));
  auto gamma_dot = -heart(xi.xi_g, m.gamma, act);
  return {std::move(mu_dot), std::move(gamma_dot)};
}

template <ActionPair A>
Coalgebra<A> ep_rhs_left(const Algebra<A>& xi, const QuadraticLagrangian<A>& l) {
  return -ep_rhs_right(xi, l);
}

template <ActionPair A>
Coalgebra<A> ep_rhs(Orientation o, const Algebra<A>& xi, const QuadraticLagrangian<A>& l) {
  return o == Orientation::right ? ep_rhs_right(xi, l) : ep_rhs_left(xi, l);
}

template <class V>
struct AdvectedRate {
  Matrix mu_dot;
  V v_dot;
};

// V treated as an advected parameter of l(xi_g, v):
//   mu' = -+(ad*_xi_g mu + v <> dl/dv)   (minus for right, plus for left)
//   v'  = xi_g.v + v.xi_g
template <ActionPair A>
AdvectedRate<typename A::vector_type> ep_rhs_advected(const Matrix& xi_g, const typename A::vector_type& v,
                                                      const QuadraticLagrangian<A>& l, Orientation o) {
  const A& act = l.instance();
  Matrix force = coad_g(xi_g, l.momentum_g(xi_g)) + diamond(v, l.momentum_v(v), act);
  if (o == Orientation::right) force *= -1.0;
  return {std::move(force), act.inf_left(xi_g, v) + act.inf_right(v, xi_g)};
}

template <class V>
struct GroupTangent {
  Matrix g_dot;
  V v_dot;
};

// Tangent of right translation by `at` applied to xi.
template <ActionPair A>
GroupTangent<typename A::vector_type> reconstruct_rhs(const Group<A>& at, const Algebra<A>& xi, const A& act) {
  return {xi.xi_g * at.g, act.inf_left(xi.xi_g, at.v) + act.right_act(xi.xi_v, at.g)};
}

// Tangent of left translation by `at` applied to xi.
template <ActionPair A>
GroupTangent<typename A::vector_type> reconstruct_rhs_left(const Group<A>& at, const Algebra<A>& xi,
                                                           const A& act) {
  return {at.g * xi.xi_g, act.left_act(at.g, xi.xi_v) + act.inf_right(at.v, xi.xi_g)};
}

// (g', v') . (g, v)^-1, the exact inverse of reconstruct_rhs.
template <ActionPair A>
Algebra<A> right_trivialize(const GroupTangent<typename A::vector_type>& velocity, const Group<A>& at, const A& act,
                            const Tolerances& tol = {}) {
  const Matrix g_inv = mat_inverse(at.g, tol);
  Matrix xi_g = velocity.g_dot * g_inv;
  auto xi_v = act.right_act(velocity.v_dot - act.inf_left(xi_g, at.v), g_inv);
  return {std::move(xi_g), std::move(xi_v)};
}

// (g, v)^-1 . (g', v'), the exact inverse of reconstruct_rhs_left.
template <ActionPair A>
Algebra<A> left_trivialize(const GroupTangent<typename A::vector_type>& velocity, const Group<A>& at, const A& act,
                           const Tolerances& tol = {}) {
  const Matrix g_inv = mat_inverse(at.g, tol);
  Matrix xi_g = g_inv * velocity.g_dot;
  auto xi_v = act.left_act(g_inv, velocity.v_dot - act.inf_right(at.v, xi_g));
  return {std::move(xi_g), std::move(xi_v)};
}

// Variation of the right-trivialized velocity induced by delta(g, v) = eta.(g, v):
//   (eta_g' - [xi_g, eta_g],
//    eta_v' + eta_g.xi_v - xi_v.eta_g + eta_v.xi_g - xi_g.eta_v)
template <ActionPair A>
Algebra<A> induced_variation(const Algebra<A>& xi, const Algebra<A>& eta, const Algebra<A>& eta_dot, const A& act) {
  Matrix dg = eta_dot.xi_g - commutator(xi.xi_g, eta.xi_g);
  auto dv = eta_dot.xi_v + act.inf_left(eta.xi_g, xi.xi_v) - act.inf_right(xi.xi_v, eta.xi_g) +
            act.inf_right(eta.xi_v, xi.xi_g) - act.inf_left(xi.xi_g, eta.xi_v);
  return {std::move(dg), std::move(dv)};
}

// Classical fixed-step RK4 for any state closed under + and scalar *.
template <class State, class Rhs>
State rk4_step(const Rhs& rhs, const State& y, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("rk4_step: step must be positive");
  const State k1 = rhs(t, y);
  const State k2 = rhs(t + 0.5 * h, y + (0.5 * h) * k1);
  const State k3 = rhs(t + 0.5 * h, y + (0.5 * h) * k2);
  const State k4 = rhs(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Spatial momentum transported by the group trajectory. For right-invariant
// flows <J, zeta> = <m, Ad_a zeta>; for left-invariant flows the transport is
// by a^-1. Both are constant along exact solutions.
template <ActionPair A>
Coalgebra<A> noether_momentum(const Group<A>& a, const Coalgebra<A>& m, const A& act, Orientation o,
                              const Tolerances& tol = {}) {
  if (o == Orientation::right) return coadjoint(a, m, act, tol);
  return coadjoint(inverse(a, act, tol), m, act, tol);
}

template <class V, class C>
struct TrajectorySample {
  double t = 0.0;
  GroupElement<V> group;
  AlgebraElement<V> algebra;
  CoalgebraElement<C> momenta;
  double energy = 0.0;
  double noether_residual = 0.0;
};

template <ActionPair A>
struct Trajectory {
  using Sample = TrajectorySample<typename A::vector_type, typename A::covector_type>;

  double step = 0.0;
  std::vector<Sample> samples;

  double max_energy_drift() const {
    double worst = 0.0;
    for (const auto& s : samples) worst = std::max(worst, std::abs(s.energy - samples.front().energy));
    return worst;
  }
  double max_noether_residual() const {
    double worst = 0.0;
    for (const auto& s : samples) worst = std::max(worst, s.noether_residual);
    return worst;
  }
  std::vector<double> times() const {
    std::vector<double> t;
    t.reserve(samples.size());
    for (const auto& s : samples) t.push_back(s.t);
    return t;
  }
};

template <ActionPair A>
struct IntegrateConfig {
  Orientation orientation = Orientation::right;
  double h = 1e-2;
  std::size_t steps = 100;
  Algebra<A> xi0;
  std::optional<Group<A>> initial_group;  // identity when empty
  Tolerances tol{};
};

namespace detail {

template <ActionPair A>
struct FlowState {
  Coalgebra<A> m;
  Group<A> a;

  friend FlowState operator+(FlowState x, const FlowState& y) {
    x.m += y.m;
    x.a.g += y.a.g;
    x.a.v += y.a.v;
    return x;
  }
  friend FlowState operator*(double s, FlowState x) {
    x.m *= s;
    x.a.g *= s;
    x.a.v *= s;
    return x;
  }
};

template <ActionPair A>
struct AdvectedState {
  Matrix mu;
  Matrix g;
  typename A::vector_type v;

  friend AdvectedState operator+(AdvectedState x, const AdvectedState& y) {
    x.mu += y.mu;
    x.g += y.g;
    x.v += y.v;
    return x;
  }
  friend AdvectedState operator*(double s, AdvectedState x) {
    x.mu *= s;
    x.g *= s;
    x.v *= s;
    return x;
  }
};

inline void check_step_config(double h, std::size_t steps) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("integration step must be positive");
  if (steps < 1) throw std::invalid_argument("at least one integration step is required");
}

}  // namespace detail

// Integrates the coupled (momentum, reconstruction) system with RK4 from the
// initial group element (identity by default). xi is recovered from m through
// the inverse Legendre transform inside every stage.
template <ActionPair A>
Trajectory<A> integrate(const QuadraticLagrangian<A>& l, const IntegrateConfig<A>& cfg) {
  detail::check_step_config(cfg.h, cfg.steps);
  const A& act = l.instance();
  using State = detail::FlowState<A>;

  auto rhs = [&](double, const State& y) -> State {
    const Algebra<A> xi = l.inverse_legendre(y.m);
    const auto tangent = cfg.orientation == Orientation::right ? reconstruct_rhs(y.a, xi, act)
                                                               : reconstruct_rhs_left(y.a, xi, act);
    return State{ep_rhs(cfg.orientation, xi, l), Group<A>{tangent.g_dot, tangent.v_dot}};
  };

  Trajectory<A> traj;
  traj.step = cfg.h;
  traj.samples.reserve(cfg.steps + 1);

  State y{l.legendre(cfg.xi0), cfg.initial_group.value_or(identity(act))};
  std::optional<Coalgebra<A>> j0;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * cfg.h;
    typename Trajectory<A>::Sample s;
    s.t = t;
    s.group = y.a;
    s.algebra = l.inverse_legendre(y.m);
    s.momenta = y.m;
    s.energy = energy(l, s.algebra);
    try {
      const Coalgebra<A> j = noether_momentum(y.a, y.m, act, cfg.orientation, cfg.tol);
      if (!j0) j0 = j;
      s.noether_residual = distance(j, *j0);
    } catch (const SingularMatrix& e) {
      throw SingularTrajectory(k, e.determinant());
    }
    traj.samples.push_back(std::move(s));
    if (k == cfg.steps) break;
    y = rk4_step(rhs, y, t, cfg.h);
  }
  return traj;
}

template <ActionPair A>
struct AdvectedConfig {
  Orientation orientation = Orientation::right;
  double h = 1e-2;
  std::size_t steps = 100;
  Matrix xi_g0;
  typename A::vector_type v0;
  Tolerances tol{};
};

// Advected-parameter flow. Samples store the parameter as group.v, xi_g as
// algebra.xi_g (algebra.xi_v is zero), momenta (mu, dl/dv), energy l(xi_g, v),
// and the drift of the transported gl-momentum Ad*_g mu, which the parameter
// coupling does not conserve in general.
template <ActionPair A>
Trajectory<A> integrate_advected(const QuadraticLagrangian<A>& l, const AdvectedConfig<A>& cfg) {
  detail::check_step_config(cfg.h, cfg.steps);
  const A& act = l.instance();
  using State = detail::AdvectedState<A>;
  const auto& wg = l.weights_g();

  auto xi_of = [&](const Matrix& mu) {
    Matrix xi(mu.n());
    for (std::size_t i = 0; i < xi.size(); ++i) xi.data()[i] = mu.data()[i] / wg[i];
    return xi;
  };
  auto rhs = [&](double, const State& y) -> State {
    const Matrix xi = xi_of(y.mu);
    auto rate = ep_rhs_advected(xi, y.v, l, cfg.orientation);
    Matrix g_dot = cfg.orientation == Orientation::right ? xi * y.g : y.g * xi;
    return State{std::move(rate.mu_dot), std::move(g_dot), std::move(rate.v_dot)};
  };

  Trajectory<A> traj;
  traj.step = cfg.h;
  traj.samples.reserve(cfg.steps + 1);
  State y{l.momentum_g(cfg.xi_g0), Matrix::identity(act.n()), cfg.v0};
  std::optional<Matrix> j0;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * cfg.h;
    typename Trajectory<A>::Sample s;
    s.t = t;
    s.group = Group<A>{y.g, y.v};
    s.algebra = Algebra<A>{xi_of(y.mu), act.zero_vector()};
    s.momenta = Coalgebra<A>{y.mu, l.momentum_v(y.v)};
    s.energy = l.value_g(s.algebra.xi_g) + l.value_v(y.v);
    try {
      const Group<A> transport{y.g, act.zero_vector()};
      const Coalgebra<A> m{y.mu, act.zero_covector()};
      const Matrix j =
          (cfg.orientation == Orientation::right ? coadjoint(transport, m, act, cfg.tol)
                                                 : coadjoint(inverse(transport, act, cfg.tol), m, act, cfg.tol))
              .mu;
      if (!j0) j0 = j;
      s.noether_residual = max_abs(j - *j0);
    } catch (const SingularMatrix& e) {
      throw SingularTrajectory(k, e.determinant());
    }
    traj.samples.push_back(std::move(s));
    if (k == cfg.steps) break;
    y = rk4_step(rhs, y, t, cfg.h);
  }
  return traj;
}

// eta(t) sampled on the trajectory's time grid, together with eta'(t).
// Both vanish at the endpoints.
template <ActionPair A>
struct VariationCurve {
  std::vector<Algebra<A>> eta;
  std::vector<Algebra<A>> eta_dot;
};

// eta(t) = sum_k c_k sin^3(k pi s), s = (t - t0) / (t1 - t0), with random
// algebra coefficients c_k. The cubic power makes eta' vanish at the ends too.
template <ActionPair A>
VariationCurve<A> random_variation_curve(const A& act, const std::vector<double>& times, Sampler& sampler,
                                         std::size_t modes = 3) {
  if (times.size() < 2) throw std::invalid_argument("variation curve needs at least two sample times");
  std::vector<Algebra<A>> coeff;
  for (std::size_t k = 0; k < modes; ++k) coeff.push_back(random_algebra(act, sampler));
  const double t0 = times.front();
  const double span = times.back() - t0;
  const double pi = std::numbers::pi;
  VariationCurve<A> curve;
  for (std::size_t i = 0; i < times.size(); ++i) {
    // Snap the endpoints so the boundary values are exactly zero.
    const double s = i == 0 ? 0.0 : (i + 1 == times.size() ? 1.0 : (times[i] - t0) / span);
    Algebra<A> eta = zero_algebra(act);
    Algebra<A> eta_dot = zero_algebra(act);
    for (std::size_t k = 0; k < modes; ++k) {
      const double w = static_cast<double>(k + 1) * pi;
      const double sn = (i == 0 || i + 1 == times.size()) ? 0.0 : std::sin(w * s);
      const double cs = std::cos(w * s);
      eta += (sn * sn * sn) * coeff[k];
      eta_dot += (3.0 * sn * sn * cs * w / span) * coeff[k];
    }
    curve.eta.push_back(std::move(eta));
    curve.eta_dot.push_back(std::move(eta_dot));
  }
  return curve;
}

struct ActionGradientReport {
  std::vector<double> coefficients;  // one per variation curve
  double max_abs = 0.0;
};

// First-order coefficient of the trapezoidal discrete action
//   S(eps) = sum_i w_i l(xi_i + eps dxi_i),   dxi = induced_variation(xi, eta, eta'),
// i.e. sum_i w_i <dl/dxi(xi_i), dxi_i>. It vanishes for EP solutions up to
// discretization error.
template <ActionPair A>
ActionGradientReport action_gradient_check(const Trajectory<A>& traj, const std::vector<VariationCurve<A>>& variations,
                                           const QuadraticLagrangian<A>& l) {
  const A& act = l.instance();
  const std::size_t count = traj.samples.size();
  if (count < 2) throw std::invalid_argument("trajectory needs at least two samples");
  ActionGradientReport report;
  for (const auto& curve : variations) {
    if (curve.eta.size() != count || curve.eta_dot.size() != count)
      throw DimensionMismatch("variation curve length does not match the trajectory");
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double w = (i == 0 || i + 1 == count) ? 0.5 * traj.step : traj.step;
      const auto& xi = traj.samples[i].algebra;
      const Algebra<A> dxi = induced_variation(xi, curve.eta[i], curve.eta_dot[i], act);
      acc += w * pairing(act, l.legendre(xi), dxi);
    }
    report.coefficients.push_back(acc);
    report.max_abs = std::max(report.max_abs, std::abs(acc));
  }
  return report;
}

}  // namespace csdp
