#include <cmath>

#include "csdp/dynamics.hpp"
#include "csdp/instances.hpp"
#include "doctest.h"

using namespace csdp;

namespace {

constexpr double tol = 1e-10;

using Gm = GlMatInstance;
using Gt = GlT12Instance;

template <class A>
Algebra<A> scaled_algebra(const A& act, Sampler& s, double scale) {
  auto xi = random_algebra(act, s);
  xi *= scale;
  return xi;
}

template <class A>
Trajectory<A> run(const QuadraticLagrangian<A>& l, const Algebra<A>& xi0, double h, std::size_t steps,
                  Orientation o = Orientation::right) {
  IntegrateConfig<A> cfg;
  cfg.orientation = o;
  cfg.h = h;
  cfg.steps = steps;
  cfg.xi0 = xi0;
  return integrate(l, cfg);
}

}  // namespace

TEST_CASE("legendre transform") {
  Sampler s(1);
  const Gt act(2, true);
  const auto unit = QuadraticLagrangian<Gt>::unit(act);
  const auto l = random_lagrangian(act, s);
  for (int k = 0; k < 10; ++k) {
    const auto xi = random_algebra(act, s);
    CHECK(distance(l.inverse_legendre(l.legendre(xi)), xi) <= tol);
    const auto m = unit.legendre(xi);
    const auto basis = act.vector_basis();
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(act.pairing(m.gamma, basis[j]) == doctest::Approx(unit.coordinates(xi.xi_v)[j]));
    CHECK(m.mu == xi.xi_g);
    // Euler identity for quadratic forms.
    CHECK(pairing(act, l.legendre(xi), xi) - l.value(xi) == doctest::Approx(l.value(xi)));
    CHECK(l.legendre(xi).gamma.symmetric());
    CHECK(l.inverse_legendre(l.legendre(xi)).xi_v.symmetric());
  }
  CHECK_THROWS_AS(QuadraticLagrangian<Gt>(act, {1, 1, 1}, std::vector<double>(6, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticLagrangian<Gt>(act, {1, 1, 1, -1}, std::vector<double>(6, 1.0)), std::invalid_argument);
}

TEST_CASE("energy examples") {
  const Gm act(2);
  const auto l = QuadraticLagrangian<Gm>::unit(act);
  CHECK(energy(l, zero_algebra(act)) == 0.0);
  CHECK(energy(l, Algebra<Gm>{Matrix::unit(2, 0, 1), Matrix(2)}) == 0.5);
}

TEST_CASE("EP right-hand sides") {
  Sampler s(2);
  const Gm act(2);
  const auto l = random_lagrangian(act, s);
  CHECK(max_abs(ep_rhs_right(zero_algebra(act), l)) == 0.0);
  CHECK(max_abs(ep_rhs_left(zero_algebra(act), l)) == 0.0);
  for (int k = 0; k < 20; ++k) {
    const auto xi = random_algebra(act, s);
    const auto m = l.legendre(xi);
    const auto r = ep_rhs_right(xi, l);
    CHECK(distance(ep_rhs_left(xi, l), -r) == 0.0);
    const Matrix mu_dot = -(coad_g(xi.xi_g, m.mu) + glmat_diamond(xi.xi_v, m.gamma));
    const Matrix gamma_dot = -glmat_heart(xi.xi_g, m.gamma);
    CHECK(max_abs(r.mu - mu_dot) <= 1e-12);
    CHECK(max_abs(r.gamma - gamma_dot) <= 1e-12);
  }
  const Gt one(1, false);
  const auto l1 = random_lagrangian(one, s);
  CHECK(max_abs(ep_rhs_right(random_algebra(Gm(1), s), random_lagrangian(Gm(1), s))) == 0.0);
  // GL(1) x T12(1) is not abelian: the tensor slot scales with weight -1.
  CHECK(max_abs(ep_rhs_right(random_algebra(one, s), l1)) > 0.0);
}

TEST_CASE("reconstruction and trivialization") {
  Sampler s(3);
  const Gt act(2, false);
  const auto e = identity(act);
  const auto xi = random_algebra(act, s);
  const auto at_e = reconstruct_rhs(e, xi, act);
  CHECK(max_abs(at_e.g_dot - xi.xi_g) == 0.0);
  CHECK(max_abs(at_e.v_dot - xi.xi_v) == 0.0);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_group(act, s);
    const auto x = random_algebra(act, s);
    CHECK(distance(right_trivialize(reconstruct_rhs(a, x, act), a, act), x) <= tol);
    CHECK(distance(left_trivialize(reconstruct_rhs_left(a, x, act), a, act), x) <= tol);
    // The tangent of right translation agrees with differentiating exp(t xi) a.
    const auto fd = fd_derivative(
        [&](double t) {
          const auto c = compose(Group<Gt>{mat_exp(t * x.xi_g), t * x.xi_v}, a, act);
          return Algebra<Gt>{c.g, c.v};
        },
        0.0, 1e-5);
    const auto tangent = reconstruct_rhs(a, x, act);
    CHECK(max_abs(fd.xi_g - tangent.g_dot) <= 1e-5);
    CHECK(max_abs(fd.xi_v - tangent.v_dot) <= 1e-5);
  }
  // One-parameter subgroup.
  const Matrix x = s.matrix(2);
  const Group<Gt> a{mat_exp(0.7 * x), act.zero_vector()};
  const auto triv = right_trivialize(GroupTangent<Tensor12>{x * a.g, act.zero_vector()}, a, act);
  CHECK(max_abs(triv.xi_g - x) <= tol);
  CHECK(max_abs(triv.xi_v) <= tol);
}

TEST_CASE("decoupled subsystem: xi_v = 0 and v0 = 0 keep v identically zero") {
  Sampler s(4);
  const Gm act(2);
  const auto l = random_lagrangian(act, s);
  const Algebra<Gm> xi0{s.matrix(2), Matrix(2)};
  const auto traj = run(l, xi0, 1e-2, 100);
  for (const auto& sample : traj.samples) {
    CHECK(max_abs(sample.group.v) == 0.0);
    CHECK(max_abs(sample.algebra.xi_v) == 0.0);
  }
}

TEST_CASE("induced variation") {
  Sampler s(5);
  const Gt act(2, false);
  const auto xi = random_algebra(act, s);
  const auto eta = random_algebra(act, s), eta_dot = random_algebra(act, s);
  CHECK(max_abs(induced_variation(xi, zero_algebra(act), zero_algebra(act), act)) == 0.0);
  CHECK(distance(induced_variation(zero_algebra(act), eta, eta_dot, act), eta_dot) == 0.0);
  CHECK(distance(induced_variation(xi, eta, eta_dot, act), eta_dot - bracket(xi, eta, act)) <= tol);

  // Linearity in (eta, eta').
  const auto eta2 = random_algebra(act, s), eta2_dot = random_algebra(act, s);
  const auto lhs = induced_variation(xi, 2.0 * eta + eta2, 2.0 * eta_dot + eta2_dot, act);
  const auto rhs = 2.0 * induced_variation(xi, eta, eta_dot, act) + induced_variation(xi, eta2, eta2_dot, act);
  CHECK(distance(lhs, rhs) <= tol);

  // Classical reduction when V parts vanish.
  const Algebra<Gt> xg{xi.xi_g, act.zero_vector()}, eg{eta.xi_g, act.zero_vector()}, egd{eta_dot.xi_g, act.zero_vector()};
  const auto classical = induced_variation(xg, eg, egd, act);
  CHECK(max_abs(classical.xi_g - (eta_dot.xi_g - commutator(xi.xi_g, eta.xi_g))) <= tol);
  CHECK(max_abs(classical.xi_v) == 0.0);
}

TEST_CASE("induced variation matches a two-parameter finite difference") {
  Sampler s(6);
  const Gt act(2, false);
  const auto x = random_algebra(act, s);  // a(t) = exp-curve driven by x
  const auto w = act.random_vector(s);
  const auto g0 = random_group(act, s);
  const auto eta0 = random_algebra(act, s), eta1 = random_algebra(act, s);

  auto base = [&](double t) {
    return Group<Gt>{mat_exp(t * x.xi_g) * g0.g, g0.v + t * x.xi_v + (t * t) * w};
  };
  auto eta_at = [&](double t) { return eta0 + t * eta1; };
  auto family = [&](double t, double eps) {
    const auto e = eta_at(t);
    return compose(Group<Gt>{mat_exp(eps * e.xi_g), eps * e.xi_v}, base(t), act);
  };
  const double ht = 1e-4, he = 1e-4;
  auto xi_at = [&](double t, double eps) {
    const auto p = family(t + ht, eps), m = family(t - ht, eps);
    const GroupTangent<Tensor12> vel{(p.g - m.g) * (1.0 / (2 * ht)), (p.v - m.v) * (1.0 / (2 * ht))};
    return right_trivialize(vel, family(t, eps), act);
  };
  for (double t : {0.0, 0.3, 0.8}) {
    const auto delta = (xi_at(t, he) - xi_at(t, -he)) * (1.0 / (2 * he));
    const auto predicted = induced_variation(xi_at(t, 0.0), eta_at(t), eta1, act);
    CHECK(distance(delta, predicted) <= 1e-5);
  }
}

TEST_CASE("rk4_step") {
  const double x0 = 1.7;
  CHECK(rk4_step([](double, double) { return 0.0; }, x0, 0.0, 0.1) == x0);
  auto error = [](std::size_t steps) {
    double x = 1.0;
    const double h = 1.0 / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) x = rk4_step([](double, double y) { return y; }, x, k * h, h);
    return std::abs(x - std::exp(1.0));
  };
  for (std::size_t steps : {10u, 20u, 40u}) {
    const double ratio = error(steps) / error(2 * steps);
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
  }
  CHECK_THROWS(rk4_step([](double, double) { return 0.0; }, x0, 0.0, 0.0));
}

TEST_CASE("abelian flow keeps momenta constant") {
  Sampler s(7);
  const Gm act(1);
  const auto l = random_lagrangian(act, s);
  const auto traj = run(l, random_algebra(act, s), 1e-3, 2000);
  const auto& m0 = traj.samples.front().momenta;
  for (const auto& sample : traj.samples) CHECK(distance(sample.momenta, m0) <= 1e-12);
  CHECK(traj.max_energy_drift() <= 1e-12);
}

TEST_CASE("noether momentum at the identity is the body momentum") {
  Sampler s(8);
  const Gt act(2, true);
  const auto m = random_coalgebra(act, s);
  CHECK(distance(noether_momentum(identity(act), m, act, Orientation::right), m) <= 1e-14);
  CHECK(distance(noether_momentum(identity(act), m, act, Orientation::left), m) <= 1e-14);
}

TEST_CASE("conservation laws converge at fourth order") {
  Sampler s(9);
  const Gm act(2);
  const auto l = random_lagrangian(act, s, 1.0, 2.0);
  const auto xi0 = scaled_algebra(act, s, 1.5);
  for (Orientation o : {Orientation::right, Orientation::left}) {
    const auto coarse = run(l, xi0, 2e-2, 50, o);
    const auto fine = run(l, xi0, 1e-2, 100, o);
    CHECK(coarse.max_energy_drift() / fine.max_energy_drift() >= 12.0);
    CHECK(coarse.max_noether_residual() / fine.max_noether_residual() >= 12.0);
    CHECK(fine.max_noether_residual() <= 1e-6);
  }
}

TEST_CASE("the other coadjoint transport is not conserved") {
  Sampler s(10);
  const Gm act(2);
  const auto l = random_lagrangian(act, s, 1.0, 2.0);
  const auto traj = run(l, scaled_algebra(act, s, 1.0), 1e-2, 100, Orientation::right);
  CHECK(traj.max_noether_residual() <= 1e-6);
  const auto& first = traj.samples.front();
  const auto wrong0 = noether_momentum(first.group, first.momenta, act, Orientation::left);
  double drift = 0.0;
  for (const auto& sample : traj.samples)
    drift = std::max(drift, distance(noether_momentum(sample.group, sample.momenta, act, Orientation::left), wrong0));
  CHECK(drift > 1e-2);
}

TEST_CASE("singular reconstruction is reported with its step") {
  const Gm act(2);
  const auto l = QuadraticLagrangian<Gm>::unit(act);
  const Algebra<Gm> xi0{Matrix::diagonal({50.0, -50.0}), Matrix(2)};
  try {
    run(l, xi0, 1e-2, 100);
    FAIL("expected SingularTrajectory");
  } catch (const SingularTrajectory& e) {
    CHECK(e.step() > 0);
    CHECK(e.step() <= 100);
  }
  CHECK_THROWS_AS(run(l, xi0, 0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(run(l, xi0, 1e-2, 0), std::invalid_argument);
}

TEST_CASE("advected parameters") {
  Sampler s(11);
  const Gm one(1);
  const auto l1 = random_lagrangian(one, s);
  const auto zero_rate = ep_rhs_advected(Matrix(1), Matrix{{2.0}}, l1, Orientation::right);
  CHECK(max_abs(zero_rate.v_dot) == 0.0);
  CHECK(max_abs(zero_rate.mu_dot) == 0.0);

  // n = 1: v' = 2 xi v with xi constant.
  const double xi = 0.8, v0 = 1.3;
  auto error = [&](std::size_t steps) {
    AdvectedConfig<Gm> cfg;
    cfg.h = 1.0 / static_cast<double>(steps);
    cfg.steps = steps;
    cfg.xi_g0 = Matrix{{xi}};
    cfg.v0 = Matrix{{v0}};
    const auto traj = integrate_advected(l1, cfg);
    CHECK(traj.samples.back().algebra.xi_g(0, 0) == doctest::Approx(xi).epsilon(1e-14));
    return std::abs(traj.samples.back().group.v(0, 0) - v0 * std::exp(2.0 * xi));
  };
  const double e1 = error(20), e2 = error(40);
  CHECK(e1 / e2 > 14.0);

  // S12 stays symmetric.
  const Gt sym(2, true);
  const auto l2 = random_lagrangian(sym, s);
  AdvectedConfig<Gt> cfg;
  cfg.h = 1e-3;
  cfg.steps = 200;
  cfg.xi_g0 = s.matrix(2);
  cfg.v0 = sym.random_vector(s);
  const auto traj = integrate_advected(l2, cfg);
  for (const auto& sample : traj.samples) {
    CHECK(sample.group.v.symmetric());
    CHECK(sample.group.v.asymmetry() <= tol);
  }
}

TEST_CASE("action gradient vanishes along EP solutions") {
  Sampler s(12);
  const Gm act(2);
  const auto l = random_lagrangian(act, s, 1.0, 2.0);
  const auto xi0 = scaled_algebra(act, s, 1.0);
  double previous = 0.0;
  for (double h : {4e-3, 2e-3, 1e-3}) {
    const auto traj = run(l, xi0, h, static_cast<std::size_t>(std::lround(1.0 / h)));
    Sampler vs(99);
    std::vector<VariationCurve<Gm>> curves;
    for (int k = 0; k < 4; ++k) curves.push_back(random_variation_curve(act, traj.times(), vs));
    const auto report = action_gradient_check(traj, curves, l);
    if (previous > 0.0) CHECK(previous / report.max_abs >= 4.0);
    previous = report.max_abs;
  }
  CHECK(previous <= 1e-6);

  // Zero variation.
  const auto traj = run(l, xi0, 1e-2, 100);
  VariationCurve<Gm> zero;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    zero.eta.push_back(zero_algebra(act));
    zero.eta_dot.push_back(zero_algebra(act));
  }
  CHECK(action_gradient_check(traj, {zero}, l).max_abs == 0.0);
}
