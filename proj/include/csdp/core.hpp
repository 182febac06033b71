#pragma once

// Generic centered semi-direct product G x V with composition
//   (g1, v1)(g2, v2) = (g1 g2, g1.v2 + v1.g2)
// for a matrix group G acting on V from both sides through commuting actions.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csdp/algebra.hpp"
#include "csdp/random.hpp"

namespace csdp {

template <class A>
concept ActionPair = requires(const A& act, const Matrix& g, const typename A::vector_type& v,
                              const typename A::covector_type& alpha, Sampler& sampler) {
  typename A::vector_type;
  typename A::covector_type;
  { act.n() } -> std::convertible_to<std::size_t>;
  { act.left_act(g, v) } -> std::same_as<typename A::vector_type>;
  { act.right_act(v, g) } -> std::same_as<typename A::vector_type>;
  { act.inf_left(g, v) } -> std::same_as<typename A::vector_type>;
  { act.inf_right(v, g) } -> std::same_as<typename A::vector_type>;
  { act.pairing(alpha, v) } -> std::convertible_to<double>;
  { act.zero_vector() } -> std::same_as<typename A::vector_type>;
  { act.zero_covector() } -> std::same_as<typename A::covector_type>;
  // Bases of V and V*, dual to each other under pairing().
  { act.vector_basis() } -> std::same_as<std::vector<typename A::vector_type>>;
  { act.covector_basis() } -> std::same_as<std::vector<typename A::covector_type>>;
  { act.random_vector(sampler) } -> std::same_as<typename A::vector_type>;
  { act.random_covector(sampler) } -> std::same_as<typename A::covector_type>;
};

template <class V>
struct GroupElement {
  Matrix g;
  V v;
};

template <class V>
struct AlgebraElement {
  Matrix xi_g;
  V xi_v;

  AlgebraElement& operator+=(const AlgebraElement& o) {
    xi_g += o.xi_g;
    xi_v += o.xi_v;
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    xi_g -= o.xi_g;
    xi_v -= o.xi_v;
    return *this;
  }
  AlgebraElement& operator*=(double s) {
    xi_g *= s;
    xi_v *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }
};

template <class C>
struct CoalgebraElement {
  Matrix mu;
  C gamma;

  CoalgebraElement& operator+=(const CoalgebraElement& o) {
    mu += o.mu;
    gamma += o.gamma;
    return *this;
  }
  CoalgebraElement& operator-=(const CoalgebraElement& o) {
    mu -= o.mu;
    gamma -= o.gamma;
    return *this;
  }
  CoalgebraElement& operator*=(double s) {
    mu *= s;
    gamma *= s;
    return *this;
  }
  friend CoalgebraElement operator+(CoalgebraElement a, const CoalgebraElement& b) { return a += b; }
  friend CoalgebraElement operator-(CoalgebraElement a, const CoalgebraElement& b) { return a -= b; }
  friend CoalgebraElement operator-(CoalgebraElement a) { return a *= -1.0; }
  friend CoalgebraElement operator*(double s, CoalgebraElement a) { return a *= s; }
  friend CoalgebraElement operator*(CoalgebraElement a, double s) { return a *= s; }
};

template <ActionPair A>
using Group = GroupElement<typename A::vector_type>;
template <ActionPair A>
using Algebra = AlgebraElement<typename A::vector_type>;
template <ActionPair A>
using Coalgebra = CoalgebraElement<typename A::covector_type>;

template <class V>
double max_abs(const GroupElement<V>& a) {
  return std::max(max_abs(a.g), max_abs(a.v));
}
template <class V>
double max_abs(const AlgebraElement<V>& a) {
  return std::max(max_abs(a.xi_g), max_abs(a.xi_v));
}
template <class C>
double max_abs(const CoalgebraElement<C>& a) {
  return std::max(max_abs(a.mu), max_abs(a.gamma));
}

// Component-wise max distance; group elements are compared as pairs.
template <class V>
double distance(const GroupElement<V>& a, const GroupElement<V>& b) {
  return std::max(max_abs(a.g - b.g), max_abs(a.v - b.v));
}
template <class V>
double distance(const AlgebraElement<V>& a, const AlgebraElement<V>& b) {
  return max_abs(a - b);
}
template <class C>
double distance(const CoalgebraElement<C>& a, const CoalgebraElement<C>& b) {
  return max_abs(a - b);
}

template <ActionPair A>
double pairing(const A& act, const Coalgebra<A>& m, const Algebra<A>& xi) {
  return trace_pairing(m.mu, xi.xi_g) + act.pairing(m.gamma, xi.xi_v);
}

template <ActionPair A>
Group<A> identity(const A& act) {
  return {Matrix::identity(act.n()), act.zero_vector()};
}

template <ActionPair A>
Algebra<A> zero_algebra(const A& act) {
  return {Matrix(act.n()), act.zero_vector()};
}

template <ActionPair A>
Coalgebra<A> zero_coalgebra(const A& act) {
  return {Matrix(act.n()), act.zero_covector()};
}

template <ActionPair A>
Group<A> random_group(const A& act, Sampler& sampler) {
  Matrix g = sampler.group_matrix(act.n());
  return {std::move(g), act.random_vector(sampler)};
}

template <ActionPair A>
Algebra<A> random_algebra(const A& act, Sampler& sampler) {
  Matrix xi = sampler.matrix(act.n());
  return {std::move(xi), act.random_vector(sampler)};
}

template <ActionPair A>
Coalgebra<A> random_coalgebra(const A& act, Sampler& sampler) {
  Matrix mu = sampler.matrix(act.n());
  return {std::move(mu), act.random_covector(sampler)};
}

namespace detail {

template <ActionPair A>
void require_dims(const A& act, const Matrix& g) {
  if (g.n() != act.n()) throw DimensionMismatch("matrix dimension does not match the instance");
}

}  // namespace detail

template <ActionPair A>
Group<A> compose(const Group<A>& a, const Group<A>& b, const A& act) {
  detail::require_dims(act, a.g);
  detail::require_dims(act, b.g);
  return {a.g * b.g, act.left_act(a.g, b.v) + act.right_act(a.v, b.g)};
}

// (g^-1, -g^-1 . v . g^-1)
template <ActionPair A>
Group<A> inverse(const Group<A>& a, const A& act, const Tolerances& tol = {}) {
  detail::require_dims(act, a.g);
  Matrix g_inv = mat_inverse(a.g, tol);
  auto v = -act.left_act(g_inv, act.right_act(a.v, g_inv));
  return {std::move(g_inv), std::move(v)};
}

// AD_a(b) = a b a^-1.
template <ActionPair A>
Group<A> conjugate(const Group<A>& a, const Group<A>& b, const A& act, const Tolerances& tol = {}) {
  return compose(compose(a, b, act), inverse(a, act, tol), act);
}

// Ad_(g,v)(xi, u) = (g xi g^-1, (v.xi) g^-1 + g.u.g^-1 - (Ad_g xi).v.g^-1)
template <ActionPair A>
Algebra<A> adjoint(const Group<A>& a, const Algebra<A>& xi, const A& act, const Tolerances& tol = {}) {
  detail::require_dims(act, a.g);
  const Matrix g_inv = mat_inverse(a.g, tol);
  Matrix ad_g = a.g * xi.xi_g * g_inv;
  auto v = act.right_act(act.inf_right(a.v, xi.xi_g), g_inv) +
           act.right_act(act.left_act(a.g, xi.xi_v), g_inv) -
           act.right_act(act.inf_left(ad_g, a.v), g_inv);
  return {std::move(ad_g), std::move(v)};
}

// [(xi1, v1), (xi2, v2)] = ([xi1, xi2], (xi1.v2 + v1.xi2) - (xi2.v1 + v2.xi1))
template <ActionPair A>
Algebra<A> bracket(const Algebra<A>& x, const Algebra<A>& y, const A& act) {
  detail::require_dims(act, x.xi_g);
  detail::require_dims(act, y.xi_g);
  auto v = act.inf_left(x.xi_g, y.xi_v) + act.inf_right(x.xi_v, y.xi_g) - act.inf_left(y.xi_g, x.xi_v) -
           act.inf_right(y.xi_v, x.xi_g);
  return {commutator(x.xi_g, y.xi_g), std::move(v)};
}

// Coadjoint operator of gl(n) under the trace pairing: xi^T mu - mu xi^T.
Matrix coad_g(const Matrix& xi, const Matrix& mu);

// <xi heart alpha, v> = <alpha, xi.v - v.xi>, assembled over the basis of V.
template <ActionPair A>
typename A::covector_type heart(const Matrix& xi, const typename A::covector_type& alpha, const A& act) {
  detail::require_dims(act, xi);
  const auto basis = act.vector_basis();
  const auto dual = act.covector_basis();
  auto out = act.zero_covector();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double c = act.pairing(alpha, act.inf_left(xi, basis[j]) - act.inf_right(basis[j], xi));
    if (c != 0.0) out += c * dual[j];
  }
  return out;
}

// <v diamond alpha, xi> = <alpha, v.xi - xi.v>, assembled over gl(n).
template <ActionPair A>
Matrix diamond(const typename A::vector_type& v, const typename A::covector_type& alpha, const A& act) {
  const std::size_t n = act.n();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix e = Matrix::unit(n, i, j);
      out(i, j) = act.pairing(alpha, act.inf_right(v, e) - act.inf_left(e, v));
    }
  return out;
}

// Ad*_a m, defined by <Ad*_a m, zeta> = <m, Ad_a zeta> for all zeta in g x V.
template <ActionPair A>
Coalgebra<A> coadjoint(const Group<A>& a, const Coalgebra<A>& m, const A& act, const Tolerances& tol = {}) {
  const std::size_t n = act.n();
  Coalgebra<A> out = zero_coalgebra(act);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Algebra<A> e{Matrix::unit(n, i, j), act.zero_vector()};
      out.mu(i, j) = pairing(act, m, adjoint(a, e, act, tol));
    }
  const auto basis = act.vector_basis();
  const auto dual = act.covector_basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Algebra<A> e{Matrix(n), basis[k]};
    const double c = pairing(act, m, adjoint(a, e, act, tol));
    if (c != 0.0) out.gamma += c * dual[k];
  }
  return out;
}

struct CheckResult {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, double violation, double tolerance) {
    checks.push_back({std::move(name), violation, tolerance, violation <= tolerance});
  }
  void merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  void sort_by_name() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Runs the action laws on `samples` random draws: identity and compatibility
// for both actions, commutation of left and right, and agreement of the
// infinitesimal actions with finite differences of the group actions.
template <ActionPair A>
Report verify_action_pair(const A& act, std::uint64_t seed, std::size_t samples, const Tolerances& tol = {}) {
  Sampler sampler(seed);
  const std::size_t n = act.n();
  const Matrix e = Matrix::identity(n);
  double left_identity = 0, left_compat = 0, right_identity = 0, right_compat = 0, commute = 0;
  double inf_left_fd = 0, inf_right_fd = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix g = sampler.group_matrix(n);
    const Matrix h = sampler.group_matrix(n);
    const Matrix xi = sampler.matrix(n);
    const auto v = act.random_vector(sampler);

    left_identity = std::max(left_identity, max_abs(act.left_act(e, v) - v));
    right_identity = std::max(right_identity, max_abs(act.right_act(v, e) - v));
    left_compat = std::max(left_compat, max_abs(act.left_act(g, act.left_act(h, v)) - act.left_act(g * h, v)));
    right_compat =
        std::max(right_compat, max_abs(act.right_act(act.right_act(v, g), h) - act.right_act(v, g * h)));
    commute = std::max(commute, max_abs(act.right_act(act.left_act(g, v), h) - act.left_act(g, act.right_act(v, h))));

    const auto fd_left = fd_derivative([&](double t) { return act.left_act(mat_exp(t * xi), v); }, 0.0, tol.fd_step);
    const auto fd_right =
        fd_derivative([&](double t) { return act.right_act(v, mat_exp(t * xi)); }, 0.0, tol.fd_step);
    inf_left_fd = std::max(inf_left_fd, max_abs(fd_left - act.inf_left(xi, v)));
    inf_right_fd = std::max(inf_right_fd, max_abs(fd_right - act.inf_right(v, xi)));
  }
  Report report;
  report.add("action.commutation", commute, tol.exact_tol);
  report.add("action.inf_left_fd", inf_left_fd, tol.fd_tol);
  report.add("action.inf_right_fd", inf_right_fd, tol.fd_tol);
  report.add("action.left_compatibility", left_compat, tol.exact_tol);
  report.add("action.left_identity", left_identity, tol.exact_tol);
  report.add("action.right_compatibility", right_compat, tol.exact_tol);
  report.add("action.right_identity", right_identity, tol.exact_tol);
  return report;
}

}  // namespace csdp
