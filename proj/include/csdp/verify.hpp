#pragma once

// Randomized structure checks for one instance: action laws, group axioms,
// Lie algebra laws, adjoint tower, heart/diamond duality and the closed forms.

#include <cmath>
#include <cstdint>

#include "csdp/core.hpp"

namespace csdp {

template <class A>
concept HasClosedForms = requires(const A& act, const Matrix& xi, const typename A::vector_type& v,
                                  const typename A::covector_type& alpha) {
  { act.closed_form_heart(xi, alpha) } -> std::same_as<typename A::covector_type>;
  { act.closed_form_diamond(v, alpha) } -> std::same_as<Matrix>;
};

// Closed forms are compared with the basis-assembled operators at this level.
inline constexpr double closed_form_tol = 1e-12;

template <ActionPair A>
Report run_structure_suite(const A& act, std::uint64_t seed, std::size_t samples, const Tolerances& tol = {}) {
  Report report = verify_action_pair(act, seed, samples, tol);
  Sampler s(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto e = identity(act);
  const auto vb = act.vector_basis();
  const auto gb = matrix_basis(act.n());

  double assoc = 0, left_id = 0, right_id = 0, inv = 0;
  double antisym = 0, jacobi = 0, ad_fd = 0, big_ad_fd = 0, rep = 0;
  double heart_dual = 0, diamond_dual = 0, coad = 0, heart_cf = 0, diamond_cf = 0;

  for (std::size_t k = 0; k < samples; ++k) {
    const auto a = random_group(act, s), b = random_group(act, s), c = random_group(act, s);
    assoc = std::max(assoc, distance(compose(compose(a, b, act), c, act), compose(a, compose(b, c, act), act)));
    left_id = std::max(left_id, distance(compose(e, a, act), a));
    right_id = std::max(right_id, distance(compose(a, e, act), a));
    inv = std::max(inv, std::max(distance(compose(a, inverse(a, act, tol), act), e),
                                 distance(compose(inverse(a, act, tol), a, act), e)));

    const auto x = random_algebra(act, s), y = random_algebra(act, s), z = random_algebra(act, s);
    antisym = std::max(antisym, max_abs(bracket(x, y, act) + bracket(y, x, act)));
    jacobi = std::max(jacobi, max_abs(bracket(x, bracket(y, z, act), act) + bracket(y, bracket(z, x, act), act) +
                                      bracket(z, bracket(x, y, act), act)));
    rep = std::max(rep, distance(adjoint(a, adjoint(b, x, act, tol), act, tol), adjoint(compose(a, b, act), x, act, tol)));

    const auto fd_ad = fd_derivative(
        [&](double t) { return adjoint(Group<A>{mat_exp(t * x.xi_g), t * x.xi_v}, y, act, tol); }, 0.0, tol.fd_step);
    ad_fd = std::max(ad_fd, distance(fd_ad, bracket(x, y, act)));
    const auto fd_big = fd_derivative(
        [&](double t) {
          const auto d = conjugate(a, Group<A>{mat_exp(t * x.xi_g), t * x.xi_v}, act, tol);
          return Algebra<A>{d.g, d.v};
        },
        0.0, tol.fd_step);
    big_ad_fd = std::max(big_ad_fd, distance(fd_big, adjoint(a, x, act, tol)));

    // Duality over full bases.
    const Matrix xi = s.matrix(act.n());
    const auto alpha = act.random_covector(s);
    const auto v = act.random_vector(s);
    const auto mu = s.matrix(act.n());
    const auto h = heart(xi, alpha, act);
    const Matrix d = diamond(v, alpha, act);
    for (const auto& bv : vb)
      heart_dual = std::max(heart_dual, std::abs(act.pairing(h, bv) -
                                                 act.pairing(alpha, act.inf_left(xi, bv) - act.inf_right(bv, xi))));
    for (const auto& bg : gb) {
      diamond_dual = std::max(diamond_dual, std::abs(trace_pairing(d, bg) -
                                                     act.pairing(alpha, act.inf_right(v, bg) - act.inf_left(bg, v))));
      coad = std::max(coad, std::abs(trace_pairing(coad_g(xi, mu), bg) - trace_pairing(mu, commutator(xi, bg))));
    }
    if constexpr (HasClosedForms<A>) {
      heart_cf = std::max(heart_cf, max_abs(act.closed_form_heart(xi, alpha) - h));
      diamond_cf = std::max(diamond_cf, max_abs(act.closed_form_diamond(v, alpha) - d));
    }
  }

  report.add("adjoint.fd_conjugation", big_ad_fd, tol.fd_tol);
  report.add("adjoint.representation", rep, tol.exact_tol);
  report.add("bracket.antisymmetry", antisym, tol.exact_tol);
  report.add("bracket.fd_adjoint", ad_fd, tol.fd_tol);
  report.add("bracket.jacobi", jacobi, tol.exact_tol);
  report.add("duality.coadjoint", coad, tol.exact_tol);
  report.add("duality.diamond", diamond_dual, tol.exact_tol);
  report.add("duality.heart", heart_dual, tol.exact_tol);
  if constexpr (HasClosedForms<A>) {
    report.add("closed_form.diamond", diamond_cf, closed_form_tol);
    report.add("closed_form.heart", heart_cf, closed_form_tol);
  }
  report.add("group.associativity", assoc, tol.exact_tol);
  report.add("group.inverse", inv, tol.exact_tol);
  report.add("group.left_identity", left_id, tol.exact_tol);
  report.add("group.right_identity", right_id, tol.exact_tol);
  report.sort_by_name();
  return report;
}

}  // namespace csdp
