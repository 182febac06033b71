#pragma once

// 2-jets at the origin of maps R^n -> R^n that fix the origin.
//
// A jet is (A1, A2) with A1 the Jacobian and A2^k_{ij} the raw second partial
// d^2 phi^k / dx_i dx_j (no 1/2 factor). Composition follows the chain rule:
//   (A1, A2) o (B1, B2) = (A1 B1, A1 B2 + A2 (B1 x B1)).

#include <vector>

#include "csdp/algebra.hpp"
#include "csdp/core.hpp"
#include "csdp/instances.hpp"

namespace csdp {

struct Jet2 {
  Matrix a1;
  Tensor12 a2;  // symmetric in its covariant slots

  // Validates dimensions, invertibility of a1 and symmetry of a2; a2 is
  // symmetrized when its asymmetry is within tol.exact_tol.
  static Jet2 make(Matrix a1, Tensor12 a2, const Tolerances& tol = {});
  static Jet2 identity(std::size_t n);

  std::size_t n() const noexcept { return a1.n(); }
};

// phi(x) = linear x + 1/2 quadratic(x, x)
struct PolyMap2 {
  Matrix linear;
  Tensor12 quadratic;

  static PolyMap2 identity(std::size_t n);

  std::size_t n() const noexcept { return linear.n(); }
  std::vector<double> operator()(const std::vector<double>& x) const;
};

Jet2 jet_compose(const Jet2& a, const Jet2& b);
Jet2 jet_inverse(const Jet2& a, const Tolerances& tol = {});

GroupElement<Tensor12> jet_to_group(const Jet2& a);
Jet2 group_to_jet(const GroupElement<Tensor12>& e);

Jet2 polymap_jet(const PolyMap2& p);
PolyMap2 jet_polymap(const Jet2& a);

// p o q expanded with truncated polynomial arithmetic and cut at degree two.
PolyMap2 polymap_compose_truncate(const PolyMap2& p, const PolyMap2& q);

double distance(const Jet2& a, const Jet2& b);

// Polynomial of degree <= 2 in n variables with monomial coefficients:
// constant, x_a, and x_a x_b for a <= b. Products drop degree >= 3.
class TruncatedPoly2 {
 public:
  explicit TruncatedPoly2(std::size_t n);
  static TruncatedPoly2 constant(std::size_t n, double c);
  static TruncatedPoly2 variable(std::size_t n, std::size_t a);

  std::size_t n() const noexcept { return n_; }
  double constant_term() const noexcept { return c0_; }
  double linear_term(std::size_t a) const { return lin_.at(a); }
  double quadratic_term(std::size_t a, std::size_t b) const;

  TruncatedPoly2& operator+=(const TruncatedPoly2& o);
  TruncatedPoly2& operator*=(double s);
  friend TruncatedPoly2 operator+(TruncatedPoly2 a, const TruncatedPoly2& b) { return a += b; }
  friend TruncatedPoly2 operator*(double s, TruncatedPoly2 a) { return a *= s; }
  friend TruncatedPoly2 operator*(const TruncatedPoly2& a, const TruncatedPoly2& b);

 private:
  std::size_t quad_index(std::size_t a, std::size_t b) const;

  std::size_t n_;
  double c0_ = 0.0;
  std::vector<double> lin_;
  std::vector<double> quad_;
};

}  // namespace csdp
