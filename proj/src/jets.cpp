#include "csdp/jets.hpp"

#include <stdexcept>

namespace csdp {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimensions differ");
}

}  // namespace

Jet2 Jet2::make(Matrix a1, Tensor12 a2, const Tolerances& tol) {
  require_same(a1.n(), a2.n(), "Jet2");
  if (a1.n() == 0) throw std::invalid_argument("Jet2: dimension must be positive");
  if (!a1.finite() || !a2.finite()) throw std::invalid_argument("Jet2: non-finite entries");
  if (a2.asymmetry() > tol.exact_tol) throw std::invalid_argument("Jet2: second derivative must be symmetric");
  mat_inverse(a1, tol);  // throws SingularMatrix
  return {std::move(a1), symmetrize(a2)};
}

Jet2 Jet2::identity(std::size_t n) {
  Tensor12 zero(n);
  zero.mark_symmetric();
  return {Matrix::identity(n), std::move(zero)};
}

PolyMap2 PolyMap2::identity(std::size_t n) {
  Tensor12 zero(n);
  zero.mark_symmetric();
  return {Matrix::identity(n), std::move(zero)};
}

std::vector<double> PolyMap2::operator()(const std::vector<double>& x) const {
  const std::size_t dim = n();
  require_same(x.size(), dim, "PolyMap2");
  std::vector<double> y(dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      acc += linear(k, i) * x[i];
      for (std::size_t j = 0; j < dim; ++j) acc += 0.5 * quadratic(k, i, j) * x[i] * x[j];
    }
    y[k] = acc;
  }
  return y;
}

Jet2 jet_compose(const Jet2& a, const Jet2& b) {
  require_same(a.n(), b.n(), "jet_compose");
  const std::size_t n = a.n();
  Tensor12 second(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
          acc += a.a1(k, l) * b.a2(l, i, j);
          for (std::size_t m = 0; m < n; ++m) acc += a.a2(k, l, m) * b.a1(l, i) * b.a1(m, j);
        }
        second(k, i, j) = acc;
        second(k, j, i) = acc;
      }
  second.mark_symmetric();
  return {a.a1 * b.a1, std::move(second)};
}

// Solving (A1, A2) o (B1, B2) = (I, 0) gives B1 = A1^-1 and
// B2^l_{ij} = -(A1^-1)^l_k A2^k_{pq} (A1^-1)^p_i (A1^-1)^q_j.
Jet2 jet_inverse(const Jet2& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  const Matrix inv = mat_inverse(a.a1, tol);
  Tensor12 second(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) acc += inv(l, k) * a.a2(k, p, q) * inv(p, i) * inv(q, j);
        second(l, i, j) = -acc;
        second(l, j, i) = -acc;
      }
  second.mark_symmetric();
  return {inv, std::move(second)};
}

GroupElement<Tensor12> jet_to_group(const Jet2& a) { return {a.a1, symmetrize(a.a2)}; }

Jet2 group_to_jet(const GroupElement<Tensor12>& e) { return {e.g, symmetrize(e.v)}; }

Jet2 polymap_jet(const PolyMap2& p) { return {p.linear, symmetrize(p.quadratic)}; }

PolyMap2 jet_polymap(const Jet2& a) { return {a.a1, a.a2}; }

PolyMap2 polymap_compose_truncate(const PolyMap2& p, const PolyMap2& q) {
  require_same(p.n(), q.n(), "polymap_compose_truncate");
  const std::size_t n = p.n();

  // Components of q as polynomials in x.
  std::vector<TruncatedPoly2> inner;
  inner.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    TruncatedPoly2 y(n);
    for (std::size_t a = 0; a < n; ++a) {
      y += q.linear(l, a) * TruncatedPoly2::variable(n, a);
      for (std::size_t b = 0; b < n; ++b)
        y += (0.5 * q.quadratic(l, a, b)) * (TruncatedPoly2::variable(n, a) * TruncatedPoly2::variable(n, b));
    }
    inner.push_back(std::move(y));
  }

  PolyMap2 out{Matrix(n), Tensor12(n)};
  for (std::size_t k = 0; k < n; ++k) {
    TruncatedPoly2 z(n);
    for (std::size_t l = 0; l < n; ++l) {
      z += p.linear(k, l) * inner[l];
      for (std::size_t m = 0; m < n; ++m) z += (0.5 * p.quadratic(k, l, m)) * (inner[l] * inner[m]);
    }
    for (std::size_t a = 0; a < n; ++a) {
      out.linear(k, a) = z.linear_term(a);
      // Coefficient of x_a x_b is A2_ab for a < b and A2_aa / 2 on the diagonal.
      out.quadratic(k, a, a) = 2.0 * z.quadratic_term(a, a);
      for (std::size_t b = a + 1; b < n; ++b) {
        out.quadratic(k, a, b) = z.quadratic_term(a, b);
        out.quadratic(k, b, a) = z.quadratic_term(a, b);
      }
    }
  }
  out.quadratic.mark_symmetric();
  return out;
}

double distance(const Jet2& a, const Jet2& b) {
  return std::max(max_abs(a.a1 - b.a1), max_abs(a.a2 - b.a2));
}

TruncatedPoly2::TruncatedPoly2(std::size_t n) : n_(n), lin_(n, 0.0), quad_(n * (n + 1) / 2, 0.0) {}

TruncatedPoly2 TruncatedPoly2::constant(std::size_t n, double c) {
  TruncatedPoly2 p(n);
  p.c0_ = c;
  return p;
}

TruncatedPoly2 TruncatedPoly2::variable(std::size_t n, std::size_t a) {
  TruncatedPoly2 p(n);
  p.lin_.at(a) = 1.0;
  return p;
}

std::size_t TruncatedPoly2::quad_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  if (b >= n_) throw std::out_of_range("TruncatedPoly2: variable index out of range");
  // Row-major upper triangle.
  return a * n_ - a * (a + 1) / 2 + b;
}

double TruncatedPoly2::quadratic_term(std::size_t a, std::size_t b) const { return quad_[quad_index(a, b)]; }

TruncatedPoly2& TruncatedPoly2::operator+=(const TruncatedPoly2& o) {
  require_same(n_, o.n_, "TruncatedPoly2");
  c0_ += o.c0_;
  for (std::size_t a = 0; a < n_; ++a) lin_[a] += o.lin_[a];
  for (std::size_t p = 0; p < quad_.size(); ++p) quad_[p] += o.quad_[p];
  return *this;
}

TruncatedPoly2& TruncatedPoly2::operator*=(double s) {
  c0_ *= s;
  for (double& c : lin_) c *= s;
  for (double& c : quad_) c *= s;
  return *this;
}

TruncatedPoly2 operator*(const TruncatedPoly2& a, const TruncatedPoly2& b) {
  require_same(a.n_, b.n_, "TruncatedPoly2");
  const std::size_t n = a.n_;
  TruncatedPoly2 out(n);
  out.c0_ = a.c0_ * b.c0_;
  for (std::size_t i = 0; i < n; ++i) out.lin_[i] = a.c0_ * b.lin_[i] + b.c0_ * a.lin_[i];
  for (std::size_t p = 0; p < out.quad_.size(); ++p) out.quad_[p] = a.c0_ * b.quad_[p] + b.c0_ * a.quad_[p];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.quad_[out.quad_index(i, j)] += a.lin_[i] * b.lin_[j];
  return out;
}

}  // namespace csdp
