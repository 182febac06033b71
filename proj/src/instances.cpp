#include "csdp/instances.hpp"

namespace csdp {

namespace {

void require(bool same, const char* what) {
  if (!same) throw DimensionMismatch(std::string(what) + ": dimensions differ");
}

// Fills out(i, j, k) = f(i, j, k). When `mirror` is set only j <= k is
// evaluated and copied across, so the result is exactly symmetric and flagged.
template <class Out, class F>
Out fill(std::size_t n, bool mirror, F&& f) {
  Out out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = mirror ? j : 0; k < n; ++k) {
        const double value = f(i, j, k);
        out(i, j, k) = value;
        if (mirror) out(i, k, j) = value;
      }
  if (mirror) out.mark_symmetric();
  return out;
}

}  // namespace

Matrix glmat_heart(const Matrix& a, const Matrix& w) {
  require(a.n() == w.n(), "glmat_heart");
  const Matrix at = a.transpose();
  return at * w - w * at;
}

Matrix glmat_diamond(const Matrix& v, const Matrix& w) {
  require(v.n() == w.n(), "glmat_diamond");
  const Matrix vt = v.transpose();
  return vt * w - w * vt;
}

Tensor12 t12_left_act(const Matrix& g, const Tensor12& t) {
  require(g.n() == t.n(), "t12_left_act");
  const std::size_t n = t.n();
  return fill<Tensor12>(n, t.symmetric(), [&](std::size_t l, std::size_t j, std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += g(l, i) * t(i, j, k);
    return acc;
  });
}

Tensor12 t12_right_act(const Tensor12& t, const Matrix& g) {
  require(g.n() == t.n(), "t12_right_act");
  const std::size_t n = t.n();
  return fill<Tensor12>(n, t.symmetric(), [&](std::size_t i, std::size_t j, std::size_t k) {
    double acc = 0.0;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) acc += t(i, l, m) * g(l, j) * g(m, k);
    return acc;
  });
}

Tensor12 t12_inf_left(const Matrix& xi, const Tensor12& t) { return t12_left_act(xi, t); }

Tensor12 t12_inf_right(const Tensor12& t, const Matrix& xi) {
  require(xi.n() == t.n(), "t12_inf_right");
  const std::size_t n = t.n();
  return fill<Tensor12>(n, t.symmetric(), [&](std::size_t i, std::size_t j, std::size_t k) {
    double acc = 0.0;
    for (std::size_t l = 0; l < n; ++l) acc += t(i, l, k) * xi(l, j) + t(i, j, l) * xi(l, k);
    return acc;
  });
}

Tensor21 t12_heart(const Matrix& xi, const Tensor21& alpha) {
  require(xi.n() == alpha.n(), "t12_heart");
  const std::size_t n = alpha.n();
  return fill<Tensor21>(n, alpha.symmetric(), [&](std::size_t i, std::size_t j, std::size_t k) {
    double acc = 0.0;
    for (std::size_t l = 0; l < n; ++l)
      acc += xi(l, i) * alpha(l, j, k) - alpha(i, l, k) * xi(j, l) - alpha(i, j, l) * xi(k, l);
    return acc;
  });
}

Matrix t12_diamond(const Tensor12& t, const Tensor21& alpha) {
  require(t.n() == alpha.n(), "t12_diamond");
  const std::size_t n = t.n();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
          acc += alpha(l, j, k) * t(l, i, k) + alpha(l, k, j) * t(l, k, i) - alpha(i, l, k) * t(j, l, k);
      out(i, j) = acc;
    }
  return out;
}

GlMatInstance::GlMatInstance(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("instance dimension must be positive");
}

GlT12Instance::GlT12Instance(std::size_t n, bool symmetric_only) : n_(n), symmetric_only_(symmetric_only) {
  if (n == 0) throw std::invalid_argument("instance dimension must be positive");
}

Tensor12 GlT12Instance::zero_vector() const {
  Tensor12 z(n_);
  if (symmetric_only_) z.mark_symmetric();
  return z;
}

Tensor21 GlT12Instance::zero_covector() const {
  Tensor21 z(n_);
  if (symmetric_only_) z.mark_symmetric();
  return z;
}

std::vector<Tensor12> GlT12Instance::vector_basis() const {
  return symmetric_only_ ? s12_basis(n_) : t12_basis(n_);
}

std::vector<Tensor21> GlT12Instance::covector_basis() const {
  return symmetric_only_ ? s12_dual_basis(n_) : t12_dual_basis(n_);
}

Tensor12 GlT12Instance::random_vector(Sampler& s) const {
  Tensor12 t = s.t12(n_);
  return symmetric_only_ ? symmetrize(t) : t;
}

Tensor21 GlT12Instance::random_covector(Sampler& s) const {
  Tensor21 a = s.t21(n_);
  return symmetric_only_ ? symmetrize(a) : a;
}

NonCommutingT12Instance::NonCommutingT12Instance(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("instance dimension must be positive");
}

}  // namespace csdp
