#pragma once

// Concrete action pairs: GL(n) acting on Mat(n) by multiplication, and GL(n)
// acting on (1,2)-tensors by push-forward of the contravariant slot (left)
// and pull-back of both covariant slots (right), optionally restricted to the
// covariantly symmetric subspace S12.

#include <string>
#include <vector>

#include "csdp/algebra.hpp"
#include "csdp/core.hpp"
#include "csdp/random.hpp"

namespace csdp {

// A heart w = A^T w - w A^T
Matrix glmat_heart(const Matrix& a, const Matrix& w);
// v diamond w = v^T w - w v^T
Matrix glmat_diamond(const Matrix& v, const Matrix& w);

// (g.T)^l_{jk} = g^l_i T^i_{jk}
Tensor12 t12_left_act(const Matrix& g, const Tensor12& t);
// (T.g)^i_{jk} = T^i_{lm} g^l_j g^m_k
Tensor12 t12_right_act(const Tensor12& t, const Matrix& g);
// (xi.T)^l_{jk} = xi^l_i T^i_{jk}
Tensor12 t12_inf_left(const Matrix& xi, const Tensor12& t);
// (T.xi)^i_{jk} = T^i_{lk} xi^l_j + T^i_{jl} xi^l_k
Tensor12 t12_inf_right(const Tensor12& t, const Matrix& xi);

// Transpose of T -> xi.T - T.xi under full contraction:
//   (xi heart alpha)_i^{jk} = xi^l_i alpha_l^{jk} - alpha_i^{lk} xi^j_l - alpha_i^{jl} xi^k_l
Tensor21 t12_heart(const Matrix& xi, const Tensor21& alpha);
// Transpose of xi -> T.xi - xi.T:
//   (T diamond alpha)[i][j] = alpha_l^{jk} T^l_{ik} + alpha_l^{kj} T^l_{ki} - alpha_i^{lk} T^j_{lk}
Matrix t12_diamond(const Tensor12& t, const Tensor21& alpha);

class GlMatInstance {
 public:
  using vector_type = Matrix;
  using covector_type = Matrix;

  explicit GlMatInstance(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::string name() const { return "glmat"; }

  Matrix left_act(const Matrix& g, const Matrix& v) const { return g * v; }
  Matrix right_act(const Matrix& v, const Matrix& g) const { return v * g; }
  Matrix inf_left(const Matrix& xi, const Matrix& v) const { return xi * v; }
  Matrix inf_right(const Matrix& v, const Matrix& xi) const { return v * xi; }
  double pairing(const Matrix& alpha, const Matrix& v) const { return trace_pairing(alpha, v); }

  Matrix zero_vector() const { return Matrix(n_); }
  Matrix zero_covector() const { return Matrix(n_); }
  std::vector<Matrix> vector_basis() const { return matrix_basis(n_); }
  std::vector<Matrix> covector_basis() const { return matrix_basis(n_); }
  Matrix random_vector(Sampler& s) const { return s.matrix(n_); }
  Matrix random_covector(Sampler& s) const { return s.matrix(n_); }

  Matrix closed_form_heart(const Matrix& xi, const Matrix& alpha) const { return glmat_heart(xi, alpha); }
  Matrix closed_form_diamond(const Matrix& v, const Matrix& alpha) const { return glmat_diamond(v, alpha); }

 private:
  std::size_t n_;
};

class GlT12Instance {
 public:
  using vector_type = Tensor12;
  using covector_type = Tensor21;

  GlT12Instance(std::size_t n, bool symmetric_only);

  std::size_t n() const noexcept { return n_; }
  bool symmetric_only() const noexcept { return symmetric_only_; }
  std::string name() const { return symmetric_only_ ? "glt12_sym" : "glt12"; }

  Tensor12 left_act(const Matrix& g, const Tensor12& t) const { return t12_left_act(g, t); }
  Tensor12 right_act(const Tensor12& t, const Matrix& g) const { return t12_right_act(t, g); }
  Tensor12 inf_left(const Matrix& xi, const Tensor12& t) const { return t12_inf_left(xi, t); }
  Tensor12 inf_right(const Tensor12& t, const Matrix& xi) const { return t12_inf_right(t, xi); }
  double pairing(const Tensor21& alpha, const Tensor12& t) const { return tensor_pairing(alpha, t); }

  Tensor12 zero_vector() const;
  Tensor21 zero_covector() const;
  std::vector<Tensor12> vector_basis() const;
  std::vector<Tensor21> covector_basis() const;
  Tensor12 random_vector(Sampler& s) const;
  Tensor21 random_covector(Sampler& s) const;

  Tensor21 closed_form_heart(const Matrix& xi, const Tensor21& alpha) const { return t12_heart(xi, alpha); }
  Matrix closed_form_diamond(const Tensor12& t, const Tensor21& alpha) const { return t12_diamond(t, alpha); }

 private:
  std::size_t n_;
  bool symmetric_only_;
};

// Left action as in GlT12Instance, but the right action applies g^T to the
// contravariant slot. Both are genuine actions; they do not commute, so the
// composition law on G x V fails to be associative.
class NonCommutingT12Instance {
 public:
  using vector_type = Tensor12;
  using covector_type = Tensor21;

  explicit NonCommutingT12Instance(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::string name() const { return "broken"; }

  Tensor12 left_act(const Matrix& g, const Tensor12& t) const { return t12_left_act(g, t); }
  Tensor12 right_act(const Tensor12& t, const Matrix& g) const { return t12_left_act(g.transpose(), t); }
  Tensor12 inf_left(const Matrix& xi, const Tensor12& t) const { return t12_inf_left(xi, t); }
  Tensor12 inf_right(const Tensor12& t, const Matrix& xi) const { return t12_inf_left(xi.transpose(), t); }
  double pairing(const Tensor21& alpha, const Tensor12& t) const { return tensor_pairing(alpha, t); }

  Tensor12 zero_vector() const { return Tensor12(n_); }
  Tensor21 zero_covector() const { return Tensor21(n_); }
  std::vector<Tensor12> vector_basis() const { return t12_basis(n_); }
  std::vector<Tensor21> covector_basis() const { return t12_dual_basis(n_); }
  Tensor12 random_vector(Sampler& s) const { return s.t12(n_); }
  Tensor21 random_covector(Sampler& s) const { return s.t21(n_); }

 private:
  std::size_t n_;
};

static_assert(ActionPair<GlMatInstance>);
static_assert(ActionPair<GlT12Instance>);
static_assert(ActionPair<NonCommutingT12Instance>);

}  // namespace csdp
