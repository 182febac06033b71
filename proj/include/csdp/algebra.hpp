#pragma once

// Dense kernels for small matrices and (1,2)/(2,1)-tensors.
//
// Index conventions, used verbatim everywhere in the library:
//   Matrix    m(i, j)     row i, column j; for gl(n) elements m(i, j) = xi^i_j
//   Tensor12  t(i, j, k)  = T^i_{jk}   (one contravariant, two covariant slots)
//   Tensor21  a(i, j, k)  = alpha_i^{jk}
// Matrices pair with each other through the trace pairing Tr(a^T b) and
// tensors through full contraction alpha_i^{jk} T^i_{jk}, so the standard
// unit bases are self-dual in both cases.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csdp {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(const std::string& what, double determinant)
      : std::runtime_error(what), determinant_(determinant) {}

  double determinant() const noexcept { return determinant_; }

 private:
  double determinant_;
};

struct Tolerances {
  double exact_tol = 1e-10;  // algebraic identities
  double fd_tol = 1e-5;      // finite-difference comparisons
  double fd_step = 1e-5;     // central-difference step
  // Relative singularity guard: |det a| <= sing_tol * max|a_ij|^n is singular.
  double sing_tol = 1e-12;

  bool valid() const noexcept {
    return exact_tol > 0.0 && exact_tol < fd_tol && sing_tol > 0.0 && fd_step > 0.0;
  }
};

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix diagonal(std::initializer_list<double> d);
  static Matrix diagonal(std::span<const double> d);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }

  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * n_ + j]; }

  std::span<const double> data() const noexcept { return entries_; }
  std::span<double> data() noexcept { return entries_; }

  Matrix transpose() const;
  double max_abs() const noexcept;
  bool finite() const noexcept;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s) noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(double s, Matrix a);
Matrix operator*(Matrix a, double s);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);

// Gaussian elimination with partial pivoting. Throws SingularMatrix when
// |det a| <= tol.sing_tol * max|a_ij|^n.
Matrix mat_inverse(const Matrix& a, const Tolerances& tol = {});
double determinant(const Matrix& a);

// Scaling and squaring around a truncated Taylor series.
Matrix mat_exp(const Matrix& x);

double trace_pairing(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

struct Contravariant1Covariant2 {};
struct Covariant1Contravariant2 {};

// n x n x n array of components. The symmetric flag records that the last
// two slots are exactly interchangeable; it is only ever set after checking.
template <class Variance>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), components_(n * n * n, 0.0) {}

  static Tensor3 unit(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    Tensor3 t(n);
    t.components_.at(t.offset(i, j, k)) = 1.0;
    return t;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return components_.size(); }
  bool symmetric() const noexcept { return symmetric_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return components_[offset(i, j, k)];
  }
  // Mutable access drops the symmetric flag.
  double& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
    symmetric_ = false;
    return components_[offset(i, j, k)];
  }

  std::span<const double> data() const noexcept { return components_; }

  // Sets the flag; throws std::logic_error unless exactly symmetric.
  void mark_symmetric() {
    if (asymmetry() != 0.0) throw std::logic_error("tensor is not symmetric in its last two slots");
    symmetric_ = true;
  }

  double asymmetry() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          const double d = components_[offset(i, j, k)] - components_[offset(i, k, j)];
          worst = std::max(worst, std::abs(d));
        }
    return worst;
  }

  double max_abs() const noexcept {
    double worst = 0.0;
    for (double c : components_) worst = std::max(worst, std::abs(c));
    return worst;
  }

  bool finite() const noexcept {
    return std::all_of(components_.begin(), components_.end(), [](double c) { return std::isfinite(c); });
  }

  Tensor3& operator+=(const Tensor3& other) {
    check_same(other);
    for (std::size_t p = 0; p < components_.size(); ++p) components_[p] += other.components_[p];
    symmetric_ = symmetric_ && other.symmetric_;
    return *this;
  }
  Tensor3& operator-=(const Tensor3& other) {
    check_same(other);
    for (std::size_t p = 0; p < components_.size(); ++p) components_[p] -= other.components_[p];
    symmetric_ = symmetric_ && other.symmetric_;
    return *this;
  }
  Tensor3& operator*=(double s) noexcept {
    for (double& c : components_) c *= s;
    return *this;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator-(Tensor3 a) { return a *= -1.0; }
  friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
  friend Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * n_ + j) * n_ + k;
  }
  void check_same(const Tensor3& other) const {
    if (other.n_ != n_) throw DimensionMismatch("tensor dimensions differ");
  }

  std::size_t n_ = 0;
  std::vector<double> components_;
  bool symmetric_ = false;
};

using Tensor12 = Tensor3<Contravariant1Covariant2>;
using Tensor21 = Tensor3<Covariant1Contravariant2>;

double tensor_pairing(const Tensor21& alpha, const Tensor12& t);

// S^i_{jk} = (T^i_{jk} + T^i_{kj}) / 2, flagged symmetric.
template <class Variance>
Tensor3<Variance> symmetrize(const Tensor3<Variance>& t) {
  if (t.symmetric()) return t;
  const std::size_t n = t.n();
  Tensor3<Variance> s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const double avg = 0.5 * (t(i, j, k) + t(i, k, j));
        s(i, j, k) = avg;
        s(i, k, j) = avg;
      }
  s.mark_symmetric();
  return s;
}

inline double max_abs(const Matrix& m) noexcept { return m.max_abs(); }
template <class Variance>
double max_abs(const Tensor3<Variance>& t) noexcept {
  return t.max_abs();
}
inline double max_abs(double x) noexcept { return std::abs(x); }

enum class Space { gl, mat, t12, s12 };

std::size_t basis_size(Space space, std::size_t n);

// Matrix units E_ij in row-major order; a basis of gl(n) and of Mat(n).
std::vector<Matrix> matrix_basis(std::size_t n);
// Unit tensors E_ijk in [i][j][k] lexicographic order.
std::vector<Tensor12> t12_basis(std::size_t n);
std::vector<Tensor21> t12_dual_basis(std::size_t n);
// symmetrize(E_ijk) for j <= k, lexicographic in (i, j, k).
std::vector<Tensor12> s12_basis(std::size_t n);
// The symmetric (2,1)-tensors dual to s12_basis under tensor_pairing.
std::vector<Tensor21> s12_dual_basis(std::size_t n);

// Central difference (f(at + h) - f(at - h)) / 2h for any vector-valued f.
template <class F>
auto fd_derivative(F&& f, double at, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  auto forward = f(at + h);
  auto backward = f(at - h);
  return (forward - backward) * (1.0 / (2.0 * h));
}

}  // namespace csdp
