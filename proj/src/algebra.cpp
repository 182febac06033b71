#include "csdp/algebra.hpp"

#include <cmath>
#include <utility>

namespace csdp {

namespace {

void require_same(const Matrix& a, const Matrix& b, const char* what) {
  if (a.n() != b.n()) throw DimensionMismatch(std::string(what) + ": matrix dimensions differ");
}

double norm1(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.n(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i) col += std::abs(a(i, j));
    worst = std::max(worst, col);
  }
  return worst;
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : Matrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("matrix literal must be square");
    std::size_t j = 0;
    for (double x : row) (*this)(i, j++) = x;
    ++i;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw std::out_of_range("matrix unit index out of range");
  Matrix m(n);
  m(i, j) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const noexcept {
  double worst = 0.0;
  for (double x : entries_) worst = std::max(worst, std::abs(x));
  return worst;
}

bool Matrix::finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double x) { return std::isfinite(x); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same(*this, other, "matrix addition");
  for (std::size_t p = 0; p < entries_.size(); ++p) entries_[p] += other.entries_[p];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same(*this, other, "matrix subtraction");
  for (std::size_t p = 0; p < entries_.size(); ++p) entries_[p] -= other.entries_[p];
  return *this;
}

Matrix& Matrix::operator*=(double s) noexcept {
  for (double& x : entries_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(double s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same(a, b, "mat_mul");
  const std::size_t n = a.n();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

struct Elimination {
  Matrix inverse;
  double det;
};

// Gauss-Jordan with partial pivoting on [a | I].
Elimination eliminate(const Matrix& a) {
  const std::size_t n = a.n();
  Matrix lu = a;
  Matrix inv = Matrix::identity(n);
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == 0.0) return {inv, 0.0};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu(pivot, j), lu(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
      det = -det;
    }
    const double p = lu(col, col);
    det *= p;
    for (std::size_t j = 0; j < n; ++j) {
      lu(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = lu(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        lu(r, j) -= f * lu(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return {inv, det};
}

}  // namespace

double determinant(const Matrix& a) { return eliminate(a).det; }

Matrix mat_inverse(const Matrix& a, const Tolerances& tol) {
  if (a.n() == 0) throw DimensionMismatch("mat_inverse: empty matrix");
  auto [inv, det] = eliminate(a);
  const double threshold = tol.sing_tol * std::pow(a.max_abs(), static_cast<double>(a.n()));
  if (!(std::abs(det) > threshold)) {
    throw SingularMatrix("matrix is numerically singular (|det| = " + std::to_string(std::abs(det)) + ")",
                         det);
  }
  return inv;
}

Matrix mat_exp(const Matrix& x) {
  if (!x.finite()) throw std::invalid_argument("mat_exp: non-finite input");
  const std::size_t n = x.n();
  const double norm = norm1(x);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix a = std::ldexp(1.0, -squarings) * x;

  // ||a||_1 <= 1/2, so 30 terms is far past double precision.
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * mat_mul(term, a);
    sum += term;
    if (term.max_abs() <= 1e-18 * sum.max_abs()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = mat_mul(sum, sum);
  return sum;
}

double trace_pairing(const Matrix& a, const Matrix& b) {
  require_same(a, b, "trace_pairing");
  double acc = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) acc += a.data()[p] * b.data()[p];
  return acc;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return mat_mul(a, b) - mat_mul(b, a); }

double tensor_pairing(const Tensor21& alpha, const Tensor12& t) {
  if (alpha.n() != t.n()) throw DimensionMismatch("tensor_pairing: dimensions differ");
  double acc = 0.0;
  const auto a = alpha.data();
  const auto b = t.data();
  for (std::size_t p = 0; p < a.size(); ++p) acc += a[p] * b[p];
  return acc;
}

std::size_t basis_size(Space space, std::size_t n) {
  switch (space) {
    case Space::gl:
    case Space::mat:
      return n * n;
    case Space::t12:
      return n * n * n;
    case Space::s12:
      return n * n * (n + 1) / 2;
  }
  return 0;
}

std::vector<Matrix> matrix_basis(std::size_t n) {
  std::vector<Matrix> basis;
  basis.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back(Matrix::unit(n, i, j));
  return basis;
}

namespace {

template <class Variance>
std::vector<Tensor3<Variance>> unit_tensors(std::size_t n) {
  std::vector<Tensor3<Variance>> basis;
  basis.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) basis.push_back(Tensor3<Variance>::unit(n, i, j, k));
  return basis;
}

}  // namespace

std::vector<Tensor12> t12_basis(std::size_t n) { return unit_tensors<Contravariant1Covariant2>(n); }

std::vector<Tensor21> t12_dual_basis(std::size_t n) { return unit_tensors<Covariant1Contravariant2>(n); }

std::vector<Tensor12> s12_basis(std::size_t n) {
  std::vector<Tensor12> basis;
  basis.reserve(basis_size(Space::s12, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) basis.push_back(symmetrize(Tensor12::unit(n, i, j, k)));
  return basis;
}

std::vector<Tensor21> s12_dual_basis(std::size_t n) {
  std::vector<Tensor21> basis;
  basis.reserve(basis_size(Space::s12, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Tensor21 dual(n);
        dual(i, j, k) = 1.0;
        dual(i, k, j) = 1.0;
        dual.mark_symmetric();
        basis.push_back(std::move(dual));
      }
  return basis;
}

}  // namespace csdp
