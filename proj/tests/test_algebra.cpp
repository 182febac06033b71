#include <cmath>
#include <numbers>

#include "csdp/algebra.hpp"
#include "csdp/random.hpp"
#include "doctest.h"

using namespace csdp;

namespace {

constexpr double tol = 1e-10;

Matrix taylor_series(const Matrix& x, int terms) {
  Matrix sum = Matrix::identity(x.n());
  Matrix term = Matrix::identity(x.n());
  for (int k = 1; k < terms; ++k) {
    term = (1.0 / k) * (term * x);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("mat_mul examples") {
  CHECK(Matrix::identity(2) * Matrix::identity(2) == Matrix::identity(2));
  CHECK(mat_mul(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)) == Matrix::unit(2, 0, 0));
  CHECK(Matrix::diagonal({2, 3}) * Matrix::diagonal({5, 7}) == Matrix::diagonal({10, 21}));
  CHECK_THROWS_AS(mat_mul(Matrix(2), Matrix(3)), DimensionMismatch);
}

TEST_CASE("mat_mul is associative") {
  Sampler s(11);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = s.matrix(3), b = s.matrix(3), c = s.matrix(3);
    CHECK(max_abs((a * b) * c - a * (b * c)) <= tol);
  }
}

TEST_CASE("mat_inverse") {
  CHECK(mat_inverse(Matrix::identity(2)) == Matrix::identity(2));
  CHECK(max_abs(mat_inverse(Matrix::diagonal({2, 4})) - Matrix::diagonal({0.5, 0.25})) == 0.0);
  Sampler s(5);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = s.group_matrix(3);
    CHECK(max_abs(a * mat_inverse(a) - Matrix::identity(3)) <= tol);
  }
  CHECK_THROWS_AS(mat_inverse(Matrix({{1, 2}, {2, 4}})), SingularMatrix);
  CHECK_THROWS_AS(mat_inverse(Matrix(2)), SingularMatrix);
  CHECK(determinant(Matrix::diagonal({2, 3, 4})) == doctest::Approx(24.0));

  // Large entries with tiny relative volume are rejected.
  try {
    mat_inverse(Matrix::diagonal({1e7, 1e-7}));
    FAIL("expected SingularMatrix");
  } catch (const SingularMatrix& e) {
    CHECK(e.determinant() == doctest::Approx(1.0));
  }
}

TEST_CASE("mat_exp examples") {
  CHECK(mat_exp(Matrix(2)) == Matrix::identity(2));
  const Matrix d = mat_exp(Matrix::diagonal({std::numbers::ln2, 0.0}));
  CHECK(max_abs(d - Matrix::diagonal({2.0, 1.0})) <= 1e-13);
  const Matrix nil = mat_exp(Matrix::unit(2, 0, 1));
  CHECK(max_abs(nil - (Matrix::identity(2) + Matrix::unit(2, 0, 1))) <= 1e-13);
}

TEST_CASE("mat_exp matches the Taylor series and inverts") {
  Sampler s(3);
  for (int i = 0; i < 30; ++i) {
    const Matrix x = 0.5 * s.matrix(3);
    CHECK(max_abs(mat_exp(x) - taylor_series(x, 40)) <= 1e-13);
    const Matrix y = 2.0 * s.matrix(2);
    CHECK(max_abs(mat_exp(y) * mat_exp(-1.0 * y) - Matrix::identity(2)) <= tol);
  }
  // Commuting case: exp of a rotation generator.
  const Matrix j({{0, -1}, {1, 0}});
  const Matrix r = mat_exp(std::numbers::pi / 3 * j);
  CHECK(r(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r(1, 0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
}

TEST_CASE("trace pairing") {
  CHECK(trace_pairing(Matrix::identity(2), Matrix::identity(2)) == 2.0);
  CHECK(trace_pairing(Matrix::unit(2, 0, 1), Matrix::unit(2, 0, 1)) == 1.0);
  CHECK(trace_pairing(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)) == 0.0);
  Sampler s(9);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = s.matrix(3), b = s.matrix(3);
    CHECK(trace_pairing(a, b) == doctest::Approx(trace_pairing(b, a)));
    CHECK(trace_pairing(a, a) > 0.0);
    CHECK(trace_pairing(a, b) == doctest::Approx(trace_pairing(Matrix::identity(3), a.transpose() * b)));
  }
}

TEST_CASE("tensor pairing") {
  CHECK(tensor_pairing(Tensor21(2), Sampler(1).t12(2)) == 0.0);
  const Tensor21 a = Tensor21::unit(2, 0, 0, 1);
  const Tensor12 t = 5.0 * Tensor12::unit(2, 0, 0, 1);
  CHECK(tensor_pairing(a, t) == 5.0);
  CHECK_THROWS_AS(tensor_pairing(Tensor21(2), Tensor12(3)), DimensionMismatch);
}

TEST_CASE("paired bases have identity Gram matrices") {
  for (std::size_t n : {1u, 2u, 3u}) {
    const auto m = matrix_basis(n);
    const auto t = t12_basis(n);
    const auto td = t12_dual_basis(n);
    const auto s = s12_basis(n);
    const auto sd = s12_dual_basis(n);
    REQUIRE(m.size() == basis_size(Space::gl, n));
    REQUIRE(m.size() == basis_size(Space::mat, n));
    REQUIRE(t.size() == basis_size(Space::t12, n));
    REQUIRE(s.size() == basis_size(Space::s12, n));
    REQUIRE(sd.size() == s.size());
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) CHECK(trace_pairing(m[a], m[b]) == (a == b ? 1.0 : 0.0));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) CHECK(tensor_pairing(td[a], t[b]) == (a == b ? 1.0 : 0.0));
    for (std::size_t a = 0; a < s.size(); ++a) {
      CHECK(s[a].symmetric());
      CHECK(sd[a].symmetric());
      for (std::size_t b = 0; b < s.size(); ++b) CHECK(tensor_pairing(sd[a], s[b]) == (a == b ? 1.0 : 0.0));
    }
  }
  CHECK(basis_size(Space::s12, 2) == 6);
  CHECK(basis_size(Space::t12, 2) == 8);
  CHECK(matrix_basis(2)[1] == Matrix::unit(2, 0, 1));
}

TEST_CASE("symmetrize") {
  Tensor12 t(2);
  t(0, 0, 1) = 1.0;
  const Tensor12 s = symmetrize(t);
  CHECK(s.symmetric());
  CHECK(s(0, 0, 1) == 0.5);
  CHECK(s(0, 1, 0) == 0.5);
  CHECK(symmetrize(s) == s);
  CHECK(symmetrize(s).asymmetry() == 0.0);

  // Projection onto S12(2): the image of the unit tensors spans 6 dimensions.
  const auto basis = t12_basis(2);
  const auto dual = s12_dual_basis(2);
  std::vector<std::vector<double>> rows;
  for (const auto& e : basis) {
    std::vector<double> row;
    for (const auto& d : dual) row.push_back(tensor_pairing(d, symmetrize(e)));
    rows.push_back(row);
  }
  // Gaussian elimination rank on the 8x6 coordinate matrix.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 6 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && std::abs(rows[piv][col]) < 1e-12) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank) {
        const double f = rows[r][col] / rows[rank][col];
        for (std::size_t c = 0; c < 6; ++c) rows[r][c] -= f * rows[rank][c];
      }
    ++rank;
  }
  CHECK(rank == 6);
}

TEST_CASE("symmetric flag is guarded") {
  Tensor12 t = Sampler(4).t12(2);
  CHECK_FALSE(t.symmetric());
  CHECK_THROWS_AS(t.mark_symmetric(), std::logic_error);
  Tensor12 s = symmetrize(t);
  const Tensor12 sum = s + s;
  CHECK(sum.symmetric());
  CHECK((s + t).symmetric() == false);
  CHECK((3.0 * s).symmetric());
  s(0, 0, 1) = 7.0;  // mutable access drops the guarantee
  CHECK_FALSE(s.symmetric());
}

TEST_CASE("fd_derivative") {
  const Matrix x = Sampler(2).matrix(2);
  CHECK(max_abs(fd_derivative([&](double) { return x; }, 0.0, 1e-5)) == 0.0);
  CHECK(max_abs(fd_derivative([&](double e) { return e * x; }, 0.3, 1e-5) - x) <= 1e-9);
  CHECK(max_abs(fd_derivative([&](double e) { return mat_exp(e * x); }, 0.0, 1e-5) - x) <= 1e-5);
  CHECK_THROWS(fd_derivative([&](double e) { return e * x; }, 0.0, 0.0));
}

TEST_CASE("tolerances") {
  CHECK(Tolerances{}.valid());
  Tolerances bad;
  bad.fd_tol = bad.exact_tol / 2;
  CHECK_FALSE(bad.valid());
}

TEST_CASE("sampler is deterministic") {
  Sampler a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.uniform() == b.uniform());
  Sampler c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= -1.0);
    CHECK(u <= 1.0);
  }
}
