#pragma once

#include <cstdint>
#include <random>

#include "csdp/algebra.hpp"

namespace csdp {

// Seeded source of test inputs: entries are i.i.d. uniform on [-1, 1] and
// group elements are exponentials of such matrices, so they are invertible
// with bounded conditioning. The mapping from engine output to [-1, 1] is
// written out so that sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * 0.5 * (uniform() + 1.0); }

  Matrix matrix(std::size_t n) {
    Matrix m(n);
    for (double& x : m.data()) x = uniform();
    return m;
  }

  Matrix group_matrix(std::size_t n) { return mat_exp(matrix(n)); }

  template <class Variance>
  Tensor3<Variance> tensor(std::size_t n) {
    Tensor3<Variance> t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t(i, j, k) = uniform();
    return t;
  }

  Tensor12 t12(std::size_t n) { return tensor<Contravariant1Covariant2>(n); }
  Tensor21 t21(std::size_t n) { return tensor<Covariant1Contravariant2>(n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace csdp
