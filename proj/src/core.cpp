#include "csdp/core.hpp"

namespace csdp {

Matrix coad_g(const Matrix& xi, const Matrix& mu) {
  if (xi.n() != mu.n()) throw DimensionMismatch("coad_g: dimensions differ");
  const Matrix xt = xi.transpose();
  return xt * mu - mu * xt;
}

}  // namespace csdp
