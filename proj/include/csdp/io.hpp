#pragma once

// JSON nested-array encoding of matrices, tensors and jets, simulation
// config documents, and trajectory CSV.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "csdp/algebra.hpp"
#include "csdp/dynamics.hpp"
#include "csdp/jets.hpp"

namespace csdp {

// Malformed documents, unknown keys' values, or schema violations.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits, enough for an exact round trip.
std::string format_double(double x);

std::string matrix_to_json(const Matrix& m);
std::string tensor_to_json(const Tensor12& t);
std::string jet_to_json(const Jet2& j);

Matrix matrix_from_json(const std::string& text);
Tensor12 tensor_from_json(const std::string& text);
// {"A1": [[..]], "A2": [[[..]]]}, A2[k][i][j] = d^2 phi^k / dx_i dx_j.
Jet2 jet_from_json(const std::string& text, const Tolerances& tol = {});

std::string read_file(const std::string& path);
// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

struct SimulationConfig {
  std::string instance;     // glmat | glt12 | glt12_sym
  std::size_t n = 0;
  std::string orientation;  // right | left | advected
  std::optional<std::vector<double>> weights_g;
  std::optional<std::vector<double>> weights_v;
  // Coordinates in the matrix-unit basis (xi_g) and the instance's V basis.
  std::optional<std::vector<double>> xi_g;
  std::optional<std::vector<double>> xi_v;
  std::optional<std::vector<double>> v0;
  double h = 0.0;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::string output;
};

SimulationConfig parse_config(const std::string& text);

// CSV column names use one digit per index.
inline std::size_t max_cli_dimension() { return 9; }
// Beyond this the random group samples are too ill-conditioned for absolute
// 1e-10 residuals on the tensor instances.
inline std::size_t max_verify_dimension() { return 5; }

template <ActionPair A>
std::string trajectory_csv(const Trajectory<A>& traj) {
  std::string out = "t,energy,noether_residual";
  if (traj.samples.empty()) return out + "\n";
  const std::size_t n = traj.samples.front().momenta.mu.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out += ",mu_" + std::to_string(i) + std::to_string(j);
  const auto& gamma0 = traj.samples.front().momenta.gamma;
  if constexpr (std::is_same_v<std::decay_t<decltype(gamma0)>, Matrix>) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out += ",gamma_" + std::to_string(i) + std::to_string(j);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          out += ",gamma_" + std::to_string(i) + std::to_string(j) + std::to_string(k);
  }
  out += '\n';
  for (const auto& s : traj.samples) {
    out += format_double(s.t) + ',' + format_double(s.energy) + ',' + format_double(s.noether_residual);
    for (double x : s.momenta.mu.data()) out += ',' + format_double(x);
    for (double x : s.momenta.gamma.data()) out += ',' + format_double(x);
    out += '\n';
  }
  return out;
}

}  // namespace csdp
