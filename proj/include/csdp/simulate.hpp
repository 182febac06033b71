#pragma once

#include <string>

#include "csdp/io.hpp"

namespace csdp {

struct SimulationResult {
  std::string csv;
  double final_time = 0.0;
  double max_energy_drift = 0.0;
  double max_noether_residual = 0.0;
};

// Builds the instance, Lagrangian and initial data described by `cfg` and
// integrates it. Missing initial coordinates are drawn from cfg.seed; missing
// weights default to one. Throws FormatError on inconsistent lengths and
// SingularTrajectory when reconstruction leaves GL(n).
SimulationResult run_simulation(const SimulationConfig& cfg);

std::string summary_line(const SimulationResult& r);

}  // namespace csdp
