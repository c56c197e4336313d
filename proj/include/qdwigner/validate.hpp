#pragma once

#include "qdwigner/config.hpp"
#include "qdwigner/printed.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qdw {

struct ValidationOptions {
  std::uint64_t seed = 20240611;
  /// Negative control: perturbs one off-diagonal Hamiltonian entry before
  /// the Hermiticity check so that it must fail.
  bool corrupt_hamiltonian = false;
  /// Run the per-preset trajectory health checks and the printed-formula
  /// ledger over every figure preset.
  bool all_presets = true;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// Largest deviation of the literature solution from the corrected
/// propagator for one curve, per reading.
struct PrintedDeviation {
  std::string curve;
  std::vector<std::pair<PrintedReading, double>> max_deviation;
  PrintedReading best_reading = PrintedReading::Verbatim;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<PrintedDeviation> printed_ledger;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the invariant battery: Hamiltonian Hermiticity and spectral
/// identity, mu against eigenvalues, unitarity, closed form against the
/// adaptive integrator, block evolution against the full-space oracle,
/// density-matrix health along the preset trajectories, kernel properties,
/// Wigner realness/range, and kernel-trace against lambda-expansion.
ValidationReport run_validation(const RunConfig &config,
                                const ValidationOptions &options = {});

/// Max |printed - corrected| over blocks, components and lambda*t in
/// [0, t_max] on `samples` points.
PrintedDeviation printed_deviation(const CurveSpec &curve, double t_max,
                                   int samples);

} // namespace qdw
