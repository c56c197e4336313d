#pragma once

#include "qdwigner/config.hpp"
#include "qdwigner/validate.hpp"
#include "qdwigner/wigner.hpp"

#include <filesystem>
#include <ostream>

namespace qdw {

enum ExitCode : int { Success = 0, UsageFailure = 1, ValidationFailure = 2 };

/// Result of running one resolved curve.
struct CurveRun {
  CurveSpec curve;
  JointState initial;
  Trajectory trajectory;
  WignerSeries series;
};

CurveRun run_curve(const CurveSpec &curve, const RunConfig &config);

/// Runs all curves concurrently; results keep the curve order.
std::vector<CurveRun> run_curves(const std::vector<CurveSpec> &curves,
                                 const RunConfig &config);

/// Writes `<label>.csv` and `<label>.json` per curve into `out_dir`; with
/// `dump_rho` also `<label>_rho.json`. Warnings go to `log`.
int cmd_simulate(const RunConfig &config, const std::filesystem::path &out_dir,
                 bool dump_rho, std::ostream &log);

/// One CSV per value plus a shared `<prefix>_<param>.json` sidecar.
int cmd_sweep(const RunConfig &config, const SweepSpec &sweep,
              const std::filesystem::path &out_dir, std::ostream &log);

/// Writes the JSON report to `report`; returns ValidationFailure if any
/// residual exceeds its tolerance.
int cmd_validate(const RunConfig &config, const ValidationOptions &options,
                 std::ostream &report, std::ostream &log);

/// Writes `<label>_rho.json` per curve.
int cmd_dump_rho(const RunConfig &config, const std::filesystem::path &out_dir,
                 std::ostream &log);

} // namespace qdw
