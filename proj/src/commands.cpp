#include "qdwigner/commands.hpp"

#include "qdwigner/errors.hpp"
#include "qdwigner/output.hpp"

#include <fstream>
#include <future>

namespace qdw {

namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw UsageError("out: cannot create directory '" + dir.string() +
                     "': " + ec.message());
}

std::ofstream open_out(const fs::path &path) {
  std::ofstream out(path);
  if (!out)
    throw UsageError("out: cannot write '" + path.string() + "'");
  return out;
}

void write_json(const fs::path &path, const nlohmann::json &j) {
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

std::vector<CurveSpec> resolve(const RunConfig &config,
                               const std::optional<SweepSpec> &sweep,
                               std::ostream &log) {
  std::vector<std::string> warnings;
  auto curves = resolve_curves(config, sweep, warnings);
  for (const auto &w : warnings)
    log << "warning: " << w << "\n";
  return curves;
}

} // namespace

CurveRun run_curve(const CurveSpec &curve, const RunConfig &config) {
  CurveRun run;
  run.curve = curve;
  run.initial = make_joint_state(curve.atomic, curve.field, config.renormalize);
  const std::vector<double> grid = uniform_grid(config.t_max, config.samples);
  run.trajectory = evolve_joint(run.initial, curve.params, grid, config.method);
  run.series = wigner_series(run.trajectory, curve.theta, curve.phi,
                             config.include_remainder);
  return run;
}

std::vector<CurveRun> run_curves(const std::vector<CurveSpec> &curves,
                                 const RunConfig &config) {
  std::vector<std::future<CurveRun>> pending;
  pending.reserve(curves.size());
  for (const CurveSpec &curve : curves)
    pending.push_back(std::async(std::launch::async, run_curve,
                                 std::cref(curve), std::cref(config)));
  std::vector<CurveRun> runs;
  runs.reserve(curves.size());
  for (auto &f : pending)
    runs.push_back(f.get());
  return runs;
}

int cmd_simulate(const RunConfig &config, const fs::path &out_dir,
                 bool dump_rho, std::ostream &log) {
  const auto curves = resolve(config, std::nullopt, log);
  ensure_dir(out_dir);
  for (const CurveRun &run : run_curves(curves, config)) {
    const std::string stem = file_stem(run.curve.label);
    {
      auto csv = open_out(out_dir / (stem + ".csv"));
      write_series_csv(csv, run.series);
    }
    write_json(out_dir / (stem + ".json"),
               curve_metadata(run.curve, config, run.initial));
    if (dump_rho)
      write_json(out_dir / (stem + "_rho.json"),
                 density_dump(run.trajectory, config.include_remainder));
    log << "wrote " << (out_dir / (stem + ".csv")).string() << "\n";
  }
  return Success;
}

int cmd_sweep(const RunConfig &config, const SweepSpec &sweep,
              const fs::path &out_dir, std::ostream &log) {
  const auto curves = resolve(config, sweep, log);
  ensure_dir(out_dir);
  nlohmann::json sidecar = {{"param", std::string(to_string(sweep.param))},
                            {"values", sweep.values},
                            {"curves", nlohmann::json::array()}};
  for (const CurveRun &run : run_curves(curves, config)) {
    const std::string stem = file_stem(run.curve.label);
    {
      auto csv = open_out(out_dir / (stem + ".csv"));
      write_series_csv(csv, run.series);
    }
    nlohmann::json meta = curve_metadata(run.curve, config, run.initial);
    meta["file"] = stem + ".csv";
    sidecar["curves"].push_back(std::move(meta));
    log << "wrote " << (out_dir / (stem + ".csv")).string() << "\n";
  }
  const std::string prefix =
      config.preset ? std::string(to_string(*config.preset)) : "sweep";
  write_json(out_dir / (prefix + "_" + std::string(to_string(sweep.param)) +
                        ".json"),
             sidecar);
  return Success;
}

int cmd_validate(const RunConfig &config, const ValidationOptions &options,
                 std::ostream &report, std::ostream &log) {
  const ValidationReport r = run_validation(config, options);
  report << r.to_json().dump(2) << "\n";
  for (const CheckResult &c : r.checks)
    if (!c.passed)
      log << "FAIL " << c.name << ": residual " << c.residual
          << " > tolerance " << c.tolerance << "\n";
  return r.passed() ? Success : ValidationFailure;
}

int cmd_dump_rho(const RunConfig &config, const fs::path &out_dir,
                 std::ostream &log) {
  const auto curves = resolve(config, std::nullopt, log);
  ensure_dir(out_dir);
  for (const CurveRun &run : run_curves(curves, config)) {
    const std::string stem = file_stem(run.curve.label);
    nlohmann::json dump = density_dump(run.trajectory, config.include_remainder);
    dump["metadata"] = curve_metadata(run.curve, config, run.initial);
    write_json(out_dir / (stem + "_rho.json"), dump);
    log << "wrote " << (out_dir / (stem + "_rho.json")).string() << "\n";
  }
  return Success;
}

} // namespace qdw
