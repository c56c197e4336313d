// qdwigner: two atoms in a q-deformed cavity, SU(2) Wigner function of the
// atomic pair against scaled time.

#include "qdwigner/commands.hpp"
#include "qdwigner/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

// Raw flag values, applied on top of --config in this key order.
struct FlagValues {
  std::optional<std::string> config_path;
  std::map<std::string, std::string> values;
  bool allow_q_above_one = false;
  bool renormalize = false;
  bool include_remainder = false;
  std::string out = "out";
};

void add_run_flags(CLI::App &cmd, FlagValues &f) {
  cmd.add_option_function<std::string>(
      "--config", [&f](const std::string &p) { f.config_path = p; },
      "Config file (key = value lines)");
  const auto flag = [&](const std::string &name, const std::string &key,
                        const std::string &help) {
    cmd.add_option_function<std::string>(
        name, [&f, key](const std::string &v) { f.values[key] = v; }, help);
  };
  flag("--preset", "preset", "Figure preset fig1a..fig5b");
  flag("--deformation", "deformation", "identity or q");
  flag("--q", "q", "Deformation parameter in (0,1)");
  flag("--kappa-d,--g", "kappa_d", "Dipole-dipole strength");
  flag("--delta", "delta", "Detuning (Delta_1 = delta, Delta_2 = -delta)");
  flag("--lambda", "lambda", "Atom-field coupling (time unit)");
  flag("--alpha", "alpha", "Coherent amplitude, e.g. 5 or 3+1i");
  flag("--n-max", "n_max", "Fock truncation override");
  flag("--theta", "theta", "Polar angle, e.g. pi/2");
  flag("--phi", "phi", "Azimuthal angle, e.g. pi");
  flag("--atomic", "atomic", "bell, product, excited or a1,a2,a3,a4");
  flag("--t-max", "t_max", "Largest lambda*t");
  flag("--samples", "samples", "Number of time samples");
  flag("--method", "method", "closed or ode");
  cmd.add_flag("--allow-q-above-one", f.allow_q_above_one,
               "Admit q >= 1 (growing f(n))");
  cmd.add_flag("--renormalize", f.renormalize,
               "Rescale block amplitudes by 1/sqrt(1 - deficit)");
  cmd.add_flag("--include-remainder", f.include_remainder,
               "Keep the frozen low-excitation amplitudes in rho_AB");
}

qdw::RunConfig build_config(const FlagValues &f) {
  qdw::RunConfig c =
      f.config_path ? qdw::load_config_file(*f.config_path) : qdw::RunConfig{};
  for (const auto &[key, value] : f.values)
    qdw::apply_config_value(c, key, value);
  if (f.allow_q_above_one)
    c.allow_q_above_one = true;
  if (f.renormalize)
    c.renormalize = true;
  if (f.include_remainder)
    c.include_remainder = true;
  return c;
}

std::vector<std::string> split_values(const std::string &s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = s.find(',', start);
    std::string part = s.substr(start, pos - start);
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    if (b != std::string::npos)
      out.push_back(part.substr(b, e - b + 1));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Wigner function of two atoms in a q-deformed cavity"};
  app.require_subcommand(1);

  FlagValues sim_flags, sweep_flags, val_flags, rho_flags;
  bool dump_rho = false;

  auto *simulate = app.add_subcommand("simulate", "Emit Wigner time series");
  add_run_flags(*simulate, sim_flags);
  simulate->add_option("--out", sim_flags.out, "Output directory");
  simulate->add_flag("--dump-rho", dump_rho,
                     "Also write per-sample density matrices");

  auto *sweep = app.add_subcommand("sweep", "One curve per parameter value");
  add_run_flags(*sweep, sweep_flags);
  sweep->add_option("--out", sweep_flags.out, "Output directory");
  std::string sweep_param, sweep_values;
  bool have_values = false;
  sweep->add_option("--param", sweep_param,
                    "q, kappa_d, delta, theta, phi or alpha")
      ->required();
  sweep->add_option_function<std::string>(
      "--values",
      [&](const std::string &v) {
        sweep_values = v;
        have_values = true;
      },
      "Comma-separated values")
      ->required();

  auto *validate = app.add_subcommand("validate", "Run the invariant battery");
  add_run_flags(*validate, val_flags);
  std::string report_path;
  qdw::ValidationOptions val_opts;
  validate->add_option("--report", report_path,
                       "Write the JSON report here instead of stdout");
  validate->add_option("--seed", val_opts.seed, "Random draw seed");
  validate
      ->add_flag("--corrupt-hamiltonian", val_opts.corrupt_hamiltonian,
                 "Negative control: perturb a Hamiltonian entry")
      ->group("");

  auto *dump = app.add_subcommand("dump-rho", "Write rho_AB and rho_A per sample");
  add_run_flags(*dump, rho_flags);
  dump->add_option("--out", rho_flags.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? qdw::Success : qdw::UsageFailure;
  }

  try {
    if (simulate->parsed())
      return qdw::cmd_simulate(build_config(sim_flags), sim_flags.out, dump_rho,
                               std::cerr);
    if (sweep->parsed()) {
      qdw::SweepSpec spec;
      spec.param = qdw::parse_sweep_param(sweep_param);
      spec.values = have_values ? split_values(sweep_values)
                                : std::vector<std::string>{};
      return qdw::cmd_sweep(build_config(sweep_flags), spec, sweep_flags.out,
                            std::cerr);
    }
    if (validate->parsed()) {
      const qdw::RunConfig config = build_config(val_flags);
      if (report_path.empty())
        return qdw::cmd_validate(config, val_opts, std::cout, std::cerr);
      std::ofstream out(report_path);
      if (!out)
        throw qdw::UsageError("report: cannot write '" + report_path + "'");
      return qdw::cmd_validate(config, val_opts, out, std::cerr);
    }
    if (dump->parsed())
      return qdw::cmd_dump_rho(build_config(rho_flags), rho_flags.out,
                               std::cerr);
  } catch (const qdw::UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return qdw::UsageFailure;
  } catch (const qdw::ParameterError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return qdw::UsageFailure;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return qdw::UsageFailure;
  }
  return qdw::UsageFailure;
}
