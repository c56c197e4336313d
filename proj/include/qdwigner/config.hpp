#pragma once

#include "qdwigner/algebra.hpp"
#include "qdwigner/dynamics.hpp"
#include "qdwigner/state.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qdw {

enum class Preset {
  Fig1a, Fig1b, Fig2a, Fig2b, Fig3a, Fig3b, Fig4a, Fig4b, Fig5a, Fig5b
};

inline constexpr std::array<Preset, 10> all_presets = {
    Preset::Fig1a, Preset::Fig1b, Preset::Fig2a, Preset::Fig2b, Preset::Fig3a,
    Preset::Fig3b, Preset::Fig4a, Preset::Fig4b, Preset::Fig5a, Preset::Fig5b};

std::string_view to_string(Preset preset);
Preset parse_preset(std::string_view name);

/// Parameters a sweep (or a figure preset) may vary across curves.
enum class SweepParam { Q, KappaD, Delta, Theta, Phi, Alpha };

std::string_view to_string(SweepParam param);
/// Accepts q, kappa_d (alias g), delta, theta, phi, alpha.
SweepParam parse_sweep_param(std::string_view name);

struct SweepSpec {
  SweepParam param = SweepParam::KappaD;
  /// Raw values; angles accept pi expressions, alpha accepts complex.
  std::vector<std::string> values;

  bool operator==(const SweepSpec &) const = default;
};

/// Curve family of a figure preset.
struct PresetSpec {
  AtomicPreset atomic;
  double theta;
  double phi;
  double delta;
  double kappa_d;
  /// nullopt: no deformation, f(n) = 1.
  std::optional<double> q;
  SweepSpec sweep;
};

PresetSpec preset_spec(Preset preset);

using AtomicChoice = std::variant<AtomicPreset, AtomicInit>;

/// Everything a CLI run needs. Optional fields left unset fall back to the
/// preset (when one is chosen) or to the built-in defaults.
struct RunConfig {
  std::optional<Preset> preset;
  std::optional<DeformationKind> deformation;
  std::optional<double> q;
  bool allow_q_above_one = false;
  std::optional<double> kappa_d;
  std::optional<double> delta;
  double lambda = 1.0;
  cplx alpha{5.0, 0.0};
  std::optional<int> n_max;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<AtomicChoice> atomic;
  double t_max = 50.0;
  int samples = 2000;
  Method method = Method::Closed;
  bool renormalize = false;
  bool include_remainder = false;

  bool operator==(const RunConfig &) const = default;
};

/// One concrete curve: fully resolved parameters.
struct CurveSpec {
  std::string label;
  SystemParams params;
  AtomicInit atomic;
  std::string atomic_name;
  FieldInit field;
  double theta = 0.0;
  double phi = 0.0;
};

/// Expands a config into its curves. A preset supplies its fixed values
/// and swept list; explicitly set fields override them, and each override
/// of a preset value appends a message to `warnings`. `sweep` replaces the
/// preset's swept list. Throws UsageError naming the offending field.
std::vector<CurveSpec> resolve_curves(const RunConfig &config,
                                      const std::optional<SweepSpec> &sweep,
                                      std::vector<std::string> &warnings);

/// "re+imi" complex literals: "5", "5+0i", "-1.5-2i", "2i", "i".
cplx parse_complex(std::string_view text);
std::string format_complex(cplx z);

/// Real numbers or multiples of pi: "0.5", "pi", "-pi/4", "3*pi/2", "2pi".
double parse_angle(std::string_view text);

/// 17 significant digits, round-trips exactly.
std::string format_double(double x);

/// Parses the `key = value` config format ('#' starts a comment).
RunConfig parse_config_text(std::string_view text);
RunConfig load_config_file(const std::string &path);
std::string serialize_config(const RunConfig &config);

/// Applies one `key = value` assignment; shared by the file parser.
void apply_config_value(RunConfig &config, std::string_view key,
                        std::string_view value);

} // namespace qdw
