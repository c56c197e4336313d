#include "qdwigner/config.hpp"

#include "qdwigner/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qdw {

namespace {

using std::numbers::pi;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

double parse_real(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(std::string(field) + ": cannot parse number '" +
                     std::string(text) + "'");
  return value;
}

int parse_int(std::string_view text, std::string_view field) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(std::string(field) + ": cannot parse integer '" +
                     std::string(text) + "'");
  return value;
}

bool parse_bool(std::string_view text, std::string_view field) {
  const std::string v = lower(trim(text));
  if (v == "true" || v == "1" || v == "yes" || v == "on")
    return true;
  if (v == "false" || v == "0" || v == "no" || v == "off")
    return false;
  throw UsageError(std::string(field) + ": expected true/false, got '" +
                   std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

AtomicChoice parse_atomic(std::string_view text) {
  text = trim(text);
  if (text.find(',') == std::string_view::npos)
    return parse_atomic_preset(text);
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw UsageError("atomic: expected a preset name or four amplitudes "
                     "'a1,a2,a3,a4'");
  AtomicInit init;
  for (std::size_t i = 0; i < 4; ++i)
    init.a[i] = parse_complex(parts[i]);
  try {
    init.validate();
  } catch (const ParameterError &e) {
    throw UsageError(std::string("atomic: ") + e.what());
  }
  return init;
}

std::string format_atomic(const AtomicChoice &choice) {
  if (const auto *p = std::get_if<AtomicPreset>(&choice))
    return std::string(to_string(*p));
  const auto &init = std::get<AtomicInit>(choice);
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i)
      out += ", ";
    out += format_complex(init.a[i]);
  }
  return out;
}

std::string format_label_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

} // namespace

std::string_view to_string(Preset preset) {
  static constexpr std::array<std::string_view, 10> names = {
      "fig1a", "fig1b", "fig2a", "fig2b", "fig3a",
      "fig3b", "fig4a", "fig4b", "fig5a", "fig5b"};
  return names[static_cast<std::size_t>(preset)];
}

Preset parse_preset(std::string_view name) {
  const std::string l = lower(trim(name));
  for (Preset p : all_presets)
    if (to_string(p) == l)
      return p;
  throw UsageError("preset: unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(SweepParam param) {
  switch (param) {
  case SweepParam::Q:
    return "q";
  case SweepParam::KappaD:
    return "kappa_d";
  case SweepParam::Delta:
    return "delta";
  case SweepParam::Theta:
    return "theta";
  case SweepParam::Phi:
    return "phi";
  case SweepParam::Alpha:
    return "alpha";
  }
  return "?";
}

SweepParam parse_sweep_param(std::string_view name) {
  std::string l = lower(trim(name));
  std::replace(l.begin(), l.end(), '-', '_');
  if (l == "q")
    return SweepParam::Q;
  if (l == "kappa_d" || l == "g")
    return SweepParam::KappaD;
  if (l == "delta")
    return SweepParam::Delta;
  if (l == "theta")
    return SweepParam::Theta;
  if (l == "phi")
    return SweepParam::Phi;
  if (l == "alpha")
    return SweepParam::Alpha;
  throw UsageError("param: unknown sweep parameter '" + std::string(name) +
                   "' (expected q, kappa_d, delta, theta, phi, alpha)");
}

PresetSpec preset_spec(Preset preset) {
  const double half_pi = pi / 2;
  const auto bell_or_product = [](Preset a, Preset p) {
    return p == a ? AtomicPreset::Bell : AtomicPreset::Product;
  };
  switch (preset) {
  case Preset::Fig1a:
  case Preset::Fig1b:
    return {bell_or_product(Preset::Fig1a, preset), half_pi, pi, 1.0, 1.0,
            std::nullopt, {SweepParam::KappaD, {"1", "5"}}};
  case Preset::Fig2a:
  case Preset::Fig2b:
    return {bell_or_product(Preset::Fig2a, preset), half_pi, pi, 1.0, 5.0,
            0.1, {SweepParam::Q, {"0.1", "0.4", "0.8"}}};
  case Preset::Fig3a:
  case Preset::Fig3b:
    return {bell_or_product(Preset::Fig3a, preset), half_pi, pi, 1.0, 1.0,
            0.1, {SweepParam::KappaD, {"1", "5", "10"}}};
  case Preset::Fig4a:
  case Preset::Fig4b:
    return {AtomicPreset::Bell, pi / 4, pi, 1.0, 5.0,
            preset == Preset::Fig4a ? 0.1 : 0.8,
            {SweepParam::Phi, {"pi/4", "pi/2", "pi"}}};
  case Preset::Fig5a:
  case Preset::Fig5b:
    return {bell_or_product(Preset::Fig5a, preset), half_pi, pi, 1.0, 5.0,
            0.1, {SweepParam::Delta, {"1", "5", "10"}}};
  }
  throw DomainError("unknown preset");
}

cplx parse_complex(std::string_view text) {
  std::string compact(text);
  std::erase_if(compact, [](unsigned char ch) { return std::isspace(ch); });
  const std::string_view t = compact;
  if (t.empty())
    throw UsageError("complex: empty value");
  if (t.back() != 'i' && t.back() != 'I')
    return {parse_real(t, "complex"), 0.0};

  const std::string_view body = t.substr(0, t.size() - 1);
  // Split before the last sign that is not an exponent sign.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const auto imag_of = [](std::string_view s) {
    if (s.empty() || s == "+")
      return 1.0;
    if (s == "-")
      return -1.0;
    return parse_real(s, "complex");
  };
  if (split_at == std::string_view::npos)
    return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split_at), "complex"),
          imag_of(body.substr(split_at))};
}

std::string format_complex(cplx z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") +
         format_double(std::abs(z.imag())) + "i";
}

double parse_angle(std::string_view text) {
  const std::string t = lower(trim(text));
  const std::size_t at = t.find("pi");
  if (at == std::string::npos)
    return parse_real(t, "angle");

  std::string_view coeff = trim(std::string_view(t).substr(0, at));
  if (!coeff.empty() && coeff.back() == '*')
    coeff = trim(coeff.substr(0, coeff.size() - 1));
  double factor = 1.0;
  if (coeff == "-")
    factor = -1.0;
  else if (!coeff.empty() && coeff != "+")
    factor = parse_real(coeff, "angle");

  std::string_view rest = trim(std::string_view(t).substr(at + 2));
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/')
      throw UsageError("angle: cannot parse '" + std::string(text) + "'");
    divisor = parse_real(rest.substr(1), "angle");
  }
  return factor * pi / divisor;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void apply_config_value(RunConfig &c, std::string_view key_in,
                        std::string_view value) {
  std::string key = lower(trim(key_in));
  std::replace(key.begin(), key.end(), '-', '_');
  value = trim(value);

  if (key == "preset") {
    c.preset = parse_preset(value);
  } else if (key == "deformation") {
    const std::string v = lower(value);
    if (v == "identity" || v == "none")
      c.deformation = DeformationKind::Identity;
    else if (v == "q" || v == "qdeformed" || v == "q_deformed")
      c.deformation = DeformationKind::QDeformed;
    else
      throw UsageError("deformation: expected identity or q, got '" +
                       std::string(value) + "'");
  } else if (key == "q") {
    c.q = parse_real(value, "q");
  } else if (key == "allow_q_above_one") {
    c.allow_q_above_one = parse_bool(value, key);
  } else if (key == "kappa_d" || key == "g") {
    c.kappa_d = parse_real(value, "kappa_d");
  } else if (key == "delta") {
    c.delta = parse_real(value, "delta");
  } else if (key == "lambda") {
    c.lambda = parse_real(value, "lambda");
  } else if (key == "alpha") {
    c.alpha = parse_complex(value);
  } else if (key == "n_max") {
    c.n_max = parse_int(value, "n_max");
  } else if (key == "theta") {
    c.theta = parse_angle(value);
  } else if (key == "phi") {
    c.phi = parse_angle(value);
  } else if (key == "atomic") {
    c.atomic = parse_atomic(value);
  } else if (key == "t_max") {
    c.t_max = parse_real(value, "t_max");
  } else if (key == "samples") {
    c.samples = parse_int(value, "samples");
  } else if (key == "method") {
    const std::string v = lower(value);
    if (v == "closed")
      c.method = Method::Closed;
    else if (v == "ode")
      c.method = Method::Ode;
    else
      throw UsageError("method: expected closed or ode, got '" +
                       std::string(value) + "'");
  } else if (key == "renormalize") {
    c.renormalize = parse_bool(value, key);
  } else if (key == "include_remainder") {
    c.include_remainder = parse_bool(value, key);
  } else {
    throw UsageError("unknown config key '" + std::string(key_in) + "'");
  }
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig c;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected 'key = value'");
    try {
      apply_config_value(c, line.substr(0, eq), line.substr(eq + 1));
    } catch (const UsageError &e) {
      throw UsageError("config line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return c;
}

RunConfig load_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize_config(const RunConfig &c) {
  std::ostringstream out;
  out << "# qdwigner run configuration\n";
  if (c.preset)
    out << "preset = " << to_string(*c.preset) << "\n";
  if (c.deformation)
    out << "deformation = "
        << (*c.deformation == DeformationKind::Identity ? "identity" : "q")
        << "\n";
  if (c.q)
    out << "q = " << format_double(*c.q) << "\n";
  out << "allow_q_above_one = " << (c.allow_q_above_one ? "true" : "false")
      << "\n";
  if (c.kappa_d)
    out << "kappa_d = " << format_double(*c.kappa_d) << "\n";
  if (c.delta)
    out << "delta = " << format_double(*c.delta) << "\n";
  out << "lambda = " << format_double(c.lambda) << "\n";
  out << "alpha = " << format_complex(c.alpha) << "\n";
  if (c.n_max)
    out << "n_max = " << *c.n_max << "\n";
  if (c.theta)
    out << "theta = " << format_double(*c.theta) << "\n";
  if (c.phi)
    out << "phi = " << format_double(*c.phi) << "\n";
  if (c.atomic)
    out << "atomic = " << format_atomic(*c.atomic) << "\n";
  out << "t_max = " << format_double(c.t_max) << "\n";
  out << "samples = " << c.samples << "\n";
  out << "method = " << (c.method == Method::Closed ? "closed" : "ode") << "\n";
  out << "renormalize = " << (c.renormalize ? "true" : "false") << "\n";
  out << "include_remainder = " << (c.include_remainder ? "true" : "false")
      << "\n";
  return out.str();
}

std::vector<CurveSpec> resolve_curves(const RunConfig &c,
                                      const std::optional<SweepSpec> &sweep_in,
                                      std::vector<std::string> &warnings) {
  // Defaults without a preset: Bell state, theta = pi/2, phi = pi,
  // delta = kappa_d = 1, no deformation.
  AtomicChoice atomic = AtomicPreset::Bell;
  double theta = pi / 2, phi = pi, delta = 1.0, kappa_d = 1.0;
  // deformation parameter; has_q false means f(n) = 1
  double q = 1.0;
  bool has_q = false;
  std::optional<SweepSpec> sweep;
  std::string prefix = "curve";

  if (c.preset) {
    const PresetSpec p = preset_spec(*c.preset);
    atomic = p.atomic;
    theta = p.theta;
    phi = p.phi;
    delta = p.delta;
    kappa_d = p.kappa_d;
    has_q = p.q.has_value();
    q = p.q.value_or(1.0);
    sweep = p.sweep;
    prefix = std::string(to_string(*c.preset));
  }

  const std::string preset_name =
      c.preset ? std::string(to_string(*c.preset)) : std::string();
  const auto override_value = [&](std::string_view field, double preset_value,
                                  const std::optional<double> &given,
                                  SweepParam param, double &target) {
    if (!given)
      return;
    if (c.preset) {
      if (sweep && sweep->param == param) {
        warnings.push_back("preset " + preset_name + " sweeps " +
                           std::string(field) + "; explicit value " +
                           format_double(*given) + " replaces the sweep");
        sweep.reset();
      } else if (*given != preset_value) {
        warnings.push_back("preset " + preset_name + " sets " +
                           std::string(field) + " = " +
                           format_double(preset_value) +
                           "; overridden by explicit value " +
                           format_double(*given));
      }
    }
    target = *given;
  };

  override_value("theta", theta, c.theta, SweepParam::Theta, theta);
  override_value("phi", phi, c.phi, SweepParam::Phi, phi);
  override_value("delta", delta, c.delta, SweepParam::Delta, delta);
  override_value("kappa_d", kappa_d, c.kappa_d, SweepParam::KappaD, kappa_d);

  if (c.q) {
    double qv = q;
    if (c.preset && !has_q)
      warnings.push_back("preset " + preset_name +
                         " has no deformation; explicit q = " +
                         format_double(*c.q) + " enables it");
    override_value("q", qv, c.q, SweepParam::Q, qv);
    q = qv;
    has_q = true;
  }
  if (c.deformation) {
    if (*c.deformation == DeformationKind::Identity) {
      if (has_q && c.preset)
        warnings.push_back("deformation = identity overrides preset " +
                           preset_name + " deformation");
      has_q = false;
      if (sweep && sweep->param == SweepParam::Q)
        sweep.reset();
    } else if (!has_q && !(sweep && sweep->param == SweepParam::Q)) {
      throw UsageError("deformation: q-deformation selected but q not given");
    }
  }
  if (c.atomic) {
    if (c.preset && !(*c.atomic == atomic))
      warnings.push_back("preset " + preset_name +
                         " initial atomic state overridden");
    atomic = *c.atomic;
  }
  if (sweep_in) {
    if (sweep_in->values.empty())
      throw UsageError("values: sweep needs at least one value");
    sweep = sweep_in;
    if (!c.preset)
      prefix = "sweep";
  }

  if (!(c.lambda > 0.0) || !std::isfinite(c.lambda))
    throw UsageError("lambda: must be > 0");
  if (c.samples < 1)
    throw UsageError("samples: must be >= 1");
  if (!(c.t_max >= 0.0))
    throw UsageError("t_max: must be >= 0");
  if (c.samples > 1 && c.t_max == 0.0)
    throw UsageError("t_max: must be > 0 for more than one sample");

  CurveSpec base;
  base.params.lambda = c.lambda;
  base.params.delta = delta;
  base.params.kappa_d = kappa_d;
  if (has_q)
    base.params.deformation =
        DeformationSpec::q_deformed(q, c.allow_q_above_one);
  if (const auto *p = std::get_if<AtomicPreset>(&atomic)) {
    base.atomic = atomic_preset(*p);
    base.atomic_name = std::string(to_string(*p));
  } else {
    base.atomic = std::get<AtomicInit>(atomic);
    base.atomic_name = "explicit";
  }
  base.field.alpha = c.alpha;
  base.theta = theta;
  base.phi = phi;

  const auto finish = [&](CurveSpec curve) {
    if (curve.params.kappa_d < 0.0)
      throw UsageError("kappa_d: must be >= 0");
    try {
      curve.params.validate();
    } catch (const ParameterError &e) {
      throw UsageError(std::string("q: ") + e.what());
    }
    curve.field.n_max =
        c.n_max ? *c.n_max : minimal_n_max(curve.field.alpha);
    if (c.n_max) {
      try {
        coherent_amplitudes(curve.field.alpha, curve.field.n_max);
      } catch (const TruncationError &e) {
        throw UsageError(std::string("n_max: ") + e.what());
      } catch (const DomainError &e) {
        throw UsageError(std::string("n_max: ") + e.what());
      }
    }
    return curve;
  };

  std::vector<CurveSpec> curves;
  if (!sweep) {
    CurveSpec curve = base;
    curve.label = prefix;
    curves.push_back(finish(std::move(curve)));
    return curves;
  }
  for (const std::string &raw : sweep->values) {
    CurveSpec curve = base;
    std::string shown;
    switch (sweep->param) {
    case SweepParam::Q: {
      const double v = parse_real(raw, "q");
      curve.params.deformation =
          DeformationSpec::q_deformed(v, c.allow_q_above_one);
      shown = format_label_value(v);
      break;
    }
    case SweepParam::KappaD:
      curve.params.kappa_d = parse_real(raw, "kappa_d");
      shown = format_label_value(curve.params.kappa_d);
      break;
    case SweepParam::Delta:
      curve.params.delta = parse_real(raw, "delta");
      shown = format_label_value(curve.params.delta);
      break;
    case SweepParam::Theta:
      curve.theta = parse_angle(raw);
      shown = std::string(trim(raw));
      break;
    case SweepParam::Phi:
      curve.phi = parse_angle(raw);
      shown = std::string(trim(raw));
      break;
    case SweepParam::Alpha:
      curve.field.alpha = parse_complex(raw);
      shown = std::string(trim(raw));
      break;
    }
    curve.label = prefix + "_" + std::string(to_string(sweep->param)) + "=" +
                  shown;
    curves.push_back(finish(std::move(curve)));
  }
  return curves;
}

} // namespace qdw
