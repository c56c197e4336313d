#include "qdwigner/output.hpp"

#include <cctype>
#include <cstdio>

namespace qdw {

void write_series_csv(std::ostream &out, const WignerSeries &series) {
  out << series_csv_header << "\n";
  char buf[128];
  for (std::size_t i = 0; i < series.w.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n",
                  series.lambda_t[i], series.theta, series.phi, series.w[i]);
    out << buf;
  }
}

std::string file_stem(const std::string &label) {
  std::string out;
  out.reserve(label.size());
  for (const char ch : label) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || ch == '.' || ch == '-' || ch == '_' || ch == '=')
      out += ch;
    else
      out += '_';
  }
  return out;
}

nlohmann::json curve_metadata(const CurveSpec &curve, const RunConfig &config,
                              const JointState &initial) {
  using nlohmann::json;
  const auto &p = curve.params;
  json atomic = json::array();
  for (const cplx &a : curve.atomic.a)
    atomic.push_back({a.real(), a.imag()});

  json meta = {
      {"label", curve.label},
      {"preset", config.preset ? json(std::string(to_string(*config.preset)))
                               : json(nullptr)},
      {"lambda", p.lambda},
      {"kappa_d", p.kappa_d},
      {"delta", p.delta},
      {"deformation",
       p.deformation.kind == DeformationKind::Identity ? "identity" : "q"},
      {"q", p.deformation.kind == DeformationKind::Identity
                ? json(nullptr)
                : json(p.deformation.q)},
      {"alpha", {{"re", curve.field.alpha.real()},
                 {"im", curve.field.alpha.imag()}}},
      {"n_max", curve.field.n_max},
      {"atomic_state", curve.atomic_name},
      {"atomic_amplitudes", atomic},
      {"theta", curve.theta},
      {"phi", curve.phi},
      {"t_max", config.t_max},
      {"samples", config.samples},
      {"time_unit", "lambda_t"},
      {"method", config.method == Method::Closed ? "closed" : "ode"},
      {"renormalize", config.renormalize},
      {"include_remainder", config.include_remainder},
      {"remainder_frozen", true},
      {"norm_deficit", initial.norm_deficit},
      {"block_norm", initial.block_norm2()},
  };
  return meta;
}

nlohmann::json matrix_json(const Eigen::MatrixXcd &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json density_dump(const Trajectory &traj, bool include_remainder) {
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const DensityMatrix4 rho = reduce_to_atoms(traj.states[k], include_remainder);
    const DensityMatrix2 rho_a = reduce_to_alice(rho);
    samples.push_back({{"lambda_t", traj.times[k]},
                       {"rho_ab", matrix_json(rho.m)},
                       {"rho_a", matrix_json(rho_a.m)}});
  }
  return {{"basis_ab", {"|11>", "|10>", "|01>", "|00>"}},
          {"basis_a", {"|1>", "|0>"}},
          {"samples", samples}};
}

} // namespace qdw
