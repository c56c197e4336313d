#pragma once

#include "qdwigner/config.hpp"
#include "qdwigner/density.hpp"
#include "qdwigner/wigner.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace qdw {

/// CSV header of every Wigner series file.
inline constexpr const char *series_csv_header = "lambda_t,theta,phi,W";

/// Writes `lambda_t,theta,phi,W` rows with 17 significant digits.
void write_series_csv(std::ostream &out, const WignerSeries &series);

/// Maps a curve label to a portable file stem.
std::string file_stem(const std::string &label);

/// Run metadata for one curve: resolved parameters, alpha, truncation,
/// initial-state bookkeeping.
nlohmann::json curve_metadata(const CurveSpec &curve, const RunConfig &config,
                              const JointState &initial);

/// Row-major [[re, im], ...] rows.
nlohmann::json matrix_json(const Eigen::MatrixXcd &m);

/// Per-sample rho_AB and rho_A of a trajectory.
nlohmann::json density_dump(const Trajectory &traj, bool include_remainder);

} // namespace qdw
