#include "qdwigner/state.hpp"

#include "qdwigner/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace qdw {

void AtomicInit::validate() const {
  double norm2 = 0.0;
  for (const cplx &x : a)
    norm2 += std::norm(x);
  if (!(std::abs(norm2 - 1.0) <= 1e-12))
    throw ParameterError("atomic amplitudes must be normalized, |a|^2 = " +
                         std::to_string(norm2));
}

AtomicInit atomic_preset(AtomicPreset preset) {
  switch (preset) {
  case AtomicPreset::Bell: {
    const double s = 1.0 / std::sqrt(2.0);
    return {{cplx{s}, cplx{0.0}, cplx{0.0}, cplx{s}}};
  }
  case AtomicPreset::Product:
    return {{cplx{0.5}, cplx{0.5}, cplx{0.5}, cplx{0.5}}};
  case AtomicPreset::Excited:
    return {{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{0.0}}};
  }
  throw DomainError("unknown atomic preset");
}

AtomicPreset parse_atomic_preset(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bell")
    return AtomicPreset::Bell;
  if (lower == "product")
    return AtomicPreset::Product;
  if (lower == "excited")
    return AtomicPreset::Excited;
  throw UsageError("atomic: unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(AtomicPreset preset) {
  switch (preset) {
  case AtomicPreset::Bell:
    return "bell";
  case AtomicPreset::Product:
    return "product";
  case AtomicPreset::Excited:
    return "excited";
  }
  return "?";
}

FieldInit FieldInit::with_default_truncation(cplx alpha) {
  return {alpha, minimal_n_max(alpha)};
}

double JointState::block_norm2() const {
  double s = 0.0;
  for (const auto &b : blocks)
    s += b.squaredNorm();
  return s;
}

double JointState::remainder_norm2() const {
  double s = 0.0;
  for (const cplx &x : remainder)
    s += std::norm(x);
  return s;
}

JointState make_joint_state(const AtomicInit &atomic, const FieldInit &field,
                            bool renormalize) {
  atomic.validate();
  // Block n_max reaches photon number n_max + 2. The tail check runs at the
  // configured n_max; the extra two amplitudes only shrink it further.
  coherent_amplitudes(field.alpha, field.n_max);
  const auto q = coherent_amplitudes(field.alpha, field.n_max + 2);
  const auto &a = atomic.a;

  JointState s;
  s.blocks.resize(static_cast<std::size_t>(field.n_max) + 1);
  for (int n = 0; n <= field.n_max; ++n) {
    s.blocks[n] << q[n] * a[0], q[n + 1] * a[1], q[n + 1] * a[2],
        q[n + 2] * a[3];
  }
  s.remainder = {q[0] * a[1], q[0] * a[2], q[0] * a[3], q[1] * a[3]};
  s.norm_deficit = std::norm(q[0]) * (std::norm(a[1]) + std::norm(a[2])) +
                   (std::norm(q[0]) + std::norm(q[1])) * std::norm(a[3]);

  if (renormalize && s.norm_deficit > 0.0) {
    if (s.norm_deficit >= 1.0)
      throw ParameterError(
          "cannot renormalize: initial state has no weight in the blocks");
    const double scale = 1.0 / std::sqrt(1.0 - s.norm_deficit);
    for (auto &b : s.blocks)
      b *= scale;
    s.renormalized = true;
  }
  return s;
}

} // namespace qdw
