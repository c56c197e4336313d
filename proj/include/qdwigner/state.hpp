#pragma once

#include "qdwigner/algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <string_view>
#include <vector>

namespace qdw {

/// Amplitudes of one excitation block on the ordered basis
/// |1,1,n>, |1,0,n+1>, |0,1,n+1>, |0,0,n+2>.
using BlockAmplitudes = Eigen::Vector4cd;

/// Initial two-atom pure state a1|11> + a2|10> + a3|01> + a4|00>.
struct AtomicInit {
  std::array<cplx, 4> a{};

  /// Throws ParameterError unless sum |a_i|^2 = 1 within 1e-12.
  void validate() const;

  bool operator==(const AtomicInit &) const = default;
};

enum class AtomicPreset { Bell, Product, Excited };

/// Bell: (|11> + |00>)/sqrt2, Product: all amplitudes 1/2, Excited: |11>.
AtomicInit atomic_preset(AtomicPreset preset);

/// Case-insensitive "bell" / "product" / "excited".
AtomicPreset parse_atomic_preset(std::string_view name);
std::string_view to_string(AtomicPreset preset);

/// Coherent field state |alpha> truncated at Fock index n_max.
struct FieldInit {
  cplx alpha{5.0, 0.0};
  int n_max = 0;

  /// Field with the smallest n_max meeting the 1e-12 tail bound.
  static FieldInit with_default_truncation(cplx alpha);

  bool operator==(const FieldInit &) const = default;
};

/// The joint atom-field state restricted to the excitation blocks
/// n = 0..n_max, plus the four low-excitation amplitudes the block ansatz
/// cannot represent.
struct JointState {
  std::vector<BlockAmplitudes> blocks;
  /// Amplitudes on |1,0,0>, |0,1,0>, |0,0,0>, |0,0,1> (atoms, photons).
  std::array<cplx, 4> remainder{};
  double norm_deficit = 0.0;
  bool renormalized = false;

  int n_max() const { return static_cast<int>(blocks.size()) - 1; }

  /// sum over n, j of |C_j^n|^2.
  double block_norm2() const;
  double remainder_norm2() const;
};

/// Projects |psi_atoms> (x) |alpha> onto the excitation blocks:
/// C_1^n = q_n a1, C_2^n = q_{n+1} a2, C_3^n = q_{n+1} a3, C_4^n = q_{n+2} a4.
/// With `renormalize` the block amplitudes are divided by sqrt(1 - deficit).
JointState make_joint_state(const AtomicInit &atomic, const FieldInit &field,
                            bool renormalize = false);

} // namespace qdw
