// SPDX-License-Identifier: MIT

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qutil {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;

/**
 * Every supported gate. One-qubit kinds first, then two-qubit kinds, both in
 * alphabetical order. Angle conventions follow the Qiskit definitions:
 *
 *  - R(theta, phi)          = exp(-i theta/2 (cos(phi) X + sin(phi) Y))
 *  - U(theta, phi, lambda)  = Rz(phi) Ry(theta) Rz(lambda) * e^{i(phi+lambda)/2}
 *  - CU(theta, phi, lambda, gamma) = controlled e^{i gamma} U(theta, phi, lambda)
 *  - RxxPlusYy(theta, beta) = Rz_0(-beta) exp(-i theta/4 (XX + YY)) Rz_0(beta)
 *  - RxxMinusYy(theta, beta)= Rz_1(beta) exp(-i theta/4 (XX - YY)) Rz_1(-beta)
 *
 * Two-qubit matrices are written in the textbook ordering: the first operand
 * is the most significant bit of the 4-dimensional index, so
 * CX = [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]] with operand 0 as control.
 */
enum class GateKind : std::uint8_t {
  // one-qubit
  H,
  I,
  P,
  R,
  Rx,
  Ry,
  Rz,
  S,
  Sdg,
  SX,
  SXdg,
  T,
  Tdg,
  U,
  X,
  Y,
  Z,
  // two-qubit
  CH,
  CP,
  CRx,
  CRy,
  CRz,
  CS,
  CSdg,
  CSX,
  CU,
  CX,
  CY,
  CZ,
  DCX,
  ECR,
  Rxx,
  RxxMinusYy,
  RxxPlusYy,
  Ryy,
  Rzx,
  Rzz,
  SWAP,
  iSWAP,
};

inline constexpr std::size_t kGateKindCount = 39;

struct GateInfo {
  std::string_view name;
  int arity;
  int param_count;
};

[[nodiscard]] const GateInfo& info(GateKind kind) noexcept;
[[nodiscard]] inline std::string_view name(GateKind kind) noexcept {
  return info(kind).name;
}
[[nodiscard]] inline int arity(GateKind kind) noexcept {
  return info(kind).arity;
}
[[nodiscard]] inline int param_count(GateKind kind) noexcept {
  return info(kind).param_count;
}
/// Case-insensitive lookup by canonical name.
[[nodiscard]] std::optional<GateKind> kind_from_name(std::string_view name);

[[nodiscard]] std::span<const GateKind> one_qubit_kinds() noexcept;
[[nodiscard]] std::span<const GateKind> two_qubit_kinds() noexcept;
[[nodiscard]] std::span<const GateKind> all_kinds() noexcept;

/// Inline list of at most four rotation angles (radians).
class Angles {
public:
  static constexpr std::size_t kCapacity = 4;

  constexpr Angles() = default;
  Angles(std::initializer_list<double> values);
  explicit Angles(std::span<const double> values);

  [[nodiscard]] constexpr std::size_t size() const noexcept { return size_; }
  [[nodiscard]] constexpr bool empty() const noexcept { return size_ == 0; }
  [[nodiscard]] constexpr double operator[](std::size_t i) const noexcept {
    return values_[i];
  }
  [[nodiscard]] constexpr double& operator[](std::size_t i) noexcept {
    return values_[i];
  }
  [[nodiscard]] const double* begin() const noexcept { return values_.data(); }
  [[nodiscard]] const double* end() const noexcept {
    return values_.data() + size_;
  }
  void push_back(double value);

  friend bool operator==(const Angles& a, const Angles& b) noexcept;

private:
  std::array<double, kCapacity> values_{};
  std::size_t size_ = 0;
};

/// Ordered set of gate kinds a target executes natively.
class BasisSet {
public:
  BasisSet() = default;
  BasisSet(std::initializer_list<GateKind> kinds);

  void insert(GateKind kind) noexcept;
  [[nodiscard]] bool contains(GateKind kind) const noexcept {
    return (mask_ >> static_cast<unsigned>(kind)) & 1U;
  }
  [[nodiscard]] bool empty() const noexcept { return mask_ == 0; }
  [[nodiscard]] std::size_t size() const noexcept;
  /// Kinds in enumeration order.
  [[nodiscard]] std::vector<GateKind> kinds() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BasisSet&, const BasisSet&) = default;

private:
  std::uint64_t mask_ = 0;
};

/// {CX, I, Rz, SX, X}
[[nodiscard]] BasisSet falcon_basis();

/// Unitary of a gate. Throws ParameterArityError on a wrong angle count.
[[nodiscard]] MatrixX matrix(GateKind kind, std::span<const double> params);
[[nodiscard]] inline MatrixX matrix(GateKind kind, const Angles& params) {
  return matrix(kind, std::span<const double>(params.begin(), params.size()));
}
/// Fast path for one-qubit kinds (no arity check beyond debug asserts).
[[nodiscard]] Matrix2 matrix1(GateKind kind, const Angles& params);
[[nodiscard]] Matrix4 matrix2(GateKind kind, const Angles& params);

struct Inverse {
  GateKind kind;
  Angles params;
  /// The inverse acts on the operands in swapped order (only DCX needs this).
  bool reverse_operands = false;
};

[[nodiscard]] Inverse inverse_of(GateKind kind, const Angles& params);

/// One gate of a decomposition template. `slots` index the operands of the
/// gate being decomposed (0 or 1); slots[1] is unused for one-qubit gates.
struct TemplateGate {
  GateKind kind;
  Angles params;
  std::array<std::uint8_t, 2> slots{0, 0};
};

using Template = std::vector<TemplateGate>;

/// Decomposes one gate into kinds drawn from `basis`.
///
/// Kinds already in the basis are returned unchanged. One-qubit kinds go
/// through the Euler scheme registered for the basis (Rz-SX-Rz-SX-Rz when the
/// basis has Rz and SX, a single U when it has U, Rz-Ry-Rz when it has Rz and
/// Ry). Two-qubit kinds expand through a fixed template table built on CX
/// (or CZ when the basis lacks CX); each uses at most three entangling gates.
/// Throws UnsupportedTranslationError when no route into the basis exists.
[[nodiscard]] Template translate_template(GateKind kind, const Angles& params,
                                          const BasisSet& basis);

/// Euler angles (theta, phi, lambda) and global phase such that
/// m = e^{i phase} U(theta, phi, lambda).
struct EulerAngles {
  double theta;
  double phi;
  double lambda;
  double phase;
};

[[nodiscard]] EulerAngles euler_angles(const Matrix2& m);

/// Synthesizes a one-qubit unitary into the basis's Euler scheme, dropping
/// rotations that are the identity. An identity input yields an empty
/// sequence. Throws UnsupportedTranslationError without a usable scheme.
[[nodiscard]] Template synthesize_1q(const Matrix2& m, const BasisSet& basis);

/// Wraps an angle into (-pi, pi].
[[nodiscard]] double wrap_angle(double angle) noexcept;

/// max |a - e^{i phi} b| over entries, with phi chosen from the largest entry
/// of b. Returns +inf on a dimension mismatch.
[[nodiscard]] double phase_aligned_distance(const MatrixX& a, const MatrixX& b);

} // namespace qutil
