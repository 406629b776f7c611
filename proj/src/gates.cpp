// SPDX-License-Identifier: MIT

#include "qutil/gates.hpp"

#include "qutil/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace qutil {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kAngleTol = 1e-10;

constexpr std::array<GateInfo, kGateKindCount> kInfo{{
    {"H", 1, 0},         {"I", 1, 0},          {"P", 1, 1},
    {"R", 1, 2},         {"Rx", 1, 1},         {"Ry", 1, 1},
    {"Rz", 1, 1},        {"S", 1, 0},          {"Sdg", 1, 0},
    {"SX", 1, 0},        {"SXdg", 1, 0},       {"T", 1, 0},
    {"Tdg", 1, 0},       {"U", 1, 3},          {"X", 1, 0},
    {"Y", 1, 0},         {"Z", 1, 0},          {"CH", 2, 0},
    {"CP", 2, 1},        {"CRx", 2, 1},        {"CRy", 2, 1},
    {"CRz", 2, 1},       {"CS", 2, 0},         {"CSdg", 2, 0},
    {"CSX", 2, 0},       {"CU", 2, 4},         {"CX", 2, 0},
    {"CY", 2, 0},        {"CZ", 2, 0},         {"DCX", 2, 0},
    {"ECR", 2, 0},       {"Rxx", 2, 1},        {"RxxMinusYy", 2, 2},
    {"RxxPlusYy", 2, 2}, {"Ryy", 2, 1},        {"Rzx", 2, 1},
    {"Rzz", 2, 1},       {"SWAP", 2, 0},       {"iSWAP", 2, 0},
}};

constexpr auto make_all_kinds() {
  std::array<GateKind, kGateKindCount> kinds{};
  for (std::size_t i = 0; i < kGateKindCount; ++i) {
    kinds[i] = static_cast<GateKind>(i);
  }
  return kinds;
}

constexpr std::array<GateKind, kGateKindCount> kAllKinds = make_all_kinds();
constexpr std::size_t kOneQubitCount = 17;

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

Matrix2 mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix2 m;
  m << a, b, c, d;
  return m;
}

Matrix2 rx(double t) {
  return mat2(std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2),
              std::cos(t / 2));
}
Matrix2 ry(double t) {
  return mat2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2),
              std::cos(t / 2));
}
Matrix2 rz(double t) {
  return mat2(std::exp(-kI * t / 2.0), 0, 0, std::exp(kI * t / 2.0));
}
Matrix2 phase(double l) { return mat2(1, 0, 0, std::exp(kI * l)); }
Matrix2 u3(double t, double p, double l) {
  return mat2(std::cos(t / 2), -std::exp(kI * l) * std::sin(t / 2),
              std::exp(kI * p) * std::sin(t / 2),
              std::exp(kI * (p + l)) * std::cos(t / 2));
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return m;
}

Matrix4 controlled(const Matrix2& u) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m.block<2, 2>(2, 2) = u;
  return m;
}

/// exp(-i t/2 A (x) B) for Paulis A, B (both square to identity).
Matrix4 pauli_rotation(const Matrix2& a, const Matrix2& b, double t) {
  return std::cos(t / 2) * Matrix4::Identity() -
         kI * std::sin(t / 2) * kron(a, b);
}

const Matrix2& pauli_x() {
  static const Matrix2 m = mat2(0, 1, 1, 0);
  return m;
}
const Matrix2& pauli_y() {
  static const Matrix2 m = mat2(0, -kI, kI, 0);
  return m;
}
const Matrix2& pauli_z() {
  static const Matrix2 m = mat2(1, 0, 0, -1);
  return m;
}

Matrix4 swap_operands(const Matrix4& m) {
  static const std::array<int, 4> perm{0, 2, 1, 3};
  Matrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(perm[i], perm[j]) = m(i, j);
    }
  }
  return out;
}

void check_params(GateKind kind, std::size_t count) {
  if (count != static_cast<std::size_t>(param_count(kind))) {
    throw ParameterArityError(std::string(name(kind)) + " expects " +
                              std::to_string(param_count(kind)) +
                              " parameter(s), got " + std::to_string(count));
  }
}

TemplateGate g1(GateKind kind, Angles params, std::uint8_t slot) {
  return TemplateGate{kind, params, {slot, 0}};
}
TemplateGate g2(GateKind kind, Angles params, std::uint8_t s0,
                std::uint8_t s1) {
  return TemplateGate{kind, params, {s0, s1}};
}

/// Textbook two-qubit constructions. Output may still contain non-basis kinds
/// (one-qubit gates and, for a few kinds, other two-qubit kinds); the caller
/// expands recursively.
Template two_qubit_template(GateKind kind, const Angles& p) {
  using K = GateKind;
  constexpr std::uint8_t a = 0;
  constexpr std::uint8_t b = 1;
  switch (kind) {
  case K::CH:
    return {g1(K::Ry, {-pi / 4}, b), g2(K::CZ, {}, a, b),
            g1(K::Ry, {pi / 4}, b)};
  case K::CP:
    return {g1(K::P, {p[0] / 2}, a), g2(K::CX, {}, a, b),
            g1(K::P, {-p[0] / 2}, b), g2(K::CX, {}, a, b),
            g1(K::P, {p[0] / 2}, b)};
  case K::CRx:
    return {g1(K::H, {}, b),         g1(K::Rz, {p[0] / 2}, b),
            g2(K::CX, {}, a, b),     g1(K::Rz, {-p[0] / 2}, b),
            g2(K::CX, {}, a, b),     g1(K::H, {}, b)};
  case K::CRy:
    return {g1(K::Ry, {p[0] / 2}, b), g2(K::CX, {}, a, b),
            g1(K::Ry, {-p[0] / 2}, b), g2(K::CX, {}, a, b)};
  case K::CRz:
    return {g1(K::Rz, {p[0] / 2}, b), g2(K::CX, {}, a, b),
            g1(K::Rz, {-p[0] / 2}, b), g2(K::CX, {}, a, b)};
  case K::CS:
    return {g2(K::CP, {pi / 2}, a, b)};
  case K::CSdg:
    return {g2(K::CP, {-pi / 2}, a, b)};
  case K::CSX:
    return {g1(K::H, {}, b), g2(K::CP, {pi / 2}, a, b), g1(K::H, {}, b)};
  case K::CU: {
    const double theta = p[0];
    const double ph = p[1];
    const double lam = p[2];
    const double gamma = p[3];
    return {g1(K::Rz, {(lam - ph) / 2}, b),
            g2(K::CX, {}, a, b),
            g1(K::Rz, {-(ph + lam) / 2}, b),
            g1(K::Ry, {-theta / 2}, b),
            g2(K::CX, {}, a, b),
            g1(K::Ry, {theta / 2}, b),
            g1(K::Rz, {ph}, b),
            g1(K::P, {gamma + (ph + lam) / 2}, a)};
  }
  case K::CY:
    return {g1(K::Sdg, {}, b), g2(K::CX, {}, a, b), g1(K::S, {}, b)};
  case K::CZ:
    return {g1(K::H, {}, b), g2(K::CX, {}, a, b), g1(K::H, {}, b)};
  case K::DCX:
    return {g2(K::CX, {}, a, b), g2(K::CX, {}, b, a)};
  case K::ECR:
    return {g2(K::Rzx, {pi / 2}, a, b), g1(K::X, {}, a)};
  case K::Rxx:
    return {g1(K::H, {}, a), g1(K::H, {}, b), g2(K::Rzz, {p[0]}, a, b),
            g1(K::H, {}, a), g1(K::H, {}, b)};
  case K::Ryy:
    return {g1(K::Rx, {pi / 2}, a),  g1(K::Rx, {pi / 2}, b),
            g2(K::Rzz, {p[0]}, a, b), g1(K::Rx, {-pi / 2}, a),
            g1(K::Rx, {-pi / 2}, b)};
  case K::Rzx:
    return {g1(K::H, {}, b), g2(K::Rzz, {p[0]}, a, b), g1(K::H, {}, b)};
  case K::Rzz:
    return {g2(K::CX, {}, a, b), g1(K::Rz, {p[0]}, b), g2(K::CX, {}, a, b)};
  case K::RxxPlusYy:
    return {g1(K::Rz, {p[1]}, a),     g1(K::Rx, {pi / 2}, a),
            g1(K::Rx, {pi / 2}, b),   g2(K::CX, {}, a, b),
            g1(K::Rx, {p[0] / 2}, a), g1(K::Rz, {p[0] / 2}, b),
            g2(K::CX, {}, a, b),      g1(K::Rx, {-pi / 2}, a),
            g1(K::Rx, {-pi / 2}, b),  g1(K::Rz, {-p[1]}, a)};
  case K::RxxMinusYy:
    return {g1(K::X, {}, b), g2(K::RxxPlusYy, {p[0], -p[1]}, a, b),
            g1(K::X, {}, b)};
  case K::SWAP:
    return {g2(K::CX, {}, a, b), g2(K::CX, {}, b, a), g2(K::CX, {}, a, b)};
  case K::iSWAP:
    return {g2(K::RxxPlusYy, {-pi, 0.0}, a, b)};
  default:
    break;
  }
  throw UnsupportedTranslationError("no two-qubit template for " +
                                    std::string(name(kind)));
}

void expand_into(GateKind kind, const Angles& params,
                 std::array<std::uint8_t, 2> slots, const BasisSet& basis,
                 Template& out, int depth) {
  if (depth > 8) {
    throw UnsupportedTranslationError("template recursion too deep for " +
                                      std::string(name(kind)));
  }
  if (basis.contains(kind)) {
    out.push_back(TemplateGate{kind, params, slots});
    return;
  }
  if (arity(kind) == 1) {
    for (auto gate : synthesize_1q(matrix1(kind, params), basis)) {
      gate.slots = {slots[0], 0};
      out.push_back(gate);
    }
    return;
  }
  if (kind == GateKind::CX) {
    if (!basis.contains(GateKind::CZ)) {
      throw UnsupportedTranslationError(
          "basis " + basis.to_string() + " has no entangling gate (CX or CZ)");
    }
    const std::array<std::uint8_t, 2> target{slots[1], 0};
    expand_into(GateKind::H, {}, target, basis, out, depth + 1);
    out.push_back(TemplateGate{GateKind::CZ, {}, slots});
    expand_into(GateKind::H, {}, target, basis, out, depth + 1);
    return;
  }
  for (const auto& gate : two_qubit_template(kind, params)) {
    std::array<std::uint8_t, 2> mapped{slots[gate.slots[0]],
                                       slots[gate.slots[1]]};
    if (arity(gate.kind) == 1) {
      mapped[1] = 0;
    }
    expand_into(gate.kind, gate.params, mapped, basis, out, depth + 1);
  }
}

void push_rz(Template& out, double angle) {
  const double wrapped = wrap_angle(angle);
  if (std::abs(wrapped) > kAngleTol) {
    out.push_back(g1(GateKind::Rz, {wrapped}, 0));
  }
}

} // namespace

const GateInfo& info(GateKind kind) noexcept {
  return kInfo[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> kind_from_name(std::string_view text) {
  for (auto kind : kAllKinds) {
    if (iequals(info(kind).name, text)) {
      return kind;
    }
  }
  // Spellings used in the literature for the two XY-mixing gates.
  if (iequals(text, "Rxx-yy") || iequals(text, "XXMinusYY")) {
    return GateKind::RxxMinusYy;
  }
  if (iequals(text, "Rxx+yy") || iequals(text, "XXPlusYY")) {
    return GateKind::RxxPlusYy;
  }
  return std::nullopt;
}

std::span<const GateKind> one_qubit_kinds() noexcept {
  return std::span<const GateKind>(kAllKinds).first(kOneQubitCount);
}
std::span<const GateKind> two_qubit_kinds() noexcept {
  return std::span<const GateKind>(kAllKinds).subspan(kOneQubitCount);
}
std::span<const GateKind> all_kinds() noexcept { return kAllKinds; }

Angles::Angles(std::initializer_list<double> values)
    : Angles(std::span<const double>(values.begin(), values.size())) {}

Angles::Angles(std::span<const double> values) {
  if (values.size() > kCapacity) {
    throw ParameterArityError("at most 4 gate parameters are supported");
  }
  std::copy(values.begin(), values.end(), values_.begin());
  size_ = values.size();
}

void Angles::push_back(double value) {
  if (size_ == kCapacity) {
    throw ParameterArityError("at most 4 gate parameters are supported");
  }
  values_[size_++] = value;
}

bool operator==(const Angles& a, const Angles& b) noexcept {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

BasisSet::BasisSet(std::initializer_list<GateKind> kinds) {
  for (auto kind : kinds) {
    insert(kind);
  }
}

void BasisSet::insert(GateKind kind) noexcept {
  mask_ |= std::uint64_t{1} << static_cast<unsigned>(kind);
}

std::size_t BasisSet::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<GateKind> BasisSet::kinds() const {
  std::vector<GateKind> out;
  for (auto kind : kAllKinds) {
    if (contains(kind)) {
      out.push_back(kind);
    }
  }
  return out;
}

std::string BasisSet::to_string() const {
  std::string out = "{";
  for (auto kind : kinds()) {
    if (out.size() > 1) {
      out += ",";
    }
    out += name(kind);
  }
  return out + "}";
}

BasisSet falcon_basis() {
  return {GateKind::CX, GateKind::I, GateKind::Rz, GateKind::SX, GateKind::X};
}

Matrix2 matrix1(GateKind kind, const Angles& p) {
  using K = GateKind;
  const double r2 = 1.0 / std::numbers::sqrt2;
  switch (kind) {
  case K::H:
    return mat2(r2, r2, r2, -r2);
  case K::I:
    return Matrix2::Identity();
  case K::P:
    return phase(p[0]);
  case K::R: {
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    return mat2(c, -kI * std::exp(-kI * p[1]) * s,
                -kI * std::exp(kI * p[1]) * s, c);
  }
  case K::Rx:
    return rx(p[0]);
  case K::Ry:
    return ry(p[0]);
  case K::Rz:
    return rz(p[0]);
  case K::S:
    return mat2(1, 0, 0, kI);
  case K::Sdg:
    return mat2(1, 0, 0, -kI);
  case K::SX:
    return 0.5 * mat2(1.0 + kI, 1.0 - kI, 1.0 - kI, 1.0 + kI);
  case K::SXdg:
    return 0.5 * mat2(1.0 - kI, 1.0 + kI, 1.0 + kI, 1.0 - kI);
  case K::T:
    return phase(pi / 4);
  case K::Tdg:
    return phase(-pi / 4);
  case K::U:
    return u3(p[0], p[1], p[2]);
  case K::X:
    return pauli_x();
  case K::Y:
    return pauli_y();
  case K::Z:
    return pauli_z();
  default:
    break;
  }
  throw ParameterArityError(std::string(name(kind)) +
                            " is not a one-qubit gate");
}

Matrix4 matrix2(GateKind kind, const Angles& p) {
  using K = GateKind;
  switch (kind) {
  case K::CH:
    return controlled(matrix1(K::H, {}));
  case K::CP:
    return controlled(phase(p[0]));
  case K::CRx:
    return controlled(rx(p[0]));
  case K::CRy:
    return controlled(ry(p[0]));
  case K::CRz:
    return controlled(rz(p[0]));
  case K::CS:
    return controlled(matrix1(K::S, {}));
  case K::CSdg:
    return controlled(matrix1(K::Sdg, {}));
  case K::CSX:
    return controlled(matrix1(K::SX, {}));
  case K::CU:
    return controlled(std::exp(kI * p[3]) * u3(p[0], p[1], p[2]));
  case K::CX:
    return controlled(pauli_x());
  case K::CY:
    return controlled(pauli_y());
  case K::CZ:
    return controlled(pauli_z());
  case K::DCX: {
    const Matrix4 cx01 = controlled(pauli_x());
    return swap_operands(cx01) * cx01;
  }
  case K::ECR:
    return kron(pauli_x(), Matrix2::Identity()) *
           pauli_rotation(pauli_z(), pauli_x(), pi / 2);
  case K::Rxx:
    return pauli_rotation(pauli_x(), pauli_x(), p[0]);
  case K::Ryy:
    return pauli_rotation(pauli_y(), pauli_y(), p[0]);
  case K::Rzx:
    return pauli_rotation(pauli_z(), pauli_x(), p[0]);
  case K::Rzz:
    return pauli_rotation(pauli_z(), pauli_z(), p[0]);
  case K::RxxMinusYy: {
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    Matrix4 m = Matrix4::Identity();
    m(0, 0) = c;
    m(3, 3) = c;
    m(0, 3) = -kI * s * std::exp(-kI * p[1]);
    m(3, 0) = -kI * s * std::exp(kI * p[1]);
    return m;
  }
  case K::RxxPlusYy: {
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    Matrix4 m = Matrix4::Identity();
    m(1, 1) = c;
    m(2, 2) = c;
    m(1, 2) = -kI * s * std::exp(kI * p[1]);
    m(2, 1) = -kI * s * std::exp(-kI * p[1]);
    return m;
  }
  case K::SWAP: {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return m;
  }
  case K::iSWAP: {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = kI;
    return m;
  }
  default:
    break;
  }
  throw ParameterArityError(std::string(name(kind)) +
                            " is not a two-qubit gate");
}

MatrixX matrix(GateKind kind, std::span<const double> params) {
  check_params(kind, params.size());
  const Angles angles(params);
  if (arity(kind) == 1) {
    return matrix1(kind, angles);
  }
  return matrix2(kind, angles);
}

Inverse inverse_of(GateKind kind, const Angles& p) {
  using K = GateKind;
  check_params(kind, p.size());
  switch (kind) {
  case K::H:
  case K::I:
  case K::X:
  case K::Y:
  case K::Z:
  case K::CH:
  case K::CX:
  case K::CY:
  case K::CZ:
  case K::ECR:
  case K::SWAP:
    return {kind, p};
  case K::P:
  case K::Rx:
  case K::Ry:
  case K::Rz:
  case K::CP:
  case K::CRx:
  case K::CRy:
  case K::CRz:
  case K::Rxx:
  case K::Ryy:
  case K::Rzx:
  case K::Rzz:
    return {kind, {-p[0]}};
  case K::R:
  case K::RxxMinusYy:
  case K::RxxPlusYy:
    return {kind, {-p[0], p[1]}};
  case K::S:
    return {K::Sdg, {}};
  case K::Sdg:
    return {K::S, {}};
  case K::SX:
    return {K::SXdg, {}};
  case K::SXdg:
    return {K::SX, {}};
  case K::T:
    return {K::Tdg, {}};
  case K::Tdg:
    return {K::T, {}};
  case K::U:
    return {K::U, {-p[0], -p[2], -p[1]}};
  case K::CS:
    return {K::CSdg, {}};
  case K::CSdg:
    return {K::CS, {}};
  case K::CSX:
    return {K::CU, {-pi / 2, -pi / 2, pi / 2, -pi / 4}};
  case K::CU:
    return {K::CU, {-p[0], -p[2], -p[1], -p[3]}};
  case K::DCX:
    return {K::DCX, {}, true};
  case K::iSWAP:
    return {K::RxxPlusYy, {pi, 0.0}};
  }
  return {kind, p};
}

double wrap_angle(double angle) noexcept {
  double wrapped = std::remainder(angle, 2 * pi);
  if (wrapped <= -pi) {
    wrapped += 2 * pi;
  }
  return wrapped;
}

EulerAngles euler_angles(const Matrix2& m) {
  const Complex det = m.determinant();
  const Complex root = std::sqrt(det);
  const Matrix2 su = m / root;
  const double theta = 2 * std::atan2(std::abs(su(1, 0)), std::abs(su(0, 0)));
  const double sum_half = std::abs(su(1, 1)) > kAngleTol ? std::arg(su(1, 1)) : 0.0;
  const double diff_half = std::abs(su(1, 0)) > kAngleTol ? std::arg(su(1, 0)) : 0.0;
  const double phi = sum_half + diff_half;
  const double lambda = sum_half - diff_half;
  // m = root * su and su = e^{-i(phi+lambda)/2} U(theta, phi, lambda).
  const double global = std::arg(root) - (phi + lambda) / 2;
  return {theta, phi, lambda, global};
}

Template synthesize_1q(const Matrix2& m, const BasisSet& basis) {
  using K = GateKind;
  const auto [theta, phi, lambda, global] = euler_angles(m);
  (void)global;
  Template out;
  const bool is_identity =
      std::abs(theta) < kAngleTol && std::abs(wrap_angle(phi + lambda)) < kAngleTol;
  if (is_identity) {
    return out;
  }
  if (basis.contains(K::Rz) && basis.contains(K::SX)) {
    if (std::abs(theta) < kAngleTol) {
      push_rz(out, phi + lambda);
    } else if (std::abs(theta - pi / 2) < kAngleTol) {
      push_rz(out, lambda - pi / 2);
      out.push_back(g1(K::SX, {}, 0));
      push_rz(out, phi + pi / 2);
    } else if (std::abs(theta - pi) < kAngleTol && basis.contains(K::X)) {
      // Rz(phi+pi/2) X Rz(lambda-pi/2) = Rz(phi-lambda+pi) X
      out.push_back(g1(K::X, {}, 0));
      push_rz(out, phi - lambda + pi);
    } else {
      push_rz(out, lambda);
      out.push_back(g1(K::SX, {}, 0));
      push_rz(out, theta + pi);
      out.push_back(g1(K::SX, {}, 0));
      push_rz(out, phi + pi);
    }
    return out;
  }
  if (basis.contains(K::U)) {
    out.push_back(g1(K::U, {theta, phi, lambda}, 0));
    return out;
  }
  if (basis.contains(K::Rz) && basis.contains(K::Ry)) {
    push_rz(out, lambda);
    if (std::abs(theta) > kAngleTol) {
      out.push_back(g1(K::Ry, {theta}, 0));
    }
    push_rz(out, phi);
    return out;
  }
  throw UnsupportedTranslationError("basis " + basis.to_string() +
                                    " has no one-qubit Euler scheme");
}

Template translate_template(GateKind kind, const Angles& params,
                            const BasisSet& basis) {
  check_params(kind, params.size());
  Template out;
  expand_into(kind, params, {0, 1}, basis, out, 0);
  return out;
}

double phase_aligned_distance(const MatrixX& a, const MatrixX& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  const Complex overlap = (b.adjoint() * a).trace();
  Complex align{1.0, 0.0};
  if (std::abs(overlap) > 1e-12) {
    align = overlap / std::abs(overlap);
  } else {
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    b.cwiseAbs().maxCoeff(&row, &col);
    if (std::abs(b(row, col)) > 0 && std::abs(a(row, col)) > 0) {
      const Complex ratio = a(row, col) / b(row, col);
      align = ratio / std::abs(ratio);
    }
  }
  return (a - align * b).cwiseAbs().maxCoeff();
}

} // namespace qutil
