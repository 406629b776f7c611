// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/gates.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qutil {

using Qubit = std::uint32_t;

/// One gate application. Operand order matters for asymmetric gates.
struct Instruction {
  GateKind kind = GateKind::I;
  Angles params;
  std::array<Qubit, 2> qubits{0, 0};

  Instruction() = default;
  Instruction(GateKind k, std::initializer_list<Qubit> operands,
              Angles angles = {});

  [[nodiscard]] int arity() const noexcept { return qutil::arity(kind); }
  [[nodiscard]] std::span<const Qubit> operands() const noexcept {
    return {qubits.data(), static_cast<std::size_t>(arity())};
  }
  [[nodiscard]] bool touches(Qubit q) const noexcept {
    return qubits[0] == q || (arity() == 2 && qubits[1] == q);
  }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/**
 * Ordered gate list over `width` qubits.
 *
 * Slack records, per qubit, how many generation layers left the qubit idle.
 * It never materializes as instructions, so it cannot make a qubit active.
 */
class Circuit {
public:
  explicit Circuit(std::size_t width = 0);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t size() const noexcept { return instrs_.size(); }
  [[nodiscard]] bool empty() const noexcept { return instrs_.empty(); }
  [[nodiscard]] const std::vector<Instruction>& instructions() const noexcept {
    return instrs_;
  }
  [[nodiscard]] const Instruction& operator[](std::size_t i) const {
    return instrs_[i];
  }
  [[nodiscard]] auto begin() const noexcept { return instrs_.begin(); }
  [[nodiscard]] auto end() const noexcept { return instrs_.end(); }

  /// Validates operand count, range, distinctness and parameter count, then
  /// appends. Throws IndexError / ParameterArityError.
  void append(const Instruction& instr);
  void append(GateKind kind, std::initializer_list<Qubit> operands,
              Angles params = {});
  /// Appends without validation; for passes that already guarantee validity.
  void append_unchecked(const Instruction& instr) { instrs_.push_back(instr); }
  void reserve(std::size_t n) { instrs_.reserve(n); }

  [[nodiscard]] const std::vector<std::uint32_t>& slack() const noexcept {
    return slack_;
  }
  void add_slack(Qubit q, std::uint32_t steps = 1);
  void set_slack(std::vector<std::uint32_t> slack);

  /// Copy with the extra qubits appended as idle wires.
  [[nodiscard]] Circuit widened(std::size_t new_width) const;

  [[nodiscard]] std::size_t count_two_qubit() const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  std::size_t width_;
  std::vector<Instruction> instrs_;
  std::vector<std::uint32_t> slack_;
};

/// Functional append: returns a copy of `c` with `instr` added.
[[nodiscard]] Circuit compose(const Circuit& c, const Instruction& instr);

/// Longest chain of instructions that share qubits, one step per
/// instruction. Slack does not count.
[[nodiscard]] std::size_t depth(const Circuit& c);

/// Sorted set of qubit indices that carry at least one instruction.
class ActiveSet {
public:
  ActiveSet() = default;
  explicit ActiveSet(std::vector<Qubit> indices);

  [[nodiscard]] bool contains(Qubit q) const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
  [[nodiscard]] const std::vector<Qubit>& indices() const noexcept {
    return indices_;
  }
  [[nodiscard]] auto begin() const noexcept { return indices_.begin(); }
  [[nodiscard]] auto end() const noexcept { return indices_.end(); }

  friend bool operator==(const ActiveSet&, const ActiveSet&) = default;

private:
  std::vector<Qubit> indices_;
};

/// Union of all instruction operands; idle (allocated but gate-free) qubits
/// are not included.
[[nodiscard]] ActiveSet active_qubits(const Circuit& c);

/**
 * Line-oriented text form.
 *
 *     # comment
 *     qubits 3
 *     slack 0 2 1            (optional, one count per qubit)
 *     H q0
 *     Rz(1.5707963267948966) q1
 *     CX q0,q1
 *
 * Gate names are the canonical GateKind names (case-insensitive on input).
 * Angles are printed with 17 significant digits, so text round trips are
 * exact.
 */
[[nodiscard]] std::string to_text(const Circuit& c);
void write_text(std::ostream& os, const Circuit& c);
/// Throws ConfigError with a line number on malformed input.
[[nodiscard]] Circuit from_text(std::string_view text);

[[nodiscard]] std::string to_string(const Instruction& instr);

} // namespace qutil
