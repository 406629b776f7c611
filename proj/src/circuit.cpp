// SPDX-License-Identifier: MIT

#include "qutil/circuit.hpp"

#include "qutil/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

namespace qutil {

Instruction::Instruction(GateKind k, std::initializer_list<Qubit> operands,
                         Angles angles)
    : kind(k), params(angles) {
  if (operands.size() != static_cast<std::size_t>(qutil::arity(k))) {
    throw IndexError(std::string(name(k)) + " takes " +
                     std::to_string(qutil::arity(k)) + " operand(s), got " +
                     std::to_string(operands.size()));
  }
  std::copy(operands.begin(), operands.end(), qubits.begin());
}

Circuit::Circuit(std::size_t width) : width_(width), slack_(width, 0) {}

void Circuit::append(const Instruction& instr) {
  if (instr.params.size() != static_cast<std::size_t>(param_count(instr.kind))) {
    throw ParameterArityError(std::string(name(instr.kind)) + " expects " +
                              std::to_string(param_count(instr.kind)) +
                              " parameter(s)");
  }
  for (const Qubit q : instr.operands()) {
    if (q >= width_) {
      throw IndexError("qubit " + std::to_string(q) +
                       " out of range for width " + std::to_string(width_));
    }
  }
  if (instr.arity() == 2 && instr.qubits[0] == instr.qubits[1]) {
    throw IndexError("duplicate operand q" + std::to_string(instr.qubits[0]) +
                     " in " + std::string(name(instr.kind)));
  }
  instrs_.push_back(instr);
}

void Circuit::append(GateKind kind, std::initializer_list<Qubit> operands,
                     Angles params) {
  append(Instruction(kind, operands, params));
}

void Circuit::add_slack(Qubit q, std::uint32_t steps) {
  if (q >= width_) {
    throw IndexError("slack on qubit " + std::to_string(q) + " out of range");
  }
  slack_[q] += steps;
}

void Circuit::set_slack(std::vector<std::uint32_t> slack) {
  if (slack.size() != width_) {
    throw IndexError("slack vector must have one entry per qubit");
  }
  slack_ = std::move(slack);
}

Circuit Circuit::widened(std::size_t new_width) const {
  Circuit out = *this;
  if (new_width > width_) {
    out.width_ = new_width;
    out.slack_.resize(new_width, 0);
  }
  return out;
}

std::size_t Circuit::count_two_qubit() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      instrs_.begin(), instrs_.end(),
      [](const Instruction& i) { return i.arity() == 2; }));
}

Circuit compose(const Circuit& c, const Instruction& instr) {
  Circuit out = c;
  out.append(instr);
  return out;
}

std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> level(c.width(), 0);
  std::size_t deepest = 0;
  for (const auto& instr : c) {
    std::size_t d = 0;
    for (const Qubit q : instr.operands()) {
      d = std::max(d, level[q]);
    }
    ++d;
    for (const Qubit q : instr.operands()) {
      level[q] = d;
    }
    deepest = std::max(deepest, d);
  }
  return deepest;
}

ActiveSet::ActiveSet(std::vector<Qubit> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool ActiveSet::contains(Qubit q) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), q);
}

ActiveSet active_qubits(const Circuit& c) {
  std::vector<bool> seen(c.width(), false);
  std::vector<Qubit> out;
  for (const auto& instr : c) {
    for (const Qubit q : instr.operands()) {
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  return ActiveSet(std::move(out));
}

std::string to_string(const Instruction& instr) {
  std::string out(name(instr.kind));
  if (!instr.params.empty()) {
    out += '(';
    char buf[32];
    for (std::size_t i = 0; i < instr.params.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      std::snprintf(buf, sizeof buf, "%.17g", instr.params[i]);
      out += buf;
    }
    out += ')';
  }
  out += " q" + std::to_string(instr.qubits[0]);
  if (instr.arity() == 2) {
    out += ",q" + std::to_string(instr.qubits[1]);
  }
  return out;
}

void write_text(std::ostream& os, const Circuit& c) {
  os << "qubits " << c.width() << '\n';
  const auto& slack = c.slack();
  if (std::any_of(slack.begin(), slack.end(), [](auto s) { return s != 0; })) {
    os << "slack";
    for (auto s : slack) {
      os << ' ' << s;
    }
    os << '\n';
  }
  for (const auto& instr : c) {
    os << to_string(instr) << '\n';
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  write_text(os, c);
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw ConfigError("circuit text line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    parse_error(line, "bad number '" + std::string(text) + "'");
  }
  return value;
}

Qubit parse_qubit(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.empty() || (text[0] != 'q' && text[0] != 'Q')) {
    parse_error(line, "expected qubit like q3, got '" + std::string(text) + "'");
  }
  return parse_number<Qubit>(text.substr(1), line);
}

} // namespace

Circuit from_text(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, next == std::string_view::npos ? text.size() - pos
                                                        : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.starts_with("qubits ")) {
      if (circuit) {
        parse_error(line_no, "duplicate 'qubits' header");
      }
      circuit.emplace(parse_number<std::size_t>(line.substr(7), line_no));
      continue;
    }
    if (!circuit) {
      parse_error(line_no, "missing 'qubits N' header");
    }
    if (line.starts_with("slack")) {
      std::vector<std::uint32_t> slack;
      std::istringstream is{std::string(line.substr(5))};
      std::uint32_t s = 0;
      while (is >> s) {
        slack.push_back(s);
      }
      if (slack.size() != circuit->width()) {
        parse_error(line_no, "slack needs one entry per qubit");
      }
      circuit->set_slack(std::move(slack));
      continue;
    }
    // kind[(params)] q_i[,q_j]
    const auto name_end = line.find_first_of("( \t");
    if (name_end == std::string_view::npos) {
      parse_error(line_no, "missing operands");
    }
    const auto kind = kind_from_name(line.substr(0, name_end));
    if (!kind) {
      parse_error(line_no, "unknown gate '" +
                               std::string(line.substr(0, name_end)) + "'");
    }
    std::string_view rest = line.substr(name_end);
    Instruction instr;
    instr.kind = *kind;
    if (rest.starts_with('(')) {
      const auto close = rest.find(')');
      if (close == std::string_view::npos) {
        parse_error(line_no, "unterminated parameter list");
      }
      std::string_view params = rest.substr(1, close - 1);
      while (!params.empty()) {
        const auto comma = params.find(',');
        instr.params.push_back(
            parse_number<double>(params.substr(0, comma), line_no));
        if (comma == std::string_view::npos) {
          break;
        }
        params = params.substr(comma + 1);
      }
      rest = rest.substr(close + 1);
    }
    rest = trim(rest);
    const auto comma = rest.find(',');
    std::vector<Qubit> operands{parse_qubit(rest.substr(0, comma), line_no)};
    if (comma != std::string_view::npos) {
      operands.push_back(parse_qubit(rest.substr(comma + 1), line_no));
    }
    if (operands.size() != static_cast<std::size_t>(instr.arity())) {
      parse_error(line_no, "wrong operand count for " +
                               std::string(name(instr.kind)));
    }
    std::copy(operands.begin(), operands.end(), instr.qubits.begin());
    try {
      circuit->append(instr);
    } catch (const Error& e) {
      parse_error(line_no, e.what());
    }
  }
  if (!circuit) {
    throw ConfigError("circuit text has no 'qubits N' header");
  }
  return std::move(*circuit);
}

} // namespace qutil
