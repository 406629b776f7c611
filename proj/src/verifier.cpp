// SPDX-License-Identifier: MIT

#include "qutil/verifier.hpp"

#include "qutil/errors.hpp"
#include "qutil/random.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <unsupported/Eigen/KroneckerProduct>

namespace qutil {

namespace {

template <typename Column>
void apply_1q(const Matrix2& g, std::size_t bit, Column&& v) {
  const auto dim = static_cast<std::size_t>(v.size());
  const std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & mask) != 0) {
      continue;
    }
    const Complex a = v(static_cast<Eigen::Index>(i));
    const Complex b = v(static_cast<Eigen::Index>(i | mask));
    v(static_cast<Eigen::Index>(i)) = g(0, 0) * a + g(0, 1) * b;
    v(static_cast<Eigen::Index>(i | mask)) = g(1, 0) * a + g(1, 1) * b;
  }
}

template <typename Column>
void apply_2q(const Matrix4& g, std::size_t hi, std::size_t lo, Column&& v) {
  const auto dim = static_cast<std::size_t>(v.size());
  const std::size_t mh = std::size_t{1} << hi;
  const std::size_t ml = std::size_t{1} << lo;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & (mh | ml)) != 0) {
      continue;
    }
    const std::array<std::size_t, 4> idx{i, i | ml, i | mh, i | mh | ml};
    std::array<Complex, 4> in{};
    for (std::size_t k = 0; k < 4; ++k) {
      in[k] = v(static_cast<Eigen::Index>(idx[k]));
    }
    for (std::size_t r = 0; r < 4; ++r) {
      Complex acc = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        acc += g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) * in[k];
      }
      v(static_cast<Eigen::Index>(idx[r])) = acc;
    }
  }
}

std::size_t log2_size(Eigen::Index rows) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < rows) {
    ++n;
  }
  return n;
}

void check_operands(const Instruction& instr, std::size_t width) {
  for (const Qubit q : instr.operands()) {
    if (q >= width) {
      throw IndexError("qubit " + std::to_string(q) + " outside a " +
                       std::to_string(width) + "-qubit state");
    }
  }
}

/// Restriction of a transpiled circuit to the qubits that matter.
struct Compressed {
  Circuit circuit;
  std::vector<Qubit> support;
  /// Local position of each kept virtual qubit before and after.
  std::vector<std::size_t> start;
  std::vector<std::size_t> finish;
};

Compressed compress(const Circuit& original, const TranspileResult& result) {
  const auto& phys = result.circuit;
  const std::size_t w = original.width();
  std::vector<bool> keep(phys.width(), false);
  for (const Qubit q : active_qubits(phys)) {
    keep[q] = true;
  }
  for (Qubit v = 0; v < w; ++v) {
    keep[result.initial_layout.physical(v)] = true;
    keep[result.final_layout.physical(v)] = true;
  }
  Compressed out;
  std::vector<std::int64_t> local(phys.width(), -1);
  for (Qubit p = 0; p < phys.width(); ++p) {
    if (keep[p]) {
      local[p] = static_cast<std::int64_t>(out.support.size());
      out.support.push_back(p);
    }
  }
  // Data qubits first, then ancillas that start inside the support.
  std::vector<Qubit> virtuals;
  for (Qubit v = 0; v < w; ++v) {
    virtuals.push_back(v);
  }
  for (const Qubit p : out.support) {
    const auto v = result.initial_layout.virtual_at(p);
    if (v == Layout::kNone) {
      throw ConsistencyError("initial layout leaves physical qubit " +
                             std::to_string(p) + " unassigned");
    }
    if (static_cast<std::size_t>(v) >= w) {
      virtuals.push_back(static_cast<Qubit>(v));
    }
  }
  for (const Qubit v : virtuals) {
    const auto s = local[result.initial_layout.physical(v)];
    const auto f = local[result.final_layout.physical(v)];
    if (s < 0 || f < 0) {
      throw ConsistencyError("virtual qubit " + std::to_string(v) +
                             " leaves the active support");
    }
    out.start.push_back(static_cast<std::size_t>(s));
    out.finish.push_back(static_cast<std::size_t>(f));
  }
  out.circuit = Circuit(out.support.size());
  for (const auto& instr : phys) {
    Instruction mapped = instr;
    for (std::size_t k = 0; k < static_cast<std::size_t>(instr.arity()); ++k) {
      mapped.qubits[k] = static_cast<Qubit>(local[instr.qubits[k]]);
    }
    out.circuit.append_unchecked(mapped);
  }
  return out;
}

std::size_t permute_index(std::size_t index, const std::vector<std::size_t>& to) {
  std::size_t out = 0;
  for (std::size_t v = 0; v < to.size(); ++v) {
    if ((index >> v) & 1U) {
      out |= std::size_t{1} << to[v];
    }
  }
  return out;
}

} // namespace

void apply(const Instruction& instr, StateVector& state) {
  const std::size_t width = log2_size(state.size());
  check_operands(instr, width);
  if (instr.arity() == 1) {
    apply_1q(matrix1(instr.kind, instr.params), instr.qubits[0], state);
  } else {
    apply_2q(matrix2(instr.kind, instr.params), instr.qubits[0], instr.qubits[1],
             state);
  }
}

void apply(const Instruction& instr, MatrixX& m) {
  const std::size_t width = log2_size(m.rows());
  check_operands(instr, width);
  if (instr.arity() == 1) {
    const Matrix2 g = matrix1(instr.kind, instr.params);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      apply_1q(g, instr.qubits[0], m.col(c));
    }
  } else {
    const Matrix4 g = matrix2(instr.kind, instr.params);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      apply_2q(g, instr.qubits[0], instr.qubits[1], m.col(c));
    }
  }
}

MatrixX unitary(const Circuit& c) {
  if (c.width() > kMaxUnitaryWidth) {
    throw CapacityError("unitary() supports at most " +
                        std::to_string(kMaxUnitaryWidth) + " qubits, got " +
                        std::to_string(c.width()));
  }
  const auto dim = Eigen::Index{1} << c.width();
  MatrixX u = MatrixX::Identity(dim, dim);
  for (const auto& instr : c) {
    apply(instr, u);
  }
  return u;
}

StateVector simulate(const Circuit& c, const StateVector& input) {
  if (input.size() != (Eigen::Index{1} << c.width())) {
    throw IndexError("state dimension does not match circuit width");
  }
  StateVector state = input;
  for (const auto& instr : c) {
    apply(instr, state);
  }
  return state;
}

Equivalence equivalent(const Circuit& original, const TranspileResult& result,
                       double tol) {
  const Compressed comp = compress(original, result);
  const std::size_t k = comp.support.size();
  if (k > kMaxUnitaryWidth) {
    throw CapacityError("transpiled circuit spans " + std::to_string(k) +
                        " qubits; unitary check supports at most " +
                        std::to_string(kMaxUnitaryWidth));
  }
  const MatrixX u_res = unitary(comp.circuit);
  const MatrixX u_orig = unitary(original);
  const auto dim = Eigen::Index{1} << k;
  const auto data_dim = u_orig.rows();
  const MatrixX expected =
      Eigen::kroneckerProduct(MatrixX::Identity(dim / data_dim, dim / data_dim),
                              u_orig)
          .eval();
  MatrixX got(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto row = static_cast<Eigen::Index>(
        permute_index(static_cast<std::size_t>(i), comp.finish));
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto col = static_cast<Eigen::Index>(
          permute_index(static_cast<std::size_t>(j), comp.start));
      got(i, j) = u_res(row, col);
    }
  }
  Equivalence out;
  out.deviation = phase_aligned_distance(got, expected);
  out.equivalent = out.deviation <= tol;
  out.support = comp.support;
  return out;
}

Equivalence probe_equivalent(const Circuit& original, const TranspileResult& result,
                             std::size_t probes, std::uint64_t seed, double tol) {
  const Compressed comp = compress(original, result);
  const std::size_t k = comp.support.size();
  if (k > kMaxProbeWidth) {
    throw CapacityError("transpiled circuit spans " + std::to_string(k) +
                        " qubits; probes support at most " +
                        std::to_string(kMaxProbeWidth));
  }
  const std::size_t w = original.width();
  Rng rng(seed);
  Equivalence out;
  out.support = comp.support;
  std::optional<Complex> phase;
  for (std::size_t probe = 0; probe < probes; ++probe) {
    const std::size_t x = rng.below(std::size_t{1} << w);
    StateVector in_orig = StateVector::Zero(Eigen::Index{1} << w);
    in_orig(static_cast<Eigen::Index>(x)) = 1;
    const StateVector out_orig = simulate(original, in_orig);

    StateVector in_res = StateVector::Zero(Eigen::Index{1} << k);
    in_res(static_cast<Eigen::Index>(permute_index(x, comp.start))) = 1;
    const StateVector out_res = simulate(comp.circuit, in_res);

    StateVector mapped = StateVector::Zero(out_res.size());
    for (Eigen::Index i = 0; i < out_orig.size(); ++i) {
      mapped(static_cast<Eigen::Index>(
          permute_index(static_cast<std::size_t>(i), comp.finish))) = out_orig(i);
    }
    if (!phase) {
      const Complex overlap = mapped.dot(out_res);
      phase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Complex(1);
    }
    out.deviation =
        std::max(out.deviation, (out_res - *phase * mapped).cwiseAbs().maxCoeff());
  }
  out.equivalent = out.deviation <= tol;
  return out;
}

} // namespace qutil

#include "qutil/architecture.hpp"
#include "qutil/generator.hpp"

namespace qutil {

namespace {

/// Breadth-first ball of `size` qubits around `start`; always connected.
ArchitectureSpec falcon_piece(const ArchitectureSpec& falcon, Qubit start,
                              std::size_t size) {
  std::vector<Qubit> order{start};
  std::vector<bool> seen(falcon.coupling.size(), false);
  seen[start] = true;
  for (std::size_t head = 0; head < order.size() && order.size() < size; ++head) {
    for (const Qubit nb : falcon.coupling.neighbors(order[head])) {
      if (!seen[nb] && order.size() < size) {
        seen[nb] = true;
        order.push_back(nb);
      }
    }
  }
  return induced_subgraph(falcon, order,
                          "falcon-r4[" + std::to_string(start) + "+" +
                              std::to_string(size) + "]");
}

} // namespace

SuiteReport verify_suite(std::size_t max_width, std::size_t circuits,
                         std::uint64_t seed, const std::vector<int>& levels,
                         double tol) {
  if (max_width < 2 || max_width > kMaxUnitaryWidth - 2) {
    throw ConfigError("verify width must be between 2 and " +
                      std::to_string(kMaxUnitaryWidth - 2));
  }
  const auto falcon = falcon_r4();
  const std::array<GateRatio, 3> ratios{GateRatio{4, 1}, GateRatio{1, 1},
                                        GateRatio{1, 4}};
  Rng rng(seed);
  SuiteReport report;
  for (std::size_t i = 0; i < circuits; ++i) {
    const auto q = static_cast<std::uint32_t>(2 + rng.below(max_width - 1));
    const auto d = static_cast<std::uint32_t>(1 + rng.below(8));
    const GenerationConfig gen{q, d, ratios[rng.below(ratios.size())], rng.next()};
    const ArchitectureSpec arch =
        i % 2 == 0 ? line(q)
                   : falcon_piece(falcon,
                                  static_cast<Qubit>(rng.below(falcon.coupling.size())),
                                  std::min<std::size_t>(kMaxUnitaryWidth, q + rng.below(3)));
    const Circuit circuit = generate(gen);
    ++report.circuits;
    for (const int level : levels) {
      for (const auto method :
           {LayoutMethod::Trivial, LayoutMethod::Dense, LayoutMethod::Sabre}) {
        TranspileConfig cfg;
        cfg.optimization_level = level;
        cfg.layout = method;
        cfg.seed = rng.next();
        ++report.checks;
        std::string problem;
        try {
          const auto result = transpile(circuit, arch, cfg);
          check_hardware_invariants(result.circuit, arch);
          const auto eq = equivalent(circuit, result, tol);
          report.worst_deviation = std::max(report.worst_deviation, eq.deviation);
          if (!eq.equivalent) {
            problem = "deviation " + std::to_string(eq.deviation);
          }
        } catch (const std::exception& e) {
          problem = e.what();
        }
        if (problem.empty()) {
          ++report.passed;
        } else {
          report.failures.push_back(
              "circuit " + std::to_string(i) + " (q=" + std::to_string(q) +
              ", d=" + std::to_string(d) + ", r=" + gen.ratio.to_string() +
              ", seed=" + std::to_string(gen.seed) + ") on " + arch.name +
              " O" + std::to_string(level) + " " + std::string(to_string(method)) +
              ": " + problem);
        }
      }
    }
  }
  return report;
}

} // namespace qutil
