// SPDX-License-Identifier: MIT
//
// Command-line front end: sweep, heatmap, verify, arch.

#include "qutil/architecture.hpp"
#include "qutil/errors.hpp"
#include "qutil/report.hpp"
#include "qutil/sweep.hpp"
#include "qutil/verifier.hpp"
#include "qutil/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

namespace fs = std::filesystem;
using namespace qutil;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      throw ConfigError("empty entry in list '" + text + "'");
    }
    out.push_back(item);
  }
  if (out.empty()) {
    throw ConfigError("empty list");
  }
  return out;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value < 0) {
      throw ConfigError(std::string("bad ") + what + " value '" + item + "'");
    }
    out.push_back(static_cast<T>(value));
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
}

struct SweepArgs {
  std::string arch = "falcon-r4";
  std::string qubits;
  std::string depths;
  std::string ratios;
  std::string opt_levels;
  std::string layouts;
  std::size_t samples = 0;
  std::uint32_t mg = 0;
  std::uint32_t mt = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string out;
  bool no_trivial_first = false;
  bool no_vf2 = false;
  bool trivial_sabre_trial = false;
  bool quiet = false;
};

SweepConfig build_sweep_config(const SweepArgs& a) {
  SweepConfig cfg;
  for (const auto& d : split_list(a.arch)) {
    cfg.architectures.push_back(architecture_from_descriptor(d));
  }
  cfg.qubits = parse_numbers<std::uint32_t>(a.qubits, "qubit");
  cfg.depths = parse_numbers<std::uint32_t>(a.depths, "depth");
  for (const auto& r : split_list(a.ratios)) {
    cfg.ratios.push_back(GateRatio::parse(r));
  }
  cfg.opt_levels = parse_numbers<int>(a.opt_levels, "optimization level");
  for (const auto& l : split_list(a.layouts)) {
    cfg.layouts.push_back(parse_layout_method(l));
  }
  // --samples is the per-group run count; --mg/--mt split it explicitly.
  if (a.mg == 0 && a.mt == 0) {
    cfg.mg = static_cast<std::uint32_t>(a.samples == 0 ? 1 : a.samples);
    cfg.mt = 1;
  } else {
    cfg.mg = a.mg == 0 ? 1 : a.mg;
    cfg.mt = a.mt == 0 ? 1 : a.mt;
    if (a.samples != 0 && cfg.runs_per_group() != a.samples) {
      throw ConfigError("--samples " + std::to_string(a.samples) +
                        " disagrees with --mg x --mt = " +
                        std::to_string(cfg.runs_per_group()));
    }
  }
  cfg.global_seed = a.seed;
  cfg.trivial_first = !a.no_trivial_first;
  cfg.use_vf2 = !a.no_vf2;
  cfg.trivial_sabre_trial = a.trivial_sabre_trial;
  cfg.validate();
  return cfg;
}

int run_sweep_command(const SweepArgs& a) {
  const SweepConfig cfg = build_sweep_config(a);
  if (a.workers == 0) {
    throw ConfigError("--workers must be at least 1");
  }
  const fs::path out_dir(a.out);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }
  std::size_t last_decile = 0;
  ProgressFn progress;
  if (!a.quiet) {
    progress = [&last_decile](std::size_t done, std::size_t total) {
      const std::size_t decile = done * 10 / total;
      if (decile != last_decile || done == total) {
        last_decile = decile;
        std::fprintf(stderr, "sweep: %zu/%zu evaluations\n", done, total);
      }
    };
  }
  // The callback runs on worker threads; serialize it.
  std::mutex progress_mutex;
  ProgressFn locked;
  if (progress) {
    locked = [&](std::size_t done, std::size_t total) {
      const std::lock_guard lock(progress_mutex);
      progress(done, total);
    };
  }
  const SweepOutcome outcome = run_sweep(cfg, a.workers, locked);
  export_csv(outcome.table, out_dir / "utilization.csv");
  write_file(out_dir / "manifest.json", manifest(cfg, outcome).dump(2) + "\n");
  std::ostringstream failures;
  failures << "ordinal,message\n";
  for (const auto& f : outcome.failures) {
    std::string msg = f.message;
    for (auto& ch : msg) {
      if (ch == '"') {
        ch = '\'';
      } else if (ch == '\n') {
        ch = ' ';
      }
    }
    failures << f.ordinal << ",\"" << msg << "\"\n";
  }
  write_file(out_dir / "failures.csv", failures.str());
  if (!a.quiet) {
    std::fprintf(stderr, "sweep: %zu evaluations, %zu failures, %.1f s -> %s\n",
                 outcome.evaluations, outcome.failures.size(), outcome.seconds,
                 out_dir.string().c_str());
  }
  return outcome.failures.empty() ? 0 : kExitRuntime;
}

struct HeatmapArgs {
  std::string table;
  std::string arch;
  std::string filter;
  std::string out;
  std::string title;
  bool force_layout = false;
};

int run_heatmap_command(const HeatmapArgs& a) {
  const auto table = load_csv(a.table);
  const auto filter = GroupFilter::parse(a.filter);
  const auto it = select_group(table, filter);
  const auto arch = architecture_from_descriptor(a.arch.empty() ? it->first.arch : a.arch);
  HeatmapOptions options;
  options.force_layout = a.force_layout;
  options.title = a.title;
  if (options.title.empty()) {
    const auto& k = it->first;
    options.title = k.arch + "  q=" + std::to_string(k.q) + " d=" +
                    std::to_string(k.d) + " r=" + k.r.to_string() + " O=" +
                    std::to_string(k.O) + " L=" + std::string(to_string(k.L)) +
                    "  N=" + std::to_string(it->second.total);
  }
  write_file(a.out, render_heatmap(it->second, arch, options));
  return 0;
}

struct VerifyArgs {
  std::size_t width = 5;
  std::size_t circuits = 100;
  std::uint64_t seed = 1;
};

int run_verify_command(const VerifyArgs& a) {
  const auto report = verify_suite(a.width, a.circuits, a.seed);
  for (const auto& f : report.failures) {
    std::printf("FAIL %s\n", f.c_str());
  }
  std::printf("verify: %zu circuits, %zu/%zu checks passed, worst deviation %.3g\n",
              report.circuits, report.passed, report.checks,
              report.worst_deviation);
  return report.passed == report.checks ? 0 : kExitRuntime;
}

struct ArchArgs {
  std::string arch = "falcon-r4";
  std::string json;
  std::string svg;
  bool force_layout = false;
};

int run_arch_command(const ArchArgs& a) {
  const auto arch = architecture_from_descriptor(a.arch);
  const auto& c = arch.coupling;
  std::printf("%s: %zu qubits, %zu edges, basis %s\n", arch.name.c_str(), c.size(),
              c.edges().size(), arch.basis.to_string().c_str());
  std::printf("edges:");
  for (const auto& [x, y] : c.edges()) {
    std::printf(" %u-%u", x, y);
  }
  std::printf("\ndegrees:");
  for (Qubit q = 0; q < c.size(); ++q) {
    std::printf(" %u:%zu", q, c.degree(q));
  }
  std::printf("\ncenter:");
  for (const Qubit q : c.center()) {
    std::printf(" %u", q);
  }
  std::printf("\n");
  if (!a.json.empty()) {
    write_file(a.json, to_json(arch).dump(2) + "\n");
  }
  if (!a.svg.empty()) {
    write_file(a.svg, render_architecture(arch, a.force_layout));
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit utilization sweeps over a transpilation pipeline"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Run a parameter sweep and write utilization tables");
  s->add_option("--arch", sweep.arch, "Comma-separated architecture descriptors")
      ->capture_default_str();
  s->add_option("--qubits", sweep.qubits, "Circuit widths, e.g. 6,11,16")->required();
  s->add_option("--depths", sweep.depths, "Circuit depths, e.g. 20,40")->required();
  s->add_option("--ratios", sweep.ratios, "1q:2q ratios, e.g. 4:1,1:1,1:4")->required();
  s->add_option("--opt-levels", sweep.opt_levels, "Optimization levels, e.g. 1,2")
      ->required();
  s->add_option("--layouts", sweep.layouts, "Layout methods: trivial,dense,sabre")
      ->required();
  s->add_option("--samples", sweep.samples, "Runs per group (M_G x M_T)");
  s->add_option("--mg", sweep.mg, "Generation-seed multiplicity");
  s->add_option("--mt", sweep.mt, "Transpilation-seed multiplicity");
  s->add_option("--seed", sweep.seed, "Global seed")->capture_default_str();
  s->add_option("--workers", sweep.workers, "Worker threads")->capture_default_str();
  s->add_option("--out", sweep.out, "Output directory")->required();
  s->add_flag("--no-trivial-first", sweep.no_trivial_first,
              "Skip the perfect-trivial-layout check at levels <= 1");
  s->add_flag("--no-vf2", sweep.no_vf2, "Skip the VF2 perfect-layout search");
  s->add_flag("--trivial-sabre-trial", sweep.trivial_sabre_trial,
              "At levels <= 1, add a SABRE trial starting from the trivial layout");
  s->add_flag("--quiet", sweep.quiet, "No progress output");

  HeatmapArgs heat;
  auto* h = app.add_subcommand("heatmap", "Render one utilization group as SVG");
  h->add_option("--table", heat.table, "utilization.csv from a sweep")->required();
  h->add_option("--filter", heat.filter, "Group selector, e.g. q=6,d=20,r=1:1,O=2,L=sabre");
  h->add_option("--arch", heat.arch, "Architecture descriptor (default: the group's)");
  h->add_option("--out", heat.out, "Output SVG path")->required();
  h->add_option("--title", heat.title, "Title text");
  h->add_flag("--force-layout", heat.force_layout,
              "Place qubits automatically when the map has no coordinates");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check random circuits through every pipeline setting");
  v->add_option("--width", verify.width, "Maximum circuit width (2-6)")->capture_default_str();
  v->add_option("--circuits", verify.circuits, "Number of random circuits")
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "Seed")->capture_default_str();

  ArchArgs arch;
  auto* a = app.add_subcommand("arch", "Describe a coupling map");
  a->add_option("descriptor", arch.arch, "falcon-r4, line:N, ring:N, grid:WxH, heavy-hex:D or JSON")
      ->capture_default_str();
  a->add_option("--json", arch.json, "Write the architecture as JSON");
  a->add_option("--svg", arch.svg, "Draw the coupling map as SVG");
  a->add_flag("--force-layout", arch.force_layout,
              "Place qubits automatically when the map has no coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (s->parsed()) {
      return run_sweep_command(sweep);
    }
    if (h->parsed()) {
      return run_heatmap_command(heat);
    }
    if (v->parsed()) {
      return run_verify_command(verify);
    }
    return run_arch_command(arch);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const RenderError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
}
