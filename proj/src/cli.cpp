#include "corad/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "corad/core.hpp"
#include "corad/oracle.hpp"
#include "corad/rates.hpp"
#include "corad/scenarios.hpp"

namespace corad::cli {

namespace {

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_e3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Flags shared by the rate and sweep subcommands; emitter A's height is
// only meaningful for rate.
struct GeometryOptions {
  std::string environment = "free";
  double z_a_m = 0.0;
  double z_b_m = 0.0;
  double omega0_rad_per_s = 1.55e16;
  std::string parity = "sym";
  std::string orientation = "zz";
  double dipole_cm = 1e-29;
  std::vector<double> dipole_a;
  std::vector<double> dipole_b;
};

void add_shared_flags(CLI::App* cmd, GeometryOptions& g) {
  cmd->add_option("--env", g.environment, "Environment: free space or mirror at z=0")
      ->check(CLI::IsMember({"free", "mirror"}))
      ->capture_default_str();
  cmd->add_option("--zB", g.z_b_m, "Height of atom B in m")
      ->capture_default_str();
  cmd->add_option("--omega0", g.omega0_rad_per_s, "Transition frequency in rad/s")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--parity", g.parity, "Dicke state: sym or antisym")
      ->check(CLI::IsMember({"sym", "antisym"}))
      ->capture_default_str();
  cmd->add_option("--orient", g.orientation,
                  "Dipole orientation of both atoms (custom requires --dA/--dB)")
      ->check(CLI::IsMember({"zz", "xx", "custom"}))
      ->capture_default_str();
  cmd->add_option("--dipole", g.dipole_cm, "Dipole magnitude in C m")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--dA", g.dipole_a,
                  "Dipole direction of atom A, e.g. 0,0,1 (normalized, scaled by --dipole)")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--dB", g.dipole_b,
                  "Dipole direction of atom B, e.g. 0,0,1 (normalized, scaled by --dipole)")
      ->delimiter(',')
      ->expected(3);
}

Environment parse_environment(const std::string& s) {
  return s == "mirror" ? Environment::PerfectMirror : Environment::FreeSpace;
}

DickeParity parse_parity(const std::string& s) {
  return s == "antisym" ? DickeParity::Antisymmetric : DickeParity::Symmetric;
}

DipoleVector scaled_direction(const std::vector<double>& components, double magnitude,
                              const char* flag) {
  const Vec3 v{components[0], components[1], components[2]};
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument(std::string(flag) +
                                ": direction must be a finite non-zero vector");
  }
  const Vec3 d = (magnitude / n) * v;
  return {d.x, d.y, d.z};
}

// Base configuration without emitter A's position (filled by the caller
// for rate, replaced per sample by sweeps).
PairConfig base_config(const GeometryOptions& g) {
  PairConfig cfg;
  cfg.environment = parse_environment(g.environment);
  cfg.parity = parse_parity(g.parity);
  cfg.omega0 = {g.omega0_rad_per_s};
  cfg.atom_b.position = {0.0, 0.0, g.z_b_m};

  const bool custom = g.orientation == "custom";
  if (custom && (g.dipole_a.empty() || g.dipole_b.empty())) {
    throw std::invalid_argument("--orient custom requires --dA and --dB");
  }
  if (!g.dipole_a.empty()) {
    cfg.atom_a.dipole = scaled_direction(g.dipole_a, g.dipole_cm, "--dA");
  } else {
    cfg.atom_a.dipole = (g.orientation == "xx") ? DipoleVector{g.dipole_cm, 0.0, 0.0}
                                                : DipoleVector{0.0, 0.0, g.dipole_cm};
  }
  if (!g.dipole_b.empty()) {
    cfg.atom_b.dipole = scaled_direction(g.dipole_b, g.dipole_cm, "--dB");
  } else {
    cfg.atom_b.dipole = (g.orientation == "xx") ? DipoleVector{g.dipole_cm, 0.0, 0.0}
                                                : DipoleVector{0.0, 0.0, g.dipole_cm};
  }
  return cfg;
}

scenarios::OrientationPair sweep_orientation(const GeometryOptions& g) {
  if (g.orientation == "zz") return scenarios::OrientationPair::BothZ;
  if (g.orientation == "xx") return scenarios::OrientationPair::BothX;
  return scenarios::OrientationPair::FromBase;
}

void print_rates(const RateResult& r, std::ostream& out) {
  const auto line = [&out](const char* name, double value, const char* unit) {
    out << std::left << std::setw(16) << name << ' ' << fmt_g17(value);
    if (unit != nullptr) out << ' ' << unit;
    out << '\n';
  };
  line("gamma_total", r.gamma_total, "1/s");
  line("gamma_A", r.gamma_a, "1/s");
  line("gamma_B", r.gamma_b, "1/s");
  line("gamma_AB", r.gamma_ab, "1/s");
  line("gamma_bulk", r.gamma_bulk, "1/s");
  line("gamma_scatter", r.gamma_scatter, "1/s");
  line("scaled_pair_sum", r.scaled_pair_sum, nullptr);
  line("scaled_single", r.scaled_single, nullptr);
}

struct SweepOptions {
  GeometryOptions geometry;
  std::string vary = "za";
  double min_m = 0.0;
  double max_m = 0.0;
  int count = 2000;
  std::string scale = "linear";
  std::string normalization = "single";
  std::string out_path;
  std::string svg_path;
};

scenarios::SweepSpec build_sweep_spec(const SweepOptions& o) {
  scenarios::SweepSpec spec;
  spec.base = base_config(o.geometry);
  spec.base.atom_a.position = {0.0, 0.0, o.min_m};  // placeholder, replaced per sample
  spec.vary = (o.vary == "separation") ? scenarios::SweepParameter::Separation
                                       : scenarios::SweepParameter::AtomAHeight;
  spec.min_m = o.min_m;
  spec.max_m = o.max_m;
  spec.sample_count = o.count;
  spec.scale = (o.scale == "log") ? scenarios::SweepScale::Logarithmic
                                  : scenarios::SweepScale::Linear;
  spec.orientation = sweep_orientation(o.geometry);
  return spec;
}

int do_sweep(const SweepOptions& o, std::ostream& out) {
  const scenarios::SweepSpec spec = build_sweep_spec(o);
  const scenarios::SweepTable table = scenarios::run_sweep(spec);
  scenarios::emit_csv(table, o.out_path);
  out << "wrote " << o.out_path << " (" << table.size() << " rows)\n";
  if (!o.svg_path.empty()) {
    const auto norm = (o.normalization == "pair-sum")
                          ? scenarios::Normalization::PairSum
                          : scenarios::Normalization::SingleAtom;
    const std::string label = o.geometry.environment + " " + o.geometry.parity + " " +
                              o.geometry.orientation;
    scenarios::PlotStyle style;
    style.x_label = "z_A (m)";
    style.y_label = (norm == scenarios::Normalization::PairSum)
                        ? "rate / (free-space rate of A + B)"
                        : "rate / free-space rate of A";
    scenarios::emit_svg({scenarios::plot_series(table, norm, label, "blue", "")},
                        style, o.svg_path);
    out << "wrote " << o.svg_path << "\n";
  }
  return 0;
}

int do_figure(const std::string& id, std::string out_path, const std::string& svg_path,
              std::ostream& out) {
  const scenarios::FigurePreset preset = scenarios::figure_preset(id);
  if (out_path.empty()) out_path = preset.id + ".csv";
  const scenarios::FigureData data = scenarios::materialize_figure(preset);
  scenarios::emit_figure_csv(data, out_path);
  out << "wrote " << out_path << " (" << data.tables.front().size() << " rows, "
      << data.tables.size() << " curves)\n";
  if (!svg_path.empty()) {
    scenarios::emit_figure_svg(data, svg_path);
    out << "wrote " << svg_path << "\n";
  }
  return 0;
}

int do_validate(int configs, std::uint64_t seed, int order, std::ostream& out) {
  oracle::ValidationOptions options;
  options.config_count = configs;
  options.seed = seed;
  options.polar_order = order;
  const std::vector<oracle::ValidationCheck> checks = oracle::run_validation(options);

  out << std::left << std::setw(26) << "check" << std::right << std::setw(12)
      << "max_error" << std::setw(12) << "tolerance"
      << "  status\n";
  int failures = 0;
  for (const oracle::ValidationCheck& c : checks) {
    out << std::left << std::setw(26) << c.name << std::right << std::setw(12)
        << fmt_e3(c.max_error) << std::setw(12) << fmt_e3(c.tolerance) << "  "
        << (c.passed ? "PASS" : "FAIL") << '\n';
    if (!c.passed) ++failures;
  }
  if (failures == 0) {
    out << "all " << checks.size() << " checks passed\n";
    return 0;
  }
  out << failures << " of " << checks.size() << " checks failed\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collective decay rates of two dipole emitters, in free space or above a mirror"};
  app.name("corad");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "",
                 "Read options from an INI file, keys mirroring the flag names in a "
                 "[sweep] or [figure] section; command-line flags win");

  // rate
  auto* rate_cmd = app.add_subcommand("rate", "Decay rates of one configuration");
  GeometryOptions rate_geometry;
  bool rate_csv = false;
  add_shared_flags(rate_cmd, rate_geometry);
  rate_cmd->add_option("--zA", rate_geometry.z_a_m, "Height of atom A in m")
      ->required();
  rate_cmd->add_flag("--csv", rate_csv, "Also print the result as a CSV header and row");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Rates over a range of emitter A positions");
  SweepOptions sweep_options;
  add_shared_flags(sweep_cmd, sweep_options.geometry);
  sweep_cmd->add_option("--vary", sweep_options.vary, "Swept parameter")
      ->check(CLI::IsMember({"za", "separation"}))
      ->capture_default_str();
  sweep_cmd->add_option("--min", sweep_options.min_m, "Range start in m")->required();
  sweep_cmd->add_option("--max", sweep_options.max_m, "Range end in m")->required();
  sweep_cmd->add_option("--count", sweep_options.count, "Number of samples")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  sweep_cmd->add_option("--scale", sweep_options.scale, "Sample spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  sweep_cmd->add_option("--normalization", sweep_options.normalization,
                        "Normalized rate plotted in the SVG")
      ->check(CLI::IsMember({"single", "pair-sum"}))
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_options.out_path, "Output CSV path")->required();
  sweep_cmd->add_option("--svg", sweep_options.svg_path, "Optional SVG plot path");

  // figure
  auto* figure_cmd = app.add_subcommand("figure", "Preset curve families");
  std::string figure_id;
  std::string figure_out, figure_svg;
  {
    std::string known;
    for (const std::string& s : scenarios::figure_preset_ids()) {
      if (!known.empty()) known += ", ";
      known += s;
    }
    figure_cmd->add_option("id", figure_id, "Preset id (" + known + ")")->required();
  }
  figure_cmd->add_option("--out", figure_out, "Output CSV path (default <id>.csv)");
  figure_cmd->add_option("--svg", figure_svg, "Optional SVG plot path");

  // validate
  auto* validate_cmd =
      app.add_subcommand("validate", "Quadrature cross-checks of tensors and rates");
  int validate_configs = 200;
  std::uint64_t validate_seed = oracle::ValidationOptions{}.seed;
  int validate_order = 64;
  validate_cmd->add_option("--configs", validate_configs, "Randomized configurations")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  validate_cmd->add_option("--seed", validate_seed, "Random seed")
      ->capture_default_str();
  validate_cmd->add_option("--order", validate_order, "Base polar quadrature order")
      ->check(CLI::Range(4, 4096))
      ->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("corad");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (rate_cmd->parsed()) {
      PairConfig cfg = base_config(rate_geometry);
      cfg.atom_a.position = {0.0, 0.0, rate_geometry.z_a_m};
      const RateResult r = rates::collective_rate(cfg);
      print_rates(r, out);
      if (rate_csv) {
        out << scenarios::csv_header << '\n' << fmt_g17(cfg.atom_a.position.z);
        for (double v : {r.gamma_total, r.gamma_a, r.gamma_b, r.gamma_ab, r.gamma_bulk,
                         r.gamma_scatter, r.scaled_pair_sum, r.scaled_single}) {
          out << ',' << fmt_g17(v);
        }
        out << '\n';
      }
      return 0;
    }
    if (sweep_cmd->parsed()) {
      return do_sweep(sweep_options, out);
    }
    if (figure_cmd->parsed()) {
      return do_figure(figure_id, figure_out, figure_svg, out);
    }
    if (validate_cmd->parsed()) {
      return do_validate(validate_configs, validate_seed, validate_order, out);
    }
    err << "error: no subcommand given\n";
    return 1;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace corad::cli
