#include "corad/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "corad/rates.hpp"

namespace corad::scenarios {

namespace {

constexpr double preset_omega0_rad_per_s = 1.55e16;
constexpr double preset_dipole_cm = 1e-29;

PairConfig materialize(const SweepSpec& spec, double value_m) {
  PairConfig cfg = spec.base;
  const Position3 b = spec.base.atom_b.position;
  if (spec.vary == SweepParameter::AtomAHeight) {
    cfg.atom_a.position = {0.0, 0.0, value_m};
  } else {
    cfg.atom_a.position = {b.x, b.y, b.z + value_m};
  }
  switch (spec.orientation) {
    case OrientationPair::BothZ:
      cfg.atom_a.dipole = {0.0, 0.0, norm(spec.base.atom_a.dipole.vec())};
      cfg.atom_b.dipole = {0.0, 0.0, norm(spec.base.atom_b.dipole.vec())};
      break;
    case OrientationPair::BothX:
      cfg.atom_a.dipole = {norm(spec.base.atom_a.dipole.vec()), 0.0, 0.0};
      cfg.atom_b.dipole = {norm(spec.base.atom_b.dipole.vec()), 0.0, 0.0};
      break;
    case OrientationPair::FromBase:
      break;
  }
  return cfg;
}

double sample_value(const SweepSpec& spec, int i) {
  if (i == 0) return spec.min_m;
  if (i == spec.sample_count - 1) return spec.max_m;
  const double t = static_cast<double>(i) / (spec.sample_count - 1);
  if (spec.scale == SweepScale::Linear) {
    return spec.min_m + t * (spec.max_m - spec.min_m);
  }
  return std::exp((1.0 - t) * std::log(spec.min_m) + t * std::log(spec.max_m));
}

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::string& contents) {
  if (path.empty()) {
    throw std::invalid_argument("output path is empty");
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("failed while writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ec_remove;
    std::filesystem::remove(tmp, ec_remove);
    throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() +
                  "': " + ec.message());
  }
}

SweepSpec mirror_family_sweep(double z_b_m, DickeParity parity, Environment env,
                              OrientationPair orientation) {
  const double lambda0 = transition_wavelength({preset_omega0_rad_per_s});
  SweepSpec spec;
  spec.base.omega0 = {preset_omega0_rad_per_s};
  spec.base.environment = env;
  spec.base.parity = parity;
  spec.base.atom_b.position = {0.0, 0.0, z_b_m};
  spec.base.atom_a.dipole = {0.0, 0.0, preset_dipole_cm};
  spec.base.atom_b.dipole = {0.0, 0.0, preset_dipole_cm};
  spec.vary = SweepParameter::AtomAHeight;
  spec.min_m = z_b_m + 1e-9;
  spec.max_m = 10.0 * lambda0;
  spec.sample_count = 2000;
  spec.scale = SweepScale::Linear;
  spec.orientation = orientation;
  return spec;
}

FigurePreset mirror_family_preset(std::string id, std::string title, double z_b_m,
                                  DickeParity parity) {
  FigurePreset preset;
  preset.id = std::move(id);
  preset.title = std::move(title);
  preset.normalization = Normalization::SingleAtom;
  preset.curves = {
      {"mirror_zz", "red", "9 6",
       mirror_family_sweep(z_b_m, parity, Environment::PerfectMirror,
                           OrientationPair::BothZ)},
      {"free_zz", "blue", "",
       mirror_family_sweep(z_b_m, parity, Environment::FreeSpace,
                           OrientationPair::BothZ)},
      {"mirror_xx", "orange", "2 5",
       mirror_family_sweep(z_b_m, parity, Environment::PerfectMirror,
                           OrientationPair::BothX)},
      {"free_xx", "green", "12 5 3 5",
       mirror_family_sweep(z_b_m, parity, Environment::FreeSpace,
                           OrientationPair::BothX)},
  };
  return preset;
}

}  // namespace

void SweepSpec::validate() const {
  if (sample_count < 2) {
    throw std::invalid_argument("SweepSpec: at least 2 samples required");
  }
  if (!std::isfinite(min_m) || !std::isfinite(max_m) || !(min_m > 0.0) ||
      !(max_m > min_m)) {
    throw std::invalid_argument("SweepSpec: range must satisfy 0 < min < max");
  }
  if (vary == SweepParameter::AtomAHeight && !(min_m > base.atom_b.position.z)) {
    throw std::invalid_argument(
        "SweepSpec: height sweep must start above the fixed emitter");
  }
  materialize(*this, min_m).validate();
  materialize(*this, max_m).validate();
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepTable table;
  table.reserve(static_cast<std::size_t>(spec.sample_count));
  for (int i = 0; i < spec.sample_count; ++i) {
    const PairConfig cfg = materialize(spec, sample_value(spec, i));
    table.push_back({cfg.atom_a.position.z, rates::collective_rate(cfg)});
  }
  return table;
}

const std::vector<std::string>& figure_preset_ids() {
  static const std::vector<std::string> ids = {
      "fig1", "fig3", "fig4", "fig5", "fig6", "fig7", "fig7-antinode"};
  return ids;
}

FigurePreset figure_preset(std::string_view id) {
  const double lambda0 = transition_wavelength({preset_omega0_rad_per_s});

  if (id == "fig1") {
    SweepSpec spec;
    spec.base.omega0 = {preset_omega0_rad_per_s};
    spec.base.environment = Environment::FreeSpace;
    spec.base.atom_b.position = {0.0, 0.0, 0.0};
    spec.base.atom_a.dipole = {preset_dipole_cm, 0.0, 0.0};
    spec.base.atom_b.dipole = {preset_dipole_cm, 0.0, 0.0};
    spec.vary = SweepParameter::Separation;
    spec.min_m = 1e-3 * lambda0;
    spec.max_m = 3.0 * lambda0;
    spec.sample_count = 2000;
    spec.scale = SweepScale::Linear;
    spec.orientation = OrientationPair::BothX;

    FigurePreset preset;
    preset.id = "fig1";
    preset.title = "pair in free space, dipoles perpendicular to the separation";
    preset.normalization = Normalization::PairSum;
    CurveSpec symmetric{"symmetric", "blue", "", spec};
    symmetric.sweep.base.parity = DickeParity::Symmetric;
    CurveSpec antisymmetric{"antisymmetric", "red", "9 6", spec};
    antisymmetric.sweep.base.parity = DickeParity::Antisymmetric;
    preset.curves = {symmetric, antisymmetric};
    return preset;
  }
  if (id == "fig3") {
    return mirror_family_preset("fig3", "symmetric pair, emitter B 1 nm above the mirror",
                                1.0e-9, DickeParity::Symmetric);
  }
  if (id == "fig4") {
    return mirror_family_preset("fig4", "symmetric pair, emitter B 120 nm above the mirror",
                                1.2e-7, DickeParity::Symmetric);
  }
  if (id == "fig5") {
    return mirror_family_preset("fig5", "symmetric pair, emitter B 150 nm above the mirror",
                                1.5e-7, DickeParity::Symmetric);
  }
  if (id == "fig6") {
    return mirror_family_preset("fig6", "antisymmetric pair, emitter B 1 nm above the mirror",
                                1.0e-9, DickeParity::Antisymmetric);
  }
  if (id == "fig7") {
    return mirror_family_preset("fig7", "antisymmetric pair, emitter B 120 nm above the mirror",
                                1.2e-7, DickeParity::Antisymmetric);
  }
  if (id == "fig7-antinode") {
    return mirror_family_preset("fig7-antinode",
                                "antisymmetric pair, emitter B 150 nm above the mirror",
                                1.5e-7, DickeParity::Antisymmetric);
  }
  std::string known;
  for (const std::string& s : figure_preset_ids()) {
    if (!known.empty()) known += ", ";
    known += s;
  }
  throw std::invalid_argument("unknown figure id '" + std::string(id) +
                              "' (known ids: " + known + ")");
}

FigureData materialize_figure(const FigurePreset& preset) {
  FigureData data;
  data.preset = preset;
  data.tables.reserve(preset.curves.size());
  for (const CurveSpec& curve : preset.curves) {
    data.tables.push_back(run_sweep(curve.sweep));
  }
  return data;
}

void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  if (table.empty()) {
    throw std::invalid_argument("emit_csv: table is empty");
  }
  std::string out;
  out.reserve(table.size() * 220 + 128);
  out += csv_header;
  out += '\n';
  for (const SweepRow& row : table) {
    const RateResult& r = row.rates;
    out += fmt_g17(row.z_a_m);
    for (double v : {r.gamma_total, r.gamma_a, r.gamma_b, r.gamma_ab, r.gamma_bulk,
                     r.gamma_scatter, r.scaled_pair_sum, r.scaled_single}) {
      out += ',';
      out += fmt_g17(v);
    }
    out += '\n';
  }
  write_file_atomically(path, out);
}

void emit_figure_csv(const FigureData& figure, const std::filesystem::path& path) {
  if (figure.tables.size() != figure.preset.curves.size() || figure.tables.empty()) {
    throw std::invalid_argument("emit_figure_csv: tables do not match the preset curves");
  }
  const SweepTable& first = figure.tables.front();
  if (first.empty()) {
    throw std::invalid_argument("emit_figure_csv: empty tables");
  }
  for (const SweepTable& t : figure.tables) {
    if (t.size() != first.size()) {
      throw std::invalid_argument("emit_figure_csv: curves have differing sample counts");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].z_a_m != first[i].z_a_m) {
        throw std::invalid_argument("emit_figure_csv: curves do not share an abscissa grid");
      }
    }
  }

  std::string out;
  out.reserve(first.size() * (48 * figure.tables.size() + 32) + 256);
  out += "z_A_m";
  for (const CurveSpec& curve : figure.preset.curves) {
    out += ',';
    out += curve.label;
    out += "_scaled_pair_sum,";
    out += curve.label;
    out += "_scaled_single";
  }
  out += '\n';
  for (std::size_t i = 0; i < first.size(); ++i) {
    out += fmt_g17(first[i].z_a_m);
    for (const SweepTable& t : figure.tables) {
      out += ',';
      out += fmt_g17(t[i].rates.scaled_pair_sum);
      out += ',';
      out += fmt_g17(t[i].rates.scaled_single);
    }
    out += '\n';
  }
  write_file_atomically(path, out);
}

PlotSeries plot_series(const SweepTable& table, Normalization normalization,
                       std::string label, std::string stroke, std::string dash) {
  PlotSeries series;
  series.label = std::move(label);
  series.stroke = std::move(stroke);
  series.dash = std::move(dash);
  series.points.reserve(table.size());
  for (const SweepRow& row : table) {
    const double y = (normalization == Normalization::PairSum)
                         ? row.rates.scaled_pair_sum
                         : row.rates.scaled_single;
    series.points.push_back({row.z_a_m, y});
  }
  return series;
}

void emit_svg(const std::vector<PlotSeries>& series, const PlotStyle& style,
              const std::filesystem::path& path) {
  if (series.empty()) {
    throw std::invalid_argument("emit_svg: no series to plot");
  }
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  bool have_point = false;
  for (const PlotSeries& s : series) {
    bool series_has_point = false;
    for (const auto& p : s.points) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
      if (!have_point) {
        x_min = x_max = p[0];
        y_min = y_max = p[1];
        have_point = true;
      } else {
        x_min = std::min(x_min, p[0]);
        x_max = std::max(x_max, p[0]);
        y_min = std::min(y_min, p[1]);
        y_max = std::max(y_max, p[1]);
      }
      series_has_point = true;
    }
    if (!series_has_point) {
      throw std::invalid_argument("emit_svg: series '" + s.label +
                                  "' has no plottable points");
    }
  }
  if (x_max == x_min) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_max == y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  } else {
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
  }

  const double ml = 90.0, mr = 30.0, mt = 40.0, mb = 70.0;
  const double pw = style.width - ml - mr;
  const double ph = style.height - mt - mb;
  const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
  const auto py = [&](double y) {
    return mt + (1.0 - (y - y_min) / (y_max - y_min)) * ph;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
         "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
         std::to_string(style.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"black\">\n";

  // Frame and ticks.
  svg += "<rect x=\"" + fmt_px(ml) + "\" y=\"" + fmt_px(mt) + "\" width=\"" +
         fmt_px(pw) + "\" height=\"" + fmt_px(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int tick_count = 5;
  for (int i = 0; i <= tick_count; ++i) {
    const double fx = x_min + (x_max - x_min) * i / tick_count;
    const double fy = y_min + (y_max - y_min) * i / tick_count;
    const double tx = px(fx);
    const double ty = py(fy);
    svg += "<line x1=\"" + fmt_px(tx) + "\" y1=\"" + fmt_px(mt + ph) + "\" x2=\"" +
           fmt_px(tx) + "\" y2=\"" + fmt_px(mt + ph + 6.0) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_px(tx) + "\" y=\"" + fmt_px(mt + ph + 22.0) +
           "\" text-anchor=\"middle\">" + xml_escape(fmt_tick(fx)) + "</text>\n";
    svg += "<line x1=\"" + fmt_px(ml - 6.0) + "\" y1=\"" + fmt_px(ty) + "\" x2=\"" +
           fmt_px(ml) + "\" y2=\"" + fmt_px(ty) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_px(ml - 10.0) + "\" y=\"" + fmt_px(ty + 4.0) +
           "\" text-anchor=\"end\">" + xml_escape(fmt_tick(fy)) + "</text>\n";
  }
  svg += "<text x=\"" + fmt_px(ml + pw / 2.0) + "\" y=\"" +
         fmt_px(style.height - 18.0) + "\" text-anchor=\"middle\">" +
         xml_escape(style.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + fmt_px(mt + ph / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         fmt_px(mt + ph / 2.0) + ")\">" + xml_escape(style.y_label) + "</text>\n";

  // Curves, clipped to the frame.
  svg += "<clipPath id=\"plot-area\"><rect x=\"" + fmt_px(ml) + "\" y=\"" +
         fmt_px(mt) + "\" width=\"" + fmt_px(pw) + "\" height=\"" + fmt_px(ph) +
         "\"/></clipPath>\n";
  for (const PlotSeries& s : series) {
    svg += "<polyline fill=\"none\" clip-path=\"url(#plot-area)\" stroke=\"" +
           xml_escape(s.stroke) + "\" stroke-width=\"1.5\"";
    if (!s.dash.empty()) {
      svg += " stroke-dasharray=\"" + xml_escape(s.dash) + "\"";
    }
    svg += " points=\"";
    bool first_point = true;
    for (const auto& p : s.points) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
      if (!first_point) svg += ' ';
      svg += fmt_px(px(p[0]));
      svg += ',';
      svg += fmt_px(py(p[1]));
      first_point = false;
    }
    svg += "\"/>\n";
  }

  // Legend in the top-right corner of the frame.
  {
    double ly = mt + 16.0;
    const double lx = ml + pw - 220.0;
    for (const PlotSeries& s : series) {
      svg += "<line x1=\"" + fmt_px(lx) + "\" y1=\"" + fmt_px(ly - 4.0) + "\" x2=\"" +
             fmt_px(lx + 34.0) + "\" y2=\"" + fmt_px(ly - 4.0) + "\" stroke=\"" +
             xml_escape(s.stroke) + "\" stroke-width=\"1.5\"";
      if (!s.dash.empty()) {
        svg += " stroke-dasharray=\"" + xml_escape(s.dash) + "\"";
      }
      svg += "/>\n";
      svg += "<text x=\"" + fmt_px(lx + 42.0) + "\" y=\"" + fmt_px(ly) + "\">" +
             xml_escape(s.label) + "</text>\n";
      ly += 18.0;
    }
  }

  svg += "</g>\n</svg>\n";
  write_file_atomically(path, svg);
}

void emit_figure_svg(const FigureData& figure, const std::filesystem::path& path) {
  if (figure.tables.size() != figure.preset.curves.size() || figure.tables.empty()) {
    throw std::invalid_argument("emit_figure_svg: tables do not match the preset curves");
  }
  std::vector<PlotSeries> series;
  series.reserve(figure.tables.size());
  for (std::size_t i = 0; i < figure.tables.size(); ++i) {
    const CurveSpec& curve = figure.preset.curves[i];
    series.push_back(plot_series(figure.tables[i], figure.preset.normalization,
                                 curve.label, curve.stroke, curve.dash));
  }
  PlotStyle style;
  style.x_label = "z_A (m)";
  style.y_label = (figure.preset.normalization == Normalization::PairSum)
                      ? "rate / (free-space rate of A + B)"
                      : "rate / free-space rate of A";
  emit_svg(series, style, path);
}

}  // namespace corad::scenarios
