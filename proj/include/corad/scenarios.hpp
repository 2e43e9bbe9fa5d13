#ifndef CORAD_SCENARIOS_HPP
#define CORAD_SCENARIOS_HPP

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "corad/core.hpp"

// Parameter sweeps over emitter geometry, the preset curve families of
// the standard plots, and CSV/SVG emission.  All sweeps keep both
// emitters on the z axis, the geometry of every preset.

namespace corad::scenarios {

enum class SweepParameter {
  AtomAHeight,  // emitter A at (0, 0, value), emitter B fixed
  Separation,   // emitter A at (0, 0, z_B + value)
};

enum class SweepScale {
  Linear,
  Logarithmic,
};

// Dipole orientations applied to both emitters at each sample; FromBase
// keeps whatever the base configuration carries.
enum class OrientationPair {
  BothZ,
  BothX,
  FromBase,
};

// Which normalized column a plot shows; emitted CSVs always contain both.
enum class Normalization {
  PairSum,     // gamma_total / (gamma_A,free + gamma_B,free)
  SingleAtom,  // gamma_total / gamma_A,free
};

struct SweepSpec {
  PairConfig base;  // emitter A's position is replaced at every sample
  SweepParameter vary = SweepParameter::AtomAHeight;
  double min_m = 0.0;
  double max_m = 0.0;
  int sample_count = 2000;
  SweepScale scale = SweepScale::Linear;
  OrientationPair orientation = OrientationPair::FromBase;

  /// Throws std::invalid_argument for an unusable range or sample count
  /// (logarithmic scales need min > 0; height sweeps must stay above the
  /// fixed emitter); endpoint configurations are validated as well.
  void validate() const;
};

struct SweepRow {
  double z_a_m = 0.0;  // emitter A height after materializing the sample
  RateResult rates;
};

using SweepTable = std::vector<SweepRow>;

/// Evaluates collective_rate over the sampled geometries; rows ascend in
/// the swept parameter.
SweepTable run_sweep(const SweepSpec& spec);

// One plotted curve: a sweep plus its line style.
struct CurveSpec {
  std::string label;
  std::string stroke;  // SVG color
  std::string dash;    // SVG stroke-dasharray, empty for solid
  SweepSpec sweep;
};

struct FigurePreset {
  std::string id;
  std::string title;
  Normalization normalization = Normalization::SingleAtom;
  std::vector<CurveSpec> curves;
};

/// Known preset ids, in presentation order.
const std::vector<std::string>& figure_preset_ids();

/// Preset by id; throws std::invalid_argument for an unknown id.
FigurePreset figure_preset(std::string_view id);

struct FigureData {
  FigurePreset preset;
  std::vector<SweepTable> tables;  // one per curve, shared abscissa grid
};

/// Runs every curve of the preset.
FigureData materialize_figure(const FigurePreset& preset);

inline constexpr std::string_view csv_header =
    "z_A_m,gamma_total_si,gamma_A_si,gamma_B_si,gamma_AB_si,gamma_bulk_si,"
    "gamma_scatter_si,scaled_pair_sum,scaled_single";

/// Writes one sweep as CSV: the header above, then one row per sample
/// with every value at 17 significant digits.  The file appears
/// atomically (temp file + rename); failures throw IoError and leave no
/// partial output.
void emit_csv(const SweepTable& table, const std::filesystem::path& path);

/// Writes a figure as one CSV: shared z_A_m column, then
/// <label>_scaled_pair_sum and <label>_scaled_single per curve.
void emit_figure_csv(const FigureData& figure, const std::filesystem::path& path);

// One polyline for the SVG emitter.
struct PlotSeries {
  std::string label;
  std::string stroke;
  std::string dash;
  std::vector<std::array<double, 2>> points;  // (x, y)
};

struct PlotStyle {
  int width = 960;
  int height = 600;
  std::string x_label;
  std::string y_label;
};

/// Standalone SVG with axes, tick labels, a legend, and one polyline per
/// series.  Throws std::invalid_argument (before creating anything) when
/// there are no series or a series is empty; I/O failures throw IoError.
void emit_svg(const std::vector<PlotSeries>& series, const PlotStyle& style,
              const std::filesystem::path& path);

/// Curve extracted from a sweep for plotting: x = z_A, y = the selected
/// normalized rate.
PlotSeries plot_series(const SweepTable& table, Normalization normalization,
                       std::string label, std::string stroke, std::string dash);

/// Renders the preset's curves through emit_svg.
void emit_figure_svg(const FigureData& figure, const std::filesystem::path& path);

}  // namespace corad::scenarios

#endif  // CORAD_SCENARIOS_HPP
