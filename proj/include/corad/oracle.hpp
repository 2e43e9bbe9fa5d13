#ifndef CORAD_ORACLE_HPP
#define CORAD_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corad/core.hpp"
#include "corad/tensor.hpp"

// Independent cross-checks of the analytic tensors and rates, built on
// angular quadrature over radiation directions instead of closed forms:
//
//  - the imaginary part of the vacuum Green's tensor as a transverse
//    plane-wave mode sum over the unit sphere, and
//  - collective decay rates as far-field radiated power of the two
//    coherent sources (plus their mirror images), integrated over the
//    full sphere or, above the mirror, the upper hemisphere.
//
// Both are anchored to the isolated-emitter rate, so they share no
// algebra with the closed-form implementations they check.

namespace corad::oracle {

// Product quadrature on the unit sphere: Gauss-Legendre nodes in
// cos(theta) times a uniform azimuthal grid.
struct QuadratureSpec {
  int polar_order = 64;
  int azimuthal_count = 128;
  double target_rel_tol = 1e-8;

  /// Throws std::invalid_argument for orders below 4 azimuthal counts
  /// below 8, or a non-positive tolerance.
  void validate() const;

  /// Rule sized for integrands oscillating up to the given phase range
  /// (radians across the sphere); never smaller than the default.
  static QuadratureSpec for_phase(double max_phase_rad);

  /// Rule sized for a configuration, from the largest pairwise distance
  /// among its sources and, above the mirror, their images.
  static QuadratureSpec for_config(const PairConfig& cfg);
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // positive, summing to 2
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
GaussLegendreRule gauss_legendre(int n);

/// Im G0(r, rp, omega) as the transverse mode sum
///   (omega / 16 pi^2 c) Int dOmega (I - n n) cos(k n . (r - rp)),
/// normalized so that the coincidence limit is exactly the quadrature's
/// own (omega / 6 pi c) I.  Symmetric under r <-> rp by construction.
RealTensor3 mode_sum_im_green(Position3 r, Position3 rp, AngularFrequency omega,
                              const QuadratureSpec& quad);

/// Decay rate of the pair from the angular distribution of far-field
/// power radiated by the two coherently added sources (amplitudes
/// 1/sqrt(2) and parity/sqrt(2)), normalized to the isolated-emitter
/// rate.  Above the mirror, image sources are added and the integral
/// runs over the upper hemisphere.
double radiated_power_rate(const PairConfig& cfg, const QuadratureSpec& quad);

/// Same far-field construction for one emitter of unit amplitude.
double radiated_power_single_rate(DipoleVector d, Position3 r,
                                  AngularFrequency omega, Environment env,
                                  const QuadratureSpec& quad);

/// Reproducible family of randomized pair configurations spanning both
/// environments, k*rho in [0.1, 30], mirror distances in [1e-3, 5]
/// wavelengths, random orientations and parities.
std::vector<PairConfig> random_validation_configs(std::uint64_t seed, int count);

struct ValidationCheck {
  std::string name;
  double max_error = 0.0;  // worst relative error seen (or ratio, per check)
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationOptions {
  int config_count = 200;
  std::uint64_t seed = 20260815;
  int polar_order = 64;  // base order for the fixed-order checks
};

/// Runs the full cross-check suite and returns one row per check.
std::vector<ValidationCheck> run_validation(const ValidationOptions& options);

}  // namespace corad::oracle

#endif  // CORAD_ORACLE_HPP
