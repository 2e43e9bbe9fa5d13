#ifndef CORAD_TEST_SUPPORT_HPP
#define CORAD_TEST_SUPPORT_HPP

#include <cmath>
#include <random>

#include "corad/core.hpp"

// Shared helpers for the test binaries: deterministic random geometry
// generators and relative-error utilities.

namespace test_support {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Error measured against an explicit scale, for quantities that may
// legitimately pass through zero.
inline double scaled_err(double got, double want, double scale) {
  return std::abs(got - want) / scale;
}

struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(gen);
  }

  double log_uniform(double lo, double hi) {
    return lo * std::exp(uniform(0.0, std::log(hi / lo)));
  }

  corad::Vec3 direction() {
    const double u = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * corad::constants::pi);
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    return {st * std::cos(phi), st * std::sin(phi), u};
  }

  corad::DipoleVector dipole(double magnitude) {
    const corad::Vec3 d = magnitude * direction();
    return {d.x, d.y, d.z};
  }
};

inline corad::DipoleVector z_dipole(double magnitude) { return {0.0, 0.0, magnitude}; }
inline corad::DipoleVector x_dipole(double magnitude) { return {magnitude, 0.0, 0.0}; }

// Both atoms on the z axis, the geometry of every preset.
inline corad::PairConfig axial_pair(double z_a_m, double z_b_m,
                                    corad::DipoleVector d_a, corad::DipoleVector d_b,
                                    corad::DickeParity parity, corad::Environment env,
                                    double omega0_rad_per_s = 1.55e16) {
  corad::PairConfig cfg;
  cfg.atom_a = {{0.0, 0.0, z_a_m}, d_a};
  cfg.atom_b = {{0.0, 0.0, z_b_m}, d_b};
  cfg.omega0 = {omega0_rad_per_s};
  cfg.parity = parity;
  cfg.environment = env;
  return cfg;
}

}  // namespace test_support

#endif  // CORAD_TEST_SUPPORT_HPP
