#ifndef CORAD_CORE_HPP
#define CORAD_CORE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

// Core domain types for collective spontaneous emission of a pair of
// dipole emitters, either in free space or above a perfectly reflecting
// plane at z = 0.  All quantities are SI: positions in m, dipole moments
// in C m, angular frequencies in rad/s, rates in 1/s.

namespace corad {

namespace constants {

// Exact by SI definition.
inline constexpr double speed_of_light = 299792458.0;  // m/s

// CODATA 2018 recommended value.
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // N/A^2

// Derived so that c^2 * mu0 * eps0 == 1 holds to rounding, which the
// rate identities below rely on.  The CODATA literal agrees with this
// value to its quoted uncertainty.
inline constexpr double vacuum_permittivity =
    1.0 / (vacuum_permeability * speed_of_light * speed_of_light);  // F/m

// Exact by SI definition.
inline constexpr double planck = 6.62607015e-34;  // J s

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr double reduced_planck = planck / (2.0 * pi);  // J s

}  // namespace constants

// Plain 3-vector used for displacements and intermediate algebra.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator*(Vec3 v, double s) { return s * v; }
constexpr Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

inline bool is_finite(Vec3 v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Cartesian position in meters.
struct Position3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 vec() const { return {x, y, z}; }
};

constexpr Vec3 displacement(Position3 to, Position3 from) {
  return to.vec() - from.vec();
}

inline double distance(Position3 a, Position3 b) { return norm(displacement(a, b)); }

// Real transition dipole moment in C m.  A zero vector is permitted and
// yields zero rates.
struct DipoleVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 vec() const { return {x, y, z}; }
};

// Angular frequency in rad/s, kept as a distinct type so that a plain
// length or rate cannot be passed where a frequency is meant.
struct AngularFrequency {
  double rad_per_s = 0.0;
};

/// Vacuum wavelength 2*pi*c/omega in m.  Throws std::domain_error for a
/// non-positive or non-finite frequency.
inline double transition_wavelength(AngularFrequency omega) {
  if (!(omega.rad_per_s > 0.0) || !std::isfinite(omega.rad_per_s)) {
    throw std::domain_error("transition_wavelength: angular frequency must be positive and finite");
  }
  return 2.0 * constants::pi * constants::speed_of_light / omega.rad_per_s;
}

enum class Environment {
  FreeSpace,
  PerfectMirror,  // perfectly conducting plane at z = 0, emitters at z > 0
};

// Two-emitter Dicke state: Symmetric carries the +1 sign in front of the
// interference rate, Antisymmetric the -1 sign.
enum class DickeParity : int {
  Symmetric = +1,
  Antisymmetric = -1,
};

constexpr int sign(DickeParity p) { return static_cast<int>(p); }

struct Atom {
  Position3 position;
  DipoleVector dipole;
};

// Evaluation points closer than this are treated as coincident.  Physical
// emitter separations are many orders of magnitude above it.
inline constexpr double min_separation_m = 1e-15;

// Failure to produce an output file (as opposed to an invalid request).
// The command-line tool maps this to its own exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full description of one two-emitter decay problem.
struct PairConfig {
  Atom atom_a;
  Atom atom_b;
  AngularFrequency omega0;
  DickeParity parity = DickeParity::Symmetric;
  Environment environment = Environment::FreeSpace;

  /// Throws std::domain_error when the configuration cannot describe a
  /// physical pair: non-finite entries, non-positive frequency,
  /// coincident emitters, or an emitter on or below the mirror plane.
  void validate() const;
};

inline void PairConfig::validate() const {
  if (!is_finite(atom_a.position.vec()) || !is_finite(atom_b.position.vec())) {
    throw std::domain_error("PairConfig: positions must be finite");
  }
  if (!is_finite(atom_a.dipole.vec()) || !is_finite(atom_b.dipole.vec())) {
    throw std::domain_error("PairConfig: dipole moments must be finite");
  }
  if (!(omega0.rad_per_s > 0.0) || !std::isfinite(omega0.rad_per_s)) {
    throw std::domain_error("PairConfig: transition frequency must be positive and finite");
  }
  if (distance(atom_a.position, atom_b.position) < min_separation_m) {
    throw std::domain_error("PairConfig: atom positions coincide");
  }
  if (environment == Environment::PerfectMirror &&
      (!(atom_a.position.z > 0.0) || !(atom_b.position.z > 0.0))) {
    throw std::domain_error("PairConfig: emitters must lie above the mirror plane (z > 0)");
  }
}

// Decay rates of one configuration, all in 1/s.
//
//   gamma_total   = (gamma_A + gamma_B)/2 + parity * gamma_AB
//   gamma_bulk    + gamma_scatter == gamma_total (scatter is 0 in free space)
//
// scaled_pair_sum normalizes gamma_total by the sum of the two isolated
// free-space rates, scaled_single by the free-space rate of emitter A
// alone.  Both are NaN when the normalizing rate vanishes (zero dipole).
struct RateResult {
  double gamma_total = 0.0;
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  double gamma_ab = 0.0;
  double gamma_bulk = 0.0;
  double gamma_scatter = 0.0;
  double scaled_pair_sum = 0.0;
  double scaled_single = 0.0;
};

}  // namespace corad

#endif  // CORAD_CORE_HPP
