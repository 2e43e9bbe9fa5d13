#ifndef CORAD_RATES_HPP
#define CORAD_RATES_HPP

#include "corad/core.hpp"
#include "corad/green.hpp"

// Spontaneous-emission rates of one and two dipole emitters, built from
// the imaginary part of the Green's tensor:
//
//   Gamma_X  = (2 mu0 omega0^2 / hbar) d_X . Im G(r_X, r_X) . d_X
//   Gamma_AB = (2 mu0 omega0^2 / hbar) d_A . Im G(r_A, r_B) . d_B
//   Gamma_+- = (Gamma_A + Gamma_B)/2 +- Gamma_AB
//
// with the upper sign for the symmetric Dicke state.

namespace corad::rates {

// Distance regimes of the closed-form limits below.
enum class AsymptoticRegime {
  NonRetarded,  // every pairwise distance much smaller than the wavelength
  Retarded,     // emitter separation much larger than the wavelength
};

/// Common rate prefactor 2 mu0 omega0^2 / hbar in SI (1 / (s m^-1 ...)),
/// combining with a Green's tensor in 1/m and dipoles in C m to 1/s.
double rate_prefactor(AngularFrequency omega0);

/// Rate of an isolated emitter in vacuum, |d|^2 omega0^3 / (3 pi eps0 hbar c^3).
double free_space_single_atom_rate(DipoleVector d, AngularFrequency omega0);

/// Rate of a single emitter in the given environment.
double single_atom_rate(DipoleVector d, Position3 r, AngularFrequency omega0,
                        Environment env);

/// Cross (interference) rate Gamma_AB of two emitters.  Throws
/// std::domain_error when the positions coincide.
double interference_rate(DipoleVector d_a, DipoleVector d_b, Position3 r_a,
                         Position3 r_b, AngularFrequency omega0, Environment env);

/// Closed form of the free-space Gamma_AB for emitters separated by z
/// along any single axis, written with lambda = z omega0 / c:
///
///   [ (dA.dB - 3 dAz dBz)(lambda cos lambda - sin lambda)
///     + (dA.dB - dAz dBz) lambda^2 sin lambda ] / (2 pi eps0 hbar z^3)
///
/// where the z components are taken along the separation axis.
double free_space_interference_closed_form(DipoleVector d_a, DipoleVector d_b,
                                           double z_m, AngularFrequency omega0);

/// Full rate breakdown of a pair configuration.
RateResult collective_rate(const PairConfig& cfg);

/// Limiting collective rates.  NonRetarded requires every pairwise
/// distance (including images above the mirror) deep in the near zone;
/// Retarded requires the emitters far apart, with emitter B near the
/// mirror plane when the environment has one (emitter A's own mirror
/// distance then no longer matters).
double asymptotic_rate(AsymptoticRegime regime, const PairConfig& cfg);

/// exp(-gamma t); both arguments must be non-negative and finite.
double survival_probability(double gamma, double t_s);

}  // namespace corad::rates

#endif  // CORAD_RATES_HPP
