#ifndef CORAD_GREEN_HPP
#define CORAD_GREEN_HPP

#include "corad/core.hpp"
#include "corad/tensor.hpp"

// Dyadic Green's tensor of the electromagnetic field at a single
// frequency, for vacuum and for the half space above a perfectly
// conducting plane at z = 0.  Units: 1/m throughout (the 1/(eps0)
// response prefactors live in the rate formulas, not here).

namespace corad::green {

// Below this value of k*rho the imaginary part switches from the
// closed-form evaluation to its power series; the two agree to well
// below 1e-10 relative at the switch.
inline constexpr double im_series_threshold = 1e-3;

namespace detail {

// Coefficients of the imaginary part of the vacuum tensor,
//   Im G = (k/4pi) * (diag * I + dyad * e e),
// where e is the unit separation vector and x = k*rho.  Closed forms:
//   diag = j0(x) - j1(x)/x,  dyad = 3 j1(x)/x - j0(x).
struct ImCoefficients {
  double diag = 0.0;
  double dyad = 0.0;
};

/// Spherical Bessel j0(x) = sin(x)/x, with j0(0) = 1.
double sph_j0(double x);

/// j1(x)/x = (sin x - x cos x)/x^3, evaluated by series below x = 0.5
/// where the closed form loses accuracy to cancellation.
double sph_j1_over_x(double x);

/// Closed-form coefficients, stable for every x >= 0.
ImCoefficients im_coefficients_direct(double x);

/// Power series through x^4.
ImCoefficients im_coefficients_series(double x);

/// Dispatches on im_series_threshold.
ImCoefficients im_coefficients(double x);

}  // namespace detail

/// Vacuum Green's tensor G0(r, rp, omega).  The delta-function contact
/// term at r = rp is not part of this tensor; evaluation points closer
/// than min_separation_m throw std::domain_error (the imaginary part
/// stays finite there and is available from im_free_space_green).
ComplexTensor3 free_space_green(Position3 r, Position3 rp, AngularFrequency omega);

/// Imaginary part of G0, valid for every separation including r = rp,
/// where it equals (omega / 6 pi c) * I.  Bitwise identical to the
/// imaginary part of free_space_green away from coincidence.
RealTensor3 im_free_space_green(Position3 r, Position3 rp, AngularFrequency omega);

/// Mirror reflection operator diag(-1, -1, 1).
RealTensor3 reflection_matrix();

/// Image point (x, y, -z) of a source above the plane.  Throws
/// std::domain_error unless r.z > 0.
Position3 image_position(Position3 r);

/// Image dipole (-dx, -dy, dz) of a source dipole above the plane.
DipoleVector image_dipole(DipoleVector d);

/// Scattering part of the half-space tensor,
///   G1(r, rp, omega) = G0(r, rp*, omega) . R,
/// with rp* the image of rp and R the reflection operator.  Both points
/// must satisfy z > 0.  Finite at r = rp since the image never
/// coincides with a point above the plane.
ComplexTensor3 scattering_green(Position3 r, Position3 rp, AngularFrequency omega);

/// Environment-selected total tensor: G0 in free space, G0 + G1 above
/// the mirror.  At coincident points in free space this throws like
/// free_space_green; above the mirror it returns i * Im G0(r, r) + G1,
/// the finite part that enters decay rates (the divergent real bulk
/// contribution is dropped).
ComplexTensor3 total_green(Environment env, Position3 r, Position3 rp,
                           AngularFrequency omega);

}  // namespace corad::green

#endif  // CORAD_GREEN_HPP
