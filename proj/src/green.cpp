#include "corad/green.hpp"

#include <cmath>

namespace corad::green {

namespace detail {

double sph_j0(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

double sph_j1_over_x(double x) {
  // (sin x - x cos x)/x^3 cancels for small x: both terms are O(1)
  // while the result is O(1), but their difference before dividing is
  // O(x^3).  Sum the Taylor series instead below x = 0.5; successive
  // terms obey t_{k+1} = -t_k x^2 / ((2k+2)(2k+5)), so eight terms give
  // full double precision there.
  if (x < 0.5) {
    const double x2 = x * x;
    double term = 1.0 / 3.0;
    double sum = term;
    for (int k = 0; k < 10; ++k) {
      term *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 5.0));
      sum += term;
      if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

ImCoefficients im_coefficients_direct(double x) {
  const double j0 = sph_j0(x);
  const double j1x = sph_j1_over_x(x);
  return {j0 - j1x, 3.0 * j1x - j0};
}

ImCoefficients im_coefficients_series(double x) {
  // Expansion of the direct coefficients through x^4; in units of
  // k/(4 pi) the diagonal starts at 2/3, matching the coincidence
  // limit (omega / 6 pi c) * I.
  const double x2 = x * x;
  const double x4 = x2 * x2;
  return {2.0 / 3.0 - 2.0 * x2 / 15.0 + x4 / 140.0, x2 / 15.0 - x4 / 210.0};
}

ImCoefficients im_coefficients(double x) {
  if (x < im_series_threshold) return im_coefficients_series(x);
  return im_coefficients_direct(x);
}

}  // namespace detail

namespace {

void require_valid_point_pair(Position3 r, Position3 rp, AngularFrequency omega) {
  if (!is_finite(r.vec()) || !is_finite(rp.vec())) {
    throw std::domain_error("green: evaluation points must be finite");
  }
  if (!(omega.rad_per_s > 0.0) || !std::isfinite(omega.rad_per_s)) {
    throw std::domain_error("green: angular frequency must be positive and finite");
  }
}

}  // namespace

ComplexTensor3 free_space_green(Position3 r, Position3 rp, AngularFrequency omega) {
  require_valid_point_pair(r, rp, omega);
  const Vec3 sep = displacement(r, rp);
  const double rho = norm(sep);
  if (rho < min_separation_m) {
    throw std::domain_error(
        "free_space_green: coincident evaluation points; the real part diverges, "
        "use im_free_space_green for the finite imaginary part");
  }

  const double k = omega.rad_per_s / constants::speed_of_light;
  const double x = k * rho;
  const Vec3 e = (1.0 / rho) * sep;

  // Real part of e^{ix}(1 - ix - x^2) and of e^{ix}(3 - 3ix - x^2),
  // divided by 4 pi k^2 rho^3.  No cancellation: the leading 1/x^3 term
  // survives in both.
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double scale = 1.0 / (4.0 * constants::pi * k * k * rho * rho * rho);
  const double re_diag = -(c + x * s - x * x * c) * scale;
  const double re_dyad = (3.0 * c + 3.0 * x * s - x * x * c) * scale;

  const auto im = detail::im_coefficients(x);
  const double im_scale = k / (4.0 * constants::pi);
  const double im_diag = im.diag * im_scale;
  const double im_dyad = im.dyad * im_scale;

  const RealTensor3 ee = outer(e, e);
  ComplexTensor3 g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double kron = (i == j) ? 1.0 : 0.0;
      g(i, j) = {re_diag * kron + re_dyad * ee(i, j),
                 im_diag * kron + im_dyad * ee(i, j)};
    }
  }
  return g;
}

RealTensor3 im_free_space_green(Position3 r, Position3 rp, AngularFrequency omega) {
  require_valid_point_pair(r, rp, omega);
  const Vec3 sep = displacement(r, rp);
  const double rho = norm(sep);
  const double k = omega.rad_per_s / constants::speed_of_light;

  if (rho == 0.0) {
    const double coincidence = k / (6.0 * constants::pi);
    return RealTensor3::diagonal(coincidence, coincidence, coincidence);
  }

  const double x = k * rho;
  const auto im = detail::im_coefficients(x);
  const double im_scale = k / (4.0 * constants::pi);
  // Same expression, factor for factor, as the imaginary components in
  // free_space_green, so the two routines agree bitwise off coincidence.
  const double im_diag = im.diag * im_scale;
  const double im_dyad = im.dyad * im_scale;
  const Vec3 e = (1.0 / rho) * sep;
  const RealTensor3 ee = outer(e, e);

  RealTensor3 g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double kron = (i == j) ? 1.0 : 0.0;
      g(i, j) = im_diag * kron + im_dyad * ee(i, j);
    }
  }
  return g;
}

RealTensor3 reflection_matrix() { return RealTensor3::diagonal(-1.0, -1.0, 1.0); }

Position3 image_position(Position3 r) {
  if (!(r.z > 0.0)) {
    throw std::domain_error("image_position: point must lie above the mirror plane (z > 0)");
  }
  return {r.x, r.y, -r.z};
}

DipoleVector image_dipole(DipoleVector d) { return {-d.x, -d.y, d.z}; }

ComplexTensor3 scattering_green(Position3 r, Position3 rp, AngularFrequency omega) {
  if (!(r.z > 0.0) || !(rp.z > 0.0)) {
    throw std::domain_error("scattering_green: both points must lie above the mirror plane (z > 0)");
  }
  const ComplexTensor3 g0 = free_space_green(r, image_position(rp), omega);
  return g0 * to_complex(reflection_matrix());
}

ComplexTensor3 total_green(Environment env, Position3 r, Position3 rp,
                           AngularFrequency omega) {
  if (env == Environment::FreeSpace) {
    return free_space_green(r, rp, omega);
  }
  if (!(r.z > 0.0) || !(rp.z > 0.0)) {
    throw std::domain_error("total_green: both points must lie above the mirror plane (z > 0)");
  }
  ComplexTensor3 bulk;
  if (distance(r, rp) < min_separation_m) {
    bulk = combine(RealTensor3::zero(), im_free_space_green(r, rp, omega));
  } else {
    bulk = free_space_green(r, rp, omega);
  }
  return bulk + scattering_green(r, rp, omega);
}

}  // namespace corad::green
