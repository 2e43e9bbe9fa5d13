#include "corad/rates.hpp"

#include <cmath>
#include <limits>

namespace corad::rates {

namespace {

using constants::pi;
using constants::reduced_planck;
using constants::speed_of_light;
using constants::vacuum_permeability;
using constants::vacuum_permittivity;

void require_dipole(DipoleVector d) {
  if (!is_finite(d.vec())) {
    throw std::domain_error("rates: dipole moment must be finite");
  }
}

void require_frequency(AngularFrequency omega0) {
  if (!(omega0.rad_per_s > 0.0) || !std::isfinite(omega0.rad_per_s)) {
    throw std::domain_error("rates: transition frequency must be positive and finite");
  }
}

void require_above_mirror(Position3 r, Environment env) {
  if (env == Environment::PerfectMirror && !(r.z > 0.0)) {
    throw std::domain_error("rates: emitter must lie above the mirror plane (z > 0)");
  }
}

// Im of the environment tensor between two (possibly equal) emitter
// positions.  The bulk part is always evaluated through the dedicated
// imaginary-part routine, which stays finite at coincidence.
RealTensor3 im_env_green(Environment env, Position3 r, Position3 rp,
                         AngularFrequency omega0) {
  RealTensor3 im = green::im_free_space_green(r, rp, omega0);
  if (env == Environment::PerfectMirror) {
    im += imag_part(green::scattering_green(r, rp, omega0));
  }
  return im;
}

double scaled_or_nan(double value, double reference) {
  if (reference == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return value / reference;
}

}  // namespace

double rate_prefactor(AngularFrequency omega0) {
  require_frequency(omega0);
  return 2.0 * vacuum_permeability * omega0.rad_per_s * omega0.rad_per_s /
         reduced_planck;
}

double free_space_single_atom_rate(DipoleVector d, AngularFrequency omega0) {
  require_dipole(d);
  require_frequency(omega0);
  const double w = omega0.rad_per_s;
  return dot(d.vec(), d.vec()) * w * w * w /
         (3.0 * pi * vacuum_permittivity * reduced_planck * speed_of_light *
          speed_of_light * speed_of_light);
}

double single_atom_rate(DipoleVector d, Position3 r, AngularFrequency omega0,
                        Environment env) {
  require_dipole(d);
  require_above_mirror(r, env);
  const RealTensor3 im = im_env_green(env, r, r, omega0);
  return rate_prefactor(omega0) * bilinear(d.vec(), im, d.vec());
}

double interference_rate(DipoleVector d_a, DipoleVector d_b, Position3 r_a,
                         Position3 r_b, AngularFrequency omega0, Environment env) {
  require_dipole(d_a);
  require_dipole(d_b);
  require_above_mirror(r_a, env);
  require_above_mirror(r_b, env);
  if (distance(r_a, r_b) < min_separation_m) {
    throw std::domain_error("interference_rate: atom positions coincide");
  }
  const RealTensor3 im = im_env_green(env, r_a, r_b, omega0);
  return rate_prefactor(omega0) * bilinear(d_a.vec(), im, d_b.vec());
}

double free_space_interference_closed_form(DipoleVector d_a, DipoleVector d_b,
                                           double z_m, AngularFrequency omega0) {
  require_dipole(d_a);
  require_dipole(d_b);
  require_frequency(omega0);
  if (!(z_m > 0.0) || !std::isfinite(z_m)) {
    throw std::domain_error("free_space_interference_closed_form: separation must be positive and finite");
  }
  const double lambda = z_m * omega0.rad_per_s / speed_of_light;
  const double dd = dot(d_a.vec(), d_b.vec());
  const double dzdz = d_a.z * d_b.z;
  const double s = std::sin(lambda);
  const double c = std::cos(lambda);
  const double bracket =
      (dd - 3.0 * dzdz) * (lambda * c - s) + (dd - dzdz) * lambda * lambda * s;
  return bracket /
         (2.0 * pi * vacuum_permittivity * reduced_planck * z_m * z_m * z_m);
}

RateResult collective_rate(const PairConfig& cfg) {
  cfg.validate();

  const double pref = rate_prefactor(cfg.omega0);
  const Vec3 da = cfg.atom_a.dipole.vec();
  const Vec3 db = cfg.atom_b.dipole.vec();
  const Position3 ra = cfg.atom_a.position;
  const Position3 rb = cfg.atom_b.position;
  const double par = sign(cfg.parity);

  // Bulk pieces exist in both environments.
  const double bulk_a =
      pref * bilinear(da, green::im_free_space_green(ra, ra, cfg.omega0), da);
  const double bulk_b =
      pref * bilinear(db, green::im_free_space_green(rb, rb, cfg.omega0), db);
  const double bulk_ab =
      pref * bilinear(da, green::im_free_space_green(ra, rb, cfg.omega0), db);

  double scatter_a = 0.0;
  double scatter_b = 0.0;
  double scatter_ab = 0.0;
  if (cfg.environment == Environment::PerfectMirror) {
    scatter_a =
        pref * bilinear(da, imag_part(green::scattering_green(ra, ra, cfg.omega0)), da);
    scatter_b =
        pref * bilinear(db, imag_part(green::scattering_green(rb, rb, cfg.omega0)), db);
    scatter_ab =
        pref * bilinear(da, imag_part(green::scattering_green(ra, rb, cfg.omega0)), db);
  }

  RateResult result;
  result.gamma_a = bulk_a + scatter_a;
  result.gamma_b = bulk_b + scatter_b;
  result.gamma_ab = bulk_ab + scatter_ab;
  result.gamma_bulk = 0.5 * (bulk_a + bulk_b) + par * bulk_ab;
  result.gamma_scatter = 0.5 * (scatter_a + scatter_b) + par * scatter_ab;
  result.gamma_total = 0.5 * (result.gamma_a + result.gamma_b) + par * result.gamma_ab;

  const double free_a = free_space_single_atom_rate(cfg.atom_a.dipole, cfg.omega0);
  const double free_b = free_space_single_atom_rate(cfg.atom_b.dipole, cfg.omega0);
  result.scaled_pair_sum = scaled_or_nan(result.gamma_total, free_a + free_b);
  result.scaled_single = scaled_or_nan(result.gamma_total, free_a);
  return result;
}

double asymptotic_rate(AsymptoticRegime regime, const PairConfig& cfg) {
  cfg.validate();

  const double w = cfg.omega0.rad_per_s;
  const double pref = vacuum_permeability * w * w * w /
                      (6.0 * pi * speed_of_light * reduced_planck);
  const Vec3 da = cfg.atom_a.dipole.vec();
  const Vec3 db = cfg.atom_b.dipole.vec();
  const double par = sign(cfg.parity);

  if (cfg.environment == Environment::FreeSpace) {
    if (regime == AsymptoticRegime::NonRetarded) {
      return pref * (dot(da, da) + dot(db, db) + par * 2.0 * dot(da, db));
    }
    return pref * (dot(da, da) + dot(db, db));
  }

  const Vec3 da_img = green::image_dipole(cfg.atom_a.dipole).vec();
  const Vec3 db_img = green::image_dipole(cfg.atom_b.dipole).vec();
  if (regime == AsymptoticRegime::NonRetarded) {
    return pref * (dot(da, da) + dot(da, da_img) + dot(db, db) + dot(db, db_img) +
                   par * 2.0 * (dot(da, db) + dot(da, db_img)));
  }
  // Retarded, with emitter B the one left near the plane: interference
  // and the distant emitter's own image term average out.
  return pref * (dot(da, da) + dot(db, db) + dot(db, db_img));
}

double survival_probability(double gamma, double t_s) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("survival_probability: rate must be non-negative and finite");
  }
  if (!(t_s >= 0.0) || !std::isfinite(t_s)) {
    throw std::domain_error("survival_probability: time must be non-negative and finite");
  }
  return std::exp(-gamma * t_s);
}

}  // namespace corad::rates
