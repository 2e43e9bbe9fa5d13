#include "corad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "corad/green.hpp"
#include "corad/rates.hpp"

namespace corad::oracle {

namespace {

using constants::pi;
using constants::speed_of_light;

struct FarFieldSource {
  Vec3 position;
  Vec3 dipole;
  double amplitude = 0.0;
};

void require_point(Position3 r) {
  if (!is_finite(r.vec())) {
    throw std::domain_error("oracle: evaluation points must be finite");
  }
}

void require_frequency(AngularFrequency omega) {
  if (!(omega.rad_per_s > 0.0) || !std::isfinite(omega.rad_per_s)) {
    throw std::domain_error("oracle: angular frequency must be positive and finite");
  }
}

// Sum of w |F(n)|^2 over the quadrature grid with
// F(n) = sum_j a_j (d_j - (n.d_j) n) exp(-i k n . r_j); the grid covers
// the full sphere or, for bounded geometries, the upper hemisphere.
double integrate_radiance(const std::vector<FarFieldSource>& sources, double k,
                          bool upper_hemisphere, const QuadratureSpec& quad) {
  const GaussLegendreRule rule = gauss_legendre(quad.polar_order);
  const int m_count = quad.azimuthal_count;
  const double w_phi = 2.0 * pi / m_count;

  double total = 0.0;
  for (int iu = 0; iu < quad.polar_order; ++iu) {
    double u = rule.nodes[iu];
    double w_u = rule.weights[iu];
    if (upper_hemisphere) {
      u = 0.5 * (u + 1.0);
      w_u *= 0.5;
    }
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int m = 0; m < m_count; ++m) {
      const double phi = w_phi * m;
      const Vec3 n{st * std::cos(phi), st * std::sin(phi), u};
      Vec3 f_re{}, f_im{};
      for (const FarFieldSource& src : sources) {
        const Vec3 proj = src.dipole - dot(n, src.dipole) * n;
        const double phase = -k * dot(n, src.position);
        f_re = f_re + (src.amplitude * std::cos(phase)) * proj;
        f_im = f_im + (src.amplitude * std::sin(phase)) * proj;
      }
      total += w_u * w_phi * (dot(f_re, f_re) + dot(f_im, f_im));
    }
  }
  return total;
}

// Full-sphere radiance of a unit dipole with unit amplitude, evaluated
// with the same polar rule; exactly (8 pi / 3) up to quadrature
// rounding, and the anchor that converts radiance into a rate.
double unit_dipole_radiance(const QuadratureSpec& quad) {
  const std::vector<FarFieldSource> unit = {{Vec3{}, Vec3{0.0, 0.0, 1.0}, 1.0}};
  return integrate_radiance(unit, 1.0, false, quad);
}

double rate_from_radiance(double radiance, double anchor_radiance,
                          AngularFrequency omega) {
  const double w = omega.rad_per_s;
  const double unit_rate =
      w * w * w / (3.0 * pi * constants::vacuum_permittivity *
                   constants::reduced_planck * speed_of_light * speed_of_light *
                   speed_of_light);
  return unit_rate * radiance / anchor_radiance;
}

std::vector<FarFieldSource> pair_sources(const PairConfig& cfg) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<FarFieldSource> sources = {
      {cfg.atom_a.position.vec(), cfg.atom_a.dipole.vec(), inv_sqrt2},
      {cfg.atom_b.position.vec(), cfg.atom_b.dipole.vec(), sign(cfg.parity) * inv_sqrt2},
  };
  if (cfg.environment == Environment::PerfectMirror) {
    sources.push_back({green::image_position(cfg.atom_a.position).vec(),
                       green::image_dipole(cfg.atom_a.dipole).vec(), inv_sqrt2});
    sources.push_back({green::image_position(cfg.atom_b.position).vec(),
                       green::image_dipole(cfg.atom_b.dipole).vec(),
                       sign(cfg.parity) * inv_sqrt2});
  }
  return sources;
}

double max_pairwise_distance(const std::vector<FarFieldSource>& sources) {
  double d = 0.0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = i + 1; j < sources.size(); ++j) {
      d = std::max(d, norm(sources[i].position - sources[j].position));
    }
  }
  return d;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (polar_order < 4) {
    throw std::invalid_argument("QuadratureSpec: polar order must be at least 4");
  }
  if (azimuthal_count < 8) {
    throw std::invalid_argument("QuadratureSpec: azimuthal count must be at least 8");
  }
  if (!(target_rel_tol > 0.0)) {
    throw std::invalid_argument("QuadratureSpec: tolerance must be positive");
  }
}

QuadratureSpec QuadratureSpec::for_phase(double max_phase_rad) {
  if (!(max_phase_rad >= 0.0) || !std::isfinite(max_phase_rad)) {
    throw std::invalid_argument("QuadratureSpec: phase range must be non-negative and finite");
  }
  QuadratureSpec quad;
  // Gauss-Legendre converges super-exponentially once the order passes
  // ~0.7 of the phase range; the margin pushes the error to the
  // floating-point floor.
  const int order = static_cast<int>(std::ceil(0.7 * max_phase_rad)) + 40;
  quad.polar_order = std::max(quad.polar_order, order);
  quad.azimuthal_count = std::max(quad.azimuthal_count, 2 * quad.polar_order);
  return quad;
}

QuadratureSpec QuadratureSpec::for_config(const PairConfig& cfg) {
  cfg.validate();
  const double k = cfg.omega0.rad_per_s / speed_of_light;
  return for_phase(k * max_pairwise_distance(pair_sources(cfg)));
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

RealTensor3 mode_sum_im_green(Position3 r, Position3 rp, AngularFrequency omega,
                              const QuadratureSpec& quad) {
  quad.validate();
  require_point(r);
  require_point(rp);
  require_frequency(omega);

  const double k = omega.rad_per_s / speed_of_light;
  const Vec3 sep = displacement(r, rp);
  const GaussLegendreRule rule = gauss_legendre(quad.polar_order);
  const int m_count = quad.azimuthal_count;
  const double w_phi = 2.0 * pi / m_count;

  RealTensor3 sum;
  double anchor_trace = 0.0;  // trace of the same sum at zero separation
  for (int iu = 0; iu < quad.polar_order; ++iu) {
    const double u = rule.nodes[iu];
    const double w_u = rule.weights[iu];
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int m = 0; m < m_count; ++m) {
      const double phi = w_phi * m;
      const Vec3 n{st * std::cos(phi), st * std::sin(phi), u};
      const double w = w_u * w_phi;
      const double c = std::cos(k * dot(n, sep));
      const double nx[3] = {n.x, n.y, n.z};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double proj = ((i == j) ? 1.0 : 0.0) - nx[i] * nx[j];
          sum(i, j) += w * c * proj;
        }
      }
      anchor_trace += w * 2.0;  // trace of I - n n
    }
  }

  // Anchoring to the exact coincidence limit removes the quadrature's
  // error on the solid angle itself.
  const double scale = (omega.rad_per_s / (6.0 * pi * speed_of_light)) *
                       (3.0 / anchor_trace);
  return scale * sum;
}

double radiated_power_rate(const PairConfig& cfg, const QuadratureSpec& quad) {
  quad.validate();
  cfg.validate();
  const double k = cfg.omega0.rad_per_s / speed_of_light;
  const bool hemisphere = cfg.environment == Environment::PerfectMirror;
  const double radiance = integrate_radiance(pair_sources(cfg), k, hemisphere, quad);
  return rate_from_radiance(radiance, unit_dipole_radiance(quad), cfg.omega0);
}

double radiated_power_single_rate(DipoleVector d, Position3 r,
                                  AngularFrequency omega, Environment env,
                                  const QuadratureSpec& quad) {
  quad.validate();
  require_point(r);
  require_frequency(omega);
  if (!is_finite(d.vec())) {
    throw std::domain_error("oracle: dipole moment must be finite");
  }
  std::vector<FarFieldSource> sources = {{r.vec(), d.vec(), 1.0}};
  bool hemisphere = false;
  if (env == Environment::PerfectMirror) {
    hemisphere = true;
    sources.push_back(
        {green::image_position(r).vec(), green::image_dipole(d).vec(), 1.0});
  }
  const double k = omega.rad_per_s / speed_of_light;
  const double radiance = integrate_radiance(sources, k, hemisphere, quad);
  return rate_from_radiance(radiance, unit_dipole_radiance(quad), omega);
}

std::vector<PairConfig> random_validation_configs(std::uint64_t seed, int count) {
  if (count < 0) {
    throw std::invalid_argument("random_validation_configs: count must be non-negative");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const auto random_direction = [&rng, &unit]() {
    const double u = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * pi * unit(rng);
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    return Vec3{st * std::cos(phi), st * std::sin(phi), u};
  };
  const auto log_uniform = [&rng, &unit](double lo, double hi) {
    return lo * std::exp(unit(rng) * std::log(hi / lo));
  };

  const AngularFrequency omega0{1.55e16};
  const double lambda0 = transition_wavelength(omega0);
  const double k = omega0.rad_per_s / speed_of_light;
  const double dipole_scale = 1e-29;

  std::vector<PairConfig> configs;
  configs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    PairConfig cfg;
    cfg.omega0 = omega0;
    cfg.environment =
        (i % 2 == 0) ? Environment::FreeSpace : Environment::PerfectMirror;
    cfg.parity =
        (unit(rng) < 0.5) ? DickeParity::Symmetric : DickeParity::Antisymmetric;

    const double rho = log_uniform(0.1, 30.0) / k;
    Vec3 dir = random_direction();
    if (cfg.environment == Environment::PerfectMirror) {
      // Keep the displaced emitter on the same side of the plane.
      dir.z = std::abs(dir.z);
      cfg.atom_b.position = {0.0, 0.0, log_uniform(1e-3, 5.0) * lambda0};
    } else {
      cfg.atom_b.position = {0.0, 0.0, 0.0};
    }
    const Vec3 pa = cfg.atom_b.position.vec() + rho * dir;
    cfg.atom_a.position = {pa.x, pa.y, pa.z};

    const Vec3 da = dipole_scale * random_direction();
    const Vec3 db = dipole_scale * random_direction();
    cfg.atom_a.dipole = {da.x, da.y, da.z};
    cfg.atom_b.dipole = {db.x, db.y, db.z};
    cfg.validate();
    configs.push_back(cfg);
  }
  return configs;
}

std::vector<ValidationCheck> run_validation(const ValidationOptions& options) {
  if (options.config_count < 1) {
    throw std::invalid_argument("run_validation: config count must be positive");
  }
  QuadratureSpec base;
  base.polar_order = options.polar_order;
  base.azimuthal_count = std::max(128, 2 * options.polar_order);
  base.validate();

  std::vector<ValidationCheck> checks;
  const auto add_check = [&checks](std::string name, double err, double tol) {
    checks.push_back({std::move(name), err, tol, err <= tol});
  };

  const AngularFrequency omega0{1.55e16};
  const double lambda0 = transition_wavelength(omega0);
  const double k = omega0.rad_per_s / speed_of_light;
  const double coincidence = k / (6.0 * pi);

  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Exact coincidence limit of the analytic imaginary part.
  {
    double err = 0.0;
    for (double scale : {0.5, 1.0, 2.0}) {
      const AngularFrequency w{scale * omega0.rad_per_s};
      const Position3 r{0.3e-7, -0.2e-7, 0.9e-7};
      const RealTensor3 g = green::im_free_space_green(r, r, w);
      const double limit = w.rad_per_s / (6.0 * pi * speed_of_light);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double want = (i == j) ? limit : 0.0;
          err = std::max(err, std::abs(g(i, j) - want) / limit);
        }
      }
    }
    add_check("coincidence-limit", err, 1e-12);
  }

  // Transposition symmetry of the full tensor in both environments.
  {
    double err = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Environment env =
          (i % 2 == 0) ? Environment::FreeSpace : Environment::PerfectMirror;
      const double z_a = (0.01 + 2.0 * unit(rng)) * lambda0;
      const double z_b = (0.01 + 2.0 * unit(rng)) * lambda0;
      const Position3 ra{(unit(rng) - 0.5) * lambda0, (unit(rng) - 0.5) * lambda0, z_a};
      const Position3 rb{(unit(rng) - 0.5) * lambda0, (unit(rng) - 0.5) * lambda0, z_b};
      if (distance(ra, rb) < 1e-3 * lambda0) continue;
      const ComplexTensor3 fwd = green::total_green(env, ra, rb, omega0);
      const ComplexTensor3 bwd = green::total_green(env, rb, ra, omega0);
      const double scale = max_abs_entry(fwd);
      err = std::max(err, max_abs_entry(fwd - bwd.transposed()) / scale);
    }
    add_check("transposition-symmetry", err, 1e-12);
  }

  // Mode sum against the analytic imaginary part, axial and oblique.
  {
    double err = 0.0;
    for (double krho : {0.1, 1.0, pi, 5.0, 12.0, 30.0}) {
      const double rho = krho / k;
      const Vec3 dirs[] = {{0.0, 0.0, 1.0},
                           {1.0, 0.0, 0.0},
                           {1.0 / std::sqrt(14.0), 2.0 / std::sqrt(14.0),
                            3.0 / std::sqrt(14.0)}};
      for (const Vec3& dir : dirs) {
        const Position3 rp{0.0, 0.0, 0.0};
        const Position3 r{rho * dir.x, rho * dir.y, rho * dir.z};
        const QuadratureSpec quad = QuadratureSpec::for_phase(krho);
        const RealTensor3 numeric = mode_sum_im_green(r, rp, omega0, quad);
        const RealTensor3 analytic = green::im_free_space_green(r, rp, omega0);
        err = std::max(err, max_abs_entry(numeric - analytic) / coincidence);
      }
    }
    add_check("mode-sum-vs-analytic", err, base.target_rel_tol);
  }

  // Mode sum at coincidence reproduces its own anchor.
  {
    const Position3 r{0.2e-7, 0.4e-7, 0.6e-7};
    const RealTensor3 numeric = mode_sum_im_green(r, r, omega0, base);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double want = (i == j) ? coincidence : 0.0;
        err = std::max(err, std::abs(numeric(i, j) - want) / coincidence);
      }
    }
    add_check("mode-sum-coincidence", err, base.target_rel_tol);
  }

  // Doubling the polar order divides the mode-sum error by at least 10
  // until it hits the floating-point floor.
  {
    const double krho = 5.0;
    const Position3 rp{0.0, 0.0, 0.0};
    const Position3 r{0.0, 0.0, krho / k};
    const RealTensor3 analytic = green::im_free_space_green(r, rp, omega0);
    double worst_ratio = 0.0;
    double prev_err = -1.0;
    for (int order : {8, 16, 32, 64}) {
      QuadratureSpec quad;
      quad.polar_order = order;
      quad.azimuthal_count = std::max(16, 2 * order);
      const RealTensor3 numeric = mode_sum_im_green(r, rp, omega0, quad);
      const double err = max_abs_entry(numeric - analytic) / coincidence;
      if (prev_err >= 0.0 && err > 1e-13) {
        worst_ratio = std::max(worst_ratio, err / prev_err);
      }
      prev_err = err;
    }
    add_check("quadrature-convergence", worst_ratio, 0.1);
  }

  // Radiated power against the closed-form collective rate, plus the
  // sum rule and positivity of the same batch.
  {
    const std::vector<PairConfig> configs =
        random_validation_configs(options.seed, options.config_count);
    double rate_err = 0.0;
    double sum_err = 0.0;
    double negativity = 0.0;
    for (const PairConfig& cfg : configs) {
      const RateResult rates = rates::collective_rate(cfg);
      const QuadratureSpec quad = QuadratureSpec::for_config(cfg);
      const double numeric = radiated_power_rate(cfg, quad);
      const double pair_scale = 0.5 * (rates.gamma_a + rates.gamma_b);
      const double denom = std::max(std::abs(rates.gamma_total), 1e-12 * pair_scale);
      rate_err = std::max(rate_err, std::abs(numeric - rates.gamma_total) / denom);

      PairConfig flipped = cfg;
      flipped.parity = (cfg.parity == DickeParity::Symmetric)
                           ? DickeParity::Antisymmetric
                           : DickeParity::Symmetric;
      const RateResult other = rates::collective_rate(flipped);
      sum_err = std::max(sum_err,
                         std::abs(rates.gamma_total + other.gamma_total -
                                  (rates.gamma_a + rates.gamma_b)) /
                             (rates.gamma_a + rates.gamma_b));
      negativity = std::max(negativity, -rates.gamma_total / pair_scale);
      negativity = std::max(negativity, -other.gamma_total / pair_scale);
    }
    add_check("oracle-rate-agreement", rate_err, 1e-6);
    add_check("rate-sum-rule", sum_err, 1e-12);
    add_check("rate-positivity", negativity, 1e-12);
  }

  return checks;
}

}  // namespace corad::oracle
