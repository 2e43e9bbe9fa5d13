#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "corad/green.hpp"
#include "corad/oracle.hpp"
#include "corad/rates.hpp"
#include "test_support.hpp"

using namespace corad;
using test_support::axial_pair;
using test_support::rel_err;
using test_support::x_dipole;
using test_support::z_dipole;

namespace {

constexpr double pi = constants::pi;
const AngularFrequency omega0{1.55e16};
const double lambda0 = transition_wavelength(omega0);
constexpr double d0 = 1e-29;

double monomial_integral(const oracle::GaussLegendreRule& rule, int power) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::pow(rule.nodes[i], power);
  }
  return sum;
}

}  // namespace

TEST_CASE("Gauss-Legendre nodes and weights") {
  SUBCASE("one point rule is the midpoint rule") {
    const auto rule = oracle::gauss_legendre(1);
    REQUIRE(rule.nodes.size() == 1);
    CHECK(rule.nodes[0] == 0.0);
    CHECK(rule.weights[0] == 2.0);
  }

  SUBCASE("structure for several orders") {
    for (int n : {2, 5, 16, 64}) {
      const auto rule = oracle::gauss_legendre(n);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
      REQUIRE(rule.weights.size() == static_cast<std::size_t>(n));
      CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
      double wsum = 0.0;
      for (int i = 0; i < n; ++i) {
        CHECK(rule.weights[i] > 0.0);
        CHECK(std::abs(rule.nodes[i]) < 1.0);
        // Nodes and weights are symmetric about zero.
        CHECK(std::abs(rule.nodes[i] + rule.nodes[n - 1 - i]) < 1e-14);
        CHECK(std::abs(rule.weights[i] - rule.weights[n - 1 - i]) < 1e-14);
        wsum += rule.weights[i];
      }
      CHECK(rel_err(wsum, 2.0) < 1e-14);
    }
  }

  SUBCASE("integrates polynomials up to degree 2n-1 exactly") {
    const auto rule = oracle::gauss_legendre(5);
    CHECK(rel_err(monomial_integral(rule, 2), 2.0 / 3.0) < 1e-14);
    CHECK(std::abs(monomial_integral(rule, 5)) < 1e-16);
    CHECK(rel_err(monomial_integral(rule, 8), 2.0 / 9.0) < 1e-13);
    // Degree 2n is the first one the rule misses.
    CHECK(std::abs(monomial_integral(rule, 10) - 2.0 / 11.0) > 1e-6);
  }

  SUBCASE("invalid orders are rejected") {
    CHECK_THROWS_AS(oracle::gauss_legendre(0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::gauss_legendre(-3), std::invalid_argument);
  }
}

TEST_CASE("quadrature specification") {
  SUBCASE("defaults validate") {
    CHECK_NOTHROW(oracle::QuadratureSpec{}.validate());
  }

  SUBCASE("rejects degenerate rules") {
    oracle::QuadratureSpec quad;
    quad.polar_order = 3;
    CHECK_THROWS_AS(quad.validate(), std::invalid_argument);
    quad = {};
    quad.azimuthal_count = 7;
    CHECK_THROWS_AS(quad.validate(), std::invalid_argument);
    quad = {};
    quad.target_rel_tol = 0.0;
    CHECK_THROWS_AS(quad.validate(), std::invalid_argument);
  }

  SUBCASE("phase-adapted rules never shrink below the default") {
    const oracle::QuadratureSpec small = oracle::QuadratureSpec::for_phase(0.0);
    CHECK(small.polar_order == oracle::QuadratureSpec{}.polar_order);
    CHECK(small.azimuthal_count == oracle::QuadratureSpec{}.azimuthal_count);

    const oracle::QuadratureSpec big = oracle::QuadratureSpec::for_phase(500.0);
    CHECK(big.polar_order >= 390);
    CHECK(big.azimuthal_count >= 2 * big.polar_order);
    CHECK(oracle::QuadratureSpec::for_phase(1000.0).polar_order > big.polar_order);

    CHECK_THROWS_AS(oracle::QuadratureSpec::for_phase(-1.0), std::invalid_argument);
  }

  SUBCASE("configuration-adapted rules track the geometry") {
    const PairConfig compact = axial_pair(2e-9, 1e-9, z_dipole(d0), z_dipole(d0),
                                          DickeParity::Symmetric, Environment::FreeSpace);
    const PairConfig extended =
        axial_pair(20.0 * lambda0, 1e-9, z_dipole(d0), z_dipole(d0),
                   DickeParity::Symmetric, Environment::PerfectMirror);
    const int small_order = oracle::QuadratureSpec::for_config(compact).polar_order;
    const int big_order = oracle::QuadratureSpec::for_config(extended).polar_order;
    CHECK(small_order == oracle::QuadratureSpec{}.polar_order);
    CHECK(big_order > small_order);
    // figure sweeps reach 10 wavelengths of mirror distance; the rule
    // must keep growing there (image distance ~ 2 * 10 * 2 pi radians).
    CHECK(big_order >= static_cast<int>(0.7 * 2.0 * 20.0 * 2.0 * pi));
  }
}

TEST_CASE("mode sum reproduces the coincidence limit") {
  const oracle::QuadratureSpec quad;
  const Position3 r{0.2e-7, 0.4e-7, 0.6e-7};
  const RealTensor3 numeric = oracle::mode_sum_im_green(r, r, omega0, quad);
  const double limit = omega0.rad_per_s / (6.0 * pi * constants::speed_of_light);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(numeric(i, j) - ((i == j) ? limit : 0.0)) < 1e-12 * limit);
    }
  }
}

TEST_CASE("mode sum matches the analytic imaginary part") {
  const AngularFrequency omega{constants::speed_of_light};  // k = 1/m
  const double limit = omega.rad_per_s / (6.0 * pi * constants::speed_of_light);

  SUBCASE("unit phase, axial separation, frozen value") {
    const oracle::QuadratureSpec quad;
    const Position3 r{0.0, 0.0, 1.0};
    const Position3 rp{0.0, 0.0, 0.0};
    const RealTensor3 numeric = oracle::mode_sum_im_green(r, rp, omega, quad);
    CHECK(rel_err(numeric(2, 2), (std::sin(1.0) - std::cos(1.0)) / (2.0 * pi)) < 1e-8);
    const RealTensor3 analytic = green::im_free_space_green(r, rp, omega);
    CHECK(max_abs_entry(numeric - analytic) < 1e-8 * limit);
  }

  SUBCASE("several phases and directions") {
    const Vec3 dirs[] = {{0.0, 0.0, 1.0},
                         {1.0, 0.0, 0.0},
                         {1.0 / std::sqrt(14.0), 2.0 / std::sqrt(14.0),
                          3.0 / std::sqrt(14.0)}};
    for (double x : {0.1, 1.0, pi, 12.0}) {
      for (const Vec3& dir : dirs) {
        const Position3 r{x * dir.x, x * dir.y, x * dir.z};
        const oracle::QuadratureSpec quad = oracle::QuadratureSpec::for_phase(x);
        const RealTensor3 numeric = oracle::mode_sum_im_green(r, {0.0, 0.0, 0.0}, omega, quad);
        const RealTensor3 analytic = green::im_free_space_green(r, {0.0, 0.0, 0.0}, omega);
        CHECK(max_abs_entry(numeric - analytic) < 1e-8 * limit);
      }
    }
  }

  SUBCASE("large phase with an adapted rule") {
    const Position3 r{0.0, 0.0, 100.0};
    const oracle::QuadratureSpec quad = oracle::QuadratureSpec::for_phase(100.0);
    const RealTensor3 numeric = oracle::mode_sum_im_green(r, {0.0, 0.0, 0.0}, omega, quad);
    const RealTensor3 analytic = green::im_free_space_green(r, {0.0, 0.0, 0.0}, omega);
    CHECK(max_abs_entry(numeric - analytic) < 1e-8 * limit);
  }

  SUBCASE("symmetric under swapping the evaluation points") {
    const Position3 r{0.3, -0.8, 0.5};
    const Position3 rp{-0.1, 0.4, 1.1};
    const oracle::QuadratureSpec quad;
    const RealTensor3 fwd = oracle::mode_sum_im_green(r, rp, omega, quad);
    const RealTensor3 bwd = oracle::mode_sum_im_green(rp, r, omega, quad);
    CHECK(max_abs_entry(fwd - bwd) < 1e-13 * limit);
  }
}

TEST_CASE("mode sum converges with quadrature order") {
  const AngularFrequency omega{constants::speed_of_light};
  const double limit = omega.rad_per_s / (6.0 * pi * constants::speed_of_light);
  const Position3 r{0.0, 0.0, 5.0};
  const RealTensor3 analytic = green::im_free_space_green(r, {0.0, 0.0, 0.0}, omega);

  double previous = 0.0;
  for (int order : {8, 16, 32, 64}) {
    oracle::QuadratureSpec quad;
    quad.polar_order = order;
    quad.azimuthal_count = 2 * order;
    const RealTensor3 numeric = oracle::mode_sum_im_green(r, {0.0, 0.0, 0.0}, omega, quad);
    const double err = max_abs_entry(numeric - analytic) / limit;
    if (previous > 0.0 && previous > 1e-13) {
      CHECK(err < 0.1 * previous);
    }
    previous = err;
  }
  CHECK(previous < 1e-13);
}

TEST_CASE("radiated power of a single emitter") {
  const oracle::QuadratureSpec quad;
  const double ga = rates::free_space_single_atom_rate(z_dipole(d0), omega0);

  SUBCASE("free space recovers the isolated rate anywhere") {
    for (const Position3 r : {Position3{0.0, 0.0, 0.0}, Position3{3e-7, -2e-7, 5e-7}}) {
      const double numeric = oracle::radiated_power_single_rate(
          z_dipole(d0), r, omega0, Environment::FreeSpace, quad);
      CHECK(rel_err(numeric, ga) < 1e-12);
    }
    const double tilted = oracle::radiated_power_single_rate(
        {d0 / std::sqrt(2.0), 0.0, d0 / std::sqrt(2.0)}, {0.0, 0.0, 0.0}, omega0,
        Environment::FreeSpace, quad);
    CHECK(rel_err(tilted, ga) < 1e-12);
  }

  SUBCASE("normal dipole doubles at the mirror surface") {
    const double numeric = oracle::radiated_power_single_rate(
        z_dipole(d0), {0.0, 0.0, 1e-3 * lambda0}, omega0, Environment::PerfectMirror,
        quad);
    CHECK(rel_err(numeric, 2.0 * ga) < 1e-4);
  }

  SUBCASE("tangential dipole quenches at the mirror surface") {
    const double numeric = oracle::radiated_power_single_rate(
        x_dipole(d0), {0.0, 0.0, 1e-3 * lambda0}, omega0, Environment::PerfectMirror,
        quad);
    CHECK(numeric >= 0.0);
    CHECK(numeric < 1e-3 * ga);
  }

  SUBCASE("agrees with the analytic mirror rate at a generic height") {
    const Position3 r{0.0, 0.0, 0.37 * lambda0};
    for (const DipoleVector d : {z_dipole(d0), x_dipole(d0)}) {
      const double numeric = oracle::radiated_power_single_rate(
          d, r, omega0, Environment::PerfectMirror, quad);
      const double analytic =
          rates::single_atom_rate(d, r, omega0, Environment::PerfectMirror);
      CHECK(rel_err(numeric, analytic) < 1e-8);
    }
  }
}

TEST_CASE("radiated power of the pair") {
  SUBCASE("near-contact symmetric pair radiates at twice the single rate") {
    const PairConfig cfg = axial_pair(1e-3 * lambda0, 0.0, z_dipole(d0), z_dipole(d0),
                                      DickeParity::Symmetric, Environment::FreeSpace);
    const double numeric =
        oracle::radiated_power_rate(cfg, oracle::QuadratureSpec::for_config(cfg));
    const double ga = rates::free_space_single_atom_rate(z_dipole(d0), omega0);
    CHECK(rel_err(numeric, 2.0 * ga) < 5e-3);
  }

  SUBCASE("matches the analytic collective rate in both environments") {
    const PairConfig configs[] = {
        axial_pair(0.6 * lambda0, 0.2 * lambda0, z_dipole(d0), z_dipole(d0),
                   DickeParity::Symmetric, Environment::FreeSpace),
        axial_pair(0.6 * lambda0, 0.2 * lambda0, x_dipole(d0), x_dipole(d0),
                   DickeParity::Antisymmetric, Environment::FreeSpace),
        axial_pair(0.5 * lambda0, 0.2 * lambda0, z_dipole(d0), z_dipole(d0),
                   DickeParity::Symmetric, Environment::PerfectMirror),
        axial_pair(0.5 * lambda0, 0.2 * lambda0, x_dipole(d0), x_dipole(d0),
                   DickeParity::Antisymmetric, Environment::PerfectMirror),
    };
    for (const PairConfig& cfg : configs) {
      const double numeric =
          oracle::radiated_power_rate(cfg, oracle::QuadratureSpec::for_config(cfg));
      const RateResult analytic = rates::collective_rate(cfg);
      const double scale = 0.5 * (analytic.gamma_a + analytic.gamma_b);
      CHECK(std::abs(numeric - analytic.gamma_total) < 1e-8 * scale);
    }
  }

  SUBCASE("rejects invalid input") {
    const PairConfig cfg = axial_pair(0.5 * lambda0, 0.2 * lambda0, z_dipole(d0),
                                      z_dipole(d0), DickeParity::Symmetric,
                                      Environment::FreeSpace);
    oracle::QuadratureSpec bad;
    bad.polar_order = 2;
    CHECK_THROWS_AS(oracle::radiated_power_rate(cfg, bad), std::invalid_argument);
    PairConfig coincident = cfg;
    coincident.atom_b = coincident.atom_a;
    CHECK_THROWS_AS(oracle::radiated_power_rate(coincident, oracle::QuadratureSpec{}),
                    std::domain_error);
  }
}

TEST_CASE("randomized configuration family") {
  const auto configs = oracle::random_validation_configs(20260815, 60);
  REQUIRE(configs.size() == 60);

  bool saw_free = false;
  bool saw_mirror = false;
  bool saw_sym = false;
  bool saw_anti = false;
  for (const PairConfig& cfg : configs) {
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.omega0.rad_per_s == 1.55e16);
    const double krho = cfg.omega0.rad_per_s / constants::speed_of_light *
                        distance(cfg.atom_a.position, cfg.atom_b.position);
    CHECK(krho > 0.099);
    CHECK(krho < 30.1);
    saw_free = saw_free || cfg.environment == Environment::FreeSpace;
    saw_mirror = saw_mirror || cfg.environment == Environment::PerfectMirror;
    saw_sym = saw_sym || cfg.parity == DickeParity::Symmetric;
    saw_anti = saw_anti || cfg.parity == DickeParity::Antisymmetric;
  }
  CHECK(saw_free);
  CHECK(saw_mirror);
  CHECK(saw_sym);
  CHECK(saw_anti);

  // Deterministic in the seed.
  const auto again = oracle::random_validation_configs(20260815, 60);
  CHECK(again[59].atom_a.position.z == configs[59].atom_a.position.z);
  CHECK(again[59].atom_b.dipole.x == configs[59].atom_b.dipole.x);
  const auto other = oracle::random_validation_configs(1, 60);
  CHECK(other[0].atom_a.position.z != configs[0].atom_a.position.z);

  CHECK(oracle::random_validation_configs(5, 0).empty());
  CHECK_THROWS_AS(oracle::random_validation_configs(5, -1), std::invalid_argument);
}

TEST_CASE("full validation suite passes at production settings") {
  const oracle::ValidationOptions options;
  const auto checks = oracle::run_validation(options);

  const std::set<std::string> expected = {
      "coincidence-limit",      "transposition-symmetry", "mode-sum-vs-analytic",
      "mode-sum-coincidence",   "quadrature-convergence", "oracle-rate-agreement",
      "rate-sum-rule",          "rate-positivity"};
  std::set<std::string> seen;
  for (const auto& check : checks) {
    seen.insert(check.name);
    INFO(check.name, ": ", check.max_error, " vs ", check.tolerance);
    CHECK(check.passed);
    CHECK(check.max_error <= check.tolerance);
    CHECK(check.tolerance > 0.0);
  }
  CHECK(seen == expected);
}
