#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corad/core.hpp"
#include "corad/tensor.hpp"
#include "test_support.hpp"

using namespace corad;
using test_support::rel_err;

TEST_CASE("physical constants are mutually consistent") {
  const double c = constants::speed_of_light;
  const double product = c * c * constants::vacuum_permeability * constants::vacuum_permittivity;
  CHECK(std::abs(product - 1.0) < 1e-12);

  // Derived values against their published decimal forms.
  CHECK(rel_err(constants::vacuum_permittivity, 8.8541878128e-12) < 1e-10);
  CHECK(rel_err(constants::reduced_planck, 1.054571817e-34) < 1e-9);
  CHECK(constants::speed_of_light == 299792458.0);
  CHECK(constants::planck == 6.62607015e-34);
}

TEST_CASE("transition wavelength") {
  CHECK(rel_err(transition_wavelength({1.55e16}), 1.215e-7) < 1e-3);
  CHECK(rel_err(transition_wavelength({1.55e16}), 1.2152590756831309e-7) < 1e-14);
  CHECK(rel_err(transition_wavelength({2.0 * constants::pi * constants::speed_of_light}), 1.0) < 1e-14);
  CHECK(rel_err(transition_wavelength({3.10e16}), 6.0762953784156546e-8) < 1e-14);
  // Doubling the frequency halves the wavelength.
  CHECK(rel_err(transition_wavelength({1.55e16}) / transition_wavelength({3.10e16}), 2.0) < 1e-14);

  CHECK_THROWS_AS(transition_wavelength({0.0}), std::domain_error);
  CHECK_THROWS_AS(transition_wavelength({-1.0}), std::domain_error);
  CHECK_THROWS_AS(transition_wavelength({std::nan("")}), std::domain_error);
  CHECK_THROWS_AS(transition_wavelength({std::numeric_limits<double>::infinity()}),
                  std::domain_error);
}

TEST_CASE("vector helpers") {
  const Vec3 a{1.0, 2.0, 3.0};
  const Vec3 b{-1.0, 0.5, 2.0};
  CHECK(dot(a, b) == doctest::Approx(6.0));
  CHECK(norm(Vec3{3.0, 4.0, 0.0}) == doctest::Approx(5.0));
  const Vec3 d = displacement({1.0, 1.0, 1.0}, {0.0, 2.0, 3.0});
  CHECK(d.x == 1.0);
  CHECK(d.y == -1.0);
  CHECK(d.z == -2.0);
  CHECK(distance({0.0, 0.0, 0.0}, {0.0, 3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(is_finite(a));
  CHECK_FALSE(is_finite(Vec3{1.0, std::nan(""), 0.0}));
}

TEST_CASE("tensor algebra") {
  const RealTensor3 id = RealTensor3::identity();
  CHECK(id(0, 0) == 1.0);
  CHECK(id(0, 1) == 0.0);
  CHECK(id.trace() == 3.0);

  RealTensor3 m;
  m(0, 1) = 2.0;
  m(2, 0) = -3.0;
  const RealTensor3 mt = m.transposed();
  CHECK(mt(1, 0) == 2.0);
  CHECK(mt(0, 2) == -3.0);

  const RealTensor3 r = RealTensor3::diagonal(-1.0, -1.0, 1.0);
  const RealTensor3 rr = r * r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(rr(i, j) == id(i, j));
  }

  const Vec3 e{0.0, 0.0, 1.0};
  const RealTensor3 ee = outer(e, e);
  CHECK(ee(2, 2) == 1.0);
  CHECK(ee(0, 0) == 0.0);
  CHECK(ee(0, 2) == 0.0);

  CHECK(bilinear({1.0, 0.0, 0.0}, id, {1.0, 0.0, 0.0}) == 1.0);
  CHECK(bilinear({0.0, 1.0, 0.0}, r, {0.0, 1.0, 0.0}) == -1.0);

  const ComplexTensor3 c = combine(id, r);
  CHECK(c(1, 1) == std::complex<double>(1.0, -1.0));
  CHECK(imag_part(c)(2, 2) == 1.0);
  CHECK(real_part(c)(2, 2) == 1.0);
  CHECK(max_abs_entry(c) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Dicke parity carries the interference sign") {
  CHECK(sign(DickeParity::Symmetric) == 1);
  CHECK(sign(DickeParity::Antisymmetric) == -1);
}

TEST_CASE("pair configuration validation") {
  PairConfig good = test_support::axial_pair(2e-9, 1e-9, test_support::z_dipole(1e-29),
                                             test_support::z_dipole(1e-29),
                                             DickeParity::Symmetric,
                                             Environment::PerfectMirror);
  CHECK_NOTHROW(good.validate());

  PairConfig coincident = good;
  coincident.atom_a.position = coincident.atom_b.position;
  CHECK_THROWS_WITH_AS(coincident.validate(), "PairConfig: atom positions coincide",
                       std::domain_error);

  PairConfig below = good;
  below.atom_b.position = {0.0, 0.0, -1e-9};
  CHECK_THROWS_AS(below.validate(), std::domain_error);

  PairConfig on_plane = good;
  on_plane.atom_b.position = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(on_plane.validate(), std::domain_error);

  // Free space has no half-space restriction.
  PairConfig free_below = below;
  free_below.environment = Environment::FreeSpace;
  CHECK_NOTHROW(free_below.validate());

  PairConfig bad_omega = good;
  bad_omega.omega0 = {0.0};
  CHECK_THROWS_AS(bad_omega.validate(), std::domain_error);

  PairConfig bad_position = good;
  bad_position.atom_a.position = {std::nan(""), 0.0, 1e-9};
  CHECK_THROWS_AS(bad_position.validate(), std::domain_error);

  PairConfig bad_dipole = good;
  bad_dipole.atom_b.dipole = {0.0, std::numeric_limits<double>::infinity(), 0.0};
  CHECK_THROWS_AS(bad_dipole.validate(), std::domain_error);
}
