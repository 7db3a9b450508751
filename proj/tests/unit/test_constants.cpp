#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hgrav/constants.hpp"
#include "hgrav/error.hpp"

using namespace hgrav;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("CODATA 2018 values") {
  const auto k = codata_defaults();
  CHECK(k.alpha == 7.2973525693e-3);
  CHECK(k.hbar == 1.054571817e-34);
  CHECK(k.c == 299792458.0);
  CHECK(k.m_e_ref == 9.1093837015e-31);
  CHECK(k.m_p_ref == 1.67262192369e-27);
  CHECK(k.hbar * k.c > 0.0);
  for (double v : {k.hbar, k.c, k.alpha, k.e_charge, k.eps0, k.m_e_ref, k.m_p_ref}) CHECK(v > 0.0);
}

TEST_CASE("alpha agrees with e^2 / (4 pi eps0 hbar c)") {
  const auto k = codata_defaults();
  const double alpha = k.e_charge * k.e_charge / (4.0 * std::numbers::pi * k.eps0 * k.hbar * k.c);
  CHECK(rel(alpha, k.alpha) < 1e-9);
  CHECK(k.alpha_mismatch() < 1e-9);
}

TEST_CASE("atomic units for the electron mass match the tabulated Bohr radius and Hartree") {
  const auto k = codata_defaults();
  const auto s = atomic_scale(k, k.m_e_ref);
  // CODATA 2018 tabulated values, independent of the formulas used here.
  CHECK(rel(s.length_bohr, 5.29177210903e-11) < 1e-9);
  CHECK(rel(s.energy_hartree, 4.3597447222071e-18) < 1e-9);
  CHECK(rel(s.time_atomic, 2.4188843265857e-17) < 1e-9);
  CHECK(rel(s.force_atomic, 8.2387234983e-8) < 1e-9);
}

TEST_CASE("atomic scale is homogeneous in the reduced mass") {
  const auto k = codata_defaults();
  const auto one = atomic_scale(k, k.m_e_ref);
  const auto two = atomic_scale(k, 2.0 * k.m_e_ref);
  CHECK(rel(two.length_bohr, one.length_bohr / 2.0) < 1e-15);
  CHECK(rel(two.energy_hartree, one.energy_hartree * 2.0) < 1e-15);
  CHECK(rel(two.length_bohr, k.hbar / (2.0 * k.m_e_ref * k.c * k.alpha)) < 1e-15);
}

TEST_CASE("unit conversions round-trip") {
  const auto k = codata_defaults();
  const auto s = atomic_scale(k, 9.104425276523571e-31);
  for (double x : {1e-30, 3.7e-18, 1.0, 42.0, 6.02e23}) {
    CHECK(rel(s.energy_to_si(s.energy_to_atomic(x)), x) < 1e-12);
    CHECK(rel(s.length_to_si(s.length_to_atomic(x)), x) < 1e-12);
    CHECK(rel(s.time_to_si(s.time_to_atomic(x)), x) < 1e-12);
    CHECK(rel(s.force_to_si(s.force_to_atomic(x)), x) < 1e-12);
  }
}

TEST_CASE("non-positive reduced mass is rejected") {
  const auto k = codata_defaults();
  CHECK_THROWS_AS((void)atomic_scale(k, 0.0), InvalidArgument);
  CHECK_THROWS_AS((void)atomic_scale(k, -1e-30), InvalidArgument);
  CHECK_THROWS_AS((void)atomic_scale(k, std::nan("")), InvalidArgument);
}
