#include <doctest.h>

#include <cmath>
#include <random>

#include "hgrav/constants.hpp"
#include "hgrav/error.hpp"
#include "hgrav/mass_model.hpp"

using namespace hgrav;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("equivalent masses give zero asymmetry and Mbar = M") {
  const auto k = codata_defaults();
  const auto c = derive_composites(MassModel::equivalent(k));
  CHECK(c.asymmetry == 0.0);
  CHECK(c.grav_total == c.total);
  CHECK(c.total == k.m_e_ref + k.m_p_ref);
  CHECK(c.reduced == k.m_e_ref * k.m_p_ref / (k.m_e_ref + k.m_p_ref));
}

TEST_CASE("heavier electron gravitational mass: script_m = -0.1 mu") {
  const auto k = codata_defaults();
  const auto c = derive_composites(MassModel::from_ratios(k, 1, 1, 1.1, 1));
  CHECK(rel(c.asymmetry, -0.1 * c.reduced) < 1e-12);
}

TEST_CASE("weightless electron: script_m = +mu") {
  const auto k = codata_defaults();
  const auto c = derive_composites(MassModel::from_ratios(k, 1, 1, 0, 1));
  CHECK(rel(c.asymmetry, c.reduced) < 1e-15);
}

TEST_CASE("with_asymmetry reproduces the requested script_m") {
  const auto k = codata_defaults();
  for (double s : {k.m_e_ref, -3.0 * k.m_e_ref, 1e-33, 0.0}) {
    const auto c = derive_composites(MassModel::with_asymmetry(k, s));
    if (s == 0.0) {
      CHECK(c.asymmetry == 0.0);
    } else {
      CHECK(rel(c.asymmetry, s) < 1e-11);
    }
  }
}

TEST_CASE("equivalence_holds tolerance") {
  const auto k = codata_defaults();
  CHECK(equivalence_holds(MassModel::equivalent(k), 0.0));
  CHECK_FALSE(equivalence_holds(MassModel::from_ratios(k, 1, 1, 1.1, 1), 1e-3));
  CHECK(equivalence_holds(MassModel::from_ratios(k, 1, 1, 1 + 1e-9, 1), 1e-6));
  CHECK_THROWS_AS((void)equivalence_holds(MassModel::equivalent(k), -1.0), InvalidArgument);
}

TEST_CASE("inertial masses must be positive; gravitational ones may have any sign") {
  const auto k = codata_defaults();
  CHECK_THROWS_AS((void)MassModel::from_ratios(k, 0, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS((void)MassModel::from_ratios(k, 1, -1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS((void)derive_composites(MassModel{1.0, std::nan(""), 1.0, 1.0}), InvalidArgument);
  CHECK_NOTHROW((void)derive_composites(MassModel::from_ratios(k, 1, 1, -2, 0)));
}

TEST_CASE("composite identities on random models") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> inertial(0.1, 10.0);
  std::uniform_real_distribution<double> grav(-10.0, 10.0);
  std::uniform_real_distribution<double> scale(0.5, 4.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const MassModel m{inertial(rng), inertial(rng), grav(rng), grav(rng)};
    const auto c = derive_composites(m);
    CHECK(c.total == m.m_e + m.m_p);
    CHECK(c.reduced == m.m_e * m.m_p / c.total);
    const double lhs = c.asymmetry * c.total;
    const double rhs = m.mbar_p * m.m_e - m.mbar_e * m.m_p;
    CHECK(std::abs(lhs - rhs) <= 1e-14 * (std::abs(m.mbar_p * m.m_e) + std::abs(m.mbar_e * m.m_p)));

    // Swapping the particles negates the asymmetry.
    const auto swapped = derive_composites(MassModel{m.m_p, m.m_e, m.mbar_p, m.mbar_e});
    CHECK(swapped.asymmetry == doctest::Approx(-c.asymmetry).epsilon(1e-13));

    // Homogeneous of degree one.
    const double lam = scale(rng);
    const auto s = derive_composites(MassModel{lam * m.m_e, lam * m.m_p, lam * m.mbar_e, lam * m.mbar_p});
    CHECK(s.total == doctest::Approx(lam * c.total).epsilon(1e-14));
    CHECK(s.reduced == doctest::Approx(lam * c.reduced).epsilon(1e-14));
    CHECK(s.grav_total == doctest::Approx(lam * c.grav_total).epsilon(1e-13));
    CHECK(s.asymmetry == doctest::Approx(lam * c.asymmetry).epsilon(1e-12));
  }
}

TEST_CASE("proportional gravitational masses give exactly zero asymmetry") {
  // mbar_p m_e == mbar_e m_p exactly for these representable inputs.
  const MassModel m{1.0, 4.0, 0.5, 2.0};
  CHECK(derive_composites(m).asymmetry == 0.0);
}
