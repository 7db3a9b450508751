#include <doctest.h>

#include <cmath>
#include <random>

#include "hgrav/constants.hpp"
#include "hgrav/error.hpp"
#include "hgrav/separation.hpp"

using namespace hgrav;

TEST_CASE("equivalent masses decouple the internal motion") {
  const auto k = codata_defaults();
  const auto model = MassModel::equivalent(k);
  const auto h = separate_gravitational(model, FieldSpec::along_z(9.8));
  const auto c = derive_composites(model);
  CHECK(h.internal_coupling == 0.0);
  CHECK(h.cm_coupling == c.total * 9.8);
  CHECK(h.cm_kinetic_mass == c.total);
  CHECK(h.internal_kinetic_mass == c.reduced);
  CHECK(h.coulomb_present);
}

TEST_CASE("weightless electron: internal coupling is mu g") {
  const auto k = codata_defaults();
  const auto model = MassModel::from_ratios(k, 1, 1, 0, 1);
  const auto h = separate_gravitational(model, FieldSpec::along_z(9.8));
  CHECK(h.internal_coupling == doctest::Approx(derive_composites(model).reduced * 9.8).epsilon(1e-14));
}

TEST_CASE("zero field gives zero couplings") {
  const auto k = codata_defaults();
  const auto h = separate_gravitational(MassModel::from_ratios(k, 1, 1, 3, 0.5), FieldSpec::along_z(0));
  CHECK(h.cm_coupling == 0.0);
  CHECK(h.internal_coupling == 0.0);
}

TEST_CASE("couplings are linear in g and independent of the axis") {
  const auto k = codata_defaults();
  const auto model = MassModel::from_ratios(k, 1, 1, 1.7, 0.9);
  const auto one = separate_gravitational(model, FieldSpec::along_z(2.0));
  const auto two = separate_gravitational(model, FieldSpec::along_z(4.0));
  CHECK(two.internal_coupling == doctest::Approx(2.0 * one.internal_coupling).epsilon(1e-15));
  CHECK(two.cm_coupling == doctest::Approx(2.0 * one.cm_coupling).epsilon(1e-15));
  const auto tilted = separate_gravitational(model, FieldSpec::from_vector({1.2, -0.4, 1.0}));
  const double g = std::sqrt(1.2 * 1.2 + 0.4 * 0.4 + 1.0);
  CHECK(tilted.internal_coupling == doctest::Approx(g / 2.0 * one.internal_coupling).epsilon(1e-14));
  CHECK(norm(tilted.axis) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(FieldSpec::along_z(-1.0).validate(), InvalidArgument);
  CHECK_THROWS_AS((FieldSpec{1.0, {0.0, 0.0, 2.0}}).validate(), InvalidArgument);
  CHECK(FieldSpec::from_vector({0, 0, 0}) == FieldSpec::along_z(0));
}

TEST_CASE("separated operators reproduce the two-body operator on product states") {
  const auto k = codata_defaults();
  CHECK(verify_separability(MassModel::equivalent(k), FieldSpec::along_z(0.3)) <= 1e-10);
  CHECK(verify_separability(MassModel::from_ratios(k, 1, 1, 2, 1), FieldSpec::along_z(0.3)) <= 1e-10);
  // Light "proton" so the centre-of-mass and relative motion are strongly mixed.
  CHECK(verify_separability(MassModel{2.0 * k.m_e_ref, 3.0 * k.m_e_ref, -1.0 * k.m_e_ref, 5.0 * k.m_e_ref},
                            FieldSpec::along_z(0.7)) <= 1e-10);
}

TEST_CASE("separability residual for random models") {
  const auto k = codata_defaults();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> inertial(0.5, 5.0);
  std::uniform_real_distribution<double> grav(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const MassModel m{inertial(rng) * k.m_e_ref, inertial(rng) * k.m_e_ref, grav(rng) * k.m_e_ref,
                      grav(rng) * k.m_e_ref};
    CHECK(verify_separability(m, FieldSpec::along_z(0.5)) <= 1e-10);
  }
}

TEST_CASE("zero trial state has residual 0; oversized grid is refused") {
  const auto k = codata_defaults();
  ProductTrial zero;
  zero.amplitude = 0.0;
  CHECK(verify_separability(MassModel::equivalent(k), FieldSpec::along_z(1), {}, zero) == 0.0);
  SurrogateGrid big;
  big.points = 65;
  CHECK_THROWS_AS((void)verify_separability(MassModel::equivalent(k), FieldSpec::along_z(1), big),
                  ResourceError);
}
