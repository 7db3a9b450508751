#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hgrav/constants.hpp"
#include "hgrav/error.hpp"
#include "hgrav/ionization.hpp"

using namespace hgrav;

namespace {

// Tunnelling integral 2 int sqrt(2 (V - E)) dx for V = -1/x - F x, E = -1/2,
// with the turning points from the quadratic F x^2 - x/2 + 1 = 0 and the
// substitution x = x1 + (x2 - x1)(1 - cos t)/2, integrated by the trapezoid
// rule in extended precision.
long double reference_exponent(long double f) {
  const long double disc = std::sqrt(0.25L - 4.0L * f);
  const long double x1 = (0.5L - disc) / (2.0L * f);
  const long double x2 = (0.5L + disc) / (2.0L * f);
  const long double half = (x2 - x1) / 2.0L;
  const int n = 400000;
  const long double pi = std::numbers::pi_v<long double>;
  long double sum = 0.0L;
  for (int j = 1; j < n; ++j) {
    const long double t = pi * j / n;
    const long double s = std::sin(t);
    const long double x = x1 + half * (1.0L - std::cos(t));
    sum += s * s / std::sqrt(x);
  }
  return 2.0L * std::sqrt(2.0L * f) * half * half * sum * (pi / n);
}

MassModel electron_asymmetry() { return MassModel::with_asymmetry(codata_defaults(), codata_defaults().m_e_ref); }

}  // namespace

TEST_CASE("closed-form exponent for script_m = m_e, g = 9.8") {
  const auto k = codata_defaults();
  const auto model = electron_asymmetry();
  const auto result = closed_form_lifetime(model, FieldSpec::along_z(9.8), k);
  REQUIRE(std::holds_alternative<ClosedFormLifetime>(result));
  const auto& life = std::get<ClosedFormLifetime>(result);

  // From scratch: m_e^2 c^3 alpha^3 / (script_m g hbar) with script_m = m_e.
  const long double me = 9.1093837015e-31L;
  const long double c = 299792458.0L;
  const long double alpha = 7.2973525693e-3L;
  const long double hbar = 1.054571817e-34L;
  const long double expected = me * c * c * c * alpha * alpha * alpha / (9.8L * hbar);
  CHECK(std::abs(life.exponent - static_cast<double>(expected)) <= 1e-10 * static_cast<double>(expected));
  CHECK(life.exponent > 9.2e21);
  CHECK(life.exponent < 9.3e21);
  CHECK_FALSE(life.tau_s.has_value());
  CHECK(std::isfinite(life.log10_tau_s));
  CHECK(life.log10_tau_s > 1e21);
}

TEST_CASE("closed form: prefactor and tau identity") {
  const auto k = codata_defaults();
  const auto model = electron_asymmetry();
  const auto life = std::get<ClosedFormLifetime>(closed_form_lifetime(model, FieldSpec::along_z(1e21), k));
  const double f = life.internal_force;
  const double prefactor = f * k.hbar * k.hbar /
                           (4.0 * std::pow(model.m_e, 3) * std::pow(k.c, 5) * std::pow(k.alpha, 5));
  CHECK(life.prefactor_s == doctest::Approx(prefactor).epsilon(1e-12));
  REQUIRE(life.tau_s.has_value());
  CHECK(*life.tau_s == doctest::Approx(life.prefactor_s * std::exp(life.exponent)).epsilon(1e-12));
  CHECK(std::log10(*life.tau_s) == doctest::Approx(life.log10_tau_s).epsilon(1e-12));
}

TEST_CASE("closed form: scaling, monotonicity, no overflow") {
  const auto k = codata_defaults();
  const auto model = electron_asymmetry();
  auto exponent = [&](double g) {
    return std::get<ClosedFormLifetime>(closed_form_lifetime(model, FieldSpec::along_z(g), k));
  };
  CHECK(exponent(19.6).exponent == doctest::Approx(exponent(9.8).exponent / 2.0).epsilon(1e-15));
  double previous = INFINITY;
  for (double g = 1e18; g < 1e23; g *= 1.7) {
    const auto life = exponent(g);
    if (life.exponent <= 10.0) break;
    CHECK(life.log10_tau_s < previous);
    previous = life.log10_tau_s;
  }
  const auto huge = exponent(9.8e-9);
  CHECK(huge.exponent > 1e30);
  CHECK(std::isfinite(huge.log10_tau_s));
  CHECK_FALSE(huge.tau_s.has_value());
}

TEST_CASE("equivalence gives the stable signal") {
  const auto k = codata_defaults();
  CHECK(std::holds_alternative<StableAtom>(
      closed_form_lifetime(MassModel::equivalent(k), FieldSpec::along_z(9.8), k)));
  CHECK(std::holds_alternative<StableAtom>(
      closed_form_lifetime(electron_asymmetry(), FieldSpec::along_z(0.0), k)));
  CHECK(std::holds_alternative<StableAtom>(
      compare_lifetimes(MassModel::equivalent(k), FieldSpec::along_z(9.8), k)));
  CHECK_THROWS_AS((void)wkb_rate(derive_composites(MassModel::equivalent(k)), FieldSpec::along_z(9.8), k),
                  InvalidArgument);
}

TEST_CASE("WKB barrier integral against an independent quadrature") {
  for (double f : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.05}) {
    const auto barrier = wkb_barrier(f);
    const double expected = static_cast<double>(reference_exponent(f));
    CHECK(barrier.exponent == doctest::Approx(expected).epsilon(1e-8));
    const double disc = std::sqrt(0.25 - 4.0 * f);
    CHECK(barrier.inner_turning == doctest::Approx((0.5 - disc) / (2.0 * f)).epsilon(1e-10));
    CHECK(barrier.outer_turning == doctest::Approx((0.5 + disc) / (2.0 * f)).epsilon(1e-10));
  }
}

TEST_CASE("WKB exponent scales as 1/F") {
  const double s4 = wkb_barrier(1e-4).exponent;
  CHECK(s4 * 1e-4 > 2.0 / 3.0 / 2.0);
  CHECK(s4 * 1e-4 < 2.0 * 2.0 / 3.0);
  for (double f : {1e-6, 1e-5, 1e-4}) {
    const double ratio = wkb_barrier(2.0 * f).exponent / wkb_barrier(f).exponent;
    CHECK(std::abs(ratio - 0.5) < 0.05);
  }
  double lo = INFINITY;
  double hi = 0.0;
  for (double f : {1e-6, 1e-5, 1e-4}) {
    const double sf = wkb_barrier(f).exponent * f;
    lo = std::min(lo, sf);
    hi = std::max(hi, sf);
  }
  CHECK((hi - lo) / lo < 0.1);
}

TEST_CASE("WKB barrier errors") {
  CHECK_THROWS_AS((void)wkb_barrier(0.07), NumericalError);
  CHECK_THROWS_AS((void)wkb_barrier(0.0), InvalidArgument);
  CHECK_THROWS_AS((void)wkb_barrier(1e-3, -1.0), InvalidArgument);
}

TEST_CASE("small softening barely changes the barrier") {
  const double bare = wkb_barrier(1e-3).exponent;
  const double soft = wkb_barrier(1e-3, 1e-3).exponent;
  CHECK(std::abs(soft - bare) / bare < 1e-4);
  CHECK(soft > bare);
}

TEST_CASE("comparison report") {
  const auto k = codata_defaults();
  SUBCASE("script_m = m_e, g = 9.8") {
    const auto r = std::get<ResonanceEstimate>(compare_lifetimes(electron_asymmetry(), FieldSpec::along_z(9.8), k));
    CHECK(r.closed_form.exponent > 1e21);
    CHECK(r.closed_form.exponent < 1e22);
    CHECK(r.wkb.barrier.exponent > 1e21);
    CHECK(r.wkb.barrier.exponent < 1e22);
    CHECK(std::isfinite(r.exponent_ratio));
    // The WKB exponent is 2/3 (mu/m_e)^2 of the closed form.
    const auto c = derive_composites(electron_asymmetry());
    const double mass_ratio = c.reduced / k.m_e_ref;
    CHECK(r.exponent_ratio == doctest::Approx(2.0 / 3.0 * mass_ratio * mass_ratio).epsilon(1e-6));
    CHECK(r.ratio_in_window);
  }
  SUBCASE("F = 1e-6 atomic units: both lifetimes exceed 1e5 decades") {
    const auto model = electron_asymmetry();
    const auto c = derive_composites(model);
    const double g = 1e-6 * atomic_scale(k, c.reduced).force_atomic / c.asymmetry;
    const auto r = std::get<ResonanceEstimate>(compare_lifetimes(model, FieldSpec::along_z(g), k));
    CHECK(r.force_atomic == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(r.closed_form.log10_tau_s > 1e5);
    CHECK(r.log10_tau_wkb_s > 1e5);
  }
  SUBCASE("negative asymmetry uses its magnitude") {
    const auto neg = MassModel::with_asymmetry(k, -k.m_e_ref);
    const auto r = std::get<ResonanceEstimate>(compare_lifetimes(neg, FieldSpec::along_z(9.8), k));
    CHECK(r.internal_force > 0.0);
  }
}
