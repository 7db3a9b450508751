#include "hgrav/ionization.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "hgrav/error.hpp"

namespace hgrav {

namespace {

constexpr double kGroundEnergy = -0.5;

void check_magnitude(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericalError(std::string(what) + " is not finite");
}

// Bisection to ~1e-12 relative width on a bracket with a sign change.
template <typename F>
double bisect_root(F&& f, double lo, double hi) {
  auto [a, b] = boost::math::tools::bisect(f, lo, hi, boost::math::tools::eps_tolerance<double>(41));
  return 0.5 * (a + b);
}

}  // namespace

std::variant<StableAtom, ClosedFormLifetime> closed_form_lifetime(const MassModel& model,
                                                                  const FieldSpec& field,
                                                                  const PhysicalConstants& constants) {
  field.validate();
  const CompositeMasses masses = derive_composites(model);
  const double force = std::abs(masses.asymmetry) * field.magnitude;
  if (force == 0.0) return StableAtom{};

  const double m_e = model.m_e;
  const double c = constants.c;
  const double alpha = constants.alpha;
  const double hbar = constants.hbar;
  const double mca = m_e * c * alpha;

  ClosedFormLifetime out{};
  out.internal_force = force;
  out.prefactor_s = force * hbar * hbar / (4.0 * m_e * mca * mca * c * c * c * alpha * alpha * alpha);
  out.exponent = mca * mca * c * alpha / (force * hbar);
  out.log10_tau_s = std::log10(out.prefactor_s) + out.exponent / std::numbers::ln10;
  if (out.exponent <= kMaxLinearExponent) {
    out.tau_s = out.prefactor_s * std::exp(out.exponent);
  }
  check_magnitude(out.log10_tau_s, "closed-form lifetime");
  return out;
}

WkbBarrier wkb_barrier(double force, double softening) {
  if (!(force > 0.0) || !std::isfinite(force)) {
    throw InvalidArgument("wkb_barrier: force must be positive and finite");
  }
  if (!(softening >= 0.0)) throw InvalidArgument("wkb_barrier: softening must be non-negative");
  const double s2 = softening * softening;

  auto excess = [&](double x) {  // V(x) - E
    return -1.0 / std::sqrt(x * x + s2) - force * x - kGroundEnergy;
  };
  auto slope = [&](double x) {  // V'(x)
    const double q = x * x + s2;
    return x / (q * std::sqrt(q)) - force;
  };

  // Barrier top: the outer zero of V'. V' < 0 beyond 2 / sqrt(F) + s.
  const double top_hi = 2.0 / std::sqrt(force) + softening;
  const double top = softening == 0.0
                         ? 1.0 / std::sqrt(force)
                         : bisect_root(slope, softening / std::numbers::sqrt2, top_hi);
  if (!(excess(top) > 0.0)) {
    throw NumericalError("wkb_barrier: no barrier above the ground state at F = " +
                         std::to_string(force));
  }
  const double inner_lo = softening == 0.0 ? std::min(1e-6, 0.5 * top) : 0.0;
  if (!(excess(inner_lo) < 0.0)) {
    throw NumericalError("wkb_barrier: softened well does not bind the ground state");
  }
  const double outer_hi = 1.0 / force + 2.0;
  const double x1 = bisect_root(excess, inner_lo, top);
  const double x2 = bisect_root(excess, top, outer_hi);

  // For s = 0, V - E = F (x2 - x)(x - x1) / x, which avoids cancellation near
  // the outer turning point when F is tiny.
  auto forbidden = [&](double x, double from_inner, double to_outer) {
    const double v = softening == 0.0 ? force * to_outer * from_inner / x : excess(x);
    return std::sqrt(2.0 * std::max(v, 0.0));
  };

  // x = x1 + u^2 (left) and x = x2 - u^2 (right) remove the square-root
  // endpoint behaviour; each half is cut into doubling segments in u.
  const double middle = std::sqrt(x1 * x2);
  double total = 0.0;
  double error = 0.0;
  auto integrate_half = [&](auto&& integrand, double u_max) {
    double a = 0.0;
    double b = std::min(u_max, 1.0);
    while (a < u_max) {
      double err = 0.0;
      total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, a, b, 30,
                                                                              1e-13, &err);
      error += err;
      a = b;
      b = std::min(u_max, 2.0 * b);
    }
  };
  integrate_half(
      [&](double u) {
        const double x = x1 + u * u;
        return 2.0 * u * forbidden(x, u * u, x2 - x);
      },
      std::sqrt(middle - x1));
  integrate_half(
      [&](double u) {
        const double x = x2 - u * u;
        return 2.0 * u * forbidden(x, x - x1, u * u);
      },
      std::sqrt(x2 - middle));

  const double exponent = 2.0 * total;
  if (!std::isfinite(exponent) || error > 1e-9 * total) {
    throw ConvergenceError("wkb_barrier: quadrature did not converge (error estimate " +
                           std::to_string(error) + ")");
  }
  return WkbBarrier{force, x1, x2, exponent};
}

WkbEstimate wkb_rate(const CompositeMasses& composites, const FieldSpec& field,
                     const PhysicalConstants& constants, double softening) {
  field.validate();
  const double force = std::abs(composites.asymmetry) * field.magnitude;
  if (force == 0.0) {
    throw InvalidArgument("wkb_rate: vanishing internal force has no tunnelling barrier");
  }
  const AtomicUnitScale scale = atomic_scale(constants, composites.reduced);
  WkbEstimate out{};
  out.barrier = wkb_barrier(scale.force_to_atomic(force), softening);
  const double attempt_per_s = std::abs(kGroundEnergy) / std::numbers::pi / scale.time_atomic;
  out.log10_rate_per_s = std::log10(attempt_per_s) - out.barrier.exponent / std::numbers::ln10;
  if (out.barrier.exponent <= kMaxLinearExponent) {
    out.rate_per_s = attempt_per_s * std::exp(-out.barrier.exponent);
  }
  return out;
}

std::variant<StableAtom, ResonanceEstimate> compare_lifetimes(const MassModel& model,
                                                              const FieldSpec& field,
                                                              const PhysicalConstants& constants) {
  const auto closed = closed_form_lifetime(model, field, constants);
  if (std::holds_alternative<StableAtom>(closed)) return StableAtom{};

  const CompositeMasses masses = derive_composites(model);
  ResonanceEstimate out{};
  out.closed_form = std::get<ClosedFormLifetime>(closed);
  out.internal_force = out.closed_form.internal_force;
  out.wkb = wkb_rate(masses, field, constants);
  out.force_atomic = out.wkb.barrier.force;
  out.exponent_ratio = out.wkb.barrier.exponent / out.closed_form.exponent;
  out.log10_tau_wkb_s = -out.wkb.log10_rate_per_s;
  out.ratio_in_window = out.exponent_ratio >= 0.1 && out.exponent_ratio <= 10.0;
  return out;
}

}  // namespace hgrav
