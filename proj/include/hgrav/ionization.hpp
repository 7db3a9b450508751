#pragma once

#include <optional>
#include <variant>

#include "hgrav/constants.hpp"
#include "hgrav/field.hpp"
#include "hgrav/mass_model.hpp"

namespace hgrav {

/// The internal coupling vanishes: the atom has true bound states and an
/// infinite lifetime. Distinct from any numerical failure.
struct StableAtom {};

/// Ground-state lifetime obtained by carrying the electric-field Stark
/// ionization lifetime over to the internal gravitational force:
///   tau = script_M g hbar^2 / (4 m_e^3 c^5 alpha^5) * exp(m_e^2 c^3 alpha^3 / (script_M g hbar)).
/// The exponential is never formed when the exponent is large.
struct ClosedFormLifetime {
  double internal_force;  // N, |script_M| g
  double prefactor_s;
  double exponent;
  double log10_tau_s;
  std::optional<double> tau_s;  // present only when exponent <= kMaxLinearExponent
};

inline constexpr double kMaxLinearExponent = 700.0;

/// Uses |script_M| g and the inertial electron mass of `model`.
[[nodiscard]] std::variant<StableAtom, ClosedFormLifetime> closed_form_lifetime(
    const MassModel& model, const FieldSpec& field, const PhysicalConstants& constants);

/// Barrier of V(x) = -1/sqrt(x^2 + s^2) - F x at the ground-state energy -1/2
/// (atomic units of the reduced mass).
struct WkbBarrier {
  double force;           // F, atomic units
  double inner_turning;   // Bohr
  double outer_turning;   // Bohr
  double exponent;        // 2 * integral of sqrt(2 (V - E)) over the forbidden region
};

/// Turning points by bisection, integral by adaptive Gauss-Kronrod quadrature.
/// Throws NumericalError when no barrier separates the well from the outer
/// region (F at or above barrier suppression, 1/16 for s = 0) and
/// ConvergenceError when the quadrature does not converge.
[[nodiscard]] WkbBarrier wkb_barrier(double force_atomic, double softening = 0.0);

struct WkbEstimate {
  WkbBarrier barrier;
  double log10_rate_per_s;
  std::optional<double> rate_per_s;  // present only when exponent <= kMaxLinearExponent
};

/// Tunnelling rate nu exp(-S) with attempt frequency nu = |E| / (pi hbar).
/// Throws InvalidArgument when script_M g = 0 (no barrier at all).
[[nodiscard]] WkbEstimate wkb_rate(const CompositeMasses& composites, const FieldSpec& field,
                                   const PhysicalConstants& constants, double softening = 0.0);

struct ResonanceEstimate {
  double internal_force;  // N
  double force_atomic;    // atomic units of the reduced mass
  ClosedFormLifetime closed_form;
  WkbEstimate wkb;
  double exponent_ratio;   // wkb exponent / closed-form exponent
  double log10_tau_wkb_s;
  bool ratio_in_window;    // 0.1 <= exponent_ratio <= 10
};

[[nodiscard]] std::variant<StableAtom, ResonanceEstimate> compare_lifetimes(
    const MassModel& model, const FieldSpec& field, const PhysicalConstants& constants);

}  // namespace hgrav
