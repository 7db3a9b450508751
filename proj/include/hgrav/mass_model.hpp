#pragma once

#include "hgrav/constants.hpp"

namespace hgrav {

/// Inertial and gravitational masses of the electron and proton, in kg.
///
/// Inertial masses must be positive. Gravitational masses are unconstrained
/// (zero and negative values are allowed) so that scans over the strength of
/// an equivalence violation are not artificially bounded.
struct MassModel {
  double m_e;
  double m_p;
  double mbar_e;
  double mbar_p;

  /// Reference inertial masses with gravitational = inertial.
  [[nodiscard]] static MassModel equivalent(const PhysicalConstants& constants);

  /// Masses given as multiples of the reference electron and proton masses.
  [[nodiscard]] static MassModel from_ratios(const PhysicalConstants& constants,
                                             double m_e_ratio, double m_p_ratio,
                                             double mbar_e_ratio, double mbar_p_ratio);

  /// Reference inertial masses, mbar_p = m_p, and mbar_e chosen so that the
  /// asymmetry coupling equals `script_m` (kg).
  [[nodiscard]] static MassModel with_asymmetry(const PhysicalConstants& constants,
                                                double script_m);

  /// Throws InvalidArgument on non-positive or non-finite inertial masses.
  void validate() const;

  friend bool operator==(const MassModel&, const MassModel&) = default;
};

/// Composite masses entering the separated two-body equations.
struct CompositeMasses {
  double total;       // M = m_e + m_p
  double reduced;     // mu = m_e m_p / M
  double grav_total;  // Mbar = mbar_e + mbar_p
  double asymmetry;   // script M, with script M * M = mbar_p m_e - mbar_e m_p
};

[[nodiscard]] CompositeMasses derive_composites(const MassModel& model);

/// True iff each gravitational mass is within rel_tol of its inertial mass.
[[nodiscard]] bool equivalence_holds(const MassModel& model, double rel_tol);

}  // namespace hgrav
