#pragma once

namespace hgrav {

/// SI values of the fundamental constants (CODATA 2018).
struct PhysicalConstants {
  double hbar;      // J s
  double c;         // m / s
  double alpha;     // fine-structure constant
  double e_charge;  // C
  double eps0;      // F / m
  double m_e_ref;   // kg
  double m_p_ref;   // kg

  /// alpha against e^2 / (4 pi eps0 hbar c).
  [[nodiscard]] double alpha_mismatch() const;
};

[[nodiscard]] PhysicalConstants codata_defaults();

/// Hartree atomic units for a particle of mass mu bound by the Coulomb field.
struct AtomicUnitScale {
  double energy_hartree;  // J
  double length_bohr;     // m
  double time_atomic;     // s
  double force_atomic;    // N

  [[nodiscard]] double energy_to_si(double hartree) const { return hartree * energy_hartree; }
  [[nodiscard]] double energy_to_atomic(double joule) const { return joule / energy_hartree; }
  [[nodiscard]] double length_to_si(double bohr) const { return bohr * length_bohr; }
  [[nodiscard]] double length_to_atomic(double metre) const { return metre / length_bohr; }
  [[nodiscard]] double time_to_si(double t) const { return t * time_atomic; }
  [[nodiscard]] double time_to_atomic(double seconds) const { return seconds / time_atomic; }
  [[nodiscard]] double force_to_si(double f) const { return f * force_atomic; }
  [[nodiscard]] double force_to_atomic(double newton) const { return newton / force_atomic; }
};

/// Throws InvalidArgument unless mu > 0.
[[nodiscard]] AtomicUnitScale atomic_scale(const PhysicalConstants& constants, double mu);

}  // namespace hgrav
