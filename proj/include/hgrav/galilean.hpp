#pragma once

#include <cstddef>
#include <optional>

#include "hgrav/field.hpp"
#include "hgrav/mass_model.hpp"
#include "hgrav/separation.hpp"
#include "hgrav/wavepacket.hpp"

namespace hgrav {

/// Frame origin Z(t) = a t^2 / 2 under constant acceleration, at rest and
/// coincident with the inertial origin at t = 0.
struct FrameTrajectory {
  Vec3 acceleration{};

  [[nodiscard]] Vec3 displacement(double t) const;
  [[nodiscard]] Vec3 velocity(double t) const;
  /// integral_0^t |Zdot(s)|^2 ds = |a|^2 t^3 / 3
  [[nodiscard]] double speed_squared_integral(double t) const;
};

/// Phase attached to the two-particle wavefunction by the transformation to
/// the accelerated frame: Phi = (ce . x' + cp . y' + time_part) / hbar.
struct PhaseField {
  Vec3 electron_coefficient;  // -m_e Zdot
  Vec3 proton_coefficient;    // -m_p Zdot
  double time_part;           // -(M/2) integral Zdot^2

  [[nodiscard]] static PhaseField at(const MassModel& model, const FrameTrajectory& frame,
                                     double t);
  [[nodiscard]] double value(const Vec3& electron, const Vec3& proton, double hbar) const;
};

/// Field couplings seen in a uniformly accelerated frame. Same sign
/// convention as CouplingRecord: the CM potential is +cm_coupling (axis . R').
/// The frame acceleration enters like a gravitational field g = +a.
struct AcceleratedHamiltonian {
  double cm_kinetic_mass;      // M
  double cm_coupling;          // M |a|
  double internal_coupling;    // always 0
  double effective_grav_mass;  // M
  Vec3 axis;

  [[nodiscard]] CouplingRecord couplings() const {
    return {cm_coupling, internal_coupling, axis};
  }
};

[[nodiscard]] AcceleratedHamiltonian accelerated_hamiltonian(const MassModel& model,
                                                             const Vec3& acceleration);

struct FrameDiscrepancy {
  /// M / Mbar; empty when Mbar = 0.
  std::optional<double> cm_mass_ratio;
  /// |script M| * magnitude, in N.
  double internal_coupling_difference;
};

[[nodiscard]] FrameDiscrepancy frame_discrepancy(const MassModel& model, double magnitude);

/// exp(i Phi(x', t)) psi(x' + Z(t)) for one particle of the given mass, using
/// the x component of the trajectory, with Phi = [-m Zdot x' - (m/2) int Zdot^2] / hbar.
/// The shift is a Fourier interpolation on the same grid.
///
/// Throws InvalidArgument for t < 0 or mass <= 0, and DomainError when the
/// shifted packet reaches the grid edge or the phase gradient m Zdot / hbar
/// exceeds the grid's Nyquist wavenumber.
[[nodiscard]] Wavefunction1D transform_wavefunction(const Wavefunction1D& state,
                                                    const FrameTrajectory& frame,
                                                    double particle_mass, double t,
                                                    double hbar = 1.0);

/// One-particle potential m a x' of the accelerated frame (x component of a).
[[nodiscard]] double accelerated_frame_potential(const FrameTrajectory& frame, double mass,
                                                 double x);

/// Dimensionless Galilean exactness run: a Gaussian propagated freely and then
/// transformed, against the same Gaussian propagated under m a x'.
struct FrameCheckConfig {
  Grid1D grid{-40.0, 40.0, 2048};
  double acceleration = 1.0;
  double duration = 1.0;
  std::size_t steps = 4096;
  double mass = 1.0;
  double centre = 0.0;
  double width = 1.0;
  double wavenumber = 0.0;
};

struct FrameCheckReport {
  double fidelity;
  double max_pointwise_error;
  Grid1D grid;
  std::size_t steps;
};

[[nodiscard]] FrameCheckReport frame_check(const FrameCheckConfig& config);

}  // namespace hgrav
