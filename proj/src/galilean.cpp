#include "hgrav/galilean.hpp"

#include <cmath>
#include <numbers>

#include "hgrav/error.hpp"

namespace hgrav {

Vec3 FrameTrajectory::displacement(double t) const {
  const double s = 0.5 * t * t;
  return {s * acceleration[0], s * acceleration[1], s * acceleration[2]};
}

Vec3 FrameTrajectory::velocity(double t) const {
  return {t * acceleration[0], t * acceleration[1], t * acceleration[2]};
}

double FrameTrajectory::speed_squared_integral(double t) const {
  return dot(acceleration, acceleration) * t * t * t / 3.0;
}

PhaseField PhaseField::at(const MassModel& model, const FrameTrajectory& frame, double t) {
  const Vec3 v = frame.velocity(t);
  const double total = model.m_e + model.m_p;
  return {
      .electron_coefficient = {-model.m_e * v[0], -model.m_e * v[1], -model.m_e * v[2]},
      .proton_coefficient = {-model.m_p * v[0], -model.m_p * v[1], -model.m_p * v[2]},
      .time_part = -0.5 * total * frame.speed_squared_integral(t),
  };
}

double PhaseField::value(const Vec3& electron, const Vec3& proton, double hbar) const {
  return (dot(electron_coefficient, electron) + dot(proton_coefficient, proton) + time_part) / hbar;
}

AcceleratedHamiltonian accelerated_hamiltonian(const MassModel& model, const Vec3& acceleration) {
  model.validate();
  const CompositeMasses masses = derive_composites(model);
  const FieldSpec equivalent_field = FieldSpec::from_vector(acceleration);
  return {
      .cm_kinetic_mass = masses.total,
      .cm_coupling = masses.total * equivalent_field.magnitude,
      .internal_coupling = 0.0,
      .effective_grav_mass = masses.total,
      .axis = equivalent_field.axis,
  };
}

FrameDiscrepancy frame_discrepancy(const MassModel& model, double magnitude) {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
    throw InvalidArgument("frame_discrepancy: magnitude must be finite and non-negative");
  }
  model.validate();
  const CompositeMasses masses = derive_composites(model);
  FrameDiscrepancy out{std::nullopt, std::abs(masses.asymmetry) * magnitude};
  if (masses.grav_total != 0.0) out.cm_mass_ratio = masses.total / masses.grav_total;
  return out;
}

Wavefunction1D transform_wavefunction(const Wavefunction1D& state, const FrameTrajectory& frame,
                                      double particle_mass, double t, double hbar) {
  if (!(t >= 0.0)) throw InvalidArgument("transform_wavefunction: t must be non-negative");
  if (!(particle_mass > 0.0) || !(hbar > 0.0)) {
    throw InvalidArgument("transform_wavefunction: mass and hbar must be positive");
  }
  if (t == 0.0) return state;

  const Grid1D& grid = state.grid();
  const double shift = frame.displacement(t)[0];
  const double speed = frame.velocity(t)[0];
  const double gradient = particle_mass * speed / hbar;
  if (std::abs(gradient) >= std::numbers::pi / grid.spacing()) {
    throw DomainError("transform_wavefunction: frame velocity is not resolvable on this grid");
  }
  if (std::abs(shift) >= grid.length()) {
    throw DomainError("transform_wavefunction: shift exceeds the grid length");
  }

  Wavefunction1D out = translated(state, shift);
  if (edge_fraction(out) > kEdgeTolerance) {
    throw DomainError("transform_wavefunction: shifted support reaches the grid edge");
  }
  const double time_phase = -0.5 * particle_mass * frame.speed_squared_integral(t) / hbar;
  const std::vector<double> x = grid.nodes();
  auto samples = out.samples();
  for (std::size_t j = 0; j < x.size(); ++j) {
    samples[j] *= std::polar(1.0, -gradient * x[j] + time_phase);
  }
  return out;
}

double accelerated_frame_potential(const FrameTrajectory& frame, double mass, double x) {
  return mass * frame.acceleration[0] * x;
}

FrameCheckReport frame_check(const FrameCheckConfig& config) {
  if (!(config.duration > 0.0) || config.steps == 0) {
    throw InvalidArgument("frame_check: need a positive duration and at least one step");
  }
  const FrameTrajectory frame{{config.acceleration, 0.0, 0.0}};
  const Wavefunction1D initial =
      gaussian_packet(config.grid, config.centre, config.width, config.wavenumber);
  const double dt = config.duration / static_cast<double>(config.steps);

  PropagationSpec inertial{.potential = [](double, double) { return 0.0; },
                           .mass = config.mass,
                           .dt = dt,
                           .steps = config.steps};
  const Wavefunction1D transformed =
      transform_wavefunction(propagate(initial, inertial), frame, config.mass, config.duration);

  PropagationSpec accelerated = inertial;
  accelerated.potential = [&](double x, double) {
    return accelerated_frame_potential(frame, config.mass, x);
  };
  const Wavefunction1D direct = propagate(initial, accelerated);

  return {fidelity(transformed, direct), max_pointwise_error(transformed, direct), config.grid,
          config.steps};
}

}  // namespace hgrav
