#pragma once

#include <cstddef>

#include "hgrav/field.hpp"
#include "hgrav/mass_model.hpp"

namespace hgrav {

/// Field couplings of the two separated equations, with the field axis they act along.
///
/// The centre-of-mass potential is +cm_coupling * (axis . R) and the internal
/// potential is -internal_coupling * (axis . r).
struct CouplingRecord {
  double cm_coupling;        // N
  double internal_coupling;  // N
  Vec3 axis;

  friend bool operator==(const CouplingRecord&, const CouplingRecord&) = default;
};

/// Coefficients of the centre-of-mass and internal equations of a hydrogen
/// atom in a uniform gravitational field.
struct SeparatedHamiltonian {
  double cm_kinetic_mass;        // M
  double cm_coupling;            // Mbar g
  double internal_kinetic_mass;  // mu
  double internal_coupling;      // script M g
  bool coulomb_present;
  Vec3 axis;

  [[nodiscard]] CouplingRecord couplings() const {
    return {cm_coupling, internal_coupling, axis};
  }
};

[[nodiscard]] SeparatedHamiltonian separate_gravitational(const MassModel& model,
                                                          const FieldSpec& field);

/// Square sampling grid shared by both particle coordinates of the 1D
/// two-particle surrogate. Lengths are in Bohr radii of the electron mass.
struct SurrogateGrid {
  double lower = -4.0;
  double upper = 4.0;
  std::size_t points = 33;
  /// Step of the finite-difference stencils.
  double stencil_step = 0.02;

  static constexpr std::size_t max_points = 64;
};

/// Shape of the trial product state psi_cm(R) * psi_rel(r) used by verify_separability.
struct ProductTrial {
  double cm_centre = 0.3;
  double cm_width = 1.5;
  double rel_centre = 1.2;
  double rel_width = 0.8;
  /// Overall amplitude; zero gives the degenerate zero state.
  double amplitude = 1.0;
};

/// Applies the unseparated two-body operator (kinetic terms in the particle
/// coordinates plus m̄_e g x + m̄_p g y) and the sum of the separated operators
/// to the same product state on a 1D surrogate, and returns
/// max |lhs - rhs| / (max |lhs| + floor). The Coulomb term is softened to
/// -1/sqrt(r^2 + 0.01) identically on both sides.
///
/// Masses enter in units of the reference electron mass and g in atomic
/// force units per electron mass; only the algebra of the split is exercised.
/// Throws ResourceError when grid.points exceeds SurrogateGrid::max_points.
[[nodiscard]] double verify_separability(const MassModel& model, const FieldSpec& field,
                                         const SurrogateGrid& grid = {},
                                         const ProductTrial& trial = {});

}  // namespace hgrav
