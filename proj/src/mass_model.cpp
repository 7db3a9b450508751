#include "hgrav/mass_model.hpp"

#include <cmath>

#include "hgrav/error.hpp"

namespace hgrav {

MassModel MassModel::equivalent(const PhysicalConstants& constants) {
  return {constants.m_e_ref, constants.m_p_ref, constants.m_e_ref, constants.m_p_ref};
}

MassModel MassModel::from_ratios(const PhysicalConstants& constants, double m_e_ratio,
                                 double m_p_ratio, double mbar_e_ratio, double mbar_p_ratio) {
  MassModel model{m_e_ratio * constants.m_e_ref, m_p_ratio * constants.m_p_ref,
                  mbar_e_ratio * constants.m_e_ref, mbar_p_ratio * constants.m_p_ref};
  model.validate();
  return model;
}

MassModel MassModel::with_asymmetry(const PhysicalConstants& constants, double script_m) {
  const double m_e = constants.m_e_ref;
  const double m_p = constants.m_p_ref;
  // script_m * M = mbar_p m_e - mbar_e m_p with mbar_p = m_p.
  const double mbar_e = m_e - script_m * (m_e + m_p) / m_p;
  MassModel model{m_e, m_p, mbar_e, m_p};
  model.validate();
  return model;
}

void MassModel::validate() const {
  if (!(m_e > 0.0) || !(m_p > 0.0) || !std::isfinite(m_e) || !std::isfinite(m_p)) {
    throw InvalidArgument("mass model: inertial masses must be positive and finite");
  }
  if (!std::isfinite(mbar_e) || !std::isfinite(mbar_p)) {
    throw InvalidArgument("mass model: gravitational masses must be finite");
  }
}

CompositeMasses derive_composites(const MassModel& model) {
  model.validate();
  const double total = model.m_e + model.m_p;
  return CompositeMasses{
      .total = total,
      .reduced = model.m_e * model.m_p / total,
      .grav_total = model.mbar_e + model.mbar_p,
      .asymmetry = (model.mbar_p * model.m_e - model.mbar_e * model.m_p) / total,
  };
}

bool equivalence_holds(const MassModel& model, double rel_tol) {
  if (!(rel_tol >= 0.0)) {
    throw InvalidArgument("equivalence_holds: tolerance must be non-negative");
  }
  return std::abs(model.mbar_e - model.m_e) <= rel_tol * model.m_e &&
         std::abs(model.mbar_p - model.m_p) <= rel_tol * model.m_p;
}

}  // namespace hgrav
