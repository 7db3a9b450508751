#include "hgrav/constants.hpp"

#include <cmath>
#include <numbers>

#include "hgrav/error.hpp"

namespace hgrav {

double PhysicalConstants::alpha_mismatch() const {
  const double derived = e_charge * e_charge / (4.0 * std::numbers::pi * eps0 * hbar * c);
  return std::abs(derived - alpha) / alpha;
}

PhysicalConstants codata_defaults() {
  return PhysicalConstants{
      .hbar = 1.054571817e-34,
      .c = 299792458.0,
      .alpha = 7.2973525693e-3,
      .e_charge = 1.602176634e-19,
      .eps0 = 8.8541878128e-12,
      .m_e_ref = 9.1093837015e-31,
      .m_p_ref = 1.67262192369e-27,
  };
}

AtomicUnitScale atomic_scale(const PhysicalConstants& constants, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InvalidArgument("atomic_scale: reduced mass must be positive and finite");
  }
  const double mc_alpha = mu * constants.c * constants.alpha;
  AtomicUnitScale scale{};
  scale.energy_hartree = mc_alpha * constants.c * constants.alpha;
  scale.length_bohr = constants.hbar / mc_alpha;
  scale.time_atomic = constants.hbar / scale.energy_hartree;
  scale.force_atomic = scale.energy_hartree / scale.length_bohr;
  return scale;
}

}  // namespace hgrav
