#include "hgrav/separation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hgrav/error.hpp"

namespace hgrav {

FieldSpec FieldSpec::from_vector(const Vec3& g) {
  const double magnitude = norm(g);
  if (magnitude == 0.0) {
    return along_z(0.0);
  }
  return {magnitude, {g[0] / magnitude, g[1] / magnitude, g[2] / magnitude}};
}

void FieldSpec::validate() const {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
    throw InvalidArgument("field: magnitude must be finite and non-negative");
  }
  if (std::abs(norm(axis) - 1.0) > 1e-12) {
    throw InvalidArgument("field: axis must be a unit vector");
  }
}

SeparatedHamiltonian separate_gravitational(const MassModel& model, const FieldSpec& field) {
  field.validate();
  const CompositeMasses masses = derive_composites(model);
  return SeparatedHamiltonian{
      .cm_kinetic_mass = masses.total,
      .cm_coupling = masses.grav_total * field.magnitude,
      .internal_kinetic_mass = masses.reduced,
      .internal_coupling = masses.asymmetry * field.magnitude,
      .coulomb_present = true,
      .axis = field.axis,
  };
}

namespace {

// Eighth-order central stencil for the second derivative.
constexpr std::array<double, 5> kSecondDerivative{-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0,
                                                  8.0 / 315.0, -1.0 / 560.0};

template <typename F>
double second_derivative(F&& along, double step) {
  double acc = kSecondDerivative[0] * along(0.0);
  for (std::size_t j = 1; j < kSecondDerivative.size(); ++j) {
    const double offset = static_cast<double>(j) * step;
    acc += kSecondDerivative[j] * (along(offset) + along(-offset));
  }
  return acc / (step * step);
}

double softened_coulomb(double r) { return -1.0 / std::sqrt(r * r + 0.01); }

double gaussian(double x, double centre, double width) {
  const double u = (x - centre) / width;
  return std::exp(-0.5 * u * u);
}

}  // namespace

double verify_separability(const MassModel& model, const FieldSpec& field,
                           const SurrogateGrid& grid, const ProductTrial& trial) {
  field.validate();
  model.validate();
  if (grid.points > SurrogateGrid::max_points) {
    throw ResourceError("verify_separability: at most " +
                        std::to_string(SurrogateGrid::max_points) + " points per axis");
  }
  if (grid.points < 2 || !(grid.upper > grid.lower) || !(grid.stencil_step > 0.0)) {
    throw InvalidArgument("verify_separability: degenerate surrogate grid");
  }

  // Work in units of the inertial electron mass.
  const double m_e = 1.0;
  const double m_p = model.m_p / model.m_e;
  const double mbar_e = model.mbar_e / model.m_e;
  const double mbar_p = model.mbar_p / model.m_e;
  const double g = field.magnitude;

  const double total = m_e + m_p;
  const double reduced = m_e * m_p / total;
  const double grav_total = mbar_e + mbar_p;
  const double asymmetry = (mbar_p * m_e - mbar_e * m_p) / total;

  auto product = [&](double cm, double rel) {
    return trial.amplitude * gaussian(cm, trial.cm_centre, trial.cm_width) *
           gaussian(rel, trial.rel_centre, trial.rel_width);
  };
  auto particle_state = [&](double x, double y) {
    return product((m_e * x + m_p * y) / total, x - y);
  };

  const std::size_t n = grid.points;
  const double h = (grid.upper - grid.lower) / static_cast<double>(n - 1);
  const double step = grid.stencil_step;

  std::vector<double> lhs(n * n);
  std::vector<double> rhs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.lower + static_cast<double>(i) * h;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = grid.lower + static_cast<double>(j) * h;
      const double cm = (m_e * x + m_p * y) / total;
      const double rel = x - y;

      const double psi_xy = particle_state(x, y);
      const double d2x = second_derivative([&](double s) { return particle_state(x + s, y); }, step);
      const double d2y = second_derivative([&](double s) { return particle_state(x, y + s); }, step);
      lhs[i * n + j] = -d2x / (2.0 * m_e) - d2y / (2.0 * m_p) + softened_coulomb(rel) * psi_xy +
                       g * (mbar_e * x + mbar_p * y) * psi_xy;

      const double psi = product(cm, rel);
      const double d2cm = second_derivative([&](double s) { return product(cm + s, rel); }, step);
      const double d2rel = second_derivative([&](double s) { return product(cm, rel + s); }, step);
      rhs[i * n + j] = -d2cm / (2.0 * total) + grav_total * g * cm * psi - d2rel / (2.0 * reduced) +
                       softened_coulomb(rel) * psi - asymmetry * g * rel * psi;
    }
  }

  double scale = 0.0;
  for (double v : lhs) scale = std::max(scale, std::abs(v));
  const double denominator = scale + std::numeric_limits<double>::epsilon();
  double residual = 0.0;
  for (std::size_t idx = 0; idx < lhs.size(); ++idx) {
    residual = std::max(residual, std::abs(lhs[idx] - rhs[idx]) / denominator);
  }
  return residual;
}

}  // namespace hgrav
