#include "hgrav/oracle/stabilization.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hgrav/error.hpp"
#include "hgrav/oracle/tridiagonal.hpp"

namespace hgrav::oracle {

namespace {

SymTridiagonal downhill_hamiltonian(double box, double force, double h) {
  const auto count = static_cast<std::size_t>(std::lround(box / h)) - 1;
  SymTridiagonal t;
  t.diag.resize(count);
  t.off.assign(count - 1, -0.5 / (h * h));
  for (std::size_t i = 0; i < count; ++i) {
    const double eta = h * static_cast<double>(i + 1);
    t.diag[i] = 1.0 / (h * h) - 1.0 / eta - force * eta;
  }
  return t;
}

}  // namespace

std::vector<StabilizationPoint> stabilization_scan(const std::vector<double>& box_sizes,
                                                   double field_force, const EnergyWindow& window,
                                                   const StabilizationOptions& options) {
  if (box_sizes.size() < 3) {
    throw InvalidArgument("stabilization_scan: at least three box sizes are required");
  }
  for (std::size_t i = 0; i < box_sizes.size(); ++i) {
    if (!(box_sizes[i] > 0.0) || (i > 0 && !(box_sizes[i] > box_sizes[i - 1]))) {
      throw InvalidArgument("stabilization_scan: box sizes must be positive and strictly increasing");
    }
  }
  if (!(window.hi > window.lo)) {
    throw InvalidArgument("stabilization_scan: window must have hi > lo");
  }
  if (!(field_force >= 0.0) || !std::isfinite(field_force)) {
    throw InvalidArgument("stabilization_scan: field force must be finite and non-negative");
  }
  const double h = options.spacing;
  if (!(h > 0.0) || box_sizes.front() < 200.0 * h) {
    throw InvalidArgument("stabilization_scan: spacing too coarse for the smallest box");
  }

  std::vector<StabilizationPoint> points;
  for (double box : box_sizes) {
    const SymTridiagonal t = downhill_hamiltonian(box, field_force, h);
    const std::size_t first = t.count_below(window.lo);
    const std::size_t last = t.count_below(window.hi);
    if (last == first) {
      throw NumericalError("stabilization_scan: no eigenvalue in [" + std::to_string(window.lo) +
                           ", " + std::to_string(window.hi) + ") for box " + std::to_string(box));
    }
    std::vector<double> inside;
    for (std::size_t k = first; k < last; ++k) inside.push_back(kth_eigenvalue(t, k));

    double spacing = 0.0;
    if (inside.size() >= 2) {
      spacing = (inside.back() - inside.front()) / static_cast<double>(inside.size() - 1);
    } else {
      const double level = inside.front();
      double gap = std::numeric_limits<double>::infinity();
      if (first > 0) gap = level - kth_eigenvalue(t, first - 1);
      if (last < t.size()) gap = std::min(gap, kth_eigenvalue(t, last) - level);
      spacing = gap;
    }

    double nearest = inside.front();
    for (double e : inside) {
      if (std::abs(e - window.centre()) < std::abs(nearest - window.centre())) nearest = e;
    }
    points.push_back({box, spacing, nearest, static_cast<int>(inside.size())});
  }
  return points;
}

}  // namespace hgrav::oracle
