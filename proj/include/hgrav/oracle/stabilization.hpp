#pragma once

#include <vector>

namespace hgrav::oracle {

struct EnergyWindow {
  double lo;  // Hartree
  double hi;  // Hartree

  [[nodiscard]] double centre() const { return 0.5 * (lo + hi); }
};

struct StabilizationPoint {
  double box_size;       // Bohr
  double level_spacing;  // Hartree
  double nearest_level;  // eigenvalue closest to the window centre
  int levels_in_window;
};

struct StabilizationOptions {
  /// Finite-difference spacing, identical for every box (Bohr).
  double spacing = 0.02;
};

/// Diagonalizes -(1/2) d^2/deta^2 - 1/eta - F eta on (0, L] with hard walls for
/// each box size L and reports the local level spacing in the window: the mean
/// gap between consecutive eigenvalues inside it, or, with a single eigenvalue
/// inside, the gap to its nearest neighbour. Atomic units throughout.
///
/// Throws InvalidArgument for fewer than three boxes or box sizes that are not
/// strictly increasing, and NumericalError when a window holds no eigenvalue.
[[nodiscard]] std::vector<StabilizationPoint> stabilization_scan(
    const std::vector<double>& box_sizes, double field_force, const EnergyWindow& window,
    const StabilizationOptions& options = {});

}  // namespace hgrav::oracle
