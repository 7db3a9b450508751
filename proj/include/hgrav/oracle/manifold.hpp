#pragma once

#include <vector>

#include "hgrav/constants.hpp"
#include "hgrav/field.hpp"
#include "hgrav/mass_model.hpp"
#include "hgrav/oracle/radial.hpp"

namespace hgrav::oracle {

/// Matrix of z (Bohr) in the spherical basis |n l m> of one n-manifold,
/// row-major, basis ordered by l then m.
struct ManifoldMatrix {
  int n;
  int dimension;
  std::vector<double> entries;

  [[nodiscard]] double at(int row, int col) const {
    return entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(dimension) +
                   static_cast<std::size_t>(col)];
  }
  [[nodiscard]] double trace() const;
  [[nodiscard]] double asymmetry() const;  // max |A_ij - A_ji|
};

struct ShiftGroup {
  double shift;  // J
  int multiplicity;
};

inline constexpr int kMaxManifold = 4;

/// Matrix of z within the n-manifold built from finite-difference radial
/// states on `grid` (one state per l, all on the same grid).
[[nodiscard]] ManifoldMatrix manifold_dipole_matrix(int n, const RadialGrid& grid);

/// Eigenvalues of z within the n-manifold (Bohr), extrapolated over the
/// spacings h and h/2 of the default grid, ascending.
[[nodiscard]] std::vector<double> manifold_dipole_eigenvalues(int n);

/// Default grid used by degenerate_pt for the n-manifold.
[[nodiscard]] RadialGrid manifold_grid(int n);

/// Groups sorted values whose neighbours lie within 1e-10 * (max |value| + 1e-30).
[[nodiscard]] std::vector<ShiftGroup> group_shifts(const std::vector<double>& sorted_values);

/// First-order shifts of the n-manifold from diagonalizing -script_M g z in the
/// spherical basis, in J, ascending, with multiplicities.
/// Throws InvalidArgument unless 1 <= n <= kMaxManifold.
[[nodiscard]] std::vector<ShiftGroup> degenerate_pt(int n, const CompositeMasses& composites,
                                                    const FieldSpec& field,
                                                    const PhysicalConstants& constants);

}  // namespace hgrav::oracle
