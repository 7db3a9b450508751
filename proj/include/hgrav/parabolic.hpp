#pragma once

#include <vector>

#include "hgrav/constants.hpp"
#include "hgrav/field.hpp"
#include "hgrav/mass_model.hpp"

namespace hgrav {

/// Parabolic quantum numbers of a hydrogen state, n = n1 + n2 + |m| + 1.
struct ParabolicState {
  int n;
  int n1;
  int n2;
  int m;

  [[nodiscard]] int k() const { return n1 - n2; }

  friend bool operator==(const ParabolicState&, const ParabolicState&) = default;
};

/// A parabolic state with its unperturbed energy and first-order field shift (J).
struct ParabolicLevel {
  ParabolicState state;
  double E0;
  double shift;

  [[nodiscard]] double energy() const { return E0 + shift; }
};

/// One k-sublevel. The shift is kept separately because for realistic
/// couplings E0 + shift rounds to E0 in double precision.
struct Sublevel {
  int k;
  double shift;   // J
  double energy;  // J
  int multiplicity;
};

/// The 2n-1 sublevels of a split n-manifold, ordered by descending k.
struct SplittingTable {
  int n;
  std::vector<Sublevel> sublevels;
  double spacing;  // J, 0 for n = 1 or vanishing coupling
};

inline constexpr int kMaxPrincipal = 50;

/// All n^2 parabolic states of the n-manifold, ordered by descending k then
/// ascending m. Throws InvalidArgument unless 1 <= n <= kMaxPrincipal.
[[nodiscard]] std::vector<ParabolicState> enumerate_levels(int n);

/// Reduced-mass Bohr energy -mu c^2 alpha^2 / (2 n^2) in J.
[[nodiscard]] double unperturbed_energy(int n, const CompositeMasses& composites,
                                        const PhysicalConstants& constants);

/// First-order shift -3 script_M g hbar n k / (2 mu alpha c) in J.
[[nodiscard]] double first_order_shift(const ParabolicState& state, const CompositeMasses& composites,
                                       const FieldSpec& field, const PhysicalConstants& constants);

[[nodiscard]] std::vector<ParabolicLevel> level_table(int n, const CompositeMasses& composites,
                                                      const FieldSpec& field,
                                                      const PhysicalConstants& constants);

[[nodiscard]] SplittingTable splitting_table(int n, const CompositeMasses& composites,
                                             const FieldSpec& field,
                                             const PhysicalConstants& constants);

}  // namespace hgrav
