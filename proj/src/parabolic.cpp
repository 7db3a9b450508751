#include "hgrav/parabolic.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hgrav/error.hpp"

namespace hgrav {

namespace {

void check_principal(int n) {
  if (n < 1 || n > kMaxPrincipal) {
    throw InvalidArgument("principal quantum number must lie in [1, " +
                          std::to_string(kMaxPrincipal) + "], got " + std::to_string(n));
  }
}

// Energy spacing between adjacent k values: 3 |script_M| g hbar n / (2 mu alpha c).
double stark_unit(const CompositeMasses& composites, const FieldSpec& field,
                  const PhysicalConstants& constants) {
  return 3.0 * composites.asymmetry * field.magnitude * constants.hbar /
         (2.0 * composites.reduced * constants.alpha * constants.c);
}

}  // namespace

std::vector<ParabolicState> enumerate_levels(int n) {
  check_principal(n);
  std::vector<ParabolicState> states;
  states.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = n - 1; k >= -(n - 1); --k) {
    for (int m = -(n - 1); m <= n - 1; ++m) {
      // n1 + n2 = n - 1 - |m| and n1 - n2 = k must have a non-negative integer solution.
      const int sum = n - 1 - std::abs(m);
      if (std::abs(k) > sum || (sum - k) % 2 != 0) continue;
      states.push_back({n, (sum + k) / 2, (sum - k) / 2, m});
    }
  }
  return states;
}

double unperturbed_energy(int n, const CompositeMasses& composites,
                          const PhysicalConstants& constants) {
  check_principal(n);
  const double mc_alpha = composites.reduced * constants.c * constants.alpha;
  return -mc_alpha * constants.c * constants.alpha / (2.0 * n * n);
}

double first_order_shift(const ParabolicState& state, const CompositeMasses& composites,
                         const FieldSpec& field, const PhysicalConstants& constants) {
  const int k = state.k();
  const double unit = stark_unit(composites, field, constants);
  if (k == 0 || unit == 0.0) return 0.0;  // never -0
  return -unit * state.n * k;
}

std::vector<ParabolicLevel> level_table(int n, const CompositeMasses& composites,
                                        const FieldSpec& field,
                                        const PhysicalConstants& constants) {
  field.validate();
  const double e0 = unperturbed_energy(n, composites, constants);
  std::vector<ParabolicLevel> levels;
  for (const auto& state : enumerate_levels(n)) {
    levels.push_back({state, e0, first_order_shift(state, composites, field, constants)});
  }
  return levels;
}

SplittingTable splitting_table(int n, const CompositeMasses& composites, const FieldSpec& field,
                               const PhysicalConstants& constants) {
  field.validate();
  const double e0 = unperturbed_energy(n, composites, constants);
  // enumerate_levels is ordered by descending k, so equal-k runs are contiguous.
  SplittingTable table{n, {}, 0.0};
  for (const auto& state : enumerate_levels(n)) {
    if (table.sublevels.empty() || table.sublevels.back().k != state.k()) {
      const double shift = first_order_shift(state, composites, field, constants);
      table.sublevels.push_back({state.k(), shift, e0 + shift, 0});
    }
    ++table.sublevels.back().multiplicity;
  }
  if (n > 1) {
    table.spacing = std::abs(stark_unit(composites, field, constants)) * n;
  }
  return table;
}

}  // namespace hgrav
