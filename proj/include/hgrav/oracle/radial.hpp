#pragma once

#include <cstddef>
#include <vector>

#include "hgrav/oracle/tridiagonal.hpp"

namespace hgrav::oracle {

/// Uniform interior nodes r_i = r_min + i * spacing of a Dirichlet problem whose
/// wavefunction vanishes one spacing outside either end. Atomic units (Bohr).
struct RadialGrid {
  double r_min;
  double r_max;
  std::size_t point_count;
  double spacing;

  static constexpr std::size_t min_points = 200;

  /// Grid on (0, box) with the given number of interior nodes.
  [[nodiscard]] static RadialGrid on_box(double box, std::size_t point_count);
  /// Same box, spacing halved (2N + 1 interior nodes).
  [[nodiscard]] RadialGrid refined() const;
  [[nodiscard]] std::vector<double> nodes() const;
  /// Throws InvalidArgument when the invariants do not hold.
  void validate() const;

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;
};

/// A hydrogen orbital |n l m> with radial samples R_nl(r_i), normalized so that
/// the trapezoidal integral of R^2 r^2 is 1 and R > 0 next to the origin.
struct SphericalState {
  int n;
  int l;
  int m;
  RadialGrid grid;
  std::vector<double> radial_samples;

  /// Same radial function with a different magnetic quantum number.
  [[nodiscard]] SphericalState with_m(int m_new) const;
};

struct RadialEigenpair {
  /// Richardson-extrapolated energy (Hartree) from spacings h and h/2.
  double energy;
  /// Energy on the requested grid alone.
  double raw_energy;
  /// |extrapolated - finer-grid energy|.
  double error_estimate;
  SphericalState state;  // sampled on the requested grid
};

inline constexpr int kMaxRadialCount = 10;
inline constexpr double kMaxDiscretizationError = 1e-5;

/// Finite-difference Hamiltonian -(1/2) d^2/dr^2 - 1/r + l(l+1)/(2 r^2) acting
/// on u = r R, as a symmetric tridiagonal matrix on the grid nodes.
[[nodiscard]] SymTridiagonal radial_hamiltonian(const RadialGrid& grid, int l);

/// Lowest `count` eigenpairs of the single-grid radial problem (no extrapolation).
[[nodiscard]] std::vector<RadialEigenpair> radial_eigensolve_single(const RadialGrid& grid, int l,
                                                                    int count);

/// Lowest `count` eigenpairs with energies extrapolated over the spacings h and
/// h/2. The i-th pair is labelled n = l + 1 + i. Throws GridResolutionError when
/// any error estimate exceeds kMaxDiscretizationError.
[[nodiscard]] std::vector<RadialEigenpair> radial_eigensolve(const RadialGrid& grid, int l, int count);

/// Default grid for the lowest `count` states of angular momentum l:
/// box 40 (count + l + 1) Bohr at 100 nodes per Bohr.
[[nodiscard]] RadialGrid default_radial_grid(int l, int count);

/// Radial integral of R_a R_b r^3 by the trapezoidal rule.
[[nodiscard]] double radial_dipole_integral(const SphericalState& a, const SphericalState& b);

/// <l m| cos(theta) |l' m>; zero unless |l - l'| = 1.
[[nodiscard]] double angular_cos_factor(int l, int l_prime, int m);

/// <bra| z |ket> in Bohr. Zero when m differs or |Δl| != 1.
/// Throws InvalidArgument when the states live on different grids.
[[nodiscard]] double dipole_matrix_element(const SphericalState& bra, const SphericalState& ket);

}  // namespace hgrav::oracle
