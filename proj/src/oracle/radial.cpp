#include "hgrav/oracle/radial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hgrav/error.hpp"
#include "hgrav/kernels.hpp"

namespace hgrav::oracle {

RadialGrid RadialGrid::on_box(double box, std::size_t point_count) {
  if (!(box > 0.0) || point_count < 2) {
    throw InvalidArgument("radial grid: box must be positive with at least two nodes");
  }
  const double h = box / static_cast<double>(point_count + 1);
  RadialGrid grid{h, h * static_cast<double>(point_count), point_count, h};
  grid.validate();
  return grid;
}

RadialGrid RadialGrid::refined() const {
  const double h = 0.5 * spacing;
  return RadialGrid{h, r_max + h, 2 * point_count + 1, h};
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> r(point_count);
  for (std::size_t i = 0; i < point_count; ++i) r[i] = r_min + static_cast<double>(i) * spacing;
  return r;
}

void RadialGrid::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || point_count < min_points) {
    throw InvalidArgument("radial grid: need 0 < r_min < r_max and at least " +
                          std::to_string(min_points) + " nodes");
  }
  const double expected = (r_max - r_min) / static_cast<double>(point_count - 1);
  if (std::abs(expected - spacing) > 1e-9 * spacing) {
    throw InvalidArgument("radial grid: spacing inconsistent with its extent");
  }
}

SphericalState SphericalState::with_m(int m_new) const {
  if (std::abs(m_new) > l) throw InvalidArgument("spherical state: |m| must not exceed l");
  SphericalState copy = *this;
  copy.m = m_new;
  return copy;
}

SymTridiagonal radial_hamiltonian(const RadialGrid& grid, int l) {
  grid.validate();
  if (l < 0) throw InvalidArgument("radial_hamiltonian: l must be non-negative");
  const double h = grid.spacing;
  const double centrifugal = 0.5 * l * (l + 1);
  const std::vector<double> r = grid.nodes();
  SymTridiagonal t;
  t.diag.resize(grid.point_count);
  t.off.assign(grid.point_count - 1, -0.5 / (h * h));
  for (std::size_t i = 0; i < r.size(); ++i) {
    t.diag[i] = 1.0 / (h * h) - 1.0 / r[i] + centrifugal / (r[i] * r[i]);
  }
  return t;
}

namespace {

void check_request(int l, int count) {
  if (l < 0) throw InvalidArgument("radial_eigensolve: l must be non-negative");
  if (count < 1 || count > kMaxRadialCount) {
    throw InvalidArgument("radial_eigensolve: count must lie in [1, " +
                          std::to_string(kMaxRadialCount) + "]");
  }
}

SphericalState to_state(const RadialGrid& grid, int n, int l, std::vector<double> u) {
  const double norm_sq = grid.spacing * kernels::dot(u, u);
  const double scale = 1.0 / std::sqrt(norm_sq);
  // Sign: positive at the first node where the function is non-negligible.
  double peak = 0.0;
  for (double x : u) peak = std::max(peak, std::abs(x));
  const auto first = std::find_if(u.begin(), u.end(),
                                  [&](double x) { return std::abs(x) > 1e-6 * peak; });
  const double sign = (first != u.end() && *first < 0.0) ? -1.0 : 1.0;
  const std::vector<double> r = grid.nodes();
  std::vector<double> radial(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) radial[i] = sign * scale * u[i] / r[i];
  return SphericalState{n, l, 0, grid, std::move(radial)};
}

}  // namespace

std::vector<RadialEigenpair> radial_eigensolve_single(const RadialGrid& grid, int l, int count) {
  check_request(l, count);
  const SymTridiagonal t = radial_hamiltonian(grid, l);
  std::vector<RadialEigenpair> out;
  int index = 0;
  for (Eigenpair& pair : lowest_eigenpairs(t, static_cast<std::size_t>(count))) {
    const int n = l + 1 + index++;
    out.push_back({pair.value, pair.value, 0.0, to_state(grid, n, l, std::move(pair.vector))});
  }
  return out;
}

std::vector<RadialEigenpair> radial_eigensolve(const RadialGrid& grid, int l, int count) {
  std::vector<RadialEigenpair> coarse = radial_eigensolve_single(grid, l, count);
  const SymTridiagonal fine = radial_hamiltonian(grid.refined(), l);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double fine_energy = kth_eigenvalue(fine, i);
    const double extrapolated = (4.0 * fine_energy - coarse[i].raw_energy) / 3.0;
    coarse[i].energy = extrapolated;
    coarse[i].error_estimate = std::abs(extrapolated - fine_energy);
    if (coarse[i].error_estimate > kMaxDiscretizationError) {
      throw GridResolutionError("radial_eigensolve: estimated discretization error " +
                                std::to_string(coarse[i].error_estimate) + " for n = " +
                                std::to_string(coarse[i].state.n) + ", l = " + std::to_string(l));
    }
  }
  return coarse;
}

RadialGrid default_radial_grid(int l, int count) {
  const double box = 40.0 * (count + l + 1);
  return RadialGrid::on_box(box, static_cast<std::size_t>(std::lround(box * 100.0)) - 1);
}

double radial_dipole_integral(const SphericalState& a, const SphericalState& b) {
  if (!(a.grid == b.grid)) {
    throw InvalidArgument("dipole_matrix_element: states are sampled on different grids");
  }
  std::vector<double> r3 = a.grid.nodes();
  for (double& r : r3) r = r * r * r;
  return a.grid.spacing * kernels::weighted_dot(a.radial_samples, b.radial_samples, r3);
}

double angular_cos_factor(int l, int l_prime, int m) {
  if (std::abs(l - l_prime) != 1 || std::abs(m) > std::min(l, l_prime)) return 0.0;
  const int upper = std::max(l, l_prime);
  return std::sqrt(static_cast<double>(upper * upper - m * m) /
                   static_cast<double>((2 * upper + 1) * (2 * upper - 1)));
}

double dipole_matrix_element(const SphericalState& bra, const SphericalState& ket) {
  if (!(bra.grid == ket.grid)) {
    throw InvalidArgument("dipole_matrix_element: states are sampled on different grids");
  }
  if (bra.m != ket.m || std::abs(bra.l - ket.l) != 1) return 0.0;
  return angular_cos_factor(bra.l, ket.l, bra.m) * radial_dipole_integral(bra, ket);
}

}  // namespace hgrav::oracle
