#include "hgrav/oracle/manifold.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hgrav/error.hpp"

namespace hgrav::oracle {

double ManifoldMatrix::trace() const {
  double sum = 0.0;
  for (int i = 0; i < dimension; ++i) sum += at(i, i);
  return sum;
}

double ManifoldMatrix::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < dimension; ++i) {
    for (int j = 0; j < i; ++j) worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
  }
  return worst;
}

namespace {

void check_manifold(int n) {
  if (n < 1 || n > kMaxManifold) {
    throw InvalidArgument("degenerate_pt: n must lie in [1, " + std::to_string(kMaxManifold) +
                          "], got " + std::to_string(n));
  }
}

std::vector<double> eigenvalues_of(const ManifoldMatrix& z) {
  Eigen::MatrixXd dense(z.dimension, z.dimension);
  for (int i = 0; i < z.dimension; ++i) {
    for (int j = 0; j < z.dimension; ++j) dense(i, j) = z.at(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("degenerate_pt: dense eigensolver failed");
  }
  const Eigen::VectorXd values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

}  // namespace

RadialGrid manifold_grid(int n) {
  check_manifold(n);
  return default_radial_grid(0, n);
}

ManifoldMatrix manifold_dipole_matrix(int n, const RadialGrid& grid) {
  check_manifold(n);
  std::vector<SphericalState> radial;
  for (int l = 0; l < n; ++l) {
    radial.push_back(radial_eigensolve_single(grid, l, n - l).back().state);
  }

  std::vector<SphericalState> basis;
  for (int l = 0; l < n; ++l) {
    for (int m = -l; m <= l; ++m) basis.push_back(radial[static_cast<std::size_t>(l)].with_m(m));
  }

  ManifoldMatrix z{n, n * n, std::vector<double>(static_cast<std::size_t>(n * n * n * n), 0.0)};
  for (int i = 0; i < z.dimension; ++i) {
    for (int j = 0; j < z.dimension; ++j) {
      z.entries[static_cast<std::size_t>(i * z.dimension + j)] =
          dipole_matrix_element(basis[static_cast<std::size_t>(i)],
                                basis[static_cast<std::size_t>(j)]);
    }
  }
  return z;
}

std::vector<double> manifold_dipole_eigenvalues(int n) {
  const RadialGrid grid = manifold_grid(n);
  const std::vector<double> coarse = eigenvalues_of(manifold_dipole_matrix(n, grid));
  const std::vector<double> fine = eigenvalues_of(manifold_dipole_matrix(n, grid.refined()));
  std::vector<double> extrapolated(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    extrapolated[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  }
  return extrapolated;
}

std::vector<ShiftGroup> group_shifts(const std::vector<double>& sorted_values) {
  double scale = 0.0;
  for (double v : sorted_values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * (scale + 1e-30);
  std::vector<ShiftGroup> groups;
  double run_sum = 0.0;
  double previous = 0.0;
  for (double v : sorted_values) {
    if (!groups.empty() && std::abs(v - previous) <= tol) {
      ++groups.back().multiplicity;
      run_sum += v;
      groups.back().shift = run_sum / groups.back().multiplicity + 0.0;
    } else {
      groups.push_back({v + 0.0, 1});  // + 0.0 turns -0 into 0
      run_sum = v;
    }
    previous = v;
  }
  return groups;
}

std::vector<ShiftGroup> degenerate_pt(int n, const CompositeMasses& composites,
                                      const FieldSpec& field, const PhysicalConstants& constants) {
  check_manifold(n);
  field.validate();
  // Perturbation -F z with F = script_M g; eigenvalues of z are in Bohr.
  const AtomicUnitScale scale = atomic_scale(constants, composites.reduced);
  const double force = composites.asymmetry * field.magnitude;
  std::vector<double> shifts;
  for (double z : manifold_dipole_eigenvalues(n)) {
    shifts.push_back(-force * scale.length_to_si(z));
  }
  std::sort(shifts.begin(), shifts.end());
  return group_shifts(shifts);
}

}  // namespace hgrav::oracle
