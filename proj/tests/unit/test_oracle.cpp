#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "hgrav/constants.hpp"
#include "hgrav/error.hpp"
#include "hgrav/oracle/manifold.hpp"
#include "hgrav/oracle/radial.hpp"
#include "hgrav/oracle/stabilization.hpp"
#include "hgrav/oracle/tridiagonal.hpp"
#include "hgrav/parabolic.hpp"

using namespace hgrav;
using namespace hgrav::oracle;

namespace {

// Analytic hydrogen radial functions in Bohr units.
double r10(double r) { return 2.0 * std::exp(-r); }
double r20(double r) { return (1.0 - r / 2.0) * std::exp(-r / 2.0) / std::sqrt(2.0); }
double r21(double r) { return r * std::exp(-r / 2.0) / (2.0 * std::sqrt(6.0)); }

template <typename F>
SphericalState analytic_state(int n, int l, int m, const RadialGrid& grid, F radial) {
  SphericalState s{n, l, m, grid, {}};
  for (double r : grid.nodes()) s.radial_samples.push_back(radial(r));
  return s;
}

}  // namespace

TEST_CASE("tridiagonal eigenvalues agree with a dense solver") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const std::size_t n = 40;
  SymTridiagonal t;
  for (std::size_t i = 0; i < n; ++i) t.diag.push_back(u(rng));
  for (std::size_t i = 0; i + 1 < n; ++i) t.off.push_back(u(rng));
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) dense(i, i) = t.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) dense(i, i + 1) = dense(i + 1, i) = t.off[i];
  const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense).eigenvalues();
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(kth_eigenvalue(t, k) == doctest::Approx(ref[static_cast<Eigen::Index>(k)]).epsilon(1e-12));
  }
  const auto pairs = lowest_eigenpairs(t, 5);
  for (const auto& p : pairs) CHECK(p.residual <= kResidualBound * t.norm_inf());
  CHECK(eigenvalues_in(t, ref[3] - 1e-9, ref[6] + 1e-9).size() == 4);
}

TEST_CASE("radial spectrum reproduces the Bohr levels") {
  SUBCASE("s states, n = 1..5") {
    const auto pairs = radial_eigensolve(default_radial_grid(0, 5), 0, 5);
    REQUIRE(pairs.size() == 5);
    for (int i = 0; i < 5; ++i) {
      const double n = i + 1;
      CHECK(pairs[i].state.n == i + 1);
      CHECK(std::abs(pairs[i].energy + 0.5 / (n * n)) <= 1e-6 * 0.5 / (n * n));
    }
  }
  SUBCASE("lowest p state is n = 2") {
    const auto pairs = radial_eigensolve(default_radial_grid(1, 1), 1, 1);
    CHECK(pairs[0].state.n == 2);
    CHECK(pairs[0].energy == doctest::Approx(-0.125).epsilon(1e-6));
  }
  SUBCASE("lowest f state is n = 4") {
    const auto pairs = radial_eigensolve(default_radial_grid(3, 1), 3, 1);
    CHECK(pairs[0].state.n == 4);
    CHECK(pairs[0].energy == doctest::Approx(-1.0 / 32.0).epsilon(1e-6));
  }
}

TEST_CASE("s-state energies decrease as the grid is refined") {
  // Holds for l = 0, where the Coulomb cusp dominates the error. For l >= 1
  // the second-order scheme converges from below instead.
  for (int l : {0}) {
    double previous = 0.0;
    for (std::size_t points : {999u, 1999u, 3999u}) {
      const auto e = radial_eigensolve_single(RadialGrid::on_box(60.0, points), l, 2);
      for (const auto& pair : e) CHECK(pair.raw_energy > -0.5 / (pair.state.n * pair.state.n));
      if (previous != 0.0) CHECK(e[1].raw_energy <= previous + 1e-12);
      previous = e[1].raw_energy;
    }
  }
}

TEST_CASE("coarse grids are refused") {
  CHECK_THROWS_AS((void)radial_eigensolve(RadialGrid::on_box(60.0, 250), 0, 3), GridResolutionError);
  CHECK_THROWS_AS((void)RadialGrid::on_box(60.0, 10).validate(), InvalidArgument);
}

TEST_CASE("radial eigenvectors match the analytic hydrogen functions") {
  const auto grid = default_radial_grid(0, 2);
  const auto pairs = radial_eigensolve(grid, 0, 2);
  const auto nodes = grid.nodes();
  double worst10 = 0.0;
  double worst20 = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    worst10 = std::max(worst10, std::abs(pairs[0].state.radial_samples[i] - r10(nodes[i])));
    worst20 = std::max(worst20, std::abs(pairs[1].state.radial_samples[i] - r20(nodes[i])));
  }
  CHECK(worst10 < 1e-3);
  CHECK(worst20 < 1e-3);
}

TEST_CASE("dipole matrix elements") {
  const auto grid = RadialGrid::on_box(60.0, 5999);

  SUBCASE("analytic orbitals: <200|z|210> = -3") {
    const auto s = analytic_state(2, 0, 0, grid, r20);
    const auto p = analytic_state(2, 1, 0, grid, r21);
    CHECK(dipole_matrix_element(s, p) == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(dipole_matrix_element(p, s) == doctest::Approx(-3.0).epsilon(1e-9));
  }
  SUBCASE("oracle orbitals reach |<200|z|210>| = 3 after extrapolation") {
    auto element = [](const RadialGrid& g) {
      const auto s = radial_eigensolve_single(g, 0, 2)[1].state;
      const auto p = radial_eigensolve_single(g, 1, 1)[0].state;
      return dipole_matrix_element(s, p);
    };
    const double coarse = element(grid);
    const double fine = element(grid.refined());
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    CHECK(std::abs(std::abs(extrapolated) - 3.0) < 1e-7);
  }
  SUBCASE("selection rules") {
    const auto g = analytic_state(1, 0, 0, grid, r10);
    CHECK(dipole_matrix_element(g, g) == 0.0);
    const auto p = analytic_state(2, 1, 0, grid, r21);
    CHECK(dipole_matrix_element(p.with_m(1), p) == 0.0);
  }
  SUBCASE("mismatched grids") {
    const auto a = analytic_state(2, 0, 0, grid, r20);
    const auto b = analytic_state(2, 1, 0, grid.refined(), r21);
    CHECK_THROWS_AS((void)dipole_matrix_element(a, b), InvalidArgument);
  }
}

TEST_CASE("angular factor") {
  CHECK(angular_cos_factor(0, 1, 0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(angular_cos_factor(1, 2, 1) == doctest::Approx(std::sqrt(3.0 / 15.0)).epsilon(1e-15));
  CHECK(angular_cos_factor(1, 3, 0) == 0.0);
}

TEST_CASE("manifold matrix is symmetric and traceless") {
  for (int n = 1; n <= kMaxManifold; ++n) {
    const auto m = manifold_dipole_matrix(n, manifold_grid(n));
    CHECK(m.dimension == n * n);
    CHECK(m.asymmetry() == 0.0);
    CHECK(std::abs(m.trace()) < 1e-12);
  }
}

TEST_CASE("manifold eigenvalues are 3/2 n k") {
  for (int n = 1; n <= kMaxManifold; ++n) {
    const auto eig = manifold_dipole_eigenvalues(n);
    std::vector<double> expected;
    for (const auto& s : enumerate_levels(n)) expected.push_back(1.5 * n * s.k());
    std::sort(expected.begin(), expected.end());
    REQUIRE(eig.size() == expected.size());
    for (std::size_t i = 0; i < eig.size(); ++i) CHECK(std::abs(eig[i] - expected[i]) < 1e-8 * n * n);
  }
}

TEST_CASE("degenerate perturbation theory") {
  const auto k = codata_defaults();
  const auto field = FieldSpec::along_z(9.8);

  SUBCASE("n = 2 gives -3aF, 0, +3aF") {
    const auto c = derive_composites(MassModel::with_asymmetry(k, k.m_e_ref));
    const double a = atomic_scale(k, c.reduced).length_bohr;
    const double f = c.asymmetry * 9.8;
    const auto groups = degenerate_pt(2, c, field, k);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].shift == doctest::Approx(-3.0 * a * f).epsilon(1e-8));
    CHECK(std::abs(groups[1].shift) < 1e-8 * 3.0 * a * f);
    CHECK(groups[2].shift == doctest::Approx(3.0 * a * f).epsilon(1e-8));
    CHECK(groups[0].multiplicity == 1);
    CHECK(groups[1].multiplicity == 2);
    CHECK(groups[2].multiplicity == 1);
  }
  SUBCASE("n = 1 has a single zero shift") {
    const auto c = derive_composites(MassModel::with_asymmetry(k, k.m_e_ref));
    const auto groups = degenerate_pt(1, c, field, k);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].shift == 0.0);
  }
  SUBCASE("no asymmetry, no shifts") {
    const auto c = derive_composites(MassModel::equivalent(k));
    const auto groups = degenerate_pt(3, c, field, k);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].shift == 0.0);
    CHECK(groups[0].multiplicity == 9);
  }
  SUBCASE("out of range") {
    const auto c = derive_composites(MassModel::equivalent(k));
    CHECK_THROWS_AS((void)degenerate_pt(kMaxManifold + 1, c, field, k), InvalidArgument);
  }
}

TEST_CASE("shift grouping tolerance") {
  const auto g = group_shifts({-1.0, -1.0 + 1e-12, 0.0, 1.0 - 1e-12, 1.0, 1.0 + 1e-3});
  REQUIRE(g.size() == 4);
  CHECK(g[0].multiplicity == 2);
  CHECK(g[2].multiplicity == 2);
}

TEST_CASE("stabilization scan") {
  SUBCASE("field off: the bound level does not move") {
    const auto pts = stabilization_scan({50.0, 100.0, 200.0}, 0.0, {-0.6, -0.4});
    CHECK(std::abs(pts[2].nearest_level - pts[1].nearest_level) < 1e-8);
  }
  SUBCASE("field on: continuum spacing falls as 1/L") {
    const auto pts = stabilization_scan({100.0, 150.0, 200.0}, 1e-3, {0.4, 0.6});
    const double ratio = pts[2].level_spacing / pts[0].level_spacing;
    CHECK(ratio == doctest::Approx(0.5).epsilon(0.2));
  }
  SUBCASE("field on: the level near -0.5 is a narrow resonance and stays put") {
    // Tunnelling out of the well at F = 1e-3 is far too slow to show up in
    // boxes of a few hundred Bohr, so this level behaves as if bound.
    const auto pts = stabilization_scan({100.0, 150.0, 200.0}, 1e-3, {-0.6, -0.4});
    CHECK(std::abs(pts[2].nearest_level - pts[0].nearest_level) < 1e-6);
    CHECK(pts[2].level_spacing / pts[0].level_spacing > 0.6);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS((void)stabilization_scan({100.0, 200.0}, 1e-3, {0.4, 0.6}), InvalidArgument);
    CHECK_THROWS_AS((void)stabilization_scan({100.0, 100.0, 200.0}, 1e-3, {0.4, 0.6}), InvalidArgument);
    CHECK_THROWS_AS((void)stabilization_scan({50.0, 100.0, 200.0}, 0.0, {-0.3, -0.2}), NumericalError);
    CHECK_THROWS_AS((void)stabilization_scan({50.0, 100.0, 200.0}, 0.0, {0.2, -0.2}), InvalidArgument);
  }
}
