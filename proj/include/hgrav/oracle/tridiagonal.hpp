#pragma once

#include <cstddef>
#include <vector>

namespace hgrav::oracle {

/// Real symmetric tridiagonal matrix; off[i] couples rows i and i + 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  [[nodiscard]] std::size_t size() const { return diag.size(); }
  /// Maximum absolute row sum.
  [[nodiscard]] double norm_inf() const;
  /// Number of eigenvalues strictly below x (Sturm sequence count).
  [[nodiscard]] std::size_t count_below(double x) const;
};

struct Eigenpair {
  double value;
  std::vector<double> vector;  // unit 2-norm
  double residual;             // ||T v - value v||_2
};

/// Eigenvalue number k (0-based, ascending), by bisection to full precision.
[[nodiscard]] double kth_eigenvalue(const SymTridiagonal& t, std::size_t k);

/// All eigenvalues in [lo, hi), ascending.
[[nodiscard]] std::vector<double> eigenvalues_in(const SymTridiagonal& t, double lo, double hi);

/// Unit eigenvector for an accurate eigenvalue, by inverse iteration.
[[nodiscard]] std::vector<double> inverse_iteration(const SymTridiagonal& t, double lambda);

/// The `count` lowest eigenpairs. Each pair is certified to satisfy
/// residual <= 1e-10 * norm_inf(); throws ConvergenceError otherwise.
[[nodiscard]] std::vector<Eigenpair> lowest_eigenpairs(const SymTridiagonal& t, std::size_t count);

inline constexpr double kResidualBound = 1e-10;

}  // namespace hgrav::oracle
