#include "hgrav/oracle/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hgrav/error.hpp"
#include "hgrav/kernels.hpp"

namespace hgrav::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_shape(const SymTridiagonal& t) {
  if (t.diag.empty() || t.off.size() + 1 != t.diag.size()) {
    throw InvalidArgument("tridiagonal: off-diagonal must have size() - 1 entries");
  }
}

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(const SymTridiagonal& t) {
  const std::size_t n = t.size();
  Bounds b{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                          (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    b.lo = std::min(b.lo, t.diag[i] - radius);
    b.hi = std::max(b.hi, t.diag[i] + radius);
  }
  const double pad = kEps * std::max(std::abs(b.lo), std::abs(b.hi)) + kEps;
  return {b.lo - pad, b.hi + pad};
}

}  // namespace

double SymTridiagonal::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double row = std::abs(diag[i]) + (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                       (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
    best = std::max(best, row);
  }
  return best;
}

std::size_t SymTridiagonal::count_below(double x) const {
  // Pivots of the LDL^T factorization of T - x I; their negatives count eigenvalues below x.
  const double tiny = kEps * kEps * (norm_inf() + 1.0);
  std::size_t negatives = 0;
  double q = diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++negatives;
    if (i + 1 == diag.size()) break;
    q = diag[i + 1] - x - off[i] * off[i] / q;
  }
  return negatives;
}

double kth_eigenvalue(const SymTridiagonal& t, std::size_t k) {
  check_shape(t);
  if (k >= t.size()) {
    throw InvalidArgument("kth_eigenvalue: index " + std::to_string(k) + " out of range");
  }
  auto [lo, hi] = gershgorin(t);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
    if (t.count_below(mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvalues_in(const SymTridiagonal& t, double lo, double hi) {
  check_shape(t);
  std::vector<double> values;
  if (!(hi > lo)) return values;
  const std::size_t first = t.count_below(lo);
  const std::size_t last = t.count_below(hi);
  for (std::size_t k = first; k < last; ++k) values.push_back(kth_eigenvalue(t, k));
  return values;
}

std::vector<double> inverse_iteration(const SymTridiagonal& t, double lambda) {
  check_shape(t);
  const std::size_t n = t.size();
  if (n == 1) return {1.0};

  // LU of T - lambda I with partial pivoting (the LAPACK gttrf layout).
  std::vector<double> lower(t.off);
  std::vector<double> d(n);
  std::vector<double> upper(t.off);
  std::vector<double> upper2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<bool> swapped(n - 1, false);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - lambda;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(lower[i])) {
      if (d[i] != 0.0) {
        const double fact = lower[i] / d[i];
        lower[i] = fact;
        d[i + 1] -= fact * upper[i];
      }
    } else {
      const double fact = d[i] / lower[i];
      d[i] = lower[i];
      lower[i] = fact;
      const double temp = upper[i];
      upper[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        upper2[i] = upper[i + 1];
        upper[i + 1] = -fact * upper[i + 1];
      }
      swapped[i] = true;
    }
  }
  const double floor = kEps * (t.norm_inf() + 1.0);
  for (double& pivot : d) {
    if (std::abs(pivot) < floor) pivot = pivot < 0.0 ? -floor : floor;
  }

  auto solve = [&](std::vector<double>& b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double temp = b[i] - lower[i] * b[i + 1];
        b[i] = b[i + 1];
        b[i + 1] = temp;
      } else {
        b[i + 1] -= lower[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - upper[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
      b[i] = (b[i] - upper[i] * b[i + 1] - upper2[i] * b[i + 2]) / d[i];
    }
  };

  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Fixed, non-degenerate start vector.
    v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  }
  for (int iter = 0; iter < 4; ++iter) {
    solve(v);
    const double scale = std::sqrt(kernels::dot(v, v));
    if (!(scale > 0.0) || !std::isfinite(scale)) {
      throw ConvergenceError("inverse iteration produced a non-finite vector");
    }
    for (double& x : v) x /= scale;
  }
  return v;
}

std::vector<Eigenpair> lowest_eigenpairs(const SymTridiagonal& t, std::size_t count) {
  check_shape(t);
  if (count > t.size()) {
    throw InvalidArgument("lowest_eigenpairs: more eigenpairs requested than the dimension");
  }
  const double bound = kResidualBound * t.norm_inf();
  std::vector<Eigenpair> pairs;
  std::vector<double> tv(t.size());
  for (std::size_t k = 0; k < count; ++k) {
    const double value = kth_eigenvalue(t, k);
    std::vector<double> v = inverse_iteration(t, value);
    kernels::tridiagonal_apply(t.diag, t.off, v, tv);
    for (std::size_t i = 0; i < tv.size(); ++i) tv[i] -= value * v[i];
    const double residual = std::sqrt(kernels::dot(tv, tv));
    if (!(residual <= bound)) {
      throw ConvergenceError("eigenpair " + std::to_string(k) + " residual " +
                             std::to_string(residual) + " exceeds certification bound");
    }
    pairs.push_back({value, std::move(v), residual});
  }
  return pairs;
}

}  // namespace hgrav::oracle
