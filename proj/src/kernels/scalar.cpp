// Reference kernels. The SIMD variants must reproduce these bit for bit, so
// the lane structure here is part of the contract (see kernels.hpp).

#include "hgrav/kernels.hpp"

namespace hgrav::kernels {
namespace scalar_impl {

double combine(const double (&lane)[4]) { return (lane[0] + lane[1]) + (lane[2] + lane[3]); }

void complex_multiply(std::span<cplx> data, std::span<const cplx> factors) {
  auto* d = reinterpret_cast<double*>(data.data());
  const auto* b = reinterpret_cast<const double*>(factors.data());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double ar = d[2 * i];
    const double ai = d[2 * i + 1];
    const double br = b[2 * i];
    const double bi = b[2 * i + 1];
    d[2 * i] = ar * br - ai * bi;
    d[2 * i + 1] = ai * br + ar * bi;
  }
}

double sum_abs_squared(std::span<const cplx> a) {
  const auto* x = reinterpret_cast<const double*>(a.data());
  const std::size_t len = 2 * a.size();
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < len; ++i) {
    lane[i % 4] += x[i] * x[i];
  }
  return combine(lane);
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
  const auto* x = reinterpret_cast<const double*>(a.data());
  const auto* y = reinterpret_cast<const double*>(b.data());
  const std::size_t len = 2 * a.size();
  double straight[4] = {0.0, 0.0, 0.0, 0.0};
  double crossed[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < len; ++i) {
    straight[i % 4] += x[i] * y[i];
    crossed[i % 4] += x[i] * y[i ^ 1];
  }
  return {combine(straight), (crossed[0] - crossed[1]) + (crossed[2] - crossed[3])};
}

double dot(std::span<const double> a, std::span<const double> b) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    lane[i % 4] += a[i] * b[i];
  }
  return combine(lane);
}

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    lane[i % 4] += (a[i] * b[i]) * w[i];
  }
  return combine(lane);
}

void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y) {
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += off[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off[i] * x[i + 1];
    y[i] = acc;
  }
}

}  // namespace scalar_impl

namespace detail {
const KernelTable scalar_table{&scalar_impl::complex_multiply, &scalar_impl::sum_abs_squared,
    &scalar_impl::inner_product, &scalar_impl::dot, &scalar_impl::weighted_dot,
    &scalar_impl::tridiagonal_apply};
}  // namespace detail

}  // namespace hgrav::kernels
