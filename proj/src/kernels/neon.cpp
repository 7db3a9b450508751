// NEON kernels for aarch64. Four accumulation lanes are carried as two
// float64x2 registers so reductions match the scalar reference bit for bit.

#include <arm_neon.h>

#include "hgrav/kernels.hpp"

namespace hgrav::kernels {
namespace neon_impl {

double combine(const double (&lane)[4]) { return (lane[0] + lane[1]) + (lane[2] + lane[3]); }

void complex_multiply(std::span<cplx> data, std::span<const cplx> factors) {
  auto* d = reinterpret_cast<double*>(data.data());
  const auto* b = reinterpret_cast<const double*>(factors.data());
  const float64x2_t flip = {-1.0, 1.0};
  for (std::size_t i = 0; i < 2 * data.size(); i += 2) {
    const float64x2_t a = vld1q_f64(d + i);
    const float64x2_t f_re = vld1q_dup_f64(b + i);
    const float64x2_t f_im = vld1q_dup_f64(b + i + 1);
    const float64x2_t t1 = vmulq_f64(a, f_re);                     // ar*br, ai*br
    const float64x2_t t2 = vmulq_f64(vextq_f64(a, a, 1), f_im);    // ai*bi, ar*bi
    vst1q_f64(d + i, vaddq_f64(t1, vmulq_f64(t2, flip)));
  }
}

double sum_abs_squared(std::span<const cplx> a) {
  const auto* x = reinterpret_cast<const double*>(a.data());
  const std::size_t len = 2 * a.size();
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const float64x2_t v0 = vld1q_f64(x + i);
    const float64x2_t v1 = vld1q_f64(x + i + 2);
    lo = vaddq_f64(lo, vmulq_f64(v0, v0));
    hi = vaddq_f64(hi, vmulq_f64(v1, v1));
  }
  double lane[4];
  vst1q_f64(lane, lo);
  vst1q_f64(lane + 2, hi);
  for (; i < len; ++i) lane[i % 4] += x[i] * x[i];
  return combine(lane);
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
  const auto* x = reinterpret_cast<const double*>(a.data());
  const auto* y = reinterpret_cast<const double*>(b.data());
  const std::size_t len = 2 * a.size();
  float64x2_t s_lo = vdupq_n_f64(0.0), s_hi = vdupq_n_f64(0.0);
  float64x2_t c_lo = vdupq_n_f64(0.0), c_hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const float64x2_t a0 = vld1q_f64(x + i);
    const float64x2_t a1 = vld1q_f64(x + i + 2);
    const float64x2_t b0 = vld1q_f64(y + i);
    const float64x2_t b1 = vld1q_f64(y + i + 2);
    s_lo = vaddq_f64(s_lo, vmulq_f64(a0, b0));
    s_hi = vaddq_f64(s_hi, vmulq_f64(a1, b1));
    c_lo = vaddq_f64(c_lo, vmulq_f64(a0, vextq_f64(b0, b0, 1)));
    c_hi = vaddq_f64(c_hi, vmulq_f64(a1, vextq_f64(b1, b1, 1)));
  }
  double s[4];
  double c[4];
  vst1q_f64(s, s_lo);
  vst1q_f64(s + 2, s_hi);
  vst1q_f64(c, c_lo);
  vst1q_f64(c + 2, c_hi);
  for (; i < len; ++i) {
    s[i % 4] += x[i] * y[i];
    c[i % 4] += x[i] * y[i ^ 1];
  }
  return {combine(s), (c[0] - c[1]) + (c[2] - c[3])};
}

double dot(std::span<const double> a, std::span<const double> b) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2)));
  }
  double lane[4];
  vst1q_f64(lane, lo);
  vst1q_f64(lane + 2, hi);
  for (; i < a.size(); ++i) lane[i % 4] += a[i] * b[i];
  return combine(lane);
}

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const float64x2_t ab0 = vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    const float64x2_t ab1 = vmulq_f64(vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2));
    lo = vaddq_f64(lo, vmulq_f64(ab0, vld1q_f64(w.data() + i)));
    hi = vaddq_f64(hi, vmulq_f64(ab1, vld1q_f64(w.data() + i + 2)));
  }
  double lane[4];
  vst1q_f64(lane, lo);
  vst1q_f64(lane + 2, hi);
  for (; i < a.size(); ++i) lane[i % 4] += (a[i] * b[i]) * w[i];
  return combine(lane);
}

void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y) {
  const std::size_t n = diag.size();
  if (n < 4) {
    detail::scalar_table.tridiagonal_apply(diag, off, x, y);
    return;
  }
  auto edge = [&](std::size_t i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += off[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off[i] * x[i + 1];
    y[i] = acc;
  };
  edge(0);
  std::size_t i = 1;
  for (; i + 2 <= n - 1; i += 2) {
    float64x2_t acc = vmulq_f64(vld1q_f64(diag.data() + i), vld1q_f64(x.data() + i));
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(off.data() + i - 1), vld1q_f64(x.data() + i - 1)));
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(off.data() + i), vld1q_f64(x.data() + i + 1)));
    vst1q_f64(y.data() + i, acc);
  }
  for (; i < n; ++i) edge(i);
}

}  // namespace neon_impl

namespace detail {
const KernelTable neon_table{&neon_impl::complex_multiply, &neon_impl::sum_abs_squared,
    &neon_impl::inner_product, &neon_impl::dot, &neon_impl::weighted_dot,
    &neon_impl::tridiagonal_apply};
}  // namespace detail

}  // namespace hgrav::kernels
