// AVX2 kernels, compiled with -mavx2 and only reached after a runtime CPU check.
// No FMA: every product is rounded before it is accumulated, as in scalar.cpp.

#include <immintrin.h>

#include "hgrav/kernels.hpp"

namespace hgrav::kernels {
namespace avx2_impl {

double combine(const double (&lane)[4]) { return (lane[0] + lane[1]) + (lane[2] + lane[3]); }

void complex_multiply(std::span<cplx> data, std::span<const cplx> factors) {
  auto* d = reinterpret_cast<double*>(data.data());
  const auto* b = reinterpret_cast<const double*>(factors.data());
  const std::size_t len = 2 * data.size();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d a = _mm256_loadu_pd(d + i);
    const __m256d f = _mm256_loadu_pd(b + i);
    const __m256d f_re = _mm256_movedup_pd(f);          // br br
    const __m256d f_im = _mm256_permute_pd(f, 0b1111);  // bi bi
    const __m256d a_swapped = _mm256_permute_pd(a, 0b0101);
    const __m256d t1 = _mm256_mul_pd(a, f_re);           // ar*br, ai*br
    const __m256d t2 = _mm256_mul_pd(a_swapped, f_im);   // ai*bi, ar*bi
    _mm256_storeu_pd(d + i, _mm256_addsub_pd(t1, t2));
  }
  for (; i < len; i += 2) {
    const double ar = d[i];
    const double ai = d[i + 1];
    d[i] = ar * b[i] - ai * b[i + 1];
    d[i + 1] = ai * b[i] + ar * b[i + 1];
  }
}

double sum_abs_squared(std::span<const cplx> a) {
  const auto* x = reinterpret_cast<const double*>(a.data());
  const std::size_t len = 2 * a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < len; ++i) lane[i % 4] += x[i] * x[i];
  return combine(lane);
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
  const auto* x = reinterpret_cast<const double*>(a.data());
  const auto* y = reinterpret_cast<const double*>(b.data());
  const std::size_t len = 2 * a.size();
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d va = _mm256_loadu_pd(x + i);
    const __m256d vb = _mm256_loadu_pd(y + i);
    straight = _mm256_add_pd(straight, _mm256_mul_pd(va, vb));
    crossed = _mm256_add_pd(crossed, _mm256_mul_pd(va, _mm256_permute_pd(vb, 0b0101)));
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, straight);
  _mm256_store_pd(c, crossed);
  for (; i < len; ++i) {
    s[i % 4] += x[i] * y[i];
    c[i % 4] += x[i] * y[i ^ 1];
  }
  return {combine(s), (c[0] - c[1]) + (c[2] - c[3])};
}

double dot(std::span<const double> a, std::span<const double> b) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                           _mm256_loadu_pd(b.data() + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < a.size(); ++i) lane[i % 4] += a[i] * b[i];
  return combine(lane);
}

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(ab, _mm256_loadu_pd(w.data() + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < a.size(); ++i) lane[i % 4] += (a[i] * b[i]) * w[i];
  return combine(lane);
}

void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y) {
  const std::size_t n = diag.size();
  if (n < 6) {
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
  for (; i + 4 <= n - 1; i += 4) {
    __m256d acc = _mm256_mul_pd(_mm256_loadu_pd(diag.data() + i), _mm256_loadu_pd(x.data() + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(off.data() + i - 1),
                                           _mm256_loadu_pd(x.data() + i - 1)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(off.data() + i),
                                           _mm256_loadu_pd(x.data() + i + 1)));
    _mm256_storeu_pd(y.data() + i, acc);
  }
  for (; i < n; ++i) edge(i);
}

}  // namespace avx2_impl

namespace detail {
const KernelTable avx2_table{&avx2_impl::complex_multiply, &avx2_impl::sum_abs_squared,
    &avx2_impl::inner_product, &avx2_impl::dot, &avx2_impl::weighted_dot,
    &avx2_impl::tridiagonal_apply};
}  // namespace detail

}  // namespace hgrav::kernels
