#include <cassert>
#include <stdexcept>

#include "hgrav/kernels.hpp"

namespace hgrav::kernels {

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2: return detail::avx2_table;
#endif
#if defined(__aarch64__)
    case Isa::neon: return detail::neon_table;
#endif
    default: return detail::scalar_table;
  }
}

namespace {

Isa select_isa() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

const KernelTable& active() {
  static const KernelTable& table = table_for(select_isa());
  return table;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

void complex_multiply(std::span<cplx> data, std::span<const cplx> factors) {
  assert(data.size() == factors.size());
  active().complex_multiply(data, factors);
}

double sum_abs_squared(std::span<const cplx> a) { return active().sum_abs_squared(a); }

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
  assert(a.size() == b.size());
  return active().inner_product(a, b);
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a, b);
}

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w) {
  assert(a.size() == b.size() && a.size() == w.size());
  return active().weighted_dot(a, b, w);
}

void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y) {
  assert(x.size() == diag.size() && y.size() == diag.size());
  assert(diag.empty() || off.size() + 1 == diag.size());
  active().tridiagonal_apply(diag, off, x, y);
}

}  // namespace hgrav::kernels
