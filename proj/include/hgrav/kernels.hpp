#pragma once

// Data-parallel inner loops shared by the propagator and the radial oracle.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant chosen once at
// runtime. Reductions accumulate into four interleaved lanes over the flat
// double view of the input and combine them as (l0 + l1) + (l2 + l3), in the
// same order on every path, so all variants return bit-identical results.

#include <complex>
#include <span>
#include <string_view>

namespace hgrav::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

/// Instruction set selected for the public entry points.
[[nodiscard]] Isa active_isa();
[[nodiscard]] std::string_view isa_name(Isa isa);
/// True when the variant for `isa` is compiled in and supported by this CPU.
[[nodiscard]] bool isa_available(Isa isa);

/// data[i] *= factors[i].
void complex_multiply(std::span<cplx> data, std::span<const cplx> factors);
/// sum |a_i|^2
[[nodiscard]] double sum_abs_squared(std::span<const cplx> a);
/// sum conj(a_i) b_i
[[nodiscard]] cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);
/// sum a_i b_i
[[nodiscard]] double dot(std::span<const double> a, std::span<const double> b);
/// sum (a_i b_i) w_i
[[nodiscard]] double weighted_dot(std::span<const double> a, std::span<const double> b,
                                  std::span<const double> w);
/// y = T x for the symmetric tridiagonal T with the given diagonal and off-diagonal.
void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y);

/// Per-ISA entry points, exposed for equivalence testing.
struct KernelTable {
  void (*complex_multiply)(std::span<cplx>, std::span<const cplx>);
  double (*sum_abs_squared)(std::span<const cplx>);
  cplx (*inner_product)(std::span<const cplx>, std::span<const cplx>);
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*weighted_dot)(std::span<const double>, std::span<const double>,
                         std::span<const double>);
  void (*tridiagonal_apply)(std::span<const double>, std::span<const double>,
                            std::span<const double>, std::span<double>);
};

/// Throws std::invalid_argument when the variant is unavailable.
[[nodiscard]] const KernelTable& table_for(Isa isa);

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace hgrav::kernels
