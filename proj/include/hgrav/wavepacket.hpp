#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hgrav {

/// Periodic grid x_j = x_min + j (x_max - x_min) / points, j < points.
struct Grid1D {
  double x_min;
  double x_max;
  std::size_t points;

  static constexpr std::size_t min_points = 256;

  [[nodiscard]] double spacing() const { return (x_max - x_min) / static_cast<double>(points); }
  [[nodiscard]] double length() const { return x_max - x_min; }
  [[nodiscard]] std::vector<double> nodes() const;
  /// Angular wavenumbers in FFT order.
  [[nodiscard]] std::vector<double> wavenumbers() const;
  /// Throws InvalidArgument unless points is a power of two >= min_points.
  void validate() const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

class Wavefunction1D {
public:
  using cplx = std::complex<double>;

  Wavefunction1D(Grid1D grid, std::vector<cplx> samples);

  template <typename F>
  [[nodiscard]] static Wavefunction1D sample(const Grid1D& grid, F&& amplitude) {
    grid.validate();
    std::vector<cplx> values(grid.points);
    const std::vector<double> x = grid.nodes();
    for (std::size_t j = 0; j < x.size(); ++j) values[j] = amplitude(x[j]);
    return Wavefunction1D(grid, std::move(values));
  }

  [[nodiscard]] const Grid1D& grid() const { return grid_; }
  [[nodiscard]] std::span<const cplx> samples() const { return samples_; }
  [[nodiscard]] std::span<cplx> samples() { return samples_; }

  /// Trapezoidal (periodic) integral of |psi|^2.
  [[nodiscard]] double norm_squared() const;
  [[nodiscard]] double norm() const;

private:
  Grid1D grid_;
  std::vector<cplx> samples_;
};

/// Normalized Gaussian packet (2 pi w^2)^(-1/4) exp(-(x - x0)^2 / (4 w^2) + i k0 x).
[[nodiscard]] Wavefunction1D gaussian_packet(const Grid1D& grid, double centre, double width,
                                             double wavenumber);

struct PropagationSpec {
  std::function<double(double x, double t)> potential;
  /// When false the potential is evaluated once, at t0.
  bool time_dependent = false;
  double mass = 1.0;
  double dt = 0.0;
  std::size_t steps = 0;
  double hbar = 1.0;
  double t0 = 0.0;
};

/// Strang-split evolution exp(-iV dt/2) exp(-iT dt) exp(-iV dt/2) per step,
/// with the kinetic factor applied spectrally and V sampled at the midpoint of
/// each step. A negative dt runs backwards in time.
///
/// Throws InvalidArgument when dt = 0, steps = 0 or |dt| E_max / hbar >= pi
/// (E_max the largest kinetic energy on the grid), DomainError when the packet
/// carries more than kEdgeTolerance of its norm within 8 grid widths of either
/// edge, and NumericalError when the state becomes non-finite.
[[nodiscard]] Wavefunction1D propagate(const Wavefunction1D& state, const PropagationSpec& spec);

inline constexpr double kEdgeTolerance = 1e-10;
inline constexpr std::size_t kEdgeBand = 8;

/// Fraction of the norm within kEdgeBand grid widths of either edge.
[[nodiscard]] double edge_fraction(const Wavefunction1D& state);

/// |<a|b>| / (|a| |b|). Throws InvalidArgument for different grids or a zero norm.
[[nodiscard]] double fidelity(const Wavefunction1D& a, const Wavefunction1D& b);

/// max_j |a_j - b_j|
[[nodiscard]] double max_pointwise_error(const Wavefunction1D& a, const Wavefunction1D& b);

[[nodiscard]] double mean_position(const Wavefunction1D& state);
[[nodiscard]] double mean_momentum(const Wavefunction1D& state, double hbar = 1.0);

/// psi(x + displacement) by band-limited (Fourier) interpolation.
[[nodiscard]] Wavefunction1D translated(const Wavefunction1D& state, double displacement);

}  // namespace hgrav
