#include "hgrav/wavepacket.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "hgrav/error.hpp"
#include "hgrav/kernels.hpp"

namespace hgrav {

namespace {

using cplx = std::complex<double>;

// In-place forward/backward FFT pair bound to one buffer. FFTW is unnormalized.
class FftPair {
public:
  explicit FftPair(std::span<cplx> buffer) {
    auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
    const int n = static_cast<int>(buffer.size());
    forward_ = fftw_plan_dft_1d(n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (forward_ == nullptr || backward_ == nullptr) {
      destroy();
      throw NumericalError("fft: planning failed");
    }
  }
  FftPair(const FftPair&) = delete;
  FftPair& operator=(const FftPair&) = delete;
  ~FftPair() { destroy(); }

  void forward() const { fftw_execute(forward_); }
  void backward() const { fftw_execute(backward_); }

private:
  void destroy() {
    if (forward_ != nullptr) fftw_destroy_plan(forward_);
    if (backward_ != nullptr) fftw_destroy_plan(backward_);
    forward_ = backward_ = nullptr;
  }

  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

void fill_half_kick(std::vector<cplx>& kick, const std::vector<double>& x,
                    const PropagationSpec& spec, double t) {
  const double factor = -0.5 * spec.dt / spec.hbar;
  for (std::size_t j = 0; j < x.size(); ++j) {
    kick[j] = std::polar(1.0, factor * spec.potential(x[j], t));
  }
}

void check_finite(const Wavefunction1D& state, std::size_t step) {
  const double n2 = state.norm_squared();
  if (!std::isfinite(n2)) {
    throw NumericalError("propagate: non-finite amplitude after step " + std::to_string(step));
  }
}

void check_edges(const Wavefunction1D& state, const char* when) {
  const double fraction = edge_fraction(state);
  if (fraction > kEdgeTolerance) {
    throw DomainError(std::string("propagate: wavefunction reaches the grid edge ") + when +
                      " (edge norm fraction " + std::to_string(fraction) + ")");
  }
}

}  // namespace

std::vector<double> Grid1D::nodes() const {
  std::vector<double> x(points);
  const double h = spacing();
  for (std::size_t j = 0; j < points; ++j) x[j] = x_min + static_cast<double>(j) * h;
  return x;
}

std::vector<double> Grid1D::wavenumbers() const {
  std::vector<double> k(points);
  const double unit = 2.0 * std::numbers::pi / length();
  const auto n = static_cast<std::ptrdiff_t>(points);
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    k[static_cast<std::size_t>(j)] = unit * static_cast<double>(j < n / 2 ? j : j - n);
  }
  return k;
}

void Grid1D::validate() const {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw InvalidArgument("grid: need finite x_min < x_max");
  }
  if (points < min_points || !std::has_single_bit(points)) {
    throw InvalidArgument("grid: point count must be a power of two >= " +
                          std::to_string(min_points));
  }
}

Wavefunction1D::Wavefunction1D(Grid1D grid, std::vector<cplx> samples)
    : grid_(grid), samples_(std::move(samples)) {
  grid_.validate();
  if (samples_.size() != grid_.points) {
    throw InvalidArgument("wavefunction: sample count does not match the grid");
  }
}

double Wavefunction1D::norm_squared() const {
  return grid_.spacing() * kernels::sum_abs_squared(samples_);
}

double Wavefunction1D::norm() const { return std::sqrt(norm_squared()); }

Wavefunction1D gaussian_packet(const Grid1D& grid, double centre, double width, double wavenumber) {
  const double amplitude = std::pow(2.0 * std::numbers::pi * width * width, -0.25);
  return Wavefunction1D::sample(grid, [&](double x) {
    const double u = x - centre;
    return amplitude * std::exp(cplx(-u * u / (4.0 * width * width), wavenumber * x));
  });
}

double edge_fraction(const Wavefunction1D& state) {
  const auto s = state.samples();
  const std::size_t band = std::min(kEdgeBand, s.size() / 2);
  const double edge = kernels::sum_abs_squared(s.first(band)) +
                      kernels::sum_abs_squared(s.last(band));
  const double total = kernels::sum_abs_squared(s);
  return total > 0.0 ? edge / total : 0.0;
}

Wavefunction1D propagate(const Wavefunction1D& state, const PropagationSpec& spec) {
  const Grid1D& grid = state.grid();
  if (spec.dt == 0.0 || !std::isfinite(spec.dt) || spec.steps == 0) {
    throw InvalidArgument("propagate: need a finite non-zero dt and at least one step");
  }
  if (!(spec.mass > 0.0) || !(spec.hbar > 0.0)) {
    throw InvalidArgument("propagate: mass and hbar must be positive");
  }
  if (!spec.potential) throw InvalidArgument("propagate: potential is not set");
  const double k_max = std::numbers::pi / grid.spacing();
  const double kinetic_max = spec.hbar * spec.hbar * k_max * k_max / (2.0 * spec.mass);
  if (!(std::abs(spec.dt) * kinetic_max / spec.hbar < std::numbers::pi)) {
    throw InvalidArgument("propagate: time step violates the spectral stability bound");
  }
  check_edges(state, "before propagation");

  Wavefunction1D psi = state;
  const std::span<cplx> data = psi.samples();
  FftPair fft(data);

  const std::vector<double> x = grid.nodes();
  const std::vector<double> k = grid.wavenumbers();
  std::vector<cplx> kinetic(grid.points);
  const double inverse_n = 1.0 / static_cast<double>(grid.points);
  for (std::size_t j = 0; j < k.size(); ++j) {
    const double energy = spec.hbar * spec.hbar * k[j] * k[j] / (2.0 * spec.mass);
    kinetic[j] = std::polar(inverse_n, -energy * spec.dt / spec.hbar);
  }

  std::vector<cplx> kick(grid.points);
  if (!spec.time_dependent) fill_half_kick(kick, x, spec, spec.t0);

  for (std::size_t step = 0; step < spec.steps; ++step) {
    if (spec.time_dependent) {
      const double t_mid = spec.t0 + (static_cast<double>(step) + 0.5) * spec.dt;
      fill_half_kick(kick, x, spec, t_mid);
    }
    kernels::complex_multiply(data, kick);
    fft.forward();
    kernels::complex_multiply(data, kinetic);
    fft.backward();
    kernels::complex_multiply(data, kick);
    if ((step + 1) % 256 == 0) check_finite(psi, step + 1);
  }
  check_finite(psi, spec.steps);
  check_edges(psi, "after propagation");
  return psi;
}

double fidelity(const Wavefunction1D& a, const Wavefunction1D& b) {
  if (!(a.grid() == b.grid())) throw InvalidArgument("fidelity: states live on different grids");
  const double na = kernels::sum_abs_squared(a.samples());
  const double nb = kernels::sum_abs_squared(b.samples());
  if (!(na > 0.0) || !(nb > 0.0)) throw InvalidArgument("fidelity: zero-norm state");
  const double overlap = std::abs(kernels::inner_product(a.samples(), b.samples()));
  return std::min(1.0, overlap / std::sqrt(na * nb));
}

double max_pointwise_error(const Wavefunction1D& a, const Wavefunction1D& b) {
  if (!(a.grid() == b.grid())) {
    throw InvalidArgument("max_pointwise_error: states live on different grids");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < a.samples().size(); ++j) {
    worst = std::max(worst, std::abs(a.samples()[j] - b.samples()[j]));
  }
  return worst;
}

double mean_position(const Wavefunction1D& state) {
  const std::vector<double> x = state.grid().nodes();
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double p = std::norm(state.samples()[j]);
    weighted += p * x[j];
    total += p;
  }
  return weighted / total;
}

double mean_momentum(const Wavefunction1D& state, double hbar) {
  std::vector<cplx> spectrum(state.samples().begin(), state.samples().end());
  FftPair fft(spectrum);
  fft.forward();
  const std::vector<double> k = state.grid().wavenumbers();
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    const double p = std::norm(spectrum[j]);
    weighted += p * k[j];
    total += p;
  }
  return hbar * weighted / total;
}

Wavefunction1D translated(const Wavefunction1D& state, double displacement) {
  Wavefunction1D out = state;
  const std::span<cplx> data = out.samples();
  FftPair fft(data);
  const std::vector<double> k = state.grid().wavenumbers();
  std::vector<cplx> phase(k.size());
  const double inverse_n = 1.0 / static_cast<double>(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) phase[j] = std::polar(inverse_n, k[j] * displacement);
  fft.forward();
  kernels::complex_multiply(data, phase);
  fft.backward();
  return out;
}

}  // namespace hgrav
