#pragma once

#include <complex>
#include <span>
#include <vector>

namespace evoform {

// In-place radix-2 complex FFT; n must be a power of two.  sign = -1 forward,
// +1 inverse (unscaled).
void fft(std::span<std::complex<double>> data, int sign);

bool is_power_of_two(int n);

// Real trigonometric interpolant of 2*pi-periodic samples on the uniform grid
// t_j = 2*pi*j/N:
//
//   f(t) = a_0 + sum_{k=1}^{N/2} a_k cos(k t) + b_k sin(k t)
//
// Construction is exact interpolation (FFT); evaluation anywhere, spectral
// differentiation and antidifferentiation happen in coefficient space.
class TrigSeries {
  public:
    TrigSeries() = default;

    // samples.size() must be a power of two >= 4.
    static TrigSeries fromSamples(std::span<const double> samples);

    double value(double t) const;
    double derivative(double t) const;

    TrigSeries derivativeSeries() const;

    double mean() const { return cos_.empty() ? 0.0 : cos_[0]; }
    double integralOverPeriod() const;

    // F(t) = integral of f from 0 to t (not periodic unless mean() == 0).
    double cumulative(double t) const;

    // Energy in the top quartile of wavenumbers over total energy; the
    // resolution diagnostic for "is this interpolant converged".
    double tailEnergyRatio() const;

    // Values on the uniform m-grid (m a power of two >= source size) via a
    // zero-padded inverse FFT; much faster than m separate evaluations.
    std::vector<double> gridValues(int m) const;

    int sourceSamples() const { return n_; }
    int maxWavenumber() const { return n_ / 2; }

    double maxAbsOnGrid(int m) const;

  private:
    std::vector<double> cos_, sin_;  // index k = 0 .. N/2
    int n_ = 0;
};

}  // namespace evoform
