#include "evoform/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evoform/errors.hpp"

namespace evoform {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft(std::span<std::complex<double>> data, int sign) {
    const std::size_t n = data.size();
    if (n <= 1) return;

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

TrigSeries TrigSeries::fromSamples(std::span<const double> samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 4 || !is_power_of_two(n)) {
        throw Error("TrigSeries: sample count must be a power of two >= 4");
    }
    TrigSeries s;
    s.n_ = n;
    std::vector<std::complex<double>> buf(samples.begin(), samples.end());
    fft(buf, -1);
    const int half = n / 2;
    s.cos_.assign(half + 1, 0.0);
    s.sin_.assign(half + 1, 0.0);
    s.cos_[0] = buf[0].real() / n;
    for (int k = 1; k < half; ++k) {
        s.cos_[k] = 2.0 * buf[k].real() / n;
        s.sin_[k] = -2.0 * buf[k].imag() / n;
    }
    s.cos_[half] = buf[half].real() / n;
    s.sin_[half] = 0.0;

    // Coefficients at the rounding floor are pure FFT noise; differentiating
    // amplifies them by k^2 and k^3, so drop them.  Genuine content of an
    // unresolved sampling sits far above this threshold.
    double maxAbs = 0.0;
    for (int k = 0; k <= half; ++k) {
        maxAbs = std::max({maxAbs, std::abs(s.cos_[k]), std::abs(s.sin_[k])});
    }
    const double floor = 1e-14 * maxAbs;
    for (int k = 0; k <= half; ++k) {
        if (std::abs(s.cos_[k]) < floor) s.cos_[k] = 0.0;
        if (std::abs(s.sin_[k]) < floor) s.sin_[k] = 0.0;
    }
    return s;
}

double TrigSeries::value(double t) const {
    // Incremental rotation with periodic resync keeps the O(N) sum accurate.
    const int half = n_ / 2;
    double acc = cos_[0];
    double ck = 1.0, sk = 0.0;
    const double c1 = std::cos(t), s1 = std::sin(t);
    for (int k = 1; k <= half; ++k) {
        if ((k & 255) == 0) {
            ck = std::cos(k * t);
            sk = std::sin(k * t);
        } else {
            const double cn = ck * c1 - sk * s1;
            sk = sk * c1 + ck * s1;
            ck = cn;
        }
        acc += cos_[k] * ck + sin_[k] * sk;
    }
    return acc;
}

double TrigSeries::derivative(double t) const {
    const int half = n_ / 2;
    double acc = 0.0;
    double ck = 1.0, sk = 0.0;
    const double c1 = std::cos(t), s1 = std::sin(t);
    for (int k = 1; k <= half; ++k) {
        if ((k & 255) == 0) {
            ck = std::cos(k * t);
            sk = std::sin(k * t);
        } else {
            const double cn = ck * c1 - sk * s1;
            sk = sk * c1 + ck * s1;
            ck = cn;
        }
        acc += k * (sin_[k] * ck - cos_[k] * sk);
    }
    return acc;
}

TrigSeries TrigSeries::derivativeSeries() const {
    TrigSeries d;
    d.n_ = n_;
    const int half = n_ / 2;
    d.cos_.assign(half + 1, 0.0);
    d.sin_.assign(half + 1, 0.0);
    for (int k = 1; k <= half; ++k) {
        d.cos_[k] = k * sin_[k];
        d.sin_[k] = -k * cos_[k];
    }
    return d;
}

double TrigSeries::integralOverPeriod() const { return kTwoPi * mean(); }

double TrigSeries::cumulative(double t) const {
    const int half = n_ / 2;
    double acc = cos_[0] * t;
    double ck = 1.0, sk = 0.0;
    const double c1 = std::cos(t), s1 = std::sin(t);
    for (int k = 1; k <= half; ++k) {
        if ((k & 255) == 0) {
            ck = std::cos(k * t);
            sk = std::sin(k * t);
        } else {
            const double cn = ck * c1 - sk * s1;
            sk = sk * c1 + ck * s1;
            ck = cn;
        }
        acc += (cos_[k] * sk - sin_[k] * (ck - 1.0)) / k;
    }
    return acc;
}

double TrigSeries::tailEnergyRatio() const {
    const int half = n_ / 2;
    double total = 0.0, tail = 0.0;
    const int cut = (3 * half) / 4;
    for (int k = 0; k <= half; ++k) {
        const double e = cos_[k] * cos_[k] + sin_[k] * sin_[k];
        total += e;
        if (k >= cut) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

std::vector<double> TrigSeries::gridValues(int m) const {
    if (m < n_ || !is_power_of_two(m)) {
        throw Error("TrigSeries::gridValues: m must be a power of two >= source size");
    }
    const int half = n_ / 2;
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(m), {0.0, 0.0});
    buf[0] = {cos_[0], 0.0};
    for (int k = 1; k <= half; ++k) {
        const std::complex<double> ck(0.5 * cos_[k], -0.5 * sin_[k]);
        if (k == m - k) {
            buf[k] = {cos_[k], 0.0};  // shared Nyquist slot (m == n only)
        } else {
            buf[k] += ck;
            buf[m - k] += std::conj(ck);
        }
    }
    fft(buf, +1);
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) out[j] = buf[j].real();
    return out;
}

double TrigSeries::maxAbsOnGrid(int m) const {
    double best = 0.0;
    for (double v : gridValues(m)) best = std::max(best, std::abs(v));
    return best;
}

}  // namespace evoform
