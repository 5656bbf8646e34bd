#pragma once

#include <cmath>
#include <vector>

#include "stoikit/error.hpp"
#include "stoikit/wav.hpp"

namespace stoikit {

namespace detail {

// Kaiser-windowed sinc lowpass for rational L/M resampling, designed at the
// upsampled rate. Delay (N-1)/2 is an integer (N odd) so the output can be
// time-aligned with the input.
struct RationalResampler {
  int up;
  int down;
  std::vector<double> taps;

  RationalResampler(int L, int M, double rate_in, double pass_hz, double stop_hz,
                    double atten_db) : up(L), down(M) {
    const double pi = 3.14159265358979323846;
    const double rate_up = rate_in * L;
    const double delta_w = 2.0 * pi * (stop_hz - pass_hz) / rate_up;
    const double beta = atten_db > 50.0 ? 0.1102 * (atten_db - 8.7)
                        : atten_db >= 21.0
                            ? 0.5842 * std::pow(atten_db - 21.0, 0.4) +
                                  0.07886 * (atten_db - 21.0)
                            : 0.0;
    size_t n = static_cast<size_t>(std::ceil((atten_db - 7.95) / (2.285 * delta_w))) + 1;
    if (n % 2 == 0) ++n;  // odd length -> integer group delay
    const double wc = 2.0 * pi * 0.5 * (pass_hz + stop_hz) / rate_up;
    const double half = static_cast<double>(n - 1) / 2.0;
    const double i0b = std::cyl_bessel_i(0.0, beta);
    taps.resize(n);
    for (size_t i = 0; i < n; ++i) {
      const double m = static_cast<double>(i) - half;
      const double sinc = m == 0.0 ? wc / pi : std::sin(wc * m) / (pi * m);
      const double r = m / half;
      const double win = std::cyl_bessel_i(0.0, beta * std::sqrt(1.0 - r * r)) / i0b;
      taps[i] = static_cast<double>(L) * sinc * win;
    }
  }

  std::vector<double> apply(const std::vector<double>& x) const {
    const long long n_in = static_cast<long long>(x.size());
    const long long n_out = n_in * up / down;
    const long long delay = static_cast<long long>(taps.size() - 1) / 2;
    const long long n_taps = static_cast<long long>(taps.size());
    std::vector<double> y(static_cast<size_t>(n_out), 0.0);
    for (long long i = 0; i < n_out; ++i) {
      const long long p = i * down + delay;
      // k = p - up*q must land inside the tap array
      long long q_lo = (p - n_taps + 1 + up - 1) / up;
      if (q_lo < 0) q_lo = 0;
      long long q_hi = p / up;
      if (q_hi > n_in - 1) q_hi = n_in - 1;
      double acc = 0.0;
      for (long long q = q_lo; q <= q_hi; ++q) {
        const long long k = p - up * q;
        acc += taps[static_cast<size_t>(k)] * x[static_cast<size_t>(q)];
      }
      y[static_cast<size_t>(i)] = acc;
    }
    return y;
  }
};

inline const RationalResampler& resampler_16k_to_10k() {
  static const RationalResampler r(5, 8, 16000.0, 4500.0, 5000.0, 60.0);
  return r;
}

}  // namespace detail

/// 16 kHz -> 10 kHz polyphase resampling (5/8, Kaiser-windowed sinc,
/// stopband >= 60 dB, passband edge 4.5 kHz, delay-compensated).
inline Waveform resample_16k_to_10k(const Waveform& w) {
  if (w.sample_rate != 16000)
    throw WrongRate("resample_16k_to_10k: input must be 16 kHz");
  Waveform out;
  out.sample_rate = 10000;
  out.samples = detail::resampler_16k_to_10k().apply(w.samples);
  return out;
}

}  // namespace stoikit
