#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "stoikit/error.hpp"
#include "stoikit/fft.hpp"
#include "stoikit/wav.hpp"

namespace stoikit {

enum class WindowKind { hamming, hann };

/// STFT framing parameters. fft_size must be a power of two >= window_len.
struct StftConfig {
  int window_len = 512;
  int hop = 256;
  int fft_size = 512;
  WindowKind window_kind = WindowKind::hamming;

  void validate() const {
    if (hop <= 0 || window_len <= 0 || hop > window_len)
      throw InvalidConfig("stft: need 0 < hop <= window_len");
    if (fft_size < window_len || !is_power_of_two(static_cast<size_t>(fft_size)))
      throw InvalidConfig("stft: fft_size must be a power of two >= window_len");
  }
};

// Symmetric windows, N-1 denominator convention.
inline std::vector<double> make_window(WindowKind kind, int n) {
  std::vector<double> w(static_cast<size_t>(n));
  const double two_pi = 6.283185307179586476925286766559;
  for (int i = 0; i < n; ++i) {
    double c = std::cos(two_pi * i / (n - 1));
    w[static_cast<size_t>(i)] =
        kind == WindowKind::hamming ? 0.54 - 0.46 * c : 0.5 - 0.5 * c;
  }
  return w;
}

inline size_t frame_count(size_t len, int window_len, int hop) {
  if (len < static_cast<size_t>(window_len)) return 0;
  return (len - static_cast<size_t>(window_len)) / static_cast<size_t>(hop) + 1;
}

/// T x K complex STFT frames, K = fft_size/2 + 1.
struct ComplexSpectrogram {
  std::vector<std::vector<std::complex<double>>> frames;
  StftConfig config;
  int source_rate = 0;

  size_t num_frames() const { return frames.size(); }
  size_t num_bins() const { return frames.empty() ? 0 : frames[0].size(); }
};

/// T x F non-negative real magnitude matrix (row-major per frame).
struct Spectrogram {
  std::vector<double> data;
  size_t num_frames = 0;
  size_t num_bins = 0;

  double& at(size_t t, size_t f) { return data[t * num_bins + f]; }
  double at(size_t t, size_t f) const { return data[t * num_bins + f]; }
};

inline ComplexSpectrogram stft(const Waveform& w, const StftConfig& cfg) {
  cfg.validate();
  if (w.size() < static_cast<size_t>(cfg.window_len))
    throw TooShort("stft: signal shorter than one window");
  const std::vector<double> win = make_window(cfg.window_kind, cfg.window_len);
  const size_t T = frame_count(w.size(), cfg.window_len, cfg.hop);
  ComplexSpectrogram out;
  out.config = cfg;
  out.source_rate = w.sample_rate;
  out.frames.resize(T);
  std::vector<double> frame(static_cast<size_t>(cfg.window_len));
  for (size_t t = 0; t < T; ++t) {
    const size_t off = t * static_cast<size_t>(cfg.hop);
    for (int i = 0; i < cfg.window_len; ++i)
      frame[static_cast<size_t>(i)] =
          w.samples[off + static_cast<size_t>(i)] * win[static_cast<size_t>(i)];
    out.frames[t] = rfft(frame, static_cast<size_t>(cfg.fft_size));
  }
  return out;
}

// Weighted overlap-add with synthesis window equal to the analysis window,
// normalized by the accumulated squared window. Exact wherever the window
// sum is nonzero.
inline Waveform istft(const ComplexSpectrogram& c) {
  const StftConfig& cfg = c.config;
  cfg.validate();
  if (cfg.hop * 2 > cfg.window_len)
    throw InconsistentConfig("istft: requires overlap >= 50%");
  const size_t K = static_cast<size_t>(cfg.fft_size) / 2 + 1;
  for (const auto& f : c.frames)
    if (f.size() != K) throw InconsistentConfig("istft: bad bin count");

  const std::vector<double> win = make_window(cfg.window_kind, cfg.window_len);
  const size_t T = c.frames.size();
  const size_t n =
      T == 0 ? 0
             : (T - 1) * static_cast<size_t>(cfg.hop) + static_cast<size_t>(cfg.window_len);
  Waveform out;
  out.sample_rate = c.source_rate;
  out.samples.assign(n, 0.0);
  std::vector<double> denom(n, 0.0);
  for (size_t t = 0; t < T; ++t) {
    std::vector<double> frame = irfft(c.frames[t], static_cast<size_t>(cfg.fft_size));
    const size_t off = t * static_cast<size_t>(cfg.hop);
    for (int i = 0; i < cfg.window_len; ++i) {
      out.samples[off + static_cast<size_t>(i)] +=
          frame[static_cast<size_t>(i)] * win[static_cast<size_t>(i)];
      denom[off + static_cast<size_t>(i)] +=
          win[static_cast<size_t>(i)] * win[static_cast<size_t>(i)];
    }
  }
  for (size_t i = 0; i < n; ++i)
    out.samples[i] = denom[i] > 1e-12 ? out.samples[i] / denom[i] : 0.0;
  return out;
}

inline Spectrogram magnitude(const ComplexSpectrogram& c) {
  Spectrogram s;
  s.num_frames = c.num_frames();
  s.num_bins = c.num_bins();
  s.data.resize(s.num_frames * s.num_bins);
  for (size_t t = 0; t < s.num_frames; ++t)
    for (size_t k = 0; k < s.num_bins; ++k)
      s.data[t * s.num_bins + k] = std::abs(c.frames[t][k]);
  return s;
}

enum class FeatureScale { linear, log1p };

/// Model input: 257-bin magnitude spectrogram (512-point STFT, 32 ms Hamming
/// window, 16 ms hop at 16 kHz). Linear magnitude by default.
inline Spectrogram feature_spectrogram(const Waveform& w,
                                       FeatureScale scale = FeatureScale::linear) {
  if (w.sample_rate != 16000)
    throw WrongRate("feature_spectrogram: expects 16 kHz input");
  StftConfig cfg;
  cfg.window_len = 512;
  cfg.hop = 256;
  cfg.fft_size = 512;
  cfg.window_kind = WindowKind::hamming;
  if (w.size() < static_cast<size_t>(cfg.window_len))
    throw TooShort("feature_spectrogram: signal shorter than one window");
  Spectrogram s = magnitude(stft(w, cfg));
  if (scale == FeatureScale::log1p)
    for (double& v : s.data) v = std::log1p(v);
  return s;
}

}  // namespace stoikit
