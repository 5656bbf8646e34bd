#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "stoikit/error.hpp"
#include "stoikit/resample.hpp"
#include "stoikit/signal.hpp"

namespace stoikit {

// Fixed constants of the intrusive intelligibility measure. Not user-tunable:
// labels must be reproducible across corpora.
struct StoiConfig {
  int internal_rate = 10000;
  int vad_frame = 256;
  int vad_hop = 128;
  double dyn_range_db = 40.0;
  int num_bands = 15;
  double first_center_hz = 150.0;
  int seg_frames = 30;
  double clip_beta_db = -15.0;
  StftConfig stft{256, 128, 512, WindowKind::hann};
};

struct StoiScore {
  double value = 0.0;
};

/// One-third octave band membership: bin indices per band plus center
/// frequencies. Bands are half-open adjacent intervals, so each bin belongs
/// to at most one band.
struct BandMatrix {
  std::vector<std::vector<int>> bins;  // per band
  std::vector<double> centers;
};

inline BandMatrix third_octave_band_matrix(const StoiConfig& cfg = {}) {
  BandMatrix b;
  b.bins.resize(static_cast<size_t>(cfg.num_bands));
  b.centers.resize(static_cast<size_t>(cfg.num_bands));
  const int num_bins = cfg.stft.fft_size / 2 + 1;
  const double bin_hz =
      static_cast<double>(cfg.internal_rate) / cfg.stft.fft_size;
  const double half_band = std::pow(2.0, 1.0 / 6.0);
  for (int j = 0; j < cfg.num_bands; ++j) {
    const double center = cfg.first_center_hz * std::pow(2.0, j / 3.0);
    b.centers[static_cast<size_t>(j)] = center;
    const double lo = center / half_band;
    const double hi = center * half_band;
    for (int k = 0; k < num_bins; ++k) {
      const double f = k * bin_hz;
      if (f >= lo && f < hi) b.bins[static_cast<size_t>(j)].push_back(k);
    }
  }
  return b;
}

/// Band envelopes X_j(m) = sqrt(sum of |X(k,m)|^2 over bins k of band j).
inline std::vector<std::vector<double>> band_envelopes(
    const ComplexSpectrogram& c, const BandMatrix& b) {
  const size_t T = c.num_frames();
  std::vector<std::vector<double>> env(T, std::vector<double>(b.bins.size(), 0.0));
  for (size_t t = 0; t < T; ++t) {
    for (size_t j = 0; j < b.bins.size(); ++j) {
      double acc = 0.0;
      for (int k : b.bins[j]) {
        const double m = std::abs(c.frames[t][static_cast<size_t>(k)]);
        acc += m * m;
      }
      env[t][j] = std::sqrt(acc);
    }
  }
  return env;
}

// Energy-based voice activity: keep frames whose windowed energy is within
// dyn_range_db of the loudest clean frame, then overlap-add the survivors.
// The clean signal decides the mask; the same mask is applied to both.
inline std::pair<Waveform, Waveform> remove_silent_frames(
    const Waveform& clean, const Waveform& degraded, const StoiConfig& cfg = {}) {
  if (clean.size() != degraded.size())
    throw LengthMismatch("remove_silent_frames: length mismatch");
  const int frame = cfg.vad_frame;
  const int hop = cfg.vad_hop;
  const std::vector<double> win = make_window(WindowKind::hann, frame);
  const size_t T = frame_count(clean.size(), frame, hop);

  std::vector<double> energy_db(T);
  double max_db = -std::numeric_limits<double>::infinity();
  for (size_t t = 0; t < T; ++t) {
    double e = 0.0;
    const size_t off = t * static_cast<size_t>(hop);
    for (int i = 0; i < frame; ++i) {
      const double v = clean.samples[off + static_cast<size_t>(i)] *
                       win[static_cast<size_t>(i)];
      e += v * v;
    }
    energy_db[t] = e > 0.0 ? 10.0 * std::log10(e)
                           : -std::numeric_limits<double>::infinity();
    if (energy_db[t] > max_db) max_db = energy_db[t];
  }
  std::vector<size_t> kept;
  for (size_t t = 0; t < T; ++t)
    if (energy_db[t] > max_db - cfg.dyn_range_db) kept.push_back(t);
  if (kept.empty() || !std::isfinite(max_db))
    throw AllSilent("remove_silent_frames: no frame above the silence floor");

  const size_t n_out =
      (kept.size() - 1) * static_cast<size_t>(hop) + static_cast<size_t>(frame);
  Waveform out_c, out_d;
  out_c.sample_rate = clean.sample_rate;
  out_d.sample_rate = degraded.sample_rate;
  out_c.samples.assign(n_out, 0.0);
  out_d.samples.assign(n_out, 0.0);
  std::vector<double> denom(n_out, 0.0);
  for (size_t i = 0; i < kept.size(); ++i) {
    const size_t src = kept[i] * static_cast<size_t>(hop);
    const size_t dst = i * static_cast<size_t>(hop);
    for (int k = 0; k < frame; ++k) {
      const double w = win[static_cast<size_t>(k)];
      out_c.samples[dst + static_cast<size_t>(k)] +=
          w * clean.samples[src + static_cast<size_t>(k)];
      out_d.samples[dst + static_cast<size_t>(k)] +=
          w * degraded.samples[src + static_cast<size_t>(k)];
      denom[dst + static_cast<size_t>(k)] += w;
    }
  }
  for (size_t i = 0; i < n_out; ++i) {
    if (denom[i] > 1e-12) {
      out_c.samples[i] /= denom[i];
      out_d.samples[i] /= denom[i];
    } else {
      out_c.samples[i] = 0.0;
      out_d.samples[i] = 0.0;
    }
  }
  return {std::move(out_c), std::move(out_d)};
}

// Per-segment comparison: gain-normalize the degraded envelope to the clean
// one, clip, then take the sample correlation. Degenerate segments score 0.
inline double intermediate_intelligibility(const std::vector<double>& x,
                                           const std::vector<double>& y,
                                           double beta_db) {
  const size_t n = x.size();
  double nx = 0.0, ny = 0.0;
  for (size_t i = 0; i < n; ++i) {
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  nx = std::sqrt(nx);
  ny = std::sqrt(ny);
  const double gain = ny > 0.0 ? nx / ny : 0.0;
  const double clip_factor = 1.0 + std::pow(10.0, -beta_db / 20.0);

  std::vector<double> yc(n);
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    yc[i] = std::min(y[i] * gain, x[i] * clip_factor);
    mx += x[i];
    my += yc[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double dot = 0.0, sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double a = x[i] - mx;
    const double b = yc[i] - my;
    dot += a * b;
    sx += a * a;
    sy += b * b;
  }
  if (sx <= 0.0 || sy <= 0.0) return 0.0;
  return dot / (std::sqrt(sx) * std::sqrt(sy));
}

/// Intrusive STOI: average of per-band, per-segment envelope correlations
/// between the silence-stripped clean and degraded signals.
inline StoiScore stoi(const Waveform& clean, const Waveform& degraded,
                      const StoiConfig& cfg = {}) {
  if (clean.size() != degraded.size())
    throw LengthMismatch("stoi: inputs must have equal length");
  if (clean.sample_rate != degraded.sample_rate)
    throw WrongRate("stoi: inputs must share a sample rate");

  Waveform c10, d10;
  if (clean.sample_rate == cfg.internal_rate) {
    c10 = clean;
    d10 = degraded;
  } else if (clean.sample_rate == 16000) {
    c10 = resample_16k_to_10k(clean);
    d10 = resample_16k_to_10k(degraded);
  } else {
    throw WrongRate("stoi: inputs must be 16 kHz or 10 kHz");
  }

  auto [vc, vd] = remove_silent_frames(c10, d10, cfg);
  const size_t min_len = static_cast<size_t>(cfg.seg_frames) *
                             static_cast<size_t>(cfg.vad_hop) +
                         static_cast<size_t>(cfg.vad_frame);
  if (vc.size() < min_len)
    throw TooShortAfterVad("stoi: too little speech after silent frame removal");

  const ComplexSpectrogram cs = stft(vc, cfg.stft);
  const ComplexSpectrogram ds = stft(vd, cfg.stft);
  const BandMatrix bands = third_octave_band_matrix(cfg);
  const auto env_c = band_envelopes(cs, bands);
  const auto env_d = band_envelopes(ds, bands);

  const size_t T = env_c.size();
  const size_t N = static_cast<size_t>(cfg.seg_frames);
  const size_t J = bands.bins.size();
  double acc = 0.0;
  size_t count = 0;
  std::vector<double> xseg(N), yseg(N);
  for (size_t m = N; m <= T; ++m) {
    for (size_t j = 0; j < J; ++j) {
      for (size_t i = 0; i < N; ++i) {
        xseg[i] = env_c[m - N + i][j];
        yseg[i] = env_d[m - N + i][j];
      }
      acc += intermediate_intelligibility(xseg, yseg, cfg.clip_beta_db);
      ++count;
    }
  }
  return StoiScore{acc / static_cast<double>(count)};
}

}  // namespace stoikit
