#pragma once

#include <complex>
#include <vector>

#include "stoikit/error.hpp"

namespace stoikit {

inline bool is_power_of_two(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place. n must be a power of two.
inline void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (!is_power_of_two(n)) throw InvalidConfig("fft size must be a power of two");
  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double base = inverse ? 6.283185307179586476925286766559
                              : -6.283185307179586476925286766559;
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = base / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

// One-sided DFT of a real signal zero-padded to fft_size; returns fft_size/2+1 bins.
inline std::vector<std::complex<double>> rfft(const std::vector<double>& x,
                                              size_t fft_size) {
  std::vector<std::complex<double>> buf(fft_size, {0.0, 0.0});
  const size_t m = x.size() < fft_size ? x.size() : fft_size;
  for (size_t i = 0; i < m; ++i) buf[i] = {x[i], 0.0};
  fft_inplace(buf, false);
  buf.resize(fft_size / 2 + 1);
  return buf;
}

// Inverse of rfft: reconstructs the length-fft_size real signal.
inline std::vector<double> irfft(const std::vector<std::complex<double>>& half,
                                 size_t fft_size) {
  if (half.size() != fft_size / 2 + 1)
    throw InvalidConfig("irfft: spectrum size does not match fft size");
  std::vector<std::complex<double>> buf(fft_size);
  for (size_t k = 0; k <= fft_size / 2; ++k) buf[k] = half[k];
  for (size_t k = fft_size / 2 + 1; k < fft_size; ++k)
    buf[k] = std::conj(half[fft_size - k]);
  fft_inplace(buf, true);
  std::vector<double> out(fft_size);
  for (size_t i = 0; i < fft_size; ++i) out[i] = buf[i].real();
  return out;
}

}  // namespace stoikit
