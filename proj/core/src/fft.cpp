// Copyright 2026 The Descant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "descant/fft.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "descant/errors.hpp"

namespace descant {

void fft_inplace(std::span<std::complex<double>> data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0) return;
  if ((n & (n - 1)) != 0) {
    throw InvalidInputError("fft: size must be a power of two");
  }

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = data[i + k];
        std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : data) x *= scale;
  }
}

namespace {

// Spectra of two real signals packed as z = a + i*b:
//   A[k] = (Z[k] + conj(Z[N-k])) / 2
//   B[k] = (Z[k] - conj(Z[N-k])) / (2i)
// The product A*B lands back in a single complex array whose inverse
// transform carries a*b... convolved output in the real part.
std::vector<double> packed_real_product(std::vector<std::complex<double>> z,
                                        std::size_t out_len, bool conj_b) {
  const std::size_t n = z.size();
  fft_inplace(z, false);

  std::vector<std::complex<double>> prod(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t kr = (n - k) & (n - 1);
    const std::complex<double> zk = z[k];
    const std::complex<double> zr = std::conj(z[kr]);
    const std::complex<double> a = 0.5 * (zk + zr);
    std::complex<double> b = std::complex<double>(0.0, -0.5) * (zk - zr);
    if (conj_b) b = std::conj(b);
    prod[k] = a * b;
  }
  fft_inplace(prod, true);

  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = prod[i].real();
  return out;
}

}  // namespace

std::vector<double> convolve(std::span<const double> a,
                             std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(out_len);

  std::vector<std::complex<double>> z(n);
  for (std::size_t i = 0; i < a.size(); ++i) z[i].real(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) z[i].imag(b[i]);
  return packed_real_product(std::move(z), out_len, /*conj_b=*/false);
}

std::vector<double> cross_correlate(std::span<const double> signal,
                                    std::span<const double> kernel,
                                    std::size_t max_lag) {
  assert(kernel.size() <= signal.size());
  if (signal.empty() || kernel.empty()) return {};
  const std::size_t n = next_pow2(signal.size() + kernel.size());

  // corr(tau) = sum_j kernel[j] * signal[j + tau] is a convolution with the
  // conjugated (reversed) kernel; with real data, conjugating B's spectrum
  // yields the correlation directly at non-negative lags.
  std::vector<std::complex<double>> z(n);
  for (std::size_t i = 0; i < signal.size(); ++i) z[i].real(signal[i]);
  for (std::size_t i = 0; i < kernel.size(); ++i) z[i].imag(kernel[i]);
  std::vector<double> full =
      packed_real_product(std::move(z), std::min(n, max_lag + 1),
                          /*conj_b=*/true);
  full.resize(max_lag + 1, 0.0);
  return full;
}

}  // namespace descant
