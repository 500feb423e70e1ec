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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace descant {

constexpr std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// In-place radix-2 DIT transform. Size must be a power of two.
/// The inverse includes the 1/N scale.
void fft_inplace(std::span<std::complex<double>> data, bool inverse);

/// Full linear convolution, length a.size() + b.size() - 1.
/// Uses a single packed real FFT round trip.
std::vector<double> convolve(std::span<const double> a,
                             std::span<const double> b);

/// Cross-correlation c(tau) = sum_j kernel[j] * signal[j + tau] for
/// tau in [0, max_lag]. kernel must not be longer than signal.
std::vector<double> cross_correlate(std::span<const double> signal,
                                    std::span<const double> kernel,
                                    std::size_t max_lag);

}  // namespace descant
