/*
Copyright 2026 the accm authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef ACCM_AUTOCORRELATION_HPP
#define ACCM_AUTOCORRELATION_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace accm {

// Raw correlates the byte values as-is; centered subtracts the window mean
// first. Byte data carries a strong DC component that makes small raw lags
// trivially large, so centered is the default almost everywhere.
enum class CorrelationMode : std::uint8_t { raw, centered };

// R(tau) for tau = 0..maxLag; values.size() == maxLag + 1.
struct AutocorrelationProfile {
    std::vector<double> values;
    CorrelationMode mode = CorrelationMode::centered;
};

// Linear autocorrelation via the power-spectrum route: the (optionally
// mean-subtracted) signal is zero-padded to the smallest power of two
// >= 2 * length, transformed, squared, and inverse-transformed. The padding
// turns the circular correlation of the transform into the exact linear sum,
// so this agrees with autocorrelation_direct lag for lag. Runs in O(n log n).
// Lags 0..length-1 are returned; the imaginary residue of the inverse
// transform is discarded. Empty input throws std::invalid_argument.
AutocorrelationProfile autocorrelation_wk(std::span<const std::uint8_t> signal,
                                          CorrelationMode mode);

// Definition-level evaluation: values[tau] = sum_t x[t] * x[t + tau] over all
// in-range t. O(n^2); intended for test-scale inputs and cross-checks.
AutocorrelationProfile autocorrelation_direct(std::span<const std::uint8_t> signal,
                                              CorrelationMode mode);

} // namespace accm

#endif
