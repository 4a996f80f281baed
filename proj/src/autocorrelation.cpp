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

#include "accm/autocorrelation.hpp"

#include <bit>
#include <stdexcept>

#include "accm/fft.hpp"

namespace accm {

namespace {

std::vector<double> to_samples(std::span<const std::uint8_t> signal, CorrelationMode mode)
{
    std::vector<double> x(signal.size());
    double mean = 0.0;
    if (mode == CorrelationMode::centered) {
        double sum = 0.0;
        for (std::uint8_t b : signal)
            sum += double(b);
        mean = sum / double(signal.size());
    }
    for (std::size_t i = 0; i < signal.size(); ++i)
        x[i] = double(signal[i]) - mean;
    return x;
}

} // namespace

AutocorrelationProfile autocorrelation_wk(std::span<const std::uint8_t> signal,
                                          CorrelationMode mode)
{
    const std::size_t n = signal.size();
    if (n == 0)
        throw std::invalid_argument("autocorrelation_wk: empty signal");

    const std::vector<double> x = to_samples(signal, mode);
    const std::size_t padded = std::bit_ceil(2 * n);

    ComplexVector data(padded);
    for (std::size_t i = 0; i < n; ++i)
        data[i] = x[i];
    fft_radix2(data, false);

    const PowerSpectrum power = power_spectrum(data);
    const ComplexVector corr = dft_inverse(std::span<const double>(power));

    AutocorrelationProfile profile;
    profile.mode = mode;
    profile.values.resize(n);
    for (std::size_t tau = 0; tau < n; ++tau)
        profile.values[tau] = corr[tau].real();
    return profile;
}

AutocorrelationProfile autocorrelation_direct(std::span<const std::uint8_t> signal,
                                              CorrelationMode mode)
{
    const std::size_t n = signal.size();
    if (n == 0)
        throw std::invalid_argument("autocorrelation_direct: empty signal");

    const std::vector<double> x = to_samples(signal, mode);

    AutocorrelationProfile profile;
    profile.mode = mode;
    profile.values.resize(n);
    for (std::size_t tau = 0; tau < n; ++tau) {
        double sum = 0.0;
        for (std::size_t t = 0; t + tau < n; ++t)
            sum += x[t] * x[t + tau];
        profile.values[tau] = sum;
    }
    return profile;
}

} // namespace accm
