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

#include "accm/fft.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>

namespace accm {

void fft_radix2(ComplexVector& data, bool inverse)
{
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_radix2: length must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / double(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t base = 0; base < n; base += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[base + k];
                const std::complex<double> v = data[base + k + len / 2] * w;
                data[base + k] = u + v;
                data[base + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / double(n);
        for (auto& x : data)
            x *= scale;
    }
}

ComplexVector dft_forward(std::span<const double> signal)
{
    ComplexVector data(signal.begin(), signal.end());
    fft_radix2(data, false);
    return data;
}

ComplexVector dft_inverse(std::span<const std::complex<double>> spectrum)
{
    ComplexVector data(spectrum.begin(), spectrum.end());
    fft_radix2(data, true);
    return data;
}

ComplexVector dft_inverse(std::span<const double> spectrum)
{
    ComplexVector data(spectrum.begin(), spectrum.end());
    fft_radix2(data, true);
    return data;
}

PowerSpectrum power_spectrum(const ComplexVector& spectrum)
{
    PowerSpectrum out(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const double re = spectrum[k].real();
        const double im = spectrum[k].imag();
        out[k] = re * re + im * im;
    }
    return out;
}

} // namespace accm
