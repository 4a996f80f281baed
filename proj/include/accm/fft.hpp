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

#ifndef ACCM_FFT_HPP
#define ACCM_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace accm {

using ComplexVector = std::vector<std::complex<double>>;
using PowerSpectrum = std::vector<double>;

// Iterative radix-2 transform with bit-reversal permutation, in place.
// Forward is unnormalized, inverse divides by the length, so the pair
// composes to the identity. Length must be a power of two (length 1 is
// allowed and is the identity); anything else throws std::invalid_argument.
void fft_radix2(ComplexVector& data, bool inverse);

// Unnormalized discrete Fourier transform of a real vector.
ComplexVector dft_forward(std::span<const double> signal);

// Inverse transform (divides by length). The real overload is for spectra
// that are real by construction, e.g. a power spectrum.
ComplexVector dft_inverse(std::span<const std::complex<double>> spectrum);
ComplexVector dft_inverse(std::span<const double> spectrum);

// Squared amplitude per frequency bin: re^2 + im^2. Always non-negative.
PowerSpectrum power_spectrum(const ComplexVector& spectrum);

} // namespace accm

#endif
