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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "accm/fft.hpp"

using namespace accm;

namespace {

// O(n^2) direct-summation transform, the oracle for the fast path.
ComplexVector dft_oracle(std::span<const double> x, bool inverse)
{
    const std::size_t n = x.size();
    ComplexVector out(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double ang = sign * 2.0 * std::numbers::pi * double(k) * double(t) / double(n);
            sum += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = inverse ? sum / double(n) : sum;
    }
    return out;
}

std::vector<double> random_vector(std::size_t n, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<double> x(n);
    for (auto& v : x)
        v = double(rng()) / double(rng.max()) * 2.0 - 1.0;
    return x;
}

double max_rel_error(const ComplexVector& got, const ComplexVector& want)
{
    double scale = 1.0;
    for (const auto& w : want)
        scale = std::max(scale, std::abs(w));
    double err = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        err = std::max(err, std::abs(got[i] - want[i]) / scale);
    return err;
}

} // namespace

TEST_CASE("impulse transforms to a flat spectrum")
{
    const double x[4] = {1, 0, 0, 0};
    const ComplexVector spec = dft_forward(x);
    REQUIRE(spec.size() == 4);
    for (const auto& bin : spec) {
        CHECK(bin.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(bin.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("constant input has only a DC bin")
{
    const double c = 2.75;
    const double x[4] = {c, c, c, c};
    const ComplexVector spec = dft_forward(x);
    CHECK(spec[0].real() == doctest::Approx(4 * c).epsilon(1e-12));
    CHECK(spec[0].imag() == doctest::Approx(0.0).epsilon(1e-12));
    for (std::size_t k = 1; k < 4; ++k)
        CHECK(std::abs(spec[k]) < 1e-12);
}

TEST_CASE("fast transform matches the direct-sum oracle")
{
    const std::vector<double> x = random_vector(64, 7);
    CHECK(max_rel_error(dft_forward(x), dft_oracle(x, false)) < 1e-9);
}

TEST_CASE("non-power-of-two length is rejected")
{
    ComplexVector data(3);
    CHECK_THROWS_AS(fft_radix2(data, false), std::invalid_argument);
    ComplexVector empty;
    CHECK_THROWS_AS(fft_radix2(empty, false), std::invalid_argument);
}

TEST_CASE("inverse of forward is the identity")
{
    for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(64),
                          std::size_t(1024), std::size_t(4096)}) {
        const std::vector<double> x = random_vector(n, std::uint32_t(n));
        const ComplexVector back = dft_inverse(std::span<const std::complex<double>>(dft_forward(x)));
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            err = std::max(err, std::abs(back[i] - std::complex<double>(x[i])));
        CHECK(err < 1e-9);
    }
}

TEST_CASE("power spectrum basics")
{
    const ComplexVector one = {{3.0, 4.0}};
    CHECK(power_spectrum(one) == PowerSpectrum{25.0});

    const ComplexVector zeros(8);
    for (double v : power_spectrum(zeros))
        CHECK(v == 0.0);
}

TEST_CASE("power spectrum equals the oracle conjugate product")
{
    std::vector<double> x = {1, 2, 3, 4};
    x.resize(8, 0.0);
    const PowerSpectrum got = power_spectrum(dft_forward(x));
    const ComplexVector spec = dft_oracle(x, false);
    REQUIRE(got.size() == spec.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
        const double want = (std::conj(spec[k]) * spec[k]).real();
        CHECK(got[k] == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("power spectrum is non-negative")
{
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        const std::vector<double> x = random_vector(256, 100 + seed);
        for (double v : power_spectrum(dft_forward(x)))
            CHECK(v >= 0.0);
    }
}

TEST_CASE("Parseval: power sums to length times input energy")
{
    for (std::size_t n : {std::size_t(8), std::size_t(256), std::size_t(2048)}) {
        const std::vector<double> x = random_vector(n, std::uint32_t(n) + 1);
        const PowerSpectrum power = power_spectrum(dft_forward(x));
        double power_sum = 0.0;
        for (double v : power)
            power_sum += v;
        double energy = 0.0;
        for (double v : x)
            energy += v * v;
        CHECK(power_sum == doctest::Approx(double(n) * energy).epsilon(1e-6));
    }
}
