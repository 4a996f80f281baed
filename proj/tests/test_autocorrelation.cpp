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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "accm/autocorrelation.hpp"
#include "accm/corpus.hpp"

using namespace accm;

namespace {

// per-profile tolerance: relative to the largest magnitude, floored at 1
void check_profiles_agree(const AutocorrelationProfile& a, const AutocorrelationProfile& b,
                          double rel = 1e-6)
{
    REQUIRE(a.values.size() == b.values.size());
    double scale = 1.0;
    for (double v : b.values)
        scale = std::max(scale, std::abs(v));
    for (std::size_t tau = 0; tau < a.values.size(); ++tau)
        CHECK(std::abs(a.values[tau] - b.values[tau]) <= rel * scale);
}

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed)
{
    return make_random(n, seed);
}

} // namespace

TEST_CASE("raw constant signal: values[tau] = c^2 * (L - tau)")
{
    const std::size_t length = 33;
    const double c = 7.0;
    const std::vector<std::uint8_t> signal(length, 7);
    const AutocorrelationProfile profile = autocorrelation_wk(signal, CorrelationMode::raw);
    REQUIRE(profile.values.size() == length);
    for (std::size_t tau = 0; tau < length; ++tau)
        CHECK(profile.values[tau] ==
              doctest::Approx(c * c * double(length - tau)).epsilon(1e-9));
}

TEST_CASE("centered constant signal is identically zero")
{
    const std::vector<std::uint8_t> signal(100, 201);
    const AutocorrelationProfile profile =
        autocorrelation_wk(signal, CorrelationMode::centered);
    for (double v : profile.values)
        CHECK(v == 0.0);
}

TEST_CASE("direct evaluation, hand-checked values")
{
    const std::vector<std::uint8_t> signal = {1, 0, 1, 0};
    const AutocorrelationProfile profile =
        autocorrelation_direct(signal, CorrelationMode::raw);
    CHECK(profile.values == std::vector<double>{2, 0, 1, 0});

    const std::vector<std::uint8_t> one = {255};
    CHECK(autocorrelation_direct(one, CorrelationMode::raw).values ==
          std::vector<double>{65025});
}

TEST_CASE("wk equals direct on random signals in both modes")
{
    for (auto mode : {CorrelationMode::raw, CorrelationMode::centered}) {
        const std::vector<std::uint8_t> signal = random_bytes(1024, 11 + int(mode));
        check_profiles_agree(autocorrelation_wk(signal, mode),
                             autocorrelation_direct(signal, mode));
    }
}

TEST_CASE("period-7 pattern: lag 7 dominates lags 1..349")
{
    const std::vector<std::uint8_t> signal = make_periodic(7, 3, 700, 99);
    const AutocorrelationProfile profile =
        autocorrelation_direct(signal, CorrelationMode::centered);
    const double at7 = profile.values[7];
    for (std::size_t tau = 1; tau <= 349; ++tau)
        if (tau != 7)
            CHECK(profile.values[tau] < at7);
}

TEST_CASE("empty signals are rejected")
{
    const std::vector<std::uint8_t> empty;
    CHECK_THROWS_AS(autocorrelation_wk(empty, CorrelationMode::raw),
                    std::invalid_argument);
    CHECK_THROWS_AS(autocorrelation_direct(empty, CorrelationMode::raw),
                    std::invalid_argument);
}

TEST_CASE("length-1 signal yields the lag-0 profile")
{
    const std::vector<std::uint8_t> one = {42};
    const AutocorrelationProfile profile = autocorrelation_wk(one, CorrelationMode::raw);
    REQUIRE(profile.values.size() == 1);
    CHECK(profile.values[0] == doctest::Approx(42.0 * 42.0).epsilon(1e-9));
}

TEST_CASE("raw lag 0 dominates any other lag")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const std::vector<std::uint8_t> signal = random_bytes(512, seed * 31);
        const AutocorrelationProfile profile =
            autocorrelation_wk(signal, CorrelationMode::raw);
        for (std::size_t tau = 1; tau < profile.values.size(); ++tau)
            CHECK(profile.values[0] >= profile.values[tau]);
    }
}

TEST_CASE("wk scaling stays near n log n" * doctest::skip(false))
{
    using Clock = std::chrono::steady_clock;
    const auto time_wk = [](const std::vector<std::uint8_t>& signal) {
        double sum_ms = 0.0;
        double sink = 0.0;
        for (int run = 0; run < 5; ++run) {
            const auto start = Clock::now();
            const AutocorrelationProfile p =
                autocorrelation_wk(signal, CorrelationMode::centered);
            sink += p.values[0];
            sum_ms +=
                std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
        (void)sink;
        return sum_ms / 5.0;
    };

    const std::vector<std::uint8_t> small = random_bytes(std::size_t(1) << 18, 5);
    const std::vector<std::uint8_t> large = random_bytes(std::size_t(1) << 19, 6);
    time_wk(small); // warm up
    const double t_small = time_wk(small);
    const double t_large = time_wk(large);
    CHECK(t_large <= 2.5 * t_small + 1.0); // +1 ms of scheduler slack
}
