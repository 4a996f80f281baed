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

#include "accm/discovery.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "accm/errors.hpp"

namespace accm {

namespace {

constexpr std::uint32_t kAutoMaxLagCap = 1u << 24;

void validate(const DiscoveryConfig& config)
{
    if (config.n < 1 || config.n > 255)
        throw std::invalid_argument("discovery: n must be in 1..255");
    if (config.min_lag < 1)
        throw std::invalid_argument("discovery: min_lag must be >= 1");
    if (config.max_lag != 0 && config.max_lag < config.min_lag)
        throw std::invalid_argument("discovery: max_lag must be >= min_lag");
}

} // namespace

LagSet rank_lags(const AutocorrelationProfile& profile, const DiscoveryConfig& config)
{
    if (profile.values.empty())
        throw std::invalid_argument("rank_lags: empty profile");
    validate(config);

    const std::uint32_t profile_max = std::uint32_t(profile.values.size() - 1);
    std::uint32_t hi = config.max_lag != 0 ? config.max_lag
                                           : std::min(profile_max, kAutoMaxLagCap);
    hi = std::min(hi, profile_max);

    const std::unordered_set<std::uint32_t> excluded(config.exclude.begin(),
                                                     config.exclude.end());

    struct Candidate {
        std::uint32_t lag;
        double score;
    };
    std::vector<Candidate> candidates;
    if (hi >= config.min_lag)
        candidates.reserve(hi - config.min_lag + 1);
    for (std::uint32_t lag = config.min_lag; lag <= hi && lag <= profile_max; ++lag) {
        if (!config.keep_count_on_exclude || !excluded.contains(lag))
            candidates.push_back({lag, profile.values[lag]});
    }

    const auto better = [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score)
            return a.score > b.score;
        return a.lag < b.lag; // ties go to the smaller lag
    };
    const std::size_t take = std::min<std::size_t>(config.n, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + std::ptrdiff_t(take),
                      candidates.end(), better);
    candidates.resize(take);

    if (!config.keep_count_on_exclude && !excluded.empty()) {
        std::erase_if(candidates,
                      [&](const Candidate& c) { return excluded.contains(c.lag); });
    }

    LagSet set;
    set.lags.reserve(candidates.size());
    set.scores.reserve(candidates.size());
    for (const Candidate& c : candidates) {
        set.lags.push_back(c.lag);
        set.scores.push_back(c.score);
    }
    return set;
}

LagSet discover(std::span<const std::uint8_t> signal, const DiscoveryConfig& config)
{
    if (signal.empty())
        throw std::invalid_argument("discover: empty signal");
    validate(config);

    const std::size_t window = std::min(signal.size(), config.window_cap);
    const AutocorrelationProfile profile =
        autocorrelation_wk(signal.subspan(0, window), config.mode);
    return rank_lags(profile, config);
}

std::vector<std::uint8_t> serialize_lags(const LagSet& set)
{
    std::vector<std::uint8_t> out;
    out.reserve(set.lags.size() * 4);
    for (std::uint32_t lag : set.lags) {
        out.push_back(std::uint8_t(lag));
        out.push_back(std::uint8_t(lag >> 8));
        out.push_back(std::uint8_t(lag >> 16));
        out.push_back(std::uint8_t(lag >> 24));
    }
    return out;
}

LagSet parse_lags(std::span<const std::uint8_t> bytes, std::size_t count)
{
    if (bytes.size() != count * 4)
        throw MalformedHeader("lag block size mismatch");

    LagSet set;
    set.lags.reserve(count);
    std::unordered_set<std::uint32_t> seen;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t lag = std::uint32_t(bytes[i * 4]) |
                                  std::uint32_t(bytes[i * 4 + 1]) << 8 |
                                  std::uint32_t(bytes[i * 4 + 2]) << 16 |
                                  std::uint32_t(bytes[i * 4 + 3]) << 24;
        if (lag == 0)
            throw MalformedHeader("lag 0 in header");
        if (!seen.insert(lag).second)
            throw MalformedHeader("duplicate lag in header");
        set.lags.push_back(lag);
    }
    return set;
}

} // namespace accm
