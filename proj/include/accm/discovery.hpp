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

#ifndef ACCM_DISCOVERY_HPP
#define ACCM_DISCOVERY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "accm/autocorrelation.hpp"

namespace accm {

struct DiscoveryConfig {
    unsigned n = 10;             // how many lags to select, 1..255
    std::uint32_t min_lag = 1;   // lag 0 is never useful as a context
    std::uint32_t max_lag = 0;   // 0 = auto: min(signal length - 1, 1 << 24)
    std::size_t window_cap = std::size_t{1} << 22; // analysis prefix bound
    CorrelationMode mode = CorrelationMode::centered;

    // Lags that must not be selected (e.g. offsets another model already
    // covers). With keep_count_on_exclude they are replaced by the next-best
    // lags so the set keeps n entries; without it the set just shrinks.
    std::vector<std::uint32_t> exclude;
    bool keep_count_on_exclude = true;
};

// The n most autocorrelated lags, ordered by descending score with ties
// broken toward the smaller lag. Scores are diagnostic only and are not
// serialized; a parsed LagSet has an empty scores vector.
struct LagSet {
    std::vector<std::uint32_t> lags;
    std::vector<double> scores;

    bool empty() const { return lags.empty(); }
    std::size_t size() const { return lags.size(); }
};

// Select the top-n admissible lags from a profile. Returns an empty set when
// no lag is admissible (e.g. a length-1 signal); config misuse (n = 0,
// min_lag = 0, max_lag < min_lag) throws std::invalid_argument.
LagSet rank_lags(const AutocorrelationProfile& profile, const DiscoveryConfig& config);

// Analyze the first min(length, window_cap) bytes with autocorrelation_wk and
// rank the result.
LagSet discover(std::span<const std::uint8_t> signal, const DiscoveryConfig& config);

// Archive-header encoding: each lag as an unsigned 32-bit little-endian
// integer, in set order.
std::vector<std::uint8_t> serialize_lags(const LagSet& set);

// Inverse of serialize_lags. bytes.size() must be exactly 4 * count and the
// decoded lags must be non-zero and distinct; otherwise MalformedHeader.
LagSet parse_lags(std::span<const std::uint8_t> bytes, std::size_t count);

} // namespace accm

#endif
