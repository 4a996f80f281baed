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

#include "accm/context_model.hpp"

#include <bit>
#include <stdexcept>

namespace accm {

namespace {

constexpr std::uint32_t kFnvBasis = 2166136261u;
constexpr std::uint32_t kFnvPrime = 16777619u;

constexpr std::uint32_t fnv_step(std::uint32_t h, std::uint32_t x)
{
    return (h ^ x) * kFnvPrime;
}

constexpr std::size_t pair_count(std::size_t n)
{
    return n * (n - 1) / 2;
}

constexpr std::size_t triple_count(std::size_t n)
{
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

} // namespace

std::uint32_t hash_combine(std::span<const std::uint32_t> parts)
{
    assert(parts.size() >= 1 && parts.size() <= 8);
    std::uint32_t h = kFnvBasis;
    for (std::uint32_t x : parts)
        h = fnv_step(h, x);
    return h;
}

std::uint32_t hash_combine(std::initializer_list<std::uint32_t> parts)
{
    return hash_combine(std::span<const std::uint32_t>(parts.begin(), parts.size()));
}

std::uint32_t channel_of(std::uint64_t position, unsigned channels)
{
    assert(channels >= 1);
    return std::uint32_t(position % channels);
}

std::size_t ContextFamilyConfig::id_count(std::size_t lag_count) const
{
    const std::size_t total = std::min<std::size_t>(n_total, lag_count);
    const std::size_t pairs = std::min<std::size_t>(n_pair, total);
    const std::size_t triples = std::min<std::size_t>(n_triple, pairs);
    std::size_t count = 4 * total + pair_count(pairs) + triple_count(triples);
    if (planar)
        count += 8 * std::min<std::size_t>(planar_lags, lag_count);
    return count;
}

HistoryBuffer::HistoryBuffer(std::size_t min_span)
{
    const std::size_t capacity = std::bit_ceil(min_span + 2);
    ring_.assign(capacity, 0);
    mask_ = capacity - 1;
}

ContextGenerator::ContextGenerator(std::vector<std::uint32_t> lags,
                                   const ContextFamilyConfig& config, bool include_general,
                                   bool include_planar_if_enabled)
    : lags_(std::move(lags)), config_(config), general_(include_general),
      planar_(include_planar_if_enabled && config.planar)
{
    if (config_.channels < 1 || config_.channels > 255)
        throw std::invalid_argument("context model: channels must be in 1..255");
    if (general_) {
        if (config_.n_triple > config_.n_pair || config_.n_pair > config_.n_total)
            throw std::invalid_argument("context model: need n_triple <= n_pair <= n_total");
        if (config_.n_total > lags_.size())
            throw std::invalid_argument("context model: n_total exceeds lag set");
    }
    if (planar_ && config_.planar_lags > lags_.size())
        throw std::invalid_argument("context model: planar_lags exceeds lag set");

    std::size_t count = 0;
    if (general_)
        count += 4 * config_.n_total + pair_count(config_.n_pair) +
                 triple_count(config_.n_triple);
    if (planar_) {
        for (unsigned k = 0; k < config_.planar_lags; ++k)
            if (!(config_.planar_dedup && lags_[k] == 1))
                count += 8;
    }
    contexts_.resize(count);
}

void ContextGenerator::begin_byte(const HistoryBuffer& history)
{
    const bool with_channel = config_.channels > 1;
    const std::uint32_t ch =
        with_channel ? channel_of(history.position(), config_.channels) : 0;

    const auto open = [&](std::uint32_t tag, std::uint32_t index) {
        std::uint32_t h = fnv_step(fnv_step(kFnvBasis, tag), index);
        if (with_channel)
            h = fnv_step(h, ch);
        return h;
    };

    std::size_t i = 0;
    if (general_) {
        const unsigned n = config_.n_total;
        std::uint8_t value[256];
        for (unsigned k = 0; k < n; ++k)
            value[k] = history.at_offset(std::int64_t(lags_[k]));

        for (unsigned k = 0; k < n; ++k)
            contexts_[i++] = {fnv_step(open(1, k), value[k]), Key::partial, 0};
        for (unsigned k = 0; k < n; ++k)
            contexts_[i++] = {open(2, k), Key::diff, value[k]};
        for (unsigned k = 0; k < n; ++k)
            contexts_[i++] = {open(3, k), Key::sum, value[k]};
        for (unsigned k = 0; k < n; ++k)
            contexts_[i++] = {fnv_step(open(4, k), value[k]), Key::partial, 0};

        for (unsigned k1 = 0; k1 < config_.n_pair; ++k1)
            for (unsigned k2 = k1 + 1; k2 < config_.n_pair; ++k2) {
                std::uint32_t h = open(5, k1 | (k2 << 8));
                h = fnv_step(fnv_step(h, value[k1]), value[k2]);
                contexts_[i++] = {h, Key::partial, 0};
            }

        for (unsigned k1 = 0; k1 < config_.n_triple; ++k1)
            for (unsigned k2 = k1 + 1; k2 < config_.n_triple; ++k2)
                for (unsigned k3 = k2 + 1; k3 < config_.n_triple; ++k3) {
                    std::uint32_t h = open(6, k1 | (k2 << 8) | (k3 << 16));
                    h = fnv_step(fnv_step(fnv_step(h, value[k1]), value[k2]), value[k3]);
                    contexts_[i++] = {h, Key::partial, 0};
                }
    }

    if (planar_) {
        for (unsigned k = 0; k < config_.planar_lags; ++k) {
            const std::int64_t lag = std::int64_t(lags_[k]);
            if (config_.planar_dedup && lag == 1)
                continue;
            const std::uint8_t at_lag = history.at_offset(lag);
            const std::uint8_t prev1 = history.at_offset(1);
            const std::uint8_t prev2 = history.at_offset(2);
            const std::uint8_t prev3 = history.at_offset(3);
            const std::uint8_t at_lag1 = history.at_offset(lag + 1);

            contexts_[i++] = {fnv_step(open(17, k), at_lag), Key::partial, 0};
            contexts_[i++] = {fnv_step(fnv_step(open(18, k), at_lag), prev1), Key::partial, 0};
            contexts_[i++] = {fnv_step(fnv_step(fnv_step(open(19, k), at_lag), prev1), prev2),
                              Key::partial, 0};
            {
                const std::uint8_t coarse = std::uint8_t(prev3 + at_lag) >> 3;
                std::uint32_t h = fnv_step(open(20, k), coarse);
                h = fnv_step(fnv_step(h, prev1 >> 4), prev2 >> 4);
                contexts_[i++] = {h, Key::partial, 0};
            }
            contexts_[i++] = {fnv_step(fnv_step(open(21, k), at_lag),
                                       std::uint8_t(prev1 - at_lag1)),
                              Key::partial, 0};
            contexts_[i++] = {fnv_step(open(22, k), std::uint8_t(at_lag + prev1 - at_lag1)),
                              Key::partial, 0};
            contexts_[i++] = {fnv_step(fnv_step(open(23, k), history.at_offset(3 * lag - 3)),
                                       history.at_offset(3 * lag - 6)),
                              Key::partial, 0};
            contexts_[i++] = {fnv_step(fnv_step(open(24, k), history.at_offset(3 * lag + 3)),
                                       history.at_offset(3 * lag + 6)),
                              Key::partial, 0};
        }
    }
    assert(i == contexts_.size());
}

void ContextGenerator::emit(unsigned partial_byte, std::span<ContextId> out) const
{
    assert(out.size() == contexts_.size());
    assert(partial_byte >= 1 && partial_byte <= 255);
    for (std::size_t i = 0; i < contexts_.size(); ++i) {
        const Slot& slot = contexts_[i];
        std::uint32_t key = partial_byte;
        if (slot.key == Key::diff)
            key = std::uint8_t(partial_byte - slot.operand);
        else if (slot.key == Key::sum)
            key = std::uint8_t(partial_byte + slot.operand);
        out[i] = fnv_step(slot.prefix, key);
    }
}

std::vector<ContextId> general_contexts(const HistoryBuffer& history, const LagSet& lags,
                                        const ContextFamilyConfig& config,
                                        unsigned partial_byte)
{
    if (lags.empty())
        throw std::invalid_argument("general_contexts: empty lag set");
    ContextGenerator gen(lags.lags, config, true, false);
    gen.begin_byte(history);
    std::vector<ContextId> ids(gen.id_count());
    gen.emit(partial_byte, ids);
    return ids;
}

std::vector<ContextId> planar_contexts(const HistoryBuffer& history, const LagSet& lags,
                                       const ContextFamilyConfig& config,
                                       unsigned partial_byte)
{
    if (!config.planar || config.planar_lags < 1)
        throw std::invalid_argument("planar_contexts: planar family disabled");
    ContextGenerator gen(lags.lags, config, false, true);
    gen.begin_byte(history);
    std::vector<ContextId> ids(gen.id_count());
    gen.emit(partial_byte, ids);
    return ids;
}

} // namespace accm
