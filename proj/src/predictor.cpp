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

#include "accm/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace accm {

namespace {

constexpr double kEps = 1.0 / 4096.0;

// Positive half of the transfer curve: 33 integer knots, linearly
// interpolated. Input 0..2047 (logit * 256), output 2047..4094.
int squash_knots(int d)
{
    static const int knots[33] = {1,    2,    3,    6,    10,   16,   27,   45,  73,
                                  120,  194,  310,  488,  747,  1101, 1546, 2047, 2549,
                                  2994, 3348, 3607, 3785, 3901, 3975, 4022, 4050, 4068,
                                  4079, 4085, 4089, 4092, 4093, 4094};
    const int w = d & 127;
    const int idx = (d >> 7) + 16;
    return (knots[idx] * (128 - w) + knots[idx + 1] * w + 64) >> 7;
}

struct Tables {
    std::uint16_t squash_of[4096]; // index: logit + 2048
    std::int16_t stretch_of[4096]; // index: p12

    Tables()
    {
        for (int d = -2048; d <= 2047; ++d) {
            int p;
            if (d == 0)
                p = 2048;
            else if (d > 0)
                p = std::max(squash_knots(std::min(d, 2047)), 2049);
            else
                p = std::min(4096 - squash_knots(std::min(-d, 2047)), 2047);
            squash_of[d + 2048] = std::uint16_t(std::clamp(p, 1, 4095));
        }
        // exact inverse: smallest logit whose squash reaches p
        int next = 0;
        for (int d = -2047; d <= 2047; ++d) {
            const int p = squash_of[d + 2048];
            for (int j = next; j <= p; ++j)
                stretch_of[j] = std::int16_t(d);
            next = std::max(next, p + 1);
        }
        for (int j = next; j < 4096; ++j)
            stretch_of[j] = 2047;
    }
};

const Tables& tables()
{
    static const Tables t;
    return t;
}

} // namespace

double stretch(double p)
{
    p = std::clamp(p, kEps, 1.0 - kEps);
    return std::log(p / (1.0 - p));
}

double squash(double logit)
{
    return 1.0 / (1.0 + std::exp(-logit));
}

int squash12(int logit)
{
    logit = std::clamp(logit, -2048, 2047);
    return tables().squash_of[logit + 2048];
}

int stretch12(int p12)
{
    p12 = std::clamp(p12, 0, 4095);
    return tables().stretch_of[p12];
}

void counter_update(CounterSlot& slot, int bit)
{
    const int target = bit << 12;
    // p += (target - p) / (hits + 1.5), in integers
    const int step = (target - int(slot.p)) * 2 / (2 * int(slot.hits) + 3);
    slot.p = std::uint16_t(std::clamp(int(slot.p) + step, 1, 4095));
    if (slot.hits < 30)
        ++slot.hits;
}

ContextTable::ContextTable(unsigned bits) : bits_(bits)
{
    if (bits < 8 || bits > 30)
        throw std::invalid_argument("ContextTable: bits must be in 8..30");
    slots_.assign(std::size_t(1) << bits, CounterSlot{});
    mask_ = std::uint32_t((std::size_t(1) << bits) - 1);
}

int counter_lookup(ContextTable& table, ContextId id)
{
    return table.slot(id).p;
}

Mixer::Mixer(std::size_t inputs, std::size_t sets, int rate)
    : inputs_(inputs), sets_(sets), rate_(rate)
{
    if (sets_ == 0)
        throw std::invalid_argument("Mixer: need at least one weight set");
    weights_.assign(inputs_ * sets_, 0);
    logits_.assign(inputs_, 0);
}

void Mixer::select(std::size_t set)
{
    assert(set < sets_);
    set_ = set;
}

int Mixer::predict(std::span<const std::uint16_t> probs12)
{
    assert(probs12.size() == inputs_);
    const std::int32_t* w = weights_.data() + set_ * inputs_;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < inputs_; ++i) {
        const int t = stretch12(probs12[i]);
        logits_[i] = t;
        sum += std::int64_t(w[i]) * t;
    }
    const int logit = int(std::clamp<std::int64_t>(sum >> 16, -2047, 2047));
    pr_ = std::clamp(squash12(logit), 1, 4095);
    return pr_;
}

void Mixer::update(int bit)
{
    constexpr std::int32_t kWeightLimit = 1 << 26;
    const int err = (bit << 12) - pr_;
    std::int32_t* w = weights_.data() + set_ * inputs_;
    for (std::size_t i = 0; i < inputs_; ++i) {
        const std::int64_t delta = (std::int64_t(err) * logits_[i] * rate_ + 8192) >> 14;
        w[i] = std::clamp<std::int64_t>(std::int64_t(w[i]) + delta, -kWeightLimit,
                                        kWeightLimit);
    }
}

std::int32_t Mixer::weight(std::size_t set, std::size_t input) const
{
    return weights_[set * inputs_ + input];
}

void Mixer::set_weight(std::size_t set, std::size_t input, std::int32_t w)
{
    weights_[set * inputs_ + input] = w;
}

std::size_t Predictor::history_span(std::span<const std::uint32_t> lags,
                                    const ContextFamilyConfig& config)
{
    std::size_t span = 4;
    for (unsigned k = 0; k < config.n_total && k < lags.size(); ++k)
        span = std::max<std::size_t>(span, lags[k]);
    if (config.planar) {
        for (unsigned k = 0; k < config.planar_lags && k < lags.size(); ++k)
            span = std::max<std::size_t>(span, std::size_t(lags[k]) * 3 + 6);
    }
    return span;
}

Predictor::Predictor(std::vector<std::uint32_t> lags, const ContextFamilyConfig& config,
                     unsigned table_bits)
    : generator_(lags, config), history_(history_span(lags, config)),
      table_(table_bits), mixer_(generator_.id_count(), 8)
{
    ids_.resize(generator_.id_count());
    active_.resize(generator_.id_count());
    probs_.resize(generator_.id_count());
}

int Predictor::predict()
{
    if (bitpos_ == 0)
        generator_.begin_byte(history_);
    generator_.emit(partial_, ids_);
    for (ContextId id : ids_)
        table_.prefetch(id);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        active_[i] = &table_.slot(ids_[i]);
        probs_[i] = active_[i]->p;
    }
    mixer_.select(bitpos_);
    return mixer_.predict(probs_);
}

void Predictor::update(int bit)
{
    for (CounterSlot* slot : active_)
        counter_update(*slot, bit);
    mixer_.update(bit);
    partial_ = (partial_ << 1) | unsigned(bit);
    if (++bitpos_ == 8) {
        history_.push(std::uint8_t(partial_));
        partial_ = 1;
        bitpos_ = 0;
    }
}

} // namespace accm
