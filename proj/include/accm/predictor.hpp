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

#ifndef ACCM_PREDICTOR_HPP
#define ACCM_PREDICTOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "accm/context_model.hpp"

namespace accm {

// Probabilities on the coding path are 12-bit fixed point: p in [1, 4095]
// represents P(bit = 1) = p / 4096. The logistic transfer pair uses integer
// lookup tables built from a 33-knot piecewise-linear curve, so encoder and
// decoder are bit-identical on any platform; no floating point touches the
// coded probability stream.

// ln(p / (1 - p)) with p clamped to [1/4096, 4095/4096], and its inverse.
double stretch(double p);
double squash(double logit);

// Fixed-point pair: the logit domain is scaled by 256 and clamped to
// [-2047, 2047]. squash12(0) == 2048 exactly and squash12(-d) mirrors
// squash12(d) around 2048.
int squash12(int logit);
int stretch12(int p12);

// Adaptive probability state for one context slot. The estimate moves toward
// each observed bit with rate 1 / (hits + 1.5), hits saturating at 30, which
// makes it an empirical mean early on and an EMA later. p never leaves
// [1, 4095]. check guards against hash aliasing in the table.
struct CounterSlot {
    std::uint16_t p = 2048;
    std::uint8_t hits = 0;
    std::uint8_t check = 0;
};
static_assert(sizeof(CounterSlot) == 4);

void counter_update(CounterSlot& slot, int bit);

// 2^bits slots indexed by the low bits of the context id; the id's top byte
// is the slot check. Lookups never fail: a check mismatch reinitializes the
// slot to the uninformed prior.
class ContextTable {
public:
    explicit ContextTable(unsigned bits);

    CounterSlot& slot(ContextId id)
    {
        CounterSlot& s = slots_[id & mask_];
        const std::uint8_t check = std::uint8_t(id >> 24);
        if (s.check != check)
            s = CounterSlot{2048, 0, check};
        return s;
    }

    void prefetch(ContextId id) const { __builtin_prefetch(&slots_[id & mask_]); }

    unsigned bits() const { return bits_; }

private:
    std::vector<CounterSlot> slots_;
    std::uint32_t mask_;
    unsigned bits_;
};

// Spec surface: current slot probability for an id (12-bit).
int counter_lookup(ContextTable& table, ContextId id);

// Single-layer logistic mixer. One weight vector per selectable set; weights
// are 16.16 fixed point, inputs are stretched 12-bit probabilities, and the
// learning step is w += rate/1024 * (bit - prediction) * stretch(p_i).
class Mixer {
public:
    Mixer(std::size_t inputs, std::size_t sets, int rate = 3);

    void select(std::size_t set);
    int predict(std::span<const std::uint16_t> probs12);
    void update(int bit);

    std::size_t inputs() const { return inputs_; }
    std::int32_t weight(std::size_t set, std::size_t input) const;
    void set_weight(std::size_t set, std::size_t input, std::int32_t w); // tests

private:
    std::size_t inputs_;
    std::size_t sets_;
    int rate_;
    std::size_t set_ = 0;
    int pr_ = 2048;
    std::vector<std::int32_t> weights_; // sets_ x inputs_
    std::vector<int> logits_;           // stretched inputs of the last predict
};

// Full bit predictor: context generation -> counter slots -> mixer, with the
// mixer weight set selected by the bit position inside the byte. Drive it
// with exactly one predict() before each update(bit); bits are MSB-first.
class Predictor {
public:
    Predictor(std::vector<std::uint32_t> lags, const ContextFamilyConfig& config,
              unsigned table_bits);

    int predict();
    void update(int bit);

private:
    ContextGenerator generator_;
    HistoryBuffer history_;
    ContextTable table_;
    Mixer mixer_;
    std::vector<ContextId> ids_;
    std::vector<CounterSlot*> active_;
    std::vector<std::uint16_t> probs_;
    unsigned partial_ = 1; // current byte bits behind a leading 1 marker
    unsigned bitpos_ = 0;

    static std::size_t history_span(std::span<const std::uint32_t> lags,
                                    const ContextFamilyConfig& config);
};

} // namespace accm

#endif
