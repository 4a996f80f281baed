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

#ifndef ACCM_CONTEXT_MODEL_HPP
#define ACCM_CONTEXT_MODEL_HPP

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "accm/discovery.hpp"

namespace accm {

using ContextId = std::uint32_t;

// Which context families are active and how many lags each one consumes.
// Counts refer to prefixes of the lag set: families 1-4 use the first n_total
// lags, family 5 the first n_pair, family 6 the first n_triple.
struct ContextFamilyConfig {
    unsigned n_total = 10;
    unsigned n_pair = 7;
    unsigned n_triple = 5;
    unsigned channels = 1;   // 1 = channel component omitted from every hash
    bool planar = false;     // enable the 8-template planar family
    unsigned planar_lags = 0;
    bool planar_dedup = false; // skip planar templates for lag 1 (they repeat
                               // the adjacent-byte context)

    // Ids per coded bit under this configuration.
    std::size_t id_count(std::size_t lag_count) const;
};

// FNV-1a over 32-bit parts. This function defines the archive format: the
// constants and the folding order are frozen, and every context id in every
// archive is produced by it. 1 <= parts.size() <= 8.
std::uint32_t hash_combine(std::span<const std::uint32_t> parts);
std::uint32_t hash_combine(std::initializer_list<std::uint32_t> parts);

// Channel ("color") of a stream position: position mod channels.
std::uint32_t channel_of(std::uint64_t position, unsigned channels);

// Ring buffer over the last W coded bytes. Offset d counts back from the
// current position; reads before the stream start return 0, as do the
// non-positive offsets a degenerate planar lag can produce.
class HistoryBuffer {
public:
    explicit HistoryBuffer(std::size_t min_span);

    void push(std::uint8_t byte)
    {
        ring_[pos_ & mask_] = byte;
        ++pos_;
    }

    std::uint8_t at_offset(std::int64_t offset) const
    {
        if (offset <= 0 || std::uint64_t(offset) > pos_)
            return 0;
        assert(std::uint64_t(offset) <= mask_);
        return ring_[(pos_ - std::uint64_t(offset)) & mask_];
    }

    std::uint64_t position() const { return pos_; }

private:
    std::vector<std::uint8_t> ring_;
    std::uint64_t mask_ = 0;
    std::uint64_t pos_ = 0;
};

// Incremental context-id generator used by the predictor. The parts of every
// id that depend only on completed bytes are folded once per byte
// (begin_byte); emit() finishes each id with the per-bit key. partial_byte is
// the already-coded high bits of the current byte behind a leading 1 marker,
// so it is 1 at a byte boundary.
//
// Frozen id layouts (ch present only when channels > 1, pb = partial byte,
// b(k) = byte at the k-th lag):
//   family 1: hash(1, k, ch, b(k), pb)
//   family 2: hash(2, k, ch, (pb - b(k)) mod 256)
//   family 3: hash(3, k, ch, (pb + b(k)) mod 256)
//   family 4: hash(4, k, ch, b(k), pb)           (current-byte slot = pb)
//   family 5: hash(5, k1 | k2<<8, ch, b(k1), b(k2), pb), k1 < k2
//   family 6: hash(6, k1 | k2<<8 | k3<<16, ch, b(k1), b(k2), b(k3), pb)
//   planar t: hash(16 + t, k, ch, template values..., pb), t = 1..8
// Families 1 and 4 differ in tag only; family 4 is the paper shape, family 1
// survives unchanged within a byte.
class ContextGenerator {
public:
    ContextGenerator(std::vector<std::uint32_t> lags, const ContextFamilyConfig& config,
                     bool include_general = true, bool include_planar_if_enabled = true);

    std::size_t id_count() const { return contexts_.size(); }
    void begin_byte(const HistoryBuffer& history);
    void emit(unsigned partial_byte, std::span<ContextId> out) const;

private:
    enum class Key : std::uint8_t { partial, diff, sum };

    struct Slot {
        std::uint32_t prefix = 0; // rebuilt each byte
        Key key = Key::partial;
        std::uint8_t operand = 0; // lag byte for diff/sum keys
    };

    std::vector<std::uint32_t> lags_;
    ContextFamilyConfig config_;
    bool general_ = true;
    bool planar_ = false;
    std::vector<Slot> contexts_;
};

// One-shot spec surfaces over ContextGenerator. The general families emit in
// fixed order (all of family 1, then 2, 3, 4, the family-5 pairs and the
// family-6 triples); the planar family emits 8 ids per planar lag.
std::vector<ContextId> general_contexts(const HistoryBuffer& history, const LagSet& lags,
                                        const ContextFamilyConfig& config,
                                        unsigned partial_byte = 1);
std::vector<ContextId> planar_contexts(const HistoryBuffer& history, const LagSet& lags,
                                       const ContextFamilyConfig& config,
                                       unsigned partial_byte = 1);

} // namespace accm

#endif
