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

#include "accm/coder.hpp"

#include <cassert>

#include "accm/errors.hpp"

namespace accm {

namespace {

constexpr std::uint32_t kTopValue = 1u << 24;

inline std::uint32_t split(std::uint32_t range, unsigned p1)
{
    assert(p1 >= 1 && p1 <= 4095);
    // range >= 2^24 on entry, so the bit==1 share is at least 2^12 and the
    // bit==0 share at least range/4096; the interval never collapses.
    return std::uint32_t((std::uint64_t(range) * p1) >> 12);
}

} // namespace

void RangeEncoder::shift_low()
{
    const std::uint32_t carry = std::uint32_t(low_ >> 32);
    if (std::uint32_t(low_) < 0xFF000000u || carry) {
        if (cache_valid_)
            out_.push_back(std::uint8_t(cache_ + carry));
        for (; pending_ff_ > 0; --pending_ff_)
            out_.push_back(std::uint8_t(0xFF + carry));
        cache_ = std::uint8_t(low_ >> 24);
        cache_valid_ = true;
    } else {
        ++pending_ff_;
    }
    low_ = (low_ << 8) & 0xFFFFFFFFull;
}

void RangeEncoder::encode(int bit, unsigned p1)
{
    const std::uint32_t bound = split(range_, p1);
    if (bit)
        range_ = bound;
    else {
        low_ += bound;
        range_ -= bound;
    }
    while (range_ < kTopValue) {
        shift_low();
        range_ <<= 8;
    }
}

void RangeEncoder::flush()
{
    // Smallest multiple of 2^24 inside [low, low + range); range >= 2^24
    // guarantees it exists. Its top byte plus the settled carry chain is the
    // whole tail, the remaining 24 zero bits stay implicit.
    const std::uint64_t value = (low_ + (kTopValue - 1)) & ~std::uint64_t(kTopValue - 1);
    assert(value >= low_ && value - low_ < range_);
    low_ = value;
    shift_low();
    shift_low();
}

RangeDecoder::RangeDecoder(std::span<const std::uint8_t> in) : in_(in)
{
    for (int i = 0; i < 4; ++i)
        code_ = (code_ << 8) | next_byte();
}

std::uint8_t RangeDecoder::next_byte()
{
    if (pos_ < in_.size())
        return in_[pos_++];
    if (++virtual_reads_ > kFlushSlack)
        throw StreamExhausted("compressed stream truncated");
    return 0;
}

int RangeDecoder::decode(unsigned p1)
{
    const std::uint32_t bound = split(range_, p1);
    int bit;
    if (code_ < bound) {
        bit = 1;
        range_ = bound;
    } else {
        bit = 0;
        code_ -= bound;
        range_ -= bound;
    }
    while (range_ < kTopValue) {
        code_ = (code_ << 8) | next_byte();
        range_ <<= 8;
    }
    return bit;
}

} // namespace accm
