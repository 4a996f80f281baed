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

#ifndef ACCM_CODER_HPP
#define ACCM_CODER_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace accm {

// Binary arithmetic coder over a 32-bit range with byte-wise renormalization.
// The interval is kept as (low, range); carries out of the 32-bit window are
// propagated explicitly through a cached byte plus a run of pending 0xFF
// bytes, so probabilities arbitrarily close to the bounds round-trip exactly.
//
// p1 is the 12-bit probability of bit == 1, in [1, 4095]. The bit == 1
// branch takes the lower part of the interval.
//
// flush() settles the carry chain and emits the two bytes that pin a value
// with 24 trailing zero bits inside the final interval; the decoder supplies
// those zeros itself, so no terminator is needed and the bit count comes
// from the container header.
class RangeEncoder {
public:
    explicit RangeEncoder(std::vector<std::uint8_t>& out) : out_(out) {}

    void encode(int bit, unsigned p1);
    void flush();

private:
    void shift_low();

    std::vector<std::uint8_t>& out_;
    std::uint64_t low_ = 0; // bit 32 is the pending carry
    std::uint32_t range_ = 0xFFFFFFFFu;
    std::uint8_t cache_ = 0;
    bool cache_valid_ = false;
    std::uint64_t pending_ff_ = 0;
};

// Mirror of RangeEncoder. Fed the same probability sequence it reproduces the
// encoded bits exactly. Reading past the payload is allowed only for the
// zeros the encoder's flush left implicit (at most kFlushSlack bytes); one
// byte more than that means the stream was truncated -> StreamExhausted.
class RangeDecoder {
public:
    static constexpr unsigned kFlushSlack = 3;

    explicit RangeDecoder(std::span<const std::uint8_t> in);

    int decode(unsigned p1);

    std::size_t consumed() const { return pos_; }

private:
    std::uint8_t next_byte();

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    unsigned virtual_reads_ = 0;
    std::uint32_t code_ = 0;
    std::uint32_t range_ = 0xFFFFFFFFu;
};

} // namespace accm

#endif
