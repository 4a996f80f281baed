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

#ifndef ACCM_CONTAINER_HPP
#define ACCM_CONTAINER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "accm/context_model.hpp"
#include "accm/discovery.hpp"

namespace accm {

// Archive layout, all multi-byte integers little-endian:
//
//   offset size
//   0      4    magic "ACCM"
//   4      1    version (currently 1)
//   5      1    flags: bit 0 centered analysis, bit 1 planar family,
//               bits 2-6 table bits - 10, bit 7 planar lag-1 dedup
//   6      1    channels
//   7      1    n_total   (lags used by families 1-4)
//   8      1    n_pair    (lags used by family 5)
//   9      1    n_triple  (lags used by family 6)
//   10     1    planar_lags
//   11     6    original length, 48-bit
//   17     1    lag count
//   18     4*c  lag block, one unsigned 32-bit value per lag
//
// The header is exactly 18 + 4 * lag_count bytes; the coder payload follows
// immediately. Every constant that shapes the payload (context hash, counter
// rule, mixer fixed point, coder) is gated by the version byte.

constexpr std::size_t kHeaderBaseSize = 18;
constexpr std::uint8_t kFormatVersion = 1;
constexpr std::uint64_t kMaxOriginalLength = (std::uint64_t{1} << 48) - 1;

struct ArchiveHeader {
    std::uint8_t version = kFormatVersion;
    bool centered = true;
    bool planar = false;
    bool planar_dedup = false;
    std::uint8_t channels = 1;
    std::uint8_t n_total = 0;
    std::uint8_t n_pair = 0;
    std::uint8_t n_triple = 0;
    std::uint8_t planar_lags = 0;
    unsigned table_bits = 22;
    std::uint64_t original_length = 0;
    std::vector<std::uint32_t> lags;

    std::size_t byte_size() const { return kHeaderBaseSize + 4 * lags.size(); }
    ContextFamilyConfig family_config() const;
};

void append_header(std::vector<std::uint8_t>& out, const ArchiveHeader& header);

// Parses and validates a header; header_bytes receives its size. Bad magic or
// version -> UnsupportedFormat; anything else inconsistent -> MalformedHeader.
ArchiveHeader parse_header(std::span<const std::uint8_t> archive, std::size_t& header_bytes);

struct CompressOptions {
    DiscoveryConfig discovery{};
    ContextFamilyConfig contexts{};
    unsigned table_bits = 22;
    // Bypass discovery with a fixed lag set (benchmark baselines).
    std::optional<std::vector<std::uint32_t>> forced_lags{};
};

// Discover lags on the input, write the header, then code every byte
// MSB-first through the context model, mixer and range coder.
// decompress(compress(x)) == x. Empty input produces a header-only archive.
// A discovery that yields no usable lag (length-1 input) falls back to the
// lag set {1} so the general families degrade to adjacent-byte modeling.
std::vector<std::uint8_t> compress(std::span<const std::uint8_t> input,
                                   const CompressOptions& options = {});

// Rebuilds the model from the header and replays it; returns exactly
// original_length bytes. Truncated payloads raise StreamExhausted.
std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> archive);

} // namespace accm

#endif
