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

#include "accm/container.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "accm/coder.hpp"
#include "accm/errors.hpp"
#include "accm/predictor.hpp"

namespace accm {

namespace {

constexpr std::uint8_t kMagic[4] = {'A', 'C', 'C', 'M'};
constexpr unsigned kMinTableBits = 10;
constexpr unsigned kMaxTableBits = 30;

void validate_options(const CompressOptions& options)
{
    const ContextFamilyConfig& cfg = options.contexts;
    if (cfg.channels < 1 || cfg.channels > 255)
        throw std::invalid_argument("compress: channels must be in 1..255");
    if (cfg.n_total > 255 || cfg.n_pair > 255 || cfg.n_triple > 255 ||
        cfg.planar_lags > 255)
        throw std::invalid_argument("compress: family counts must fit one byte");
    if (cfg.n_triple > cfg.n_pair || cfg.n_pair > cfg.n_total)
        throw std::invalid_argument("compress: need n_triple <= n_pair <= n_total");
    if (options.table_bits < kMinTableBits || options.table_bits > kMaxTableBits)
        throw std::invalid_argument("compress: table_bits must be in 10..30");
    if (options.forced_lags) {
        const auto& lags = *options.forced_lags;
        if (lags.empty() || lags.size() > 255)
            throw std::invalid_argument("compress: forced lag set must have 1..255 lags");
        std::unordered_set<std::uint32_t> seen;
        for (std::uint32_t lag : lags) {
            if (lag == 0 || !seen.insert(lag).second)
                throw std::invalid_argument("compress: forced lags must be distinct and >= 1");
        }
    }
}

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v)
{
    out.push_back(std::uint8_t(v));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 24));
}

} // namespace

ContextFamilyConfig ArchiveHeader::family_config() const
{
    ContextFamilyConfig cfg;
    cfg.n_total = n_total;
    cfg.n_pair = n_pair;
    cfg.n_triple = n_triple;
    cfg.channels = channels;
    cfg.planar = planar;
    cfg.planar_lags = planar_lags;
    cfg.planar_dedup = planar_dedup;
    return cfg;
}

void append_header(std::vector<std::uint8_t>& out, const ArchiveHeader& header)
{
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    out.push_back(header.version);
    std::uint8_t flags = 0;
    if (header.centered)
        flags |= 1;
    if (header.planar)
        flags |= 2;
    flags |= std::uint8_t((header.table_bits - kMinTableBits) & 31) << 2;
    if (header.planar_dedup)
        flags |= 0x80;
    out.push_back(flags);
    out.push_back(header.channels);
    out.push_back(header.n_total);
    out.push_back(header.n_pair);
    out.push_back(header.n_triple);
    out.push_back(header.planar_lags);
    for (int shift = 0; shift < 48; shift += 8)
        out.push_back(std::uint8_t(header.original_length >> shift));
    out.push_back(std::uint8_t(header.lags.size()));
    for (std::uint32_t lag : header.lags)
        put_u32le(out, lag);
}

ArchiveHeader parse_header(std::span<const std::uint8_t> archive, std::size_t& header_bytes)
{
    if (archive.size() < 4)
        throw MalformedHeader("archive shorter than the magic");
    if (!std::equal(std::begin(kMagic), std::end(kMagic), archive.begin()))
        throw UnsupportedFormat("bad magic");
    if (archive.size() < kHeaderBaseSize)
        throw MalformedHeader("archive shorter than the fixed header");

    ArchiveHeader header;
    header.version = archive[4];
    if (header.version != kFormatVersion)
        throw UnsupportedFormat("unsupported version");

    const std::uint8_t flags = archive[5];
    header.centered = (flags & 1) != 0;
    header.planar = (flags & 2) != 0;
    header.planar_dedup = (flags & 0x80) != 0;
    header.table_bits = kMinTableBits + ((flags >> 2) & 31);
    if (header.table_bits > kMaxTableBits)
        throw MalformedHeader("table size out of range");

    header.channels = archive[6];
    if (header.channels < 1)
        throw MalformedHeader("channels must be >= 1");
    header.n_total = archive[7];
    header.n_pair = archive[8];
    header.n_triple = archive[9];
    header.planar_lags = archive[10];

    header.original_length = 0;
    for (int i = 0; i < 6; ++i)
        header.original_length |= std::uint64_t(archive[11 + i]) << (8 * i);

    const std::size_t lag_count = archive[17];
    if (archive.size() < kHeaderBaseSize + 4 * lag_count)
        throw MalformedHeader("truncated lag block");
    header.lags =
        parse_lags(archive.subspan(kHeaderBaseSize, 4 * lag_count), lag_count).lags;

    if (header.n_triple > header.n_pair || header.n_pair > header.n_total ||
        header.n_total > lag_count)
        throw MalformedHeader("family counts violate n_triple <= n_pair <= n_total <= lags");
    if (header.planar_lags > lag_count)
        throw MalformedHeader("planar_lags exceeds lag count");

    header_bytes = header.byte_size();
    return header;
}

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> input,
                                   const CompressOptions& options)
{
    validate_options(options);
    if (input.size() > kMaxOriginalLength)
        throw std::invalid_argument("compress: input exceeds the 48-bit length field");

    ArchiveHeader header;
    header.centered = options.discovery.mode == CorrelationMode::centered;
    header.channels = std::uint8_t(options.contexts.channels);
    header.table_bits = options.table_bits;
    header.original_length = input.size();

    if (!input.empty()) {
        if (options.forced_lags)
            header.lags = *options.forced_lags;
        else
            header.lags = discover(input, options.discovery).lags;
        if (header.lags.empty())
            header.lags = {1}; // constant or tiny input: adjacent-byte fallback

        const std::size_t lag_count = header.lags.size();
        header.n_total = std::uint8_t(std::min<std::size_t>(options.contexts.n_total, lag_count));
        header.n_pair = std::uint8_t(std::min<std::size_t>(options.contexts.n_pair, header.n_total));
        header.n_triple =
            std::uint8_t(std::min<std::size_t>(options.contexts.n_triple, header.n_pair));
        if (options.contexts.planar) {
            const std::size_t requested = options.contexts.planar_lags == 0
                                              ? lag_count
                                              : options.contexts.planar_lags;
            header.planar_lags = std::uint8_t(std::min(requested, lag_count));
            header.planar = header.planar_lags > 0;
            header.planar_dedup = options.contexts.planar_dedup;
        }
    }

    std::vector<std::uint8_t> out;
    out.reserve(header.byte_size() + input.size() / 2 + 64);
    append_header(out, header);

    if (!input.empty()) {
        Predictor predictor(header.lags, header.family_config(), header.table_bits);
        RangeEncoder encoder(out);
        for (std::uint8_t byte : input) {
            for (int k = 7; k >= 0; --k) {
                const int bit = (byte >> k) & 1;
                const int p1 = predictor.predict();
                encoder.encode(bit, unsigned(p1));
                predictor.update(bit);
            }
        }
        encoder.flush();
    }
    return out;
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> archive)
{
    std::size_t header_bytes = 0;
    const ArchiveHeader header = parse_header(archive, header_bytes);
    if (header.original_length == 0)
        return {};

    Predictor predictor(header.lags, header.family_config(), header.table_bits);
    RangeDecoder decoder(archive.subspan(header_bytes));

    std::vector<std::uint8_t> out;
    out.reserve(std::size_t(std::min<std::uint64_t>(header.original_length, 1u << 26)));
    for (std::uint64_t i = 0; i < header.original_length; ++i) {
        unsigned byte = 0;
        for (int k = 0; k < 8; ++k) {
            const int p1 = predictor.predict();
            const int bit = decoder.decode(unsigned(p1));
            predictor.update(bit);
            byte = (byte << 1) | unsigned(bit);
        }
        out.push_back(std::uint8_t(byte));
    }
    return out;
}

} // namespace accm
