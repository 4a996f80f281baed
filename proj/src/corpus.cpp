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

#include "accm/corpus.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace accm {

namespace {

bool is_primitive(const std::vector<std::uint8_t>& pattern)
{
    const std::size_t p = pattern.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0)
            continue;
        bool repeats = true;
        for (std::size_t i = d; i < p && repeats; ++i)
            repeats = pattern[i] == pattern[i % d];
        if (repeats)
            return false;
    }
    return true;
}

std::uint64_t derive(std::uint64_t seed, const char* label)
{
    std::uint64_t h = seed ^ 0xcbf29ce484222325ull;
    for (const char* c = label; *c; ++c)
        h = (h ^ std::uint64_t(std::uint8_t(*c))) * 0x100000001b3ull;
    return h;
}

} // namespace

std::vector<std::uint8_t> make_periodic(unsigned period, unsigned alphabet,
                                        std::size_t length, std::uint64_t seed)
{
    if (period < 1 || alphabet < 2 || alphabet > 256)
        throw std::invalid_argument("make_periodic: bad period or alphabet");

    SplitMix64 rng(seed);

    // distinct symbol values spread over the byte range
    std::vector<std::uint8_t> symbols(256);
    for (int i = 0; i < 256; ++i)
        symbols[std::size_t(i)] = std::uint8_t(i);
    for (int i = 255; i > 0; --i)
        std::swap(symbols[std::size_t(i)], symbols[rng.below(unsigned(i + 1))]);
    symbols.resize(alphabet);

    std::vector<std::uint8_t> pattern(period);
    do {
        for (auto& b : pattern)
            b = symbols[rng.below(alphabet)];
    } while (period > 1 && !is_primitive(pattern));

    std::vector<std::uint8_t> out(length);
    for (std::size_t i = 0; i < length; ++i)
        out[i] = pattern[i % period];
    return out;
}

std::vector<std::uint8_t> make_raster(unsigned width_px, unsigned rows, unsigned channels,
                                      std::uint64_t seed)
{
    SplitMix64 rng(seed);
    const std::size_t stride = std::size_t(width_px) * channels;

    std::vector<std::uint8_t> base(stride);
    for (auto& b : base)
        b = std::uint8_t(48 + rng.below(160));

    std::vector<std::uint8_t> out;
    out.reserve(stride * rows);
    int drift = 0;
    for (unsigned r = 0; r < rows; ++r) {
        drift += int(rng.below(5)) - 2;
        for (std::size_t c = 0; c < stride; ++c) {
            const int noise = int(rng.below(3)) - 1;
            out.push_back(std::uint8_t(std::clamp(int(base[c]) + drift + noise, 0, 255)));
        }
    }
    return out;
}

std::vector<std::uint8_t> make_markov_text(std::size_t length, std::uint64_t seed)
{
    static const std::array<const char*, 32> words = {
        "the",   "of",    "and",   "to",     "in",    "is",     "that",  "it",
        "signal", "data",  "model", "stream", "byte",  "lag",    "value", "rate",
        "noise", "phase", "field", "state",  "table", "weight", "bit",   "code",
        "was",   "with",  "for",   "as",     "on",    "are",    "this",  "from"};

    SplitMix64 rng(seed);
    std::vector<std::uint8_t> out;
    out.reserve(length + 16);
    std::size_t column = 0;
    std::size_t prev = rng.below(words.size());
    std::size_t sentence = 0;
    while (out.size() < length) {
        // chained choice keeps word-pair statistics non-uniform
        prev = (prev * 7 + rng.below(9)) % words.size();
        for (const char* c = words[prev]; *c; ++c)
            out.push_back(std::uint8_t(*c));
        column += 8;
        ++sentence;
        if (sentence >= 8 + rng.below(8)) {
            out.push_back('.');
            sentence = 0;
        }
        if (column >= 64) {
            out.push_back('\n');
            column = 0;
        } else {
            out.push_back(' ');
        }
    }
    out.resize(length);
    return out;
}

std::vector<std::uint8_t> make_random(std::size_t length, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> out(length);
    for (auto& b : out)
        b = std::uint8_t(rng.next());
    return out;
}

std::vector<CorpusFile> make_corpus(std::uint64_t seed)
{
    // Alphabet sizes keep every adjacent-offset context (single values, pairs
    // and triples of nearby bytes) ambiguous about the phase once the period
    // exceeds the modeled offsets.
    struct PeriodicSpec {
        unsigned period;
        unsigned alphabet;
    };
    static constexpr PeriodicSpec periodic[] = {{2, 2}, {3, 3},   {7, 3},
                                                {13, 2}, {256, 3}, {768, 4}};

    std::vector<CorpusFile> files;
    for (const auto& spec : periodic) {
        const std::string name = "periodic_p" + std::to_string(spec.period) + ".bin";
        files.push_back({name, make_periodic(spec.period, spec.alphabet, 48 * 1024,
                                             derive(seed, name.c_str()))});
    }
    files.push_back({"raster_w64.bin", make_raster(64, 256, 3, derive(seed, "raster_w64"))});
    files.push_back(
        {"raster_w100.bin", make_raster(100, 200, 3, derive(seed, "raster_w100"))});
    files.push_back(
        {"raster_w256.bin", make_raster(256, 256, 3, derive(seed, "raster_w256"))});
    files.push_back(
        {"text_markov.txt", make_markov_text(48 * 1024, derive(seed, "text_markov"))});
    files.push_back(
        {"random_uniform.bin", make_random(64 * 1024, derive(seed, "random_uniform"))});
    return files;
}

} // namespace accm
