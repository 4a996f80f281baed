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

#ifndef ACCM_CORPUS_HPP
#define ACCM_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace accm {

// Deterministic counter-free generator (splitmix64); the standard library
// distributions are not pinned across implementations, this is.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint32_t below(std::uint32_t bound) { return std::uint32_t(next() % bound); }

private:
    std::uint64_t state_;
};

struct CorpusFile {
    std::string name;
    std::vector<std::uint8_t> bytes;
};

// Repeating pattern of the given period over a small alphabet. The pattern is
// guaranteed primitive (no shorter period divides it). Small alphabets keep
// short-range contexts ambiguous about the phase, which is what makes the
// period lag genuinely more informative than adjacent offsets.
std::vector<std::uint8_t> make_periodic(unsigned period, unsigned alphabet,
                                        std::size_t length, std::uint64_t seed);

// Interleaved-channel raster, row-major: strong row-to-row correlation (a
// smooth per-row drift) over per-column base values, plus +-1 noise. The
// dominant autocorrelation lag is width_px * channels.
std::vector<std::uint8_t> make_raster(unsigned width_px, unsigned rows, unsigned channels,
                                      std::uint64_t seed);

// Word-chain filler text wrapped to lines.
std::vector<std::uint8_t> make_markov_text(std::size_t length, std::uint64_t seed);

// Uniform random bytes.
std::vector<std::uint8_t> make_random(std::size_t length, std::uint64_t seed);

// The benchmark corpus: periodic patterns (periods 2, 3, 7, 13, 256, 768),
// three rasters, a text sample and uniform random data, all derived from the
// seed. File names are stable.
std::vector<CorpusFile> make_corpus(std::uint64_t seed);

} // namespace accm

#endif
