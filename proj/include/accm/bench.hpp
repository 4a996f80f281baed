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

#ifndef ACCM_BENCH_HPP
#define ACCM_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "accm/container.hpp"

namespace accm {

struct BenchRecord {
    std::string file;
    std::uint64_t original = 0;
    std::uint64_t compressed = 0;
    double ratio = 0.0; // compressed / original
    double enc_ms = 0.0;
    double dec_ms = 0.0;
    std::string config;
};

struct BenchOptions {
    CompressOptions compress{};
    // "adjacent" runs a second pass with the lags forced to 1..n next to the
    // discovered pass; "discovered" benchmarks the discovered pass alone.
    std::string baseline = "adjacent";
};

// Compresses one buffer under the discovered configuration (and the baseline,
// when distinct), verifying decompress(compress(x)) == x before recording
// anything. A failed round trip throws Error.
std::vector<BenchRecord> bench_buffer(const std::string& name,
                                      std::span<const std::uint8_t> bytes,
                                      const BenchOptions& options);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& record);

} // namespace accm

#endif
