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

#include "accm/bench.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "accm/errors.hpp"

namespace accm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe(const CompressOptions& options, bool forced)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s(n=%u,pair=%u,triple=%u,ch=%u,%s%s)",
                  forced ? "adjacent" : "discovered", options.contexts.n_total,
                  options.contexts.n_pair, options.contexts.n_triple,
                  options.contexts.channels,
                  options.discovery.mode == CorrelationMode::centered ? "centered" : "raw",
                  options.contexts.planar ? ",planar" : "");
    return buf;
}

BenchRecord run_one(const std::string& name, std::span<const std::uint8_t> bytes,
                    const CompressOptions& options, bool forced)
{
    BenchRecord record;
    record.file = name;
    record.original = bytes.size();
    record.config = describe(options, forced);

    const auto enc_start = Clock::now();
    const std::vector<std::uint8_t> archive = compress(bytes, options);
    record.enc_ms = ms_since(enc_start);
    record.compressed = archive.size();
    record.ratio = bytes.empty() ? 0.0 : double(archive.size()) / double(bytes.size());

    const auto dec_start = Clock::now();
    const std::vector<std::uint8_t> restored = decompress(archive);
    record.dec_ms = ms_since(dec_start);

    if (restored.size() != bytes.size() ||
        !std::equal(restored.begin(), restored.end(), bytes.begin()))
        throw Error("round trip mismatch for " + name + " (" + record.config + ")");
    return record;
}

} // namespace

std::vector<BenchRecord> bench_buffer(const std::string& name,
                                      std::span<const std::uint8_t> bytes,
                                      const BenchOptions& options)
{
    if (options.baseline != "adjacent" && options.baseline != "discovered")
        throw std::invalid_argument("bench: baseline must be adjacent or discovered");

    std::vector<BenchRecord> records;
    records.push_back(run_one(name, bytes, options.compress, false));

    if (options.baseline == "adjacent") {
        CompressOptions adjacent = options.compress;
        std::vector<std::uint32_t> lags(adjacent.contexts.n_total);
        std::iota(lags.begin(), lags.end(), 1u);
        adjacent.forced_lags = std::move(lags);
        records.push_back(run_one(name, bytes, adjacent, true));
    }
    return records;
}

std::string bench_csv_header()
{
    return "file,original,compressed,ratio,enc_ms,dec_ms,config\n";
}

std::string bench_csv_row(const BenchRecord& record)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%llu,%llu,%.6f,%.3f,%.3f,%s\n",
                  record.file.c_str(), (unsigned long long)record.original,
                  (unsigned long long)record.compressed, record.ratio, record.enc_ms,
                  record.dec_ms, record.config.c_str());
    return buf;
}

} // namespace accm
