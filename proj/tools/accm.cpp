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

// accm - lossless compressor with automatically discovered context offsets.
//
// Subcommands: analyze, compress, decompress, gen-corpus, bench.
// Exit codes: 0 success, 1 runtime or data error, 2 usage error.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accm/bench.hpp"
#include "accm/container.hpp"
#include "accm/corpus.hpp"
#include "accm/errors.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw accm::Error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw accm::Error("read failure on " + path.string());
    return bytes;
}

void write_file(const fs::path& path, const std::vector<std::uint8_t>& bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw accm::Error("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
    if (!out)
        throw accm::Error("write failure on " + path.string());
}

accm::CorrelationMode parse_mode(const std::string& mode)
{
    return mode == "raw" ? accm::CorrelationMode::raw : accm::CorrelationMode::centered;
}

// --mem is a budget in MiB for the counter table (4 bytes per slot).
unsigned table_bits_for_mem(unsigned mem_mib)
{
    const std::uint64_t slots = std::uint64_t(mem_mib) << 18;
    unsigned bits = slots == 0 ? 10 : unsigned(std::bit_width(slots) - 1);
    return std::clamp(bits, 10u, 30u);
}

struct CompressFlags {
    unsigned n = 10;
    unsigned pair_n = 7;
    unsigned triple_n = 5;
    unsigned channels = 1;
    bool planar = false;
    std::string mode = "centered";
    unsigned mem_mib = 16;
};

accm::CompressOptions to_options(const CompressFlags& flags)
{
    accm::CompressOptions options;
    options.discovery.n = flags.n;
    options.discovery.mode = parse_mode(flags.mode);
    options.contexts.n_total = flags.n;
    options.contexts.n_pair = std::min(flags.pair_n, flags.n);
    options.contexts.n_triple = std::min(flags.triple_n, options.contexts.n_pair);
    options.contexts.channels = flags.channels;
    options.contexts.planar = flags.planar;
    options.contexts.planar_lags = flags.planar ? flags.n : 0;
    options.table_bits = table_bits_for_mem(flags.mem_mib);
    return options;
}

void add_mem_flag(CLI::App* cmd, unsigned& mem_mib)
{
    cmd->add_option("--mem", mem_mib, "counter table budget in MiB")
        ->check(CLI::Range(1u, 4096u))
        ->envname("ACCM_MEM");
}

int cmd_analyze(const fs::path& input, unsigned n, const std::string& mode,
                std::uint32_t min_lag, std::uint32_t max_lag, std::size_t window)
{
    accm::DiscoveryConfig config;
    config.n = n;
    config.min_lag = min_lag;
    config.max_lag = max_lag;
    config.mode = parse_mode(mode);
    if (window != 0)
        config.window_cap = window;

    const std::vector<std::uint8_t> bytes = read_file(input);
    if (bytes.empty())
        throw accm::Error("nothing to analyze: " + input.string() + " is empty");
    const accm::LagSet set = accm::discover(bytes, config);

    std::printf("rank,lag,score\n");
    for (std::size_t i = 0; i < set.lags.size(); ++i)
        std::printf("%zu,%u,%.6f\n", i + 1, set.lags[i], set.scores[i]);
    return 0;
}

int cmd_compress(const fs::path& input, const fs::path& output, const CompressFlags& flags)
{
    const std::vector<std::uint8_t> bytes = read_file(input);
    const std::vector<std::uint8_t> archive = accm::compress(bytes, to_options(flags));
    write_file(output, archive);
    std::printf("%s: %zu -> %zu bytes (%.4f)\n", input.filename().string().c_str(),
                bytes.size(), archive.size(),
                bytes.empty() ? 0.0 : double(archive.size()) / double(bytes.size()));
    return 0;
}

int cmd_decompress(const fs::path& input, const fs::path& output)
{
    const std::vector<std::uint8_t> archive = read_file(input);
    const std::vector<std::uint8_t> bytes = accm::decompress(archive);
    write_file(output, bytes);
    std::printf("%s: %zu -> %zu bytes\n", input.filename().string().c_str(),
                archive.size(), bytes.size());
    return 0;
}

int cmd_gen_corpus(const fs::path& dir, std::uint64_t seed)
{
    fs::create_directories(dir);
    for (const accm::CorpusFile& file : accm::make_corpus(seed)) {
        write_file(dir / file.name, file.bytes);
        std::printf("%s\t%zu bytes\n", file.name.c_str(), file.bytes.size());
    }
    return 0;
}

int cmd_bench(const fs::path& dir, const CompressFlags& flags, const std::string& baseline,
              const fs::path& csv_path)
{
    accm::BenchOptions options;
    options.compress = to_options(flags);
    options.baseline = baseline;

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw accm::Error("no files to bench in " + dir.string());

    std::string csv = accm::bench_csv_header();
    for (const fs::path& path : files) {
        const std::vector<std::uint8_t> bytes = read_file(path);
        for (const accm::BenchRecord& record :
             accm::bench_buffer(path.filename().string(), bytes, options)) {
            csv += accm::bench_csv_row(record);
            std::fprintf(stderr, "%s %s: %llu -> %llu\n", record.file.c_str(),
                         record.config.c_str(), (unsigned long long)record.original,
                         (unsigned long long)record.compressed);
        }
    }

    if (csv_path.empty())
        std::fputs(csv.c_str(), stdout);
    else {
        std::ofstream out(csv_path);
        if (!out)
            throw accm::Error("cannot create " + csv_path.string());
        out << csv;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lossless compression with autocorrelation-discovered contexts"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "rank the most autocorrelated lags");
    fs::path an_input;
    unsigned an_n = 10;
    std::string an_mode = "centered";
    std::uint32_t an_min_lag = 1, an_max_lag = 0;
    std::size_t an_window = 0;
    analyze->add_option("input", an_input, "file to analyze")->required();
    analyze->add_option("--n", an_n, "number of lags")->check(CLI::Range(1u, 255u));
    analyze->add_option("--mode", an_mode)->check(CLI::IsMember({"raw", "centered"}));
    analyze->add_option("--min-lag", an_min_lag)->check(CLI::Range(1u, 0xFFFFFFFFu));
    analyze->add_option("--max-lag", an_max_lag, "0 = auto");
    analyze->add_option("--window", an_window, "analysis window in bytes, 0 = default");

    // compress
    auto* comp = app.add_subcommand("compress", "compress a file");
    fs::path c_in, c_out;
    CompressFlags c_flags;
    comp->add_option("input", c_in)->required();
    comp->add_option("output", c_out)->required();
    comp->add_option("--n", c_flags.n, "lags for context families 1-4")
        ->check(CLI::Range(1u, 255u));
    auto* pair_opt =
        comp->add_option("--pair-n", c_flags.pair_n, "lags for the pairwise family")
            ->check(CLI::Range(0u, 255u));
    auto* triple_opt =
        comp->add_option("--triple-n", c_flags.triple_n, "lags for the three-way family")
            ->check(CLI::Range(0u, 255u));
    comp->add_option("--channels", c_flags.channels)->check(CLI::Range(1u, 255u));
    comp->add_flag("--planar", c_flags.planar, "enable the planar template family");
    comp->add_option("--mode", c_flags.mode)->check(CLI::IsMember({"raw", "centered"}));
    add_mem_flag(comp, c_flags.mem_mib);
    comp->callback([&] {
        if (*pair_opt && c_flags.pair_n > c_flags.n)
            throw CLI::ValidationError("--pair-n must not exceed --n");
        if (*triple_opt && c_flags.triple_n > c_flags.pair_n)
            throw CLI::ValidationError("--triple-n must not exceed --pair-n");
    });

    // decompress
    auto* dec = app.add_subcommand("decompress", "restore a file from an archive");
    fs::path d_in, d_out;
    dec->add_option("input", d_in)->required();
    dec->add_option("output", d_out)->required();

    // gen-corpus
    auto* gen = app.add_subcommand("gen-corpus", "write the deterministic test corpus");
    fs::path g_dir;
    std::uint64_t g_seed = 42;
    gen->add_option("dir", g_dir)->required();
    gen->add_option("--seed", g_seed);

    // bench
    auto* bench = app.add_subcommand("bench", "compress a directory and report CSV");
    fs::path b_dir, b_csv;
    CompressFlags b_flags;
    std::string b_baseline = "adjacent";
    bench->add_option("dir", b_dir)->required();
    bench->add_option("--baseline", b_baseline)
        ->check(CLI::IsMember({"adjacent", "discovered"}));
    bench->add_option("--csv", b_csv, "write the report here instead of stdout");
    bench->add_option("--n", b_flags.n)->check(CLI::Range(1u, 255u));
    bench->add_option("--channels", b_flags.channels)->check(CLI::Range(1u, 255u));
    bench->add_option("--mode", b_flags.mode)->check(CLI::IsMember({"raw", "centered"}));
    add_mem_flag(bench, b_flags.mem_mib);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze)
            return cmd_analyze(an_input, an_n, an_mode, an_min_lag, an_max_lag, an_window);
        if (*comp)
            return cmd_compress(c_in, c_out, c_flags);
        if (*dec)
            return cmd_decompress(d_in, d_out);
        if (*gen)
            return cmd_gen_corpus(g_dir, g_seed);
        if (*bench)
            return cmd_bench(b_dir, b_flags, b_baseline, b_csv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
