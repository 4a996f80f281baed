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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "accm/context_model.hpp"
#include "accm/corpus.hpp"

using namespace accm;

namespace {

LagSet lag_set(std::vector<std::uint32_t> lags)
{
    LagSet set;
    set.lags = std::move(lags);
    return set;
}

HistoryBuffer history_of(std::span<const std::uint8_t> bytes, std::size_t span = 4096)
{
    HistoryBuffer h(span);
    for (std::uint8_t b : bytes)
        h.push(b);
    return h;
}

} // namespace

TEST_CASE("hash_combine implements the stated recurrence")
{
    CHECK(hash_combine({0u}) == (2166136261u ^ 0u) * 16777619u);

    // one step by hand: h = (basis ^ 5) * prime
    const std::uint32_t one = (2166136261u ^ 5u) * 16777619u;
    CHECK(hash_combine({5u}) == one);
    CHECK(hash_combine({5u, 9u}) == (one ^ 9u) * 16777619u);
}

TEST_CASE("hash_combine is order-sensitive and deterministic")
{
    CHECK(hash_combine({1u, 2u}) != hash_combine({2u, 1u}));
    CHECK(hash_combine({3u, 4u, 5u}) == hash_combine({3u, 4u, 5u}));
}

TEST_CASE("channel_of is position mod channels")
{
    CHECK(channel_of(7, 3) == 1);
    CHECK(channel_of(6, 3) == 0);
    CHECK(channel_of(12345, 1) == 0);
}

TEST_CASE("history buffer returns zero before the stream start")
{
    HistoryBuffer h(64);
    CHECK(h.at_offset(1) == 0);
    h.push(0xAA);
    h.push(0xBB);
    CHECK(h.position() == 2);
    CHECK(h.at_offset(1) == 0xBB);
    CHECK(h.at_offset(2) == 0xAA);
    CHECK(h.at_offset(3) == 0);  // before start
    CHECK(h.at_offset(0) == 0);  // degenerate offsets read as zero
    CHECK(h.at_offset(-5) == 0);
}

TEST_CASE("history buffer wraps correctly")
{
    HistoryBuffer h(16);
    for (int i = 0; i < 1000; ++i)
        h.push(std::uint8_t(i));
    for (std::int64_t d = 1; d <= 16; ++d)
        CHECK(h.at_offset(d) == std::uint8_t(1000 - d));
}

TEST_CASE("family counts follow the closed forms")
{
    const std::vector<std::uint8_t> data = make_random(64, 9);
    const HistoryBuffer h = history_of(data);
    const LagSet lags = lag_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

    ContextFamilyConfig config;
    config.n_total = 10;
    config.n_pair = 7;
    config.n_triple = 5;

    const auto ids = general_contexts(h, lags, config);
    CHECK(ids.size() == 71); // 10+10+10+10 + 21 + 10
    CHECK(config.id_count(10) == 71);

    config.n_pair = 2;
    config.n_triple = 2;
    CHECK(general_contexts(h, lags, config).size() == 41); // one pair, no triple
}

TEST_CASE("family counts, exhaustive up to 16")
{
    const std::vector<std::uint8_t> data = make_random(64, 10);
    const HistoryBuffer h = history_of(data);
    std::vector<std::uint32_t> lag_values(16);
    for (unsigned i = 0; i < 16; ++i)
        lag_values[i] = i + 1;
    const LagSet lags = lag_set(lag_values);

    for (unsigned total = 1; total <= 16; ++total)
        for (unsigned pair = 1; pair <= total; ++pair)
            for (unsigned triple = 1; triple <= pair; ++triple) {
                ContextFamilyConfig config;
                config.n_total = total;
                config.n_pair = pair;
                config.n_triple = triple;
                const std::size_t expected = 4 * total + (pair * pair - pair) / 2 +
                                             triple * (triple - 1) * (triple - 2) / 6;
                CHECK(general_contexts(h, lags, config).size() == expected);
            }
}

TEST_CASE("zero history: ids depend only on tag, lag index and channel")
{
    // With an all-zero history every lag reads 0, so two completely different
    // lag sets must produce identical id streams at a byte boundary.
    HistoryBuffer zero_a(8192);
    HistoryBuffer zero_b(8192);
    for (int i = 0; i < 100; ++i) {
        zero_a.push(0);
        zero_b.push(0);
    }

    ContextFamilyConfig config;
    config.n_total = 4;
    config.n_pair = 3;
    config.n_triple = 3;

    const auto a = general_contexts(zero_a, lag_set({1, 5, 9, 13}), config);
    const auto b = general_contexts(zero_b, lag_set({2, 30, 77, 400}), config);
    CHECK(a == b);

    // and the expected values follow from the hash recurrence itself
    for (unsigned k = 0; k < 4; ++k)
        CHECK(a[k] == hash_combine({1u, k, 0u, 1u})); // family 1: value 0, partial 1
    for (unsigned k = 0; k < 4; ++k)
        CHECK(a[4 + k] == hash_combine({2u, k, 1u})); // family 2: (1 - 0) mod 256
    for (unsigned k = 0; k < 4; ++k)
        CHECK(a[8 + k] == hash_combine({3u, k, 1u})); // family 3: (1 + 0) mod 256
    for (unsigned k = 0; k < 4; ++k)
        CHECK(a[12 + k] == hash_combine({4u, k, 0u, 1u}));
}

TEST_CASE("channel component is omitted exactly when channels == 1")
{
    // Constant history: every lag reads the same byte everywhere, so the only
    // thing that can distinguish two positions is the channel term.
    const std::vector<std::uint8_t> data(300, 0x5A);
    ContextFamilyConfig mono;
    mono.n_total = 3;
    mono.n_pair = 2;
    mono.n_triple = 2;
    ContextFamilyConfig rgb = mono;
    rgb.channels = 3;

    const LagSet lags = lag_set({3, 6, 9});
    const HistoryBuffer h297 = history_of(std::span(data).first(297)); // channel 0
    const HistoryBuffer h298 = history_of(std::span(data).first(298)); // channel 1
    const HistoryBuffer h300 = history_of(std::span(data).first(300)); // channel 0

    CHECK(general_contexts(h297, lags, mono) == general_contexts(h298, lags, mono));
    CHECK(general_contexts(h297, lags, rgb) != general_contexts(h298, lags, rgb));
    CHECK(general_contexts(h297, lags, rgb) == general_contexts(h300, lags, rgb));
    CHECK(general_contexts(h297, lags, mono) != general_contexts(h297, lags, rgb));
}

TEST_CASE("planar family emits 8 ids per lag")
{
    const std::vector<std::uint8_t> data = make_random(4096, 33);
    const HistoryBuffer h = history_of(data);

    ContextFamilyConfig config;
    config.planar = true;
    config.planar_lags = 6;
    const LagSet lags = lag_set({96, 192, 288, 1, 5, 7});

    CHECK(planar_contexts(h, lags, config).size() == 48);

    config.planar_dedup = true; // lag 1 duplicates the adjacent-byte context
    CHECK(planar_contexts(h, lags, config).size() == 40);
}

TEST_CASE("planar family requires the planar flag")
{
    const HistoryBuffer h = history_of(make_random(16, 1));
    ContextFamilyConfig config;
    CHECK_THROWS_AS(planar_contexts(h, lag_set({1}), config), std::invalid_argument);
}

TEST_CASE("planar ids on zero history depend only on template and lag index")
{
    HistoryBuffer zero(1 << 15);
    for (int i = 0; i < 10; ++i)
        zero.push(0);

    ContextFamilyConfig config;
    config.planar = true;
    config.planar_lags = 2;
    const auto a = planar_contexts(zero, lag_set({40, 90}), config);
    const auto b = planar_contexts(zero, lag_set({700, 900}), config);
    CHECK(a == b);
    // template 1 of lag index 0: value 0, partial byte 1
    CHECK(a[0] == hash_combine({17u, 0u, 0u, 1u}));
}

TEST_CASE("context generation is deterministic and decoder-symmetric")
{
    const std::vector<std::uint8_t> data = make_random(2000, 55);
    ContextFamilyConfig config;
    config.n_total = 5;
    config.n_pair = 4;
    config.n_triple = 3;
    config.channels = 3;
    config.planar = true;
    config.planar_lags = 3;

    ContextGenerator enc_gen({7, 96, 13, 2, 40}, config);
    ContextGenerator dec_gen({7, 96, 13, 2, 40}, config);
    HistoryBuffer enc_h(4096), dec_h(4096);

    std::vector<ContextId> enc_ids(enc_gen.id_count()), dec_ids(dec_gen.id_count());
    for (std::uint8_t byte : data) {
        enc_gen.begin_byte(enc_h);
        dec_gen.begin_byte(dec_h);
        unsigned partial = 1;
        for (int k = 7; k >= 0; --k) {
            enc_gen.emit(partial, enc_ids);
            dec_gen.emit(partial, dec_ids);
            REQUIRE(enc_ids == dec_ids);
            partial = (partial << 1) | ((byte >> k) & 1);
        }
        enc_h.push(byte);
        dec_h.push(byte);
    }
}

TEST_CASE("different families do not collide systematically")
{
    // ~1.3e5 ids drawn across families and random histories: expect only
    // birthday-level collisions (about C(n,2) / 2^32 ~ 2), never clusters.
    const std::vector<std::uint8_t> data = make_random(1 << 15, 99);
    ContextFamilyConfig config;
    config.n_total = 8;
    config.n_pair = 6;
    config.n_triple = 4;

    ContextGenerator gen({1, 3, 7, 12, 25, 60, 100, 350}, config);
    HistoryBuffer h(1024);

    std::unordered_map<std::uint32_t, int> seen;
    std::size_t ids_drawn = 0;
    std::size_t collisions = 0;
    std::vector<ContextId> ids(gen.id_count());
    for (std::uint8_t byte : data) {
        h.push(byte);
        gen.begin_byte(h);
        gen.emit(1 + (byte >> 1), ids);
        for (ContextId id : ids) {
            ++ids_drawn;
            if (++seen[id] > 1)
                ++collisions;
        }
        if (ids_drawn > 130000)
            break;
    }
    CHECK(collisions < 40);
}
