#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sboxkit/chaos.hpp"
#include "sboxkit/sbox.hpp"

using namespace sboxkit;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = SBOXKIT_DATA_DIR;

// Feeds a fixed bit vector, then zeros forever.
std::function<int()> scripted(std::vector<int> bits) {
    auto pos = std::make_shared<std::size_t>(0);
    auto data = std::make_shared<std::vector<int>>(std::move(bits));
    return [pos, data]() { return *pos < data->size() ? (*data)[(*pos)++] : 0; };
}

}  // namespace

TEST_CASE("permutation check and validation") {
    SBox id = SBox::identity(4);
    CHECK(id.is_permutation());
    CHECK_NOTHROW(id.validate());
    CHECK(id.table.size() == 16);

    SBox dup = id;
    dup.table[3] = dup.table[7];
    CHECK_FALSE(dup.is_permutation());
    CHECK_THROWS_WITH_AS(dup.validate(), doctest::Contains("7"), std::invalid_argument);

    SBox wrong_len = id;
    wrong_len.table.pop_back();
    CHECK_THROWS_AS(wrong_len.validate(), std::invalid_argument);
}

TEST_CASE("inversion") {
    SBox id = SBox::identity(5);
    CHECK(invert(id).table == id.table);

    SBox t2 = load_sbox(kDataDir / "reference_sbox.txt");
    SBox inv = invert(t2);
    CHECK(inv.table[static_cast<std::size_t>(t2.table[0])] == 0);
    for (int x = 0; x < 256; ++x) CHECK(inv(t2(x)) == x);
    CHECK(invert(inv).table == t2.table);

    SBox broken = id;
    broken.table[0] = broken.table[1];
    CHECK_THROWS_AS(invert(broken), std::invalid_argument);
}

TEST_CASE("generation keeps first occurrences in block order") {
    // n=2 blocks: 00 01 00 11 10 -> 0,1,(dup 0),3,2.
    auto next = scripted({0, 0, 0, 1, 0, 0, 1, 1, 1, 0});
    GenerateResult res = generate_sbox(next, 2, 1000);
    CHECK(res.box.table == std::vector<int>{0, 1, 3, 2});
    CHECK(res.blocks_consumed == 5);
    CHECK(res.bits_consumed == 10);
}

TEST_CASE("generation matches a reference dedup on random streams") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> bits;
        for (int i = 0; i < 4000; ++i) bits.push_back(static_cast<int>(rng() & 1u));
        GenerateResult res = generate_sbox(scripted(bits), 4, 4000);

        std::vector<int> expected;
        std::set<int> seen;
        std::size_t blocks = 0;
        for (std::size_t i = 0; expected.size() < 16 && i + 4 <= bits.size(); i += 4) {
            int v = bits[i] * 8 + bits[i + 1] * 4 + bits[i + 2] * 2 + bits[i + 3];
            ++blocks;
            if (seen.insert(v).second) expected.push_back(v);
        }
        REQUIRE(expected.size() == 16);  // overwhelmingly likely in 1000 blocks
        CHECK(res.box.table == expected);
        CHECK(res.blocks_consumed == blocks);
    }
}

TEST_CASE("a broken stream exhausts the bit budget") {
    CHECK_THROWS_AS(generate_sbox(scripted({}), 3, 999), StreamExhausted);
    CHECK(default_max_bits(8) == 64ull * 8 * 256);
}

TEST_CASE("the default parameters reproduce the bundled 8x8 box exactly") {
    GenerateResult res = generate_sbox(default_config(), 8);
    SBox fixture = load_sbox(kDataDir / "reference_sbox.txt");
    CHECK(res.box.table == fixture.table);
    CHECK(res.blocks_consumed == 1289);
    CHECK(res.bits_consumed == 1289 * 8);
}

TEST_CASE("generation is deterministic and bijective across sizes") {
    for (int n : {4, 6, 8}) {
        GenerateResult a = generate_sbox(default_config(), n);
        GenerateResult b = generate_sbox(default_config(), n);
        CHECK(a.box.table == b.box.table);
        CHECK(a.box.is_permutation());
    }
    GenerateResult sw = generate_sbox(swapped_config(), 8);
    CHECK(sw.box.is_permutation());
    CHECK(sw.box.table != generate_sbox(default_config(), 8).box.table);
}

TEST_CASE("block count concentrates near the coupon-collector expectation") {
    // ~2^n * H(2^n) blocks for a uniform stream; 1567.8 at n=8.
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> seed(0.05, 0.95);
    double total_blocks = 0;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        GeneratorConfig cfg = default_config();
        cfg.params1.x0 = seed(rng);
        cfg.params2.x0 = seed(rng);
        GenerateResult res = generate_sbox(cfg, 8);
        CHECK(res.box.is_permutation());
        total_blocks += static_cast<double>(res.blocks_consumed);
    }
    double mean = total_blocks / trials;
    CHECK(mean == doctest::Approx(1567.8).epsilon(0.10));
}

TEST_CASE("family members come from one continuous stream") {
    SBoxFamily fam = generate_family(default_config(), 8, 3);
    REQUIRE(fam.members.size() == 3);
    REQUIRE(fam.bit_offsets.size() == 3);
    CHECK(fam.bit_offsets[0] == 0);
    CHECK(fam.bit_offsets[1] > fam.bit_offsets[0]);
    CHECK(fam.bit_offsets[2] > fam.bit_offsets[1]);
    for (const SBox& m : fam.members) CHECK(m.is_permutation());
    CHECK(fam.members[0].table != fam.members[1].table);

    // First member equals plain generation; the whole family replays.
    CHECK(fam.members[0].table == generate_sbox(default_config(), 8).box.table);
    SBoxFamily again = generate_family(default_config(), 8, 3);
    for (int i = 0; i < 3; ++i) CHECK(fam.members[static_cast<std::size_t>(i)].table ==
                                      again.members[static_cast<std::size_t>(i)].table);
}

TEST_CASE("fixture round trip") {
    fs::path tmp = fs::temp_directory_path() / "sboxkit_test_roundtrip.txt";
    std::mt19937 rng(41);

    SBox b8 = oracles::random_bijective_sbox(8, rng);
    save_sbox(b8, tmp);
    CHECK(load_sbox(tmp).table == b8.table);

    SBox b4 = oracles::random_bijective_sbox(4, rng);
    save_sbox(b4, tmp);
    SBox back = load_sbox(tmp);
    CHECK(back.n == 4);
    CHECK(back.table == b4.table);
    fs::remove(tmp);
}

TEST_CASE("parsing accepts both fixture forms and rejects bad tables") {
    SBox small = parse_sbox("n=2\n0 1 3 2\n");
    CHECK(small.n == 2);
    CHECK(small.table == std::vector<int>{0, 1, 3, 2});

    // A headerless 4-entry table is inferred from the count.
    CHECK(parse_sbox("2 0 1 3").n == 2);

    // Malformed fixtures are runtime_errors (CLI parse exit code); bijectivity
    // violations are invalid_argument (caller-level validation).
    CHECK_THROWS_AS(parse_sbox("0 1 2 hello"), std::runtime_error);
    CHECK_THROWS_AS(parse_sbox("0 1 2"), std::runtime_error);        // not a power of two
    CHECK_THROWS_AS(parse_sbox("0 1 2 7"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(parse_sbox("0 1 2 2"), std::invalid_argument);   // duplicate
    CHECK(parse_sbox("0 1 2 2", false).table == std::vector<int>{0, 1, 2, 2});
    CHECK_THROWS_AS(parse_sbox("0 1 2 7", false), std::runtime_error);  // range always checked
    CHECK_THROWS_AS(load_sbox(kDataDir / "no_such_fixture.txt"), std::runtime_error);
}

TEST_CASE("bundled fixtures are valid and match their known entries") {
    SBox t2 = load_sbox(kDataDir / "reference_sbox.txt");
    CHECK(t2.n == 8);
    CHECK(t2.is_permutation());
    CHECK(t2(0) == 64);

    SBox aes = load_sbox(kDataDir / "aes_sbox.txt");
    CHECK(aes.is_permutation());
    CHECK(aes(0x00) == 0x63);
    CHECK(aes(0x01) == 0x7c);
    CHECK(aes(0x53) == 0xed);
}
