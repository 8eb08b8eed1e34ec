#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sboxkit/boolean.hpp"
#include "sboxkit/criteria.hpp"
#include "sboxkit/sbox.hpp"

using namespace sboxkit;

namespace {

const std::filesystem::path kDataDir = SBOXKIT_DATA_DIR;

SBox xor_constant(const SBox& s, int c) {
    SBox out = s;
    for (int& v : out.table) v ^= c;
    return out;
}

}  // namespace

TEST_CASE("avalanche count and nonlinearity basics") {
    SBox id = SBox::identity(3);
    TruthTable msb = component_function(id, 1);
    // Flipping the top input bit always flips the top output bit of identity.
    CHECK(avalanche_count(msb, 4) == 8);
    CHECK(avalanche_count(msb, 1) == 0);
    CHECK(nonlinearity(msb) == 0);  // a linear function
    CHECK(dynamic_distance(msb) == 2);  // |2^{n-1} - 2^n| / 2 in the worst direction

    // x1*x2 satisfies the SAC exactly, so its dynamic distance is zero.
    TruthTable bent{2, {0, 0, 0, 1}};
    CHECK(avalanche_count(bent, 1) == 2);
    CHECK(avalanche_count(bent, 2) == 2);
    CHECK(dynamic_distance(bent) == 0);
    CHECK(nonlinearity(bent) == 1);
}

TEST_CASE("nonlinearity agrees with the affine-distance enumeration") {
    // Every function of 3 variables.
    for (unsigned code = 0; code < 256; ++code) {
        TruthTable f{3, std::vector<std::uint8_t>(8)};
        for (int x = 0; x < 8; ++x) f.bits[static_cast<std::size_t>(x)] = (code >> x) & 1u;
        REQUIRE(nonlinearity(f) == oracles::naive_nonlinearity(f));
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        SBox box = oracles::random_bijective_sbox(8, rng);
        TruthTable f = component_function(box, 1 + trial % 8);
        REQUIRE(nonlinearity(f) == oracles::naive_nonlinearity(f));
    }
}

TEST_CASE("bijectivity evidence cross-checks both definitions") {
    SBox t2 = load_sbox(kDataDir / "reference_sbox.txt");
    BijectivityEvidence ev = bijectivity(t2);
    CHECK(ev.passed());
    CHECK(ev.balanced);
    CHECK(ev.permutation);
    REQUIRE(ev.weights.size() == 256);
    for (int mask = 1; mask < 256; ++mask)
        CHECK(ev.weights[static_cast<std::size_t>(mask)] == 128);

    SBox broken{8, std::vector<int>(256, 0)};
    for (int i = 0; i < 256; ++i) broken.table[static_cast<std::size_t>(i)] = i;
    broken.table[9] = broken.table[8];
    BijectivityEvidence bad = bijectivity(broken);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.balanced);
    CHECK_FALSE(bad.permutation);
}

TEST_CASE("sac matrix layout: rows are output bits, columns input bits") {
    // Identity: output bit i flips exactly when input bit i does.
    SBox id = SBox::identity(4);
    auto sac = sac_matrix(id);
    REQUIRE(sac.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(sac[i][j] == (i == j ? 1.0 : 0.0));
}

TEST_CASE("sac matrix matches a direct flip count") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        SBox box = oracles::random_bijective_sbox(5, rng);
        auto sac = sac_matrix(box);
        for (int i = 0; i < 5; ++i) {
            TruthTable f = component_function(box, i + 1);
            for (int j = 0; j < 5; ++j) {
                unsigned ej = 1u << (5 - 1 - j);
                double expect = oracles::naive_avalanche_count(f, ej) / 32.0;
                REQUIRE(sac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                        doctest::Approx(expect));
            }
        }
    }
}

TEST_CASE("bic matrices are symmetric with zero diagonal") {
    SBox t2 = load_sbox(kDataDir / "reference_sbox.txt");
    BicResult b = bic(t2);
    REQUIRE(b.nl.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(b.nl[i][i] == 0);
        CHECK(b.dd[i][i] == 0);
        CHECK(b.sac[i][i] == 0.0);
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(b.nl[i][j] == b.nl[j][i]);
            CHECK(b.dd[i][j] == b.dd[j][i]);
            CHECK(b.sac[i][j] == doctest::Approx(b.sac[j][i]));
        }
    }

    // Off-diagonal entries equal the direct computation on f_i ^ f_j.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            TruthTable fi = component_function(t2, i + 1);
            TruthTable fj = component_function(t2, j + 1);
            TruthTable x{8, fi.bits};
            for (int k = 0; k < 256; ++k)
                x.bits[static_cast<std::size_t>(k)] ^= fj.bits[static_cast<std::size_t>(k)];
            CHECK(b.nl[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  oracles::naive_nonlinearity(x));
            CHECK(b.dd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  oracles::naive_dynamic_distance(x));
        }
}

TEST_CASE("ddt structure on the identity and a permutation") {
    SBox id = SBox::identity(4);
    DdtResult d = ddt(id);
    CHECK(d.max_count == 16);
    CHECK(d.dp == 1.0);
    for (int dx = 0; dx < 16; ++dx)
        for (int dy = 0; dy < 16; ++dy)
            CHECK(d.table[static_cast<std::size_t>(dx)][static_cast<std::size_t>(dy)] ==
                  (dx == dy ? 16 : 0));

    std::mt19937 rng(19);
    SBox box = oracles::random_bijective_sbox(6, rng);
    DdtResult r = ddt(box);
    CHECK(r.table[0][0] == 64);
    for (int dx = 1; dx < 64; ++dx) {
        CHECK(r.table[static_cast<std::size_t>(dx)][0] == 0);  // bijective: dy=0 impossible
        int row_sum = 0;
        for (int dy = 0; dy < 64; ++dy) {
            int c = r.table[static_cast<std::size_t>(dx)][static_cast<std::size_t>(dy)];
            CHECK(c % 2 == 0);  // pairs (x, x^dx) contribute twice
            row_sum += c;
        }
        CHECK(row_sum == 64);
    }
}

TEST_CASE("lat extremes") {
    SBox id = SBox::identity(4);
    LatResult l = lat(id);
    CHECK(l.max_sq_correlation == 1.0);   // a.x agrees with a.S(x) perfectly
    CHECK(l.min_combination_nl == 0);
    // Known relation: max |LAT| over nonzero pairs = 2 * (2^{n-1} - min NL).
    SBox t2 = load_sbox(kDataDir / "reference_sbox.txt");
    LatResult lt = lat(t2);
    int max_abs = 0;
    for (int a = 0; a < 256; ++a)
        for (int b = 1; b < 256; ++b)
            max_abs = std::max(max_abs, std::abs(lt.table[static_cast<std::size_t>(a)]
                                                         [static_cast<std::size_t>(b)]));
    CHECK(max_abs == 2 * (128 - lt.min_combination_nl));
}

TEST_CASE("mean squared correlation over nonzero pairs is exactly 1/(2^n - 1)") {
    // A Parseval consequence for any bijective S-box.
    std::mt19937 rng(37);
    for (int n : {4, 6, 8}) {
        SBox box = oracles::random_bijective_sbox(n, rng);
        LatResult l = lat(box);
        CHECK(l.mean_sq_nonzero == doctest::Approx(1.0 / ((1 << n) - 1)).epsilon(1e-12));
    }
}

TEST_CASE("criteria agree with brute force on random 4-bit boxes") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        SBox box = oracles::random_bijective_sbox(4, rng);
        CriteriaReport rep = full_report(box);
        CHECK(rep.bijective);

        auto slow_ddt = oracles::naive_ddt(box);
        int slow_max = 0;
        for (int dx = 1; dx < 16; ++dx)
            for (int dy = 0; dy < 16; ++dy)
                slow_max = std::max(slow_max, slow_ddt[static_cast<std::size_t>(dx)]
                                                      [static_cast<std::size_t>(dy)]);
        REQUIRE(rep.ddt == slow_ddt);
        REQUIRE(rep.ddt_max == slow_max);
        REQUIRE(rep.dp == doctest::Approx(slow_max / 16.0));

        auto slow_lat = oracles::naive_lat(box);
        double slow_melp = 0;
        for (int a = 0; a < 16; ++a)
            for (int b = 1; b < 16; ++b) {
                double c = slow_lat[static_cast<std::size_t>(a)]
                                   [static_cast<std::size_t>(b)] / 16.0;
                slow_melp = std::max(slow_melp, c * c);
            }
        REQUIRE(rep.lat_sq_max == doctest::Approx(slow_melp));

        for (int i = 0; i < 4; ++i) {
            TruthTable f = component_function(box, i + 1);
            REQUIRE(rep.nonlinearities[static_cast<std::size_t>(i)] ==
                    oracles::naive_nonlinearity(f));
        }
    }
}

TEST_CASE("xor-ing a constant into the output changes nothing measured") {
    SBox t2 = load_sbox(kDataDir / "reference_sbox.txt");
    CriteriaReport base = full_report(t2);
    std::mt19937 rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        SBox shifted = xor_constant(t2, static_cast<int>(rng() & 0xffu));
        CriteriaReport rep = full_report(shifted);
        CHECK(rep.bijective);
        CHECK(rep.nonlinearities == base.nonlinearities);
        CHECK(rep.ddt == base.ddt);
        CHECK(rep.dp == base.dp);
        CHECK(rep.lat_sq_max == doctest::Approx(base.lat_sq_max));
        CHECK(rep.bic_nl_matrix == base.bic_nl_matrix);
    }
}

TEST_CASE("full report flags non-bijective input but still runs") {
    SBox broken{4, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 0}};
    CriteriaReport rep = full_report(broken);
    CHECK_FALSE(rep.bijective);
    CHECK(rep.n == 4);
    CHECK(rep.nonlinearities.size() == 4);
}
