#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sboxkit/chaos.hpp"

namespace sboxkit {

/// Thrown when the bit stream fails to produce 2^n distinct values within the
/// allowed budget (a broken or heavily biased stream).
struct StreamExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bijective lookup table over n-bit words.
struct SBox {
    int n = 8;
    std::vector<int> table;  // length 2^n, entries a permutation of [0, 2^n)

    int size() const noexcept { return 1 << n; }
    int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }

    bool is_permutation() const;
    /// Throws std::invalid_argument naming the first duplicated value.
    void validate() const;

    static SBox identity(int n);
};

/// T with T[s[x]] = x. Rejects non-bijective input.
SBox invert(const SBox& sbox);

struct GenerateResult {
    SBox box;
    std::uint64_t bits_consumed = 0;
    std::uint64_t blocks_consumed = 0;
};

/// Core construction: consume the stream in n-bit blocks (MSB first), keep
/// first occurrences only, stop at 2^n distinct values. Throws
/// StreamExhausted after max_bits bits without completing the table.
GenerateResult generate_sbox(const std::function<int()>& next_bit, int n,
                             std::uint64_t max_bits);

/// Convenience: same, fed by a live generator.
GenerateResult generate_sbox(Generator& gen, int n, std::uint64_t max_bits = 0);

/// Fresh generator from config. max_bits of 0 selects the default budget of
/// 64 * n * 2^n bits.
GenerateResult generate_sbox(const GeneratorConfig& config, int n,
                             std::uint64_t max_bits = 0);

std::uint64_t default_max_bits(int n);

struct SBoxFamily {
    std::vector<SBox> members;
    GeneratorConfig provenance;
    std::vector<std::uint64_t> bit_offsets;  // stream position at which each member started
};

/// Generates `count` boxes from one continuous stream (no reseeding between
/// members).
SBoxFamily generate_family(const GeneratorConfig& config, int n, std::size_t count);

/// Fixture format: for n=8 a 16x16 whitespace-separated decimal grid; other
/// sizes carry an "n=K" header line followed by the flat table. Load accepts
/// either form and validates bijectivity unless require_bijective is cleared
/// (analysis tooling wants to load a broken table and flag it).
SBox load_sbox(const std::filesystem::path& path, bool require_bijective = true);
void save_sbox(const SBox& sbox, const std::filesystem::path& path);

SBox parse_sbox(const std::string& text, bool require_bijective = true);
std::string format_sbox(const SBox& sbox);

}  // namespace sboxkit
