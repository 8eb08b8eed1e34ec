#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sboxkit/sbox.hpp"

namespace sboxkit {

/// A Boolean function of n variables as its 2^n output bits, indexed by the
/// input value.
struct TruthTable {
    int n = 0;
    std::vector<std::uint8_t> bits;  // length 2^n, values 0/1

    int size() const noexcept { return 1 << n; }
};

/// Integer-valued correlation spectrum against all linear functions.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;  // length 2^n, indexed by mask

    /// max |W(w)| over all masks w.
    std::int32_t max_abs() const;
};

/// Parity of the bitwise AND of x and w.
inline int dot_product(unsigned x, unsigned w) noexcept {
    return std::popcount(x & w) & 1;
}

/// Truth table of output bit `bit_index` (1-based, 1 = most significant bit).
TruthTable component_function(const SBox& sbox, int bit_index);

/// Truth table of the XOR of the component functions selected by `mask`;
/// mask bits follow the same MSB-first component order, so the value is just
/// the parity of (S(x) & mask). Zero masks are rejected.
TruthTable linear_combination(const SBox& sbox, unsigned mask);

/// Fast in-place butterfly, O(n 2^n) over the polarity form.
WalshSpectrum walsh_transform(const TruthTable& f);

int hamming_weight(const TruthTable& f);

}  // namespace sboxkit
