#include "sboxkit/boolean.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sboxkit {

std::int32_t WalshSpectrum::max_abs() const {
    std::int32_t m = 0;
    for (std::int32_t v : values) m = std::max(m, v < 0 ? -v : v);
    return m;
}

TruthTable component_function(const SBox& sbox, int bit_index) {
    if (bit_index < 1 || bit_index > sbox.n)
        throw std::out_of_range("component index " + std::to_string(bit_index) +
                                " outside [1, " + std::to_string(sbox.n) + "]");
    const int shift = sbox.n - bit_index;
    TruthTable f;
    f.n = sbox.n;
    f.bits.resize(sbox.table.size());
    for (std::size_t x = 0; x < sbox.table.size(); ++x)
        f.bits[x] = static_cast<std::uint8_t>((sbox.table[x] >> shift) & 1);
    return f;
}

TruthTable linear_combination(const SBox& sbox, unsigned mask) {
    if (mask == 0) throw std::invalid_argument("zero component mask");
    if (mask >= (1u << sbox.n)) throw std::out_of_range("component mask exceeds 2^n");
    TruthTable f;
    f.n = sbox.n;
    f.bits.resize(sbox.table.size());
    for (std::size_t x = 0; x < sbox.table.size(); ++x)
        f.bits[x] = static_cast<std::uint8_t>(
            dot_product(static_cast<unsigned>(sbox.table[x]), mask));
    return f;
}

WalshSpectrum walsh_transform(const TruthTable& f) {
    WalshSpectrum spec;
    spec.n = f.n;
    spec.values.resize(f.bits.size());
    for (std::size_t x = 0; x < f.bits.size(); ++x) spec.values[x] = f.bits[x] ? -1 : 1;
    for (std::size_t h = 1; h < spec.values.size(); h <<= 1) {
        for (std::size_t i = 0; i < spec.values.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                std::int32_t a = spec.values[j];
                std::int32_t b = spec.values[j + h];
                spec.values[j] = a + b;
                spec.values[j + h] = a - b;
            }
        }
    }
    return spec;
}

int hamming_weight(const TruthTable& f) {
    int w = 0;
    for (std::uint8_t b : f.bits) w += b;
    return w;
}

}  // namespace sboxkit
