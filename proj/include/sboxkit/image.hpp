#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "sboxkit/sbox.hpp"

namespace sboxkit {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, width * height

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    bool operator==(const GrayImage&) const = default;
};

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const GrayImage& image);

/// Pearson chi-square statistic of the 256-bin histogram against the uniform
/// distribution; lower means flatter.
double chi_square_uniformity(const GrayImage& image);

/// Row r is substituted through family.members[r]; the family must have at
/// least `height` members, all 8-bit wide.
GrayImage substitute(const GrayImage& image, const SBoxFamily& family);

/// Inverse of substitute with the same family.
GrayImage unsubstitute(const GrayImage& image, const SBoxFamily& family);

/// Binary PGM (P5), maxval 255, bit-exact round trip.
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& image, const std::filesystem::path& path);

void write_histogram_csv(const Histogram& hist, const std::filesystem::path& path);

}  // namespace sboxkit
