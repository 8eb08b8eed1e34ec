#include "sboxkit/image.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace sboxkit {

Histogram histogram(const GrayImage& image) {
    Histogram hist{};
    for (std::uint8_t p : image.pixels) ++hist[p];
    return hist;
}

double chi_square_uniformity(const GrayImage& image) {
    Histogram hist = histogram(image);
    const double expected = static_cast<double>(image.pixels.size()) / 256.0;
    double chi2 = 0.0;
    for (std::uint64_t c : hist) {
        double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    return chi2;
}

static void check_family(const GrayImage& image, const SBoxFamily& family) {
    if (family.members.size() < static_cast<std::size_t>(image.height))
        throw std::invalid_argument("family has " + std::to_string(family.members.size()) +
                                    " members but the image has " +
                                    std::to_string(image.height) + " rows");
    for (const SBox& s : family.members)
        if (s.n != 8) throw std::invalid_argument("image substitution needs 8-bit members");
}

GrayImage substitute(const GrayImage& image, const SBoxFamily& family) {
    check_family(image, family);
    GrayImage out{image.width, image.height, {}};
    out.pixels.resize(image.pixels.size());
    for (int r = 0; r < image.height; ++r) {
        const SBox& s = family.members[static_cast<std::size_t>(r)];
        const std::size_t base = static_cast<std::size_t>(r) * image.width;
        for (int c = 0; c < image.width; ++c)
            out.pixels[base + c] =
                static_cast<std::uint8_t>(s.table[image.pixels[base + c]]);
    }
    return out;
}

GrayImage unsubstitute(const GrayImage& image, const SBoxFamily& family) {
    check_family(image, family);
    SBoxFamily inverted;
    inverted.provenance = family.provenance;
    inverted.members.reserve(family.members.size());
    for (int r = 0; r < image.height; ++r)
        inverted.members.push_back(invert(family.members[static_cast<std::size_t>(r)]));
    return substitute(image, inverted);
}

// Skips PGM whitespace and '#' comments.
static int next_header_int(std::istream& in, const std::string& what) {
    int c;
    while ((c = in.peek()) != EOF) {
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value;
    if (!(in >> value)) throw std::runtime_error("PGM: missing " + what);
    return value;
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open image " + path.string());
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5') throw std::runtime_error("PGM: not a P5 file: " + path.string());
    int width = next_header_int(in, "width");
    int height = next_header_int(in, "height");
    int maxval = next_header_int(in, "maxval");
    if (width < 1 || height < 1) throw std::runtime_error("PGM: bad dimensions");
    if (maxval != 255) throw std::runtime_error("PGM: only maxval 255 supported");
    in.get();  // single whitespace byte separating header from payload
    GrayImage img{width, height, {}};
    img.pixels.resize(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw std::runtime_error("PGM: truncated payload in " + path.string());
    return img;
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
    if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height)
        throw std::invalid_argument("image pixel buffer does not match dimensions");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write image " + path.string());
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
}

void write_histogram_csv(const Histogram& hist, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write histogram " + path.string());
    out << "value,count\n";
    for (std::size_t v = 0; v < hist.size(); ++v) out << v << ',' << hist[v] << "\n";
}

}  // namespace sboxkit
