#include "sboxkit/sbox.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace sboxkit {

bool SBox::is_permutation() const {
    if (n < 1 || n > 16) return false;
    if (table.size() != static_cast<std::size_t>(1) << n) return false;
    std::vector<bool> seen(table.size(), false);
    for (int v : table) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

void SBox::validate() const {
    if (n < 1 || n > 16) throw std::invalid_argument("sbox width must be in [1, 16]");
    if (table.size() != static_cast<std::size_t>(1) << n)
        throw std::invalid_argument("sbox table must have 2^n entries");
    std::vector<bool> seen(table.size(), false);
    for (int v : table) {
        if (v < 0 || v >= size())
            throw std::invalid_argument("sbox entry " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("sbox is not bijective: value " + std::to_string(v) +
                                        " occurs more than once");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

SBox SBox::identity(int n) {
    SBox s;
    s.n = n;
    s.table.resize(static_cast<std::size_t>(1) << n);
    std::iota(s.table.begin(), s.table.end(), 0);
    return s;
}

SBox invert(const SBox& sbox) {
    sbox.validate();
    SBox inv;
    inv.n = sbox.n;
    inv.table.resize(sbox.table.size());
    for (int x = 0; x < sbox.size(); ++x)
        inv.table[static_cast<std::size_t>(sbox.table[static_cast<std::size_t>(x)])] = x;
    return inv;
}

std::uint64_t default_max_bits(int n) {
    return 64ull * static_cast<std::uint64_t>(n) * (1ull << n);
}

GenerateResult generate_sbox(const std::function<int()>& next_bit, int n,
                             std::uint64_t max_bits) {
    if (n < 2 || n > 16) throw std::invalid_argument("sbox width must be in [2, 16]");
    const std::size_t want = static_cast<std::size_t>(1) << n;
    if (max_bits < static_cast<std::uint64_t>(n) * want)
        throw std::invalid_argument("max_bits too small to ever complete the table");

    GenerateResult res;
    res.box.n = n;
    res.box.table.reserve(want);
    std::vector<bool> seen(want, false);
    while (res.box.table.size() < want) {
        if (res.bits_consumed + static_cast<std::uint64_t>(n) > max_bits)
            throw StreamExhausted("bit stream exhausted after " +
                                  std::to_string(res.bits_consumed) + " bits with " +
                                  std::to_string(res.box.table.size()) + " of " +
                                  std::to_string(want) + " values collected");
        int d = 0;
        for (int b = 0; b < n; ++b) d = (d << 1) | next_bit();
        res.bits_consumed += static_cast<std::uint64_t>(n);
        ++res.blocks_consumed;
        if (!seen[static_cast<std::size_t>(d)]) {
            seen[static_cast<std::size_t>(d)] = true;
            res.box.table.push_back(d);
        }
    }
    return res;
}

GenerateResult generate_sbox(Generator& gen, int n, std::uint64_t max_bits) {
    if (max_bits == 0) max_bits = default_max_bits(n);
    return generate_sbox([&gen] { return gen.next_bit(); }, n, max_bits);
}

GenerateResult generate_sbox(const GeneratorConfig& config, int n, std::uint64_t max_bits) {
    Generator gen(config);
    return generate_sbox(gen, n, max_bits);
}

SBoxFamily generate_family(const GeneratorConfig& config, int n, std::size_t count) {
    if (count < 1) throw std::invalid_argument("family needs at least one member");
    SBoxFamily family;
    family.provenance = config;
    Generator gen(config);
    std::uint64_t offset = 0;
    for (std::size_t i = 0; i < count; ++i) {
        family.bit_offsets.push_back(offset);
        GenerateResult r = generate_sbox(gen, n);
        offset += r.bits_consumed;
        family.members.push_back(std::move(r.box));
    }
    return family;
}

SBox parse_sbox(const std::string& text, bool require_bijective) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> values;
    int n = 0;
    bool first = true;
    while (in >> tok) {
        if (first && tok.rfind("n=", 0) == 0) {
            n = std::stoi(tok.substr(2));
            first = false;
            continue;
        }
        first = false;
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("sbox fixture: bad token '" + tok + "'");
        }
        if (pos != tok.size()) throw std::runtime_error("sbox fixture: bad token '" + tok + "'");
        values.push_back(v);
    }
    if (n == 0) {
        // infer width from the entry count
        std::size_t sz = values.size();
        while (n < 17 && (static_cast<std::size_t>(1) << n) < sz) ++n;
        if (n == 0 || n > 16 || (static_cast<std::size_t>(1) << n) != sz)
            throw std::runtime_error("sbox fixture: entry count " + std::to_string(sz) +
                                     " is not a power of two in [4, 65536]");
    }
    if (values.size() != static_cast<std::size_t>(1) << n)
        throw std::runtime_error("sbox fixture: expected " +
                                 std::to_string(static_cast<std::size_t>(1) << n) +
                                 " entries, found " + std::to_string(values.size()));
    SBox s;
    s.n = n;
    s.table = std::move(values);
    if (require_bijective) {
        s.validate();
    } else {
        for (int v : s.table)
            if (v < 0 || v >= s.size())
                throw std::runtime_error("sbox fixture: entry " + std::to_string(v) +
                                         " out of range");
    }
    return s;
}

std::string format_sbox(const SBox& sbox) {
    std::ostringstream out;
    int per_row = 16;
    if (sbox.n != 8) {
        out << "n=" << sbox.n << "\n";
        per_row = sbox.size() < 16 ? sbox.size() : 16;
    }
    for (int i = 0; i < sbox.size(); ++i) {
        out << sbox.table[static_cast<std::size_t>(i)];
        out << ((i + 1) % per_row == 0 ? '\n' : ' ');
    }
    return out.str();
}

SBox load_sbox(const std::filesystem::path& path, bool require_bijective) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sbox fixture " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sbox(buf.str(), require_bijective);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void save_sbox(const SBox& sbox, const std::filesystem::path& path) {
    sbox.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write sbox fixture " + path.string());
    out << format_sbox(sbox);
}

}  // namespace sboxkit
