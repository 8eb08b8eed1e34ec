#include "sboxkit/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace sboxkit {

int avalanche_count(const TruthTable& f, unsigned delta) {
    int count = 0;
    for (std::size_t x = 0; x < f.bits.size(); ++x)
        count += f.bits[x] ^ f.bits[x ^ delta];
    return count;
}

int nonlinearity(const TruthTable& f) {
    return (1 << (f.n - 1)) - walsh_transform(f).max_abs() / 2;
}

int dynamic_distance(const TruthTable& f) {
    const int half = 1 << (f.n - 1);
    int worst = 0;
    for (int b = 0; b < f.n; ++b)
        worst = std::max(worst, std::abs(half - avalanche_count(f, 1u << b)) / 2);
    return worst;
}

BijectivityEvidence bijectivity(const SBox& sbox) {
    BijectivityEvidence ev;
    ev.permutation = sbox.is_permutation();
    ev.weights.assign(static_cast<std::size_t>(1) << sbox.n, 0);
    const int half = 1 << (sbox.n - 1);
    ev.balanced = true;
    for (unsigned a = 1; a < (1u << sbox.n); ++a) {
        int w = hamming_weight(linear_combination(sbox, a));
        ev.weights[a] = w;
        if (w != half) ev.balanced = false;
    }
    return ev;
}

std::vector<std::vector<double>> sac_matrix(const SBox& sbox) {
    const int n = sbox.n;
    const double scale = 1.0 / (1 << n);
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int out = 0; out < n; ++out) {
        TruthTable f = component_function(sbox, out + 1);
        for (int in = 0; in < n; ++in) {
            unsigned e = 1u << (n - 1 - in);
            m[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)] =
                avalanche_count(f, e) * scale;
        }
    }
    return m;
}

static double sac_average(const TruthTable& f) {
    long total = 0;
    for (int b = 0; b < f.n; ++b) total += avalanche_count(f, 1u << b);
    return static_cast<double>(total) / (static_cast<double>(f.n) * f.size());
}

BicResult bic(const SBox& sbox) {
    const int n = sbox.n;
    BicResult r;
    r.nl.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    r.sac.assign(static_cast<std::size_t>(n),
                 std::vector<double>(static_cast<std::size_t>(n), 0.0));
    r.dd.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<TruthTable> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) comps.push_back(component_function(sbox, i));

    double nl_sum = 0.0;
    double sac_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            TruthTable g;
            g.n = n;
            g.bits.resize(comps[0].bits.size());
            for (std::size_t x = 0; x < g.bits.size(); ++x)
                g.bits[x] = comps[static_cast<std::size_t>(i)].bits[x] ^
                            comps[static_cast<std::size_t>(j)].bits[x];
            int nl_ij = nonlinearity(g);
            double sac_ij = sac_average(g);
            int dd_ij = dynamic_distance(g);
            auto si = static_cast<std::size_t>(i);
            auto sj = static_cast<std::size_t>(j);
            r.nl[si][sj] = r.nl[sj][si] = nl_ij;
            r.sac[si][sj] = r.sac[sj][si] = sac_ij;
            r.dd[si][sj] = r.dd[sj][si] = dd_ij;
            nl_sum += 2.0 * nl_ij;
            sac_sum += 2.0 * sac_ij;
            r.dd_max = std::max(r.dd_max, dd_ij);
        }
    }
    const double off_diag = static_cast<double>(n) * (n - 1);
    r.nl_mean = nl_sum / off_diag;
    r.sac_mean = sac_sum / off_diag;
    return r;
}

DdtResult ddt(const SBox& sbox) {
    const std::size_t size = sbox.table.size();
    DdtResult r;
    r.table.assign(size, std::vector<int>(size, 0));
    for (std::size_t dx = 0; dx < size; ++dx) {
        auto& row = r.table[dx];
        for (std::size_t x = 0; x < size; ++x)
            ++row[static_cast<std::size_t>(sbox.table[x] ^ sbox.table[x ^ dx])];
        if (dx != 0) r.max_count = std::max(r.max_count, *std::max_element(row.begin(), row.end()));
    }
    r.dp = static_cast<double>(r.max_count) / static_cast<double>(size);
    return r;
}

LatResult lat(const SBox& sbox) {
    const std::size_t size = sbox.table.size();
    const double norm = static_cast<double>(size);
    LatResult r;
    r.table.assign(size, std::vector<std::int32_t>(size, 0));
    r.min_combination_nl = 1 << (sbox.n - 1);
    // column b of the LAT is the Walsh spectrum of the b-combination
    for (unsigned b = 1; b < size; ++b) {
        WalshSpectrum spec = walsh_transform(linear_combination(sbox, b));
        r.min_combination_nl =
            std::min(r.min_combination_nl, (1 << (sbox.n - 1)) - spec.max_abs() / 2);
        for (std::size_t a = 0; a < size; ++a) r.table[a][b] = spec.values[a];
    }
    // a-column for b=0 is the spectrum of the constant-zero function
    r.table[0][0] = static_cast<std::int32_t>(size);

    double sum_sq = 0.0;
    double max_sq = 0.0;
    for (std::size_t a = 1; a < size; ++a) {
        for (std::size_t b = 1; b < size; ++b) {
            double c = r.table[a][b] / norm;
            double c2 = c * c;
            sum_sq += c2;
            max_sq = std::max(max_sq, c2);
        }
    }
    r.max_sq_correlation = max_sq;
    r.mean_sq_nonzero = sum_sq / (static_cast<double>(size - 1) * (size - 1));
    return r;
}

CriteriaReport full_report(const SBox& sbox) {
    CriteriaReport rep;
    rep.n = sbox.n;

    rep.bijective_evidence = bijectivity(sbox);
    rep.bijective = rep.bijective_evidence.passed();

    rep.nonlinearities.reserve(static_cast<std::size_t>(sbox.n));
    int nl_sum = 0;
    for (int i = 1; i <= sbox.n; ++i) {
        int v = nonlinearity(component_function(sbox, i));
        rep.nonlinearities.push_back(v);
        nl_sum += v;
    }
    rep.nl_min = *std::min_element(rep.nonlinearities.begin(), rep.nonlinearities.end());
    rep.nl_max = *std::max_element(rep.nonlinearities.begin(), rep.nonlinearities.end());
    rep.nl_avg = static_cast<double>(nl_sum) / sbox.n;

    rep.sac = sac_matrix(sbox);
    rep.sac_min = rep.sac[0][0];
    rep.sac_max = rep.sac[0][0];
    double sac_sum = 0.0;
    for (const auto& row : rep.sac) {
        for (double v : row) {
            rep.sac_min = std::min(rep.sac_min, v);
            rep.sac_max = std::max(rep.sac_max, v);
            sac_sum += v;
        }
    }
    rep.sac_avg = sac_sum / (static_cast<double>(sbox.n) * sbox.n);

    BicResult b = bic(sbox);
    rep.bic_nl_matrix = std::move(b.nl);
    rep.bic_nl_mean = b.nl_mean;
    rep.bic_sac_matrix = std::move(b.sac);
    rep.bic_sac_mean = b.sac_mean;
    rep.bic_dd_matrix = std::move(b.dd);
    rep.bic_dd_max = b.dd_max;

    DdtResult d = ddt(sbox);
    rep.ddt = std::move(d.table);
    rep.ddt_max = d.max_count;
    rep.dp = d.dp;

    LatResult l = lat(sbox);
    rep.lat_sq_max = l.max_sq_correlation;
    rep.lat_sq_mean_nonzero = l.mean_sq_nonzero;

    return rep;
}

}  // namespace sboxkit
