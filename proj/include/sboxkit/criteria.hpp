#pragma once

#include <cstdint>
#include <vector>

#include "sboxkit/boolean.hpp"
#include "sboxkit/sbox.hpp"

namespace sboxkit {

struct BijectivityEvidence {
    bool balanced = false;        // every nonzero combination has weight 2^{n-1}
    bool permutation = false;     // table is a permutation of [0, 2^n)
    std::vector<int> weights;     // weight per mask, index 1..2^n-1 (index 0 unused)

    bool passed() const noexcept { return balanced && permutation; }
};

/// Number of inputs x with f(x) != f(x ^ delta).
int avalanche_count(const TruthTable& f, unsigned delta);

/// 2^{n-1} - max|WHT|/2: minimum Hamming distance to the affine functions.
int nonlinearity(const TruthTable& f);

/// Worst single-bit-flip deviation: max over wt(d)=1 of |2^{n-1} - sum|/2.
int dynamic_distance(const TruthTable& f);

/// Balance of every nonzero linear combination, cross-checked against the
/// direct permutation test.
BijectivityEvidence bijectivity(const SBox& sbox);

/// sac[i][j] = probability that output bit i+1 flips when input bit j+1 is
/// complemented (both 1-based MSB-first). Rows index output bits, matching
/// the reference table layout.
std::vector<std::vector<double>> sac_matrix(const SBox& sbox);

struct BicResult {
    std::vector<std::vector<int>> nl;       // nonlinearity of f_i ^ f_j, diagonal 0
    std::vector<std::vector<double>> sac;   // mean single-bit flip probability of f_i ^ f_j
    std::vector<std::vector<int>> dd;       // dynamic distance of f_i ^ f_j
    double nl_mean = 0.0;                   // off-diagonal means
    double sac_mean = 0.0;
    int dd_max = 0;
};

BicResult bic(const SBox& sbox);

struct DdtResult {
    std::vector<std::vector<int>> table;  // table[dx][dy], 2^n x 2^n
    int max_count = 0;                    // max over dx != 0
    double dp = 0.0;                      // max_count / 2^n
};

DdtResult ddt(const SBox& sbox);

struct LatResult {
    /// lat[a][b] = sum_x (-1)^{a.x ^ b.S(x)}, the Walsh coefficient of the
    /// b-combination at mask a.
    std::vector<std::vector<std::int32_t>> table;
    double max_sq_correlation = 0.0;   // max over a,b != 0 of (lat/2^n)^2
    double mean_sq_nonzero = 0.0;      // mean of squared correlation over a,b != 0
    int min_combination_nl = 0;        // min nonlinearity over all 2^n-1 combinations
};

LatResult lat(const SBox& sbox);

struct CriteriaReport {
    int n = 0;
    bool bijective = false;
    BijectivityEvidence bijective_evidence;
    std::vector<int> nonlinearities;
    int nl_min = 0;
    int nl_max = 0;
    double nl_avg = 0.0;
    std::vector<std::vector<double>> sac;
    double sac_min = 0.0;
    double sac_max = 0.0;
    double sac_avg = 0.0;
    std::vector<std::vector<int>> bic_nl_matrix;
    double bic_nl_mean = 0.0;
    std::vector<std::vector<double>> bic_sac_matrix;
    double bic_sac_mean = 0.0;
    std::vector<std::vector<int>> bic_dd_matrix;
    int bic_dd_max = 0;
    std::vector<std::vector<int>> ddt;
    int ddt_max = 0;
    double dp = 0.0;
    double lat_sq_max = 0.0;           // MELP as max squared correlation
    double lat_sq_mean_nonzero = 0.0;
};

/// Runs all six criteria. Non-bijective input is analyzed anyway with the
/// bijective flag cleared.
CriteriaReport full_report(const SBox& sbox);

}  // namespace sboxkit
