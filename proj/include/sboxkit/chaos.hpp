#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sboxkit {

/// Fractional part mapped into [0,1), defined for negative inputs as well.
/// v - floor(v) can round to exactly 1.0 for tiny negative v; that case is
/// mapped to 0.0 so the result is always strictly below 1.
inline double mod1(double v) noexcept {
    double r = v - std::floor(v);
    return r >= 1.0 ? 0.0 : r;
}

struct Interval {
    double lo;
    double hi;
    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

struct LogisticParams {
    double alpha = 4.0;  // bifurcation parameter, must lie in [-2, 4]
    double x0 = 0.5;     // initial condition, must lie in the invariant interval

    void validate() const;
};

/// Invariant interval of the map for a given alpha: [0,1] for alpha >= 0,
/// [-0.5,1.5] for alpha < 0. Throws std::domain_error for alpha outside [-2,4].
Interval invariant_interval(double alpha);

/// One iteration x -> alpha*x*(1-x), evaluated as (alpha*x)*(1-x).
/// Throws std::domain_error if x is outside the invariant interval.
double logistic_step(const LogisticParams& params, double x);

struct FixedPoint {
    double value;
    bool repulsive;  // |f'(x*)| > 1
};

/// Fixed points of the map: x*=0 always, x*=(alpha-1)/alpha when alpha != 0.
std::vector<FixedPoint> fixed_points(double alpha);

/// Long-run average of ln|f'(x)| along the orbit. Returns -infinity if the
/// orbit hits x = 0.5 exactly (derivative zero); retry with a perturbed x0.
double lyapunov_exponent(const LogisticParams& params, long n_iter, long burn_in);

struct BifurcationSlice {
    double alpha;
    std::vector<double> orbit;
};

/// Sweeps alpha over [alpha_min, alpha_max] in alpha_steps points, iterating
/// from a fixed interior x0, discarding burn_in samples and keeping `keep`.
std::vector<BifurcationSlice> bifurcation_scan(double alpha_min, double alpha_max,
                                               int alpha_steps, long burn_in, int keep);

struct LagSpec {
    std::vector<int> lags;  // strictly increasing, all >= 1; may be empty

    void validate() const;
    int max_lag() const noexcept;
};

/// mod1 of the sum of lagged states plus the current state. `history` holds
/// consecutive orbit values with history.back() the current one, so
/// history[size-1-k] is the state k iterations back. Accumulation order is
/// fixed: largest lag first, current state last, one mod1 at the end.
/// Throws std::logic_error if history is shorter than max_lag+1.
double lag_series_sum(std::span<const double> history, const LagSpec& lags);

struct GeneratorConfig {
    LogisticParams params1;
    LogisticParams params2;
    LagSpec lags1;
    LagSpec lags2;
    long burn_in = 0;

    void validate() const;
};

/// The parameter set that reproduces the bundled reference 8x8 box bit-for-bit:
/// series 1 = (alpha 4, x0 0.8147, lags {5,10}),
/// series 2 = (alpha -2, x0 0.9058, lags {6,10}).
GeneratorConfig default_config();

/// Same lags and seeds with the two alphas exchanged between the series.
GeneratorConfig swapped_config();

/// One logistic orbit plus the ring buffer of delayed states feeding a lag
/// series. Fully warmed on construction: burn_in discarded iterations, then
/// max_lag+1 states buffered, so lag_sum() is valid immediately.
class LagSeries {
  public:
    LagSeries(const LogisticParams& params, const LagSpec& lags, long burn_in);

    double current() const noexcept { return buf_[head_]; }
    double lag_sum() const;
    void step();

  private:
    LogisticParams params_;
    std::vector<int> lags_desc_;  // largest first, fixed summation order
    std::vector<double> buf_;     // ring of the last max_lag+1 orbit values
    std::size_t head_ = 0;        // index of the current value

    double at_lag(int k) const noexcept;
};

struct TraceRow {
    std::uint64_t i;
    double x;  // series-1 orbit value at emission time
    double m1;
    double m2;
    double z;
};

/// The two coupled lag series and the quantizer. next_z() evaluates both lag
/// sums at the current state, combines them mod 1, then advances both orbits
/// exactly one step.
class Generator {
  public:
    explicit Generator(GeneratorConfig config);

    double next_z();
    TraceRow next_trace();
    int next_bit() { return next_z() <= 0.5 ? 0 : 1; }

    std::uint64_t emitted() const noexcept { return emitted_; }
    const GeneratorConfig& config() const noexcept { return config_; }

  private:
    GeneratorConfig config_;
    LagSeries s1_;
    LagSeries s2_;
    std::uint64_t emitted_ = 0;
};

/// Deterministic bit stream: same config, same bits.
std::vector<std::uint8_t> bit_stream(const GeneratorConfig& config, std::size_t count);

/// Packs bits 8 per byte, MSB first; the tail byte is zero-padded.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);

}  // namespace sboxkit
