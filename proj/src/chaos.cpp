#include "sboxkit/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace sboxkit {

Interval invariant_interval(double alpha) {
    if (!(alpha >= -2.0 && alpha <= 4.0))
        throw std::domain_error("alpha must lie in [-2, 4], got " + std::to_string(alpha));
    if (alpha < 0.0) return {-0.5, 1.5};
    return {0.0, 1.0};
}

void LogisticParams::validate() const {
    Interval iv = invariant_interval(alpha);
    if (!iv.contains(x0))
        throw std::domain_error("x0 " + std::to_string(x0) + " outside invariant interval [" +
                                std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                                "] for alpha " + std::to_string(alpha));
}

double logistic_step(const LogisticParams& params, double x) {
    Interval iv = invariant_interval(params.alpha);
    if (!iv.contains(x))
        throw std::domain_error("orbit value " + std::to_string(x) +
                                " outside invariant interval for alpha " +
                                std::to_string(params.alpha));
    return (params.alpha * x) * (1.0 - x);
}

std::vector<FixedPoint> fixed_points(double alpha) {
    invariant_interval(alpha);  // range check only
    std::vector<FixedPoint> fps;
    fps.push_back({0.0, std::fabs(alpha) > 1.0});
    if (alpha != 0.0) fps.push_back({(alpha - 1.0) / alpha, std::fabs(2.0 - alpha) > 1.0});
    return fps;
}

double lyapunov_exponent(const LogisticParams& params, long n_iter, long burn_in) {
    params.validate();
    double x = params.x0;
    for (long i = 0; i < burn_in; ++i) x = logistic_step(params, x);
    double acc = 0.0;
    for (long i = 0; i < n_iter; ++i) {
        double deriv = params.alpha * (1.0 - 2.0 * x);
        if (deriv == 0.0) return -std::numeric_limits<double>::infinity();
        acc += std::log(std::fabs(deriv));
        x = logistic_step(params, x);
    }
    return acc / static_cast<double>(n_iter);
}

std::vector<BifurcationSlice> bifurcation_scan(double alpha_min, double alpha_max,
                                               int alpha_steps, long burn_in, int keep) {
    if (alpha_steps < 1) throw std::invalid_argument("alpha_steps must be >= 1");
    invariant_interval(alpha_min);
    invariant_interval(alpha_max);
    std::vector<BifurcationSlice> out;
    out.reserve(static_cast<std::size_t>(alpha_steps));
    // 0.3 lies in the invariant interval for all admissible alpha and avoids
    // the fixed points and the critical point.
    constexpr double kScanX0 = 0.3;
    for (int s = 0; s < alpha_steps; ++s) {
        double t = alpha_steps == 1 ? 0.0 : static_cast<double>(s) / (alpha_steps - 1);
        double alpha = alpha_min + t * (alpha_max - alpha_min);
        LogisticParams p{alpha, kScanX0};
        double x = kScanX0;
        for (long i = 0; i < burn_in; ++i) x = logistic_step(p, x);
        BifurcationSlice slice{alpha, {}};
        slice.orbit.reserve(static_cast<std::size_t>(keep));
        for (int i = 0; i < keep; ++i) {
            x = logistic_step(p, x);
            slice.orbit.push_back(x);
        }
        out.push_back(std::move(slice));
    }
    return out;
}

void LagSpec::validate() const {
    int prev = 0;
    for (int k : lags) {
        if (k < 1) throw std::invalid_argument("lags must be >= 1");
        if (k <= prev) throw std::invalid_argument("lags must be strictly increasing");
        prev = k;
    }
}

int LagSpec::max_lag() const noexcept { return lags.empty() ? 0 : lags.back(); }

double lag_series_sum(std::span<const double> history, const LagSpec& lags) {
    lags.validate();
    if (history.size() < static_cast<std::size_t>(lags.max_lag()) + 1)
        throw std::logic_error("lag series not warm: need " +
                               std::to_string(lags.max_lag() + 1) + " states, have " +
                               std::to_string(history.size()));
    double acc = 0.0;
    for (auto it = lags.lags.rbegin(); it != lags.lags.rend(); ++it)
        acc += history[history.size() - 1 - static_cast<std::size_t>(*it)];
    acc += history.back();
    return mod1(acc);
}

void GeneratorConfig::validate() const {
    params1.validate();
    params2.validate();
    lags1.validate();
    lags2.validate();
    if (params1.x0 == params2.x0)
        throw std::invalid_argument("the two series must start from different x0");
    if (params1.alpha == params2.alpha)
        throw std::invalid_argument("the two series must use different alphas");
    if (burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
}

GeneratorConfig default_config() {
    return GeneratorConfig{{4.0, 0.8147}, {-2.0, 0.9058}, {{5, 10}}, {{6, 10}}, 0};
}

GeneratorConfig swapped_config() {
    return GeneratorConfig{{-2.0, 0.8147}, {4.0, 0.9058}, {{5, 10}}, {{6, 10}}, 0};
}

LagSeries::LagSeries(const LogisticParams& params, const LagSpec& lags, long burn_in)
    : params_(params) {
    params_.validate();
    lags.validate();
    if (burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
    lags_desc_.assign(lags.lags.rbegin(), lags.lags.rend());
    double x = params_.x0;
    for (long i = 0; i < burn_in; ++i) x = logistic_step(params_, x);
    buf_.resize(static_cast<std::size_t>(lags.max_lag()) + 1);
    buf_[0] = x;
    head_ = 0;
    for (std::size_t i = 1; i < buf_.size(); ++i) step();
}

double LagSeries::at_lag(int k) const noexcept {
    std::size_t n = buf_.size();
    return buf_[(head_ + n - static_cast<std::size_t>(k)) % n];
}

double LagSeries::lag_sum() const {
    double acc = 0.0;
    for (int k : lags_desc_) acc += at_lag(k);
    acc += buf_[head_];
    return mod1(acc);
}

void LagSeries::step() {
    double next = logistic_step(params_, buf_[head_]);
    head_ = (head_ + 1) % buf_.size();
    buf_[head_] = next;
}

static const GeneratorConfig& require_valid(const GeneratorConfig& config) {
    config.validate();
    return config;
}

Generator::Generator(GeneratorConfig config)
    : config_(std::move(config)),
      s1_(require_valid(config_).params1, config_.lags1, config_.burn_in),
      s2_(config_.params2, config_.lags2, config_.burn_in) {}

double Generator::next_z() {
    double z = mod1(s1_.lag_sum() + s2_.lag_sum());
    s1_.step();
    s2_.step();
    ++emitted_;
    return z;
}

TraceRow Generator::next_trace() {
    TraceRow row;
    row.i = emitted_;
    row.x = s1_.current();
    row.m1 = s1_.lag_sum();
    row.m2 = s2_.lag_sum();
    row.z = mod1(row.m1 + row.m2);
    s1_.step();
    s2_.step();
    ++emitted_;
    return row;
}

std::vector<std::uint8_t> bit_stream(const GeneratorConfig& config, std::size_t count) {
    Generator gen(config);
    std::vector<std::uint8_t> bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(gen.next_bit());
    return bits;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return bytes;
}

}  // namespace sboxkit
