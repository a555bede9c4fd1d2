// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "curves.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xvakit {

namespace {
constexpr double kBpsToDecimal = 1e-4;

void check_nonnegative_time(double t, const char* op) {
    if (t < 0.0 || std::isnan(t))
        throw std::domain_error(std::string(op) + ": negative time");
}
} // namespace

StepFunction::StepFunction(double constant_value)
    : times_{0.0}, values_{constant_value} {}

StepFunction::StepFunction(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.empty() || times_.size() != values_.size())
        throw std::invalid_argument("StepFunction: times/values mismatch or empty");
    if (times_.front() != 0.0)
        throw std::invalid_argument("StepFunction: first breakpoint must be 0");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (times_[i] <= times_[i - 1])
            throw std::invalid_argument("StepFunction: breakpoints not increasing");
}

double StepFunction::value(double t) const {
    check_nonnegative_time(t, "StepFunction::value");
    std::size_t i = times_.size() - 1;
    while (i > 0 && times_[i] > t) --i;
    return values_[i];
}

double StepFunction::integral(double t) const {
    check_nonnegative_time(t, "StepFunction::integral");
    double acc = 0.0;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        const double lo = times_[i];
        if (lo >= t) break;
        const double hi = (i + 1 < times_.size()) ? std::min(times_[i + 1], t) : t;
        acc += values_[i] * (hi - lo);
    }
    return acc;
}

YieldCurve::YieldCurve(std::vector<std::pair<double, double>> nodes) {
    if (nodes.empty())
        throw std::invalid_argument("YieldCurve: no nodes");
    times_.push_back(0.0);
    log_df_.push_back(0.0);
    for (const auto& [t, r] : nodes) {
        if (t <= times_.back())
            throw std::invalid_argument("YieldCurve: node times must be strictly increasing and > 0");
        times_.push_back(t);
        log_df_.push_back(-r * t);
    }
}

YieldCurve YieldCurve::flat(double rate) {
    return YieldCurve({{1.0, rate}});
}

double YieldCurve::discount(double t) const {
    check_nonnegative_time(t, "YieldCurve::discount");
    const std::size_t n = times_.size();
    // locate segment; extrapolate with the last forward rate
    std::size_t hi = 1;
    while (hi + 1 < n && times_[hi] < t) ++hi;
    const double t0 = times_[hi - 1], t1 = times_[hi];
    const double l0 = log_df_[hi - 1], l1 = log_df_[hi];
    const double fwd = (l1 - l0) / (t1 - t0);
    double logd;
    if (t <= t1)
        logd = l0 + fwd * (t - t0);
    else
        logd = l1 + fwd * (t - t1);
    return std::exp(logd);
}

double YieldCurve::zero_rate(double t) const {
    check_nonnegative_time(t, "YieldCurve::zero_rate");
    if (t == 0.0) {
        // limit: first forward rate
        return -(log_df_[1] - log_df_[0]) / (times_[1] - times_[0]);
    }
    return -std::log(discount(t)) / t;
}

FundingCurve::FundingCurve(YieldCurve base, StepFunction spread_bps)
    : base_(std::move(base)), spread_bps_(std::move(spread_bps)) {
    // negative funding spreads rejected; probe the breakpoints via value()
    if (spread_bps_.value(0.0) < 0.0)
        throw std::invalid_argument("FundingCurve: negative funding spread");
    for (double t = 0.0; t < 100.0; t += 0.5)
        if (spread_bps_.value(t) < 0.0)
            throw std::invalid_argument("FundingCurve: negative funding spread");
}

FundingCurve::FundingCurve(YieldCurve base, double flat_spread_bps)
    : FundingCurve(std::move(base), StepFunction(flat_spread_bps)) {}

double FundingCurve::discount(double t) const {
    check_nonnegative_time(t, "FundingCurve::discount");
    return base_.discount(t) * std::exp(-spread_bps_.integral(t) * kBpsToDecimal);
}

CreditCurve::CreditCurve(StepFunction spread_bps, double recovery)
    : spread_bps_(std::move(spread_bps)), recovery_(recovery) {
    if (recovery < 0.0 || recovery >= 1.0)
        throw std::invalid_argument("CreditCurve: recovery must be in [0,1)");
    for (double t = 0.0; t < 100.0; t += 0.5)
        if (spread_bps_.value(t) < 0.0)
            throw std::invalid_argument("CreditCurve: negative CDS spread");
}

CreditCurve CreditCurve::flat(double spread_bps, double recovery) {
    return CreditCurve(StepFunction(spread_bps), recovery);
}

double CreditCurve::hazard(double t) const {
    return spread_bps_.value(t) * kBpsToDecimal / (1.0 - recovery_);
}

double CreditCurve::cumulative_hazard(double t) const {
    check_nonnegative_time(t, "CreditCurve::cumulative_hazard");
    return spread_bps_.integral(t) * kBpsToDecimal / (1.0 - recovery_);
}

double CreditCurve::survival(double t) const {
    return std::exp(-cumulative_hazard(t));
}

double CreditCurve::default_probability_bucket(double t, double width) const {
    check_nonnegative_time(t, "CreditCurve::default_probability_bucket");
    if (width <= 0.0)
        throw std::domain_error("CreditCurve::default_probability_bucket: width must be > 0");
    return survival(t) - survival(t + width);
}

} // namespace xvakit
