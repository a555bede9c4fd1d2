// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace xvakit {

/// Right-continuous piecewise-constant function of time, t >= 0.
/// Breakpoint times are strictly increasing; the first breakpoint is 0.
class StepFunction {
public:
    explicit StepFunction(double constant_value);
    StepFunction(std::vector<double> times, std::vector<double> values);

    double value(double t) const;
    /// Exact integral over [0, t].
    double integral(double t) const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

/// Continuously-compounded zero curve with flat-forward interpolation
/// (log-linear discount factors). A single node means a flat curve.
class YieldCurve {
public:
    /// nodes: (time in years, zero rate as decimal), times strictly increasing, > 0.
    explicit YieldCurve(std::vector<std::pair<double, double>> nodes);
    static YieldCurve flat(double rate);

    /// exp(-integral_0^t r(s) ds); flat-forward extrapolation beyond the last node.
    double discount(double t) const;
    double zero_rate(double t) const;

private:
    // Internal pillars including the implicit (0, log D = 0) anchor.
    std::vector<double> times_;
    std::vector<double> log_df_;
};

/// Riskless curve plus a piecewise-constant funding spread, r_F = r + s_F.
class FundingCurve {
public:
    FundingCurve(YieldCurve base, StepFunction spread_bps);
    FundingCurve(YieldCurve base, double flat_spread_bps);

    double discount(double t) const;
    double spread_bps(double t) const { return spread_bps_.value(t); }
    const YieldCurve& base() const { return base_; }

private:
    YieldCurve base_;
    StepFunction spread_bps_;
};

/// Flat or piecewise-constant CDS spread with the credit-triangle hazard
/// lambda = s / (1 - R).
class CreditCurve {
public:
    CreditCurve(StepFunction spread_bps, double recovery);
    static CreditCurve flat(double spread_bps, double recovery = 0.4);

    double hazard(double t) const;
    /// integral_0^t lambda(s) ds, exact for the step structure.
    double cumulative_hazard(double t) const;
    double survival(double t) const;
    /// P(default in [t, t + width)) = survival(t) - survival(t + width).
    double default_probability_bucket(double t, double width) const;

    double recovery() const { return recovery_; }
    double lgd() const { return 1.0 - recovery_; }

private:
    StepFunction spread_bps_;
    double recovery_;
};

} // namespace xvakit
