// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "exposure.hpp"
#include "mathutil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace xvakit {

namespace {

constexpr double kEps = 1e-9;
// exposure jumps at break/reset dates; a point just before the event carries
// the left limit so the trapezoid sees the discontinuity
constexpr double kJumpEps = 1e-7;

void validate_swap(const SwapSpec& swap) {
    if (swap.maturity <= 0.0) throw std::invalid_argument("SwapSpec: maturity must be > 0");
    if (swap.notional <= 0.0) throw std::invalid_argument("SwapSpec: notional must be > 0");
    if (swap.payment_frequency < 1) throw std::invalid_argument("SwapSpec: frequency must be >= 1");
}

// Fixed-leg payment times of the remaining swap (u, end], backward-generated.
std::vector<double> payment_times(double start, double end, int frequency) {
    std::vector<double> ts;
    const double step = 1.0 / frequency;
    for (double t = end; t > start + kEps; t -= step) ts.push_back(t);
    std::reverse(ts.begin(), ts.end());
    return ts;
}

// Annuity discounted to time 0 over payments in (start, end].
double annuity_to_zero(const YieldCurve& curve, double start, double end, int frequency) {
    const auto ts = payment_times(start, end, frequency);
    double acc = 0.0;
    double prev = start;
    for (double t : ts) {
        acc += (t - prev) * curve.discount(t);
        prev = t;
    }
    return acc;
}

double forward_swap_rate(const YieldCurve& curve, double start, double end, int frequency) {
    const double a = annuity_to_zero(curve, start, end, frequency);
    return (curve.discount(start) - curve.discount(end)) / a;
}

// Profile grid over [t0, t1]. Around each dispersion start the exposure grows
// like sqrt(t - start), so a few geometrically spaced points are inserted
// right after every refine point to keep the trapezoid error in check.
std::vector<double> make_grid(double t0, double t1, double step,
                              std::vector<double> extra = {},
                              std::vector<double> refine = {}) {
    if (step <= 0.0) throw std::domain_error("grid_step must be > 0");
    if (step > t1 - t0 + kEps) throw std::domain_error("grid_step exceeds the profile span");
    std::vector<double> grid;
    for (double t = t0; t < t1 - kEps; t += step) grid.push_back(t);
    grid.push_back(t1);
    auto insert = [&](double t) {
        if (t <= t0 + kEps || t >= t1 - kEps) return;
        auto it = std::lower_bound(grid.begin(), grid.end(), t - kEps);
        if (it == grid.end() || std::abs(*it - t) > kEps) grid.insert(it, t);
    };
    for (double e : extra) insert(e);
    for (double r : refine)
        for (double frac : {1.0 / 16.0, 1.0 / 8.0, 1.0 / 4.0, 1.0 / 2.0}) insert(r + frac * step);
    return grid;
}

struct PointValues {
    double epe, ene, ev;
};

// Exposure of the remaining swap [u, T] with strike K, swap rate normal around
// the time-0 forward with dispersion accrued since disp_start.
PointValues point_exposure(const SwapSpec& swap, const MarketState& market,
                           double u, double strike, double disp_start) {
    const double T = swap.maturity;
    if (u >= T - kEps) return {0.0, 0.0, 0.0};
    const YieldCurve& curve = market.yield;
    const double a0 = annuity_to_zero(curve, u, T, swap.payment_frequency);
    const double annuity_at_u = a0 / curve.discount(u);
    const double fwd = (curve.discount(u) - curve.discount(T)) / a0;
    const double tau = std::max(u - disp_start, 0.0);
    const double vol = market.normal_vol_bps * 1e-4;

    const double call = bachelier_call(fwd, strike, vol, tau);
    const double put = bachelier_put(fwd, strike, vol, tau);
    const double scale = swap.notional * annuity_at_u;

    PointValues v{};
    if (swap.direction == Direction::PayerFixed) {
        v.ev = scale * (fwd - strike);
        v.epe = scale * call;
        v.ene = -scale * put;
    } else {
        v.ev = -scale * (fwd - strike);
        v.epe = scale * put;
        v.ene = -scale * call;
    }
    return v;
}

double resolve_strike(const SwapSpec& swap, const MarketState& market) {
    if (swap.fixed_rate) return *swap.fixed_rate;
    return forward_swap_rate(market.yield, 0.0, swap.maturity, swap.payment_frequency);
}

void check_event_time(double t, double maturity, const char* what) {
    if (!(t > 0.0 && t < maturity))
        throw std::domain_error(std::string(what) + " must lie strictly inside (0, maturity)");
}

} // namespace

double annuity(const YieldCurve& curve, double start, double end, int frequency) {
    if (start < 0.0 || end <= start) throw std::domain_error("annuity: need 0 <= start < end");
    return annuity_to_zero(curve, start, end, frequency);
}

double par_rate(const MarketState& market, double start, double end, int frequency) {
    if (start < 0.0 || end <= start) throw std::domain_error("par_rate: need 0 <= start < end");
    if (end - start < 1.0 / frequency - kEps)
        throw std::domain_error("par_rate: span shorter than one payment period");
    return forward_swap_rate(market.yield, start, end, frequency);
}

double bachelier_call(double forward, double strike, double vol, double expiry) {
    if (vol < 0.0) throw std::domain_error("bachelier_call: vol must be >= 0");
    if (expiry < 0.0) throw std::domain_error("bachelier_call: expiry must be >= 0");
    const double sd = vol * std::sqrt(expiry);
    if (sd <= 0.0) return std::max(forward - strike, 0.0);
    const double d = (forward - strike) / sd;
    return sd * (norm_pdf(d) + d * norm_cdf(d));
}

double bachelier_put(double forward, double strike, double vol, double expiry) {
    // put-call parity for the normal model
    return bachelier_call(forward, strike, vol, expiry) - (forward - strike);
}

ExposureProfile exposure_profile_vanilla(const SwapSpec& swap, const MarketState& market,
                                         double grid_step) {
    validate_swap(swap);
    const double strike = resolve_strike(swap, market);
    ExposureProfile p;
    p.grid = make_grid(0.0, swap.maturity, grid_step, {}, {0.0});
    for (double u : p.grid) {
        const auto v = point_exposure(swap, market, u, strike, 0.0);
        p.epe.push_back(v.epe);
        p.ene.push_back(v.ene);
        p.ev.push_back(v.ev);
    }
    return p;
}

ExposureProfile exposure_profile_truncated(const SwapSpec& swap, const MarketState& market,
                                           double break_time, double grid_step) {
    validate_swap(swap);
    check_event_time(break_time, swap.maturity, "break_time");
    const double strike = resolve_strike(swap, market);
    ExposureProfile p;
    p.grid = make_grid(0.0, swap.maturity, grid_step, {break_time - kJumpEps, break_time}, {0.0});
    for (double u : p.grid) {
        PointValues v{};
        if (u < break_time - kEps) v = point_exposure(swap, market, u, strike, 0.0);
        p.epe.push_back(v.epe);
        p.ene.push_back(v.ene);
        p.ev.push_back(v.ev);
    }
    return p;
}

ExposureProfile exposure_profile_reset(const SwapSpec& swap, const MarketState& market,
                                       double reset_time, double grid_step) {
    validate_swap(swap);
    check_event_time(reset_time, swap.maturity, "reset_time");
    const double strike0 = resolve_strike(swap, market);
    const double strike_reset =
        forward_swap_rate(market.yield, reset_time, swap.maturity, swap.payment_frequency);
    ExposureProfile p;
    p.grid = make_grid(0.0, swap.maturity, grid_step, {reset_time - kJumpEps, reset_time},
                       {0.0, reset_time});
    for (double u : p.grid) {
        const bool after = u >= reset_time - kEps;
        const auto v = point_exposure(swap, market, u, after ? strike_reset : strike0,
                                      after ? reset_time : 0.0);
        p.epe.push_back(v.epe);
        p.ene.push_back(v.ene);
        p.ev.push_back(v.ev);
    }
    return p;
}

ExposureProfile exposure_profile_forward_start(const SwapSpec& swap, const MarketState& market,
                                               double start_time, double grid_step) {
    validate_swap(swap);
    check_event_time(start_time, swap.maturity, "start_time");
    const double strike =
        forward_swap_rate(market.yield, start_time, swap.maturity, swap.payment_frequency);
    ExposureProfile p;
    p.grid = make_grid(start_time, swap.maturity, grid_step, {}, {start_time});
    for (double u : p.grid) {
        const auto v = point_exposure(swap, market, u, strike, start_time);
        p.epe.push_back(v.epe);
        p.ene.push_back(v.ene);
        p.ev.push_back(v.ev);
    }
    return p;
}

} // namespace xvakit
