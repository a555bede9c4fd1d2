// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "curves.hpp"

#include <optional>
#include <vector>

namespace xvakit {

enum class Direction { PayerFixed, ReceiverFixed };

/// Fixed-for-floating interest-rate swap. A missing fixed_rate means the
/// strike is set at the money (par) before any exposure computation.
struct SwapSpec {
    double notional = 1.0;
    double maturity = 10.0;                // years
    Direction direction = Direction::PayerFixed;
    std::optional<double> fixed_rate;      // empty = ATM
    int payment_frequency = 1;             // payments per year
};

struct MarketState {
    YieldCurve yield;
    double normal_vol_bps = 50.0;          // annualized normal vol of the swap rate
};

/// EPE / ENE / EV on a time grid. ENE is stored as nonpositive values so
/// that ev = epe + ene holds pointwise.
struct ExposureProfile {
    std::vector<double> grid;
    std::vector<double> epe;
    std::vector<double> ene;
    std::vector<double> ev;
};

/// Annuity of the fixed leg start->end, discounted to time 0. The payment
/// schedule is generated backward from end in steps of 1/frequency, so a
/// short stub accrues at the front.
double annuity(const YieldCurve& curve, double start, double end, int frequency);

/// Fixed rate making the swap start->end worth zero at time 0.
double par_rate(const MarketState& market, double start, double end, int frequency);

/// Undiscounted E[(F + vol*sqrt(expiry)*Z - strike)^+] for standard normal Z.
double bachelier_call(double forward, double strike, double vol, double expiry);
double bachelier_put(double forward, double strike, double vol, double expiry);

ExposureProfile exposure_profile_vanilla(const SwapSpec& swap, const MarketState& market,
                                         double grid_step);

/// Vanilla profile up to break_time, identically zero from break_time on.
ExposureProfile exposure_profile_truncated(const SwapSpec& swap, const MarketState& market,
                                           double break_time, double grid_step);

/// Vanilla profile before reset_time; after it the strike is re-struck ATM at
/// reset_time and the rate dispersion accrues from reset_time only.
ExposureProfile exposure_profile_reset(const SwapSpec& swap, const MarketState& market,
                                       double reset_time, double grid_step);

/// Profile of a fresh ATM swap running from start_time to swap.maturity,
/// struck at par(start_time, maturity), with dispersion from start_time.
/// Grid covers [start_time, maturity]. This is the continuation-trade shape.
ExposureProfile exposure_profile_forward_start(const SwapSpec& swap, const MarketState& market,
                                               double start_time, double grid_step);

} // namespace xvakit
