// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "curves.hpp"
#include "exposure.hpp"
#include "xva.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xvakit {

/// Credit scenario at a future event date. The CDS level at trade inception
/// is base + shock; by the event date the spread has improved by
/// cds_change_bps (positive = spread falls) and the normal vol has moved by
/// dvol_bps.
struct Scenario {
    double base_cds_bps = 100.0;
    double shock_bps = 0.0;
    double cds_change_bps = 0.0;
    double dvol_bps = 0.0;

    double reached_bps() const { return base_cds_bps + shock_bps; }
    double continuation_cds_bps() const { return reached_bps() - cds_change_bps; }
};

enum class StrategyKind { Vanilla, Reset, MandatoryBreak, Restructuring };

struct StrategySpec {
    StrategyKind kind = StrategyKind::Vanilla;
    double event_time = 0.0;    // reset / break time, unused for Vanilla
};

struct PricingOptions {
    double grid_step = 1.0 / 12.0;
    double recovery = 0.4;
    /// When set, the continuation leg is discounted to today at the riskless
    /// rate instead of being added as-is.
    bool discount_continuation = false;
};

struct StrategyPrice {
    XvaBreakdown total;
    XvaBreakdown first_leg;
    std::optional<XvaBreakdown> continuation_leg;
    double reduction_pct = 0.0;    // vs the vanilla trade at the inception CDS level
};

/// Client-side price of a contract strategy. The inception credit curve is
/// flat at scenario.reached_bps(); a MandatoryBreak/Restructuring prices a
/// fresh ATM continuation trade from the break date with credit
/// reached - change and vol sigma + dvol, survival restarting at the break.
StrategyPrice price_strategy(const SwapSpec& swap, const MarketState& market,
                             const Scenario& scenario, const FundingCurve& funding,
                             const StrategySpec& strategy,
                             const PricingOptions& options = {});

/// 100 * (vanilla.xva - strategy.xva) / vanilla.xva; negative means increase.
double reduction_pct(const StrategyPrice& strategy_price, const StrategyPrice& vanilla_price);

struct GridCell {
    double shock_bps = 0.0;
    double event_time = 0.0;
    double cds_change_bps = 0.0;   // MB cells only
    double dvol_bps = 0.0;         // MB cells only
    double reduction_pct = 0.0;
    bool valid = true;
    std::string error;
};

struct GridResult {
    std::vector<GridCell> reset;   // keyed by (shock, event_time)
    std::vector<GridCell> mb;      // keyed by (shock, event_time, change, dvol)
};

/// Cross product of the scenario lists for both Reset and MandatoryBreak.
/// Invalid combinations (e.g. nonpositive continuation CDS) are flagged in
/// place rather than aborting the grid. Deterministic for any thread count.
GridResult scenario_grid(const SwapSpec& swap, const MarketState& market,
                         const FundingCurve& funding, double base_cds_bps,
                         const std::vector<double>& shocks_bps,
                         const std::vector<double>& event_times,
                         const std::vector<double>& changes_bps,
                         const std::vector<double>& dvols_bps,
                         const PricingOptions& options = {}, int threads = 1);

struct BreakEvenResult {
    double cds_change_bps = 0.0;
    bool bracketed = true;          // false: no sign change in [-shock, 2*shock]
    double mb_reduction_pct = 0.0;
    double reset_reduction_pct = 0.0;
};

/// CDS improvement at which the MandatoryBreak reduction matches the Reset
/// reduction at the same event time, by bisection to 0.1bp on
/// change in [-shock, 2*shock].
BreakEvenResult break_even_recovery(const SwapSpec& swap, const MarketState& market,
                                    const FundingCurve& funding, double base_cds_bps,
                                    double shock_bps, double event_time,
                                    const PricingOptions& options = {});

} // namespace xvakit
