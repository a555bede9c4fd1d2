// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cds.hpp"
#include "curves.hpp"
#include "exposure.hpp"
#include "strategies.hpp"

#include <string>
#include <vector>

namespace xvakit {

/// Everything the CLI needs for a run, loaded from a single JSON file.
/// Missing sections fall back to the shipped defaults.
struct RunConfig {
    // market
    std::vector<std::pair<double, double>> yield_nodes;  // (years, zero rate)
    double normal_vol_bps = 50.0;
    double funding_spread_bps = 50.0;

    // credit
    double base_cds_bps = 100.0;
    double recovery = 0.4;

    // swap
    double notional = 1.0;
    double maturity = 10.0;
    Direction direction = Direction::PayerFixed;
    int payment_frequency = 1;
    std::optional<double> fixed_rate;  // empty = ATM

    // scenario grid
    std::vector<double> shocks_bps = {500.0, 1000.0};
    std::vector<double> event_times = {1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> change_fractions = {-0.5, 0.0, 0.25, 0.5, 1.0};
    std::vector<double> dvols_bps = {-10.0, 0.0, 10.0};
    double vol_table_event_time = 2.0;  // break point used for the dvol table

    // pricing
    double grid_step = 1.0 / 12.0;

    // analytics
    std::vector<double> shock_thresholds_bps = {250.0, 500.0, 1000.0};
    double crisis_threshold_bps = 250.0;
    double crisis_fraction = 0.06;
    std::vector<double> horizons_years = {0.5, 1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> recovery_quantiles = {0.05, 0.25, 0.50, 0.75, 0.95};
    cds::PrepareOptions prepare;

    // derived builders
    MarketState market() const;
    FundingCurve funding() const;
    SwapSpec swap() const;
    PricingOptions pricing_options() const;
    /// change_fractions expanded against a shock into absolute bps
    std::vector<double> changes_for(double shock_bps) const;
    /// union of absolute changes across all configured shocks
    std::vector<double> all_changes() const;
};

RunConfig default_config();

/// Parse and validate; throws std::runtime_error with field-level messages.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

} // namespace xvakit
