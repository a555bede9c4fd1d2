// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace xvakit {

using nlohmann::json;

MarketState RunConfig::market() const {
    return {YieldCurve(yield_nodes), normal_vol_bps};
}

FundingCurve RunConfig::funding() const {
    return {YieldCurve(yield_nodes), funding_spread_bps};
}

SwapSpec RunConfig::swap() const {
    SwapSpec s;
    s.notional = notional;
    s.maturity = maturity;
    s.direction = direction;
    s.payment_frequency = payment_frequency;
    s.fixed_rate = fixed_rate;
    return s;
}

PricingOptions RunConfig::pricing_options() const {
    PricingOptions o;
    o.grid_step = grid_step;
    o.recovery = recovery;
    return o;
}

std::vector<double> RunConfig::changes_for(double shock_bps) const {
    std::vector<double> out;
    for (double f : change_fractions) out.push_back(f * shock_bps);
    return out;
}

std::vector<double> RunConfig::all_changes() const {
    std::set<double> uniq;
    for (double shock : shocks_bps)
        for (double c : changes_for(shock)) uniq.insert(c);
    return {uniq.begin(), uniq.end()};
}

RunConfig default_config() {
    RunConfig c;
    // EUR-style mildly negative short end, gently upward
    c.yield_nodes = {{0.5, -0.0045}, {1.0, -0.0045}, {2.0, -0.0040}, {3.0, -0.0035},
                     {5.0, -0.0025}, {7.0, -0.0012}, {10.0, 0.0002}, {15.0, 0.0015},
                     {20.0, 0.0020}, {30.0, 0.0022}};
    return c;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw std::runtime_error("config: " + field + ": " + message);
}

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

std::vector<double> number_list(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : j) out.push_back(require_number(e, field));
    return out;
}

void validate(const RunConfig& c) {
    if (c.yield_nodes.empty()) fail("market.yield_nodes", "must not be empty");
    for (std::size_t i = 1; i < c.yield_nodes.size(); ++i)
        if (c.yield_nodes[i].first <= c.yield_nodes[i - 1].first)
            fail("market.yield_nodes", "times must be strictly increasing");
    if (c.yield_nodes.front().first <= 0.0) fail("market.yield_nodes", "times must be > 0");
    if (c.normal_vol_bps < 0.0) fail("market.normal_vol_bps", "must be >= 0");
    if (c.funding_spread_bps < 0.0) fail("funding.spread_bps", "must be >= 0");
    if (!(c.recovery >= 0.0 && c.recovery < 1.0)) fail("credit.recovery", "must be in [0,1)");
    if (c.base_cds_bps <= 0.0) fail("credit.base_cds_bps", "must be > 0");
    if (c.maturity <= 0.0) fail("swap.maturity", "must be > 0");
    if (c.notional <= 0.0) fail("swap.notional", "must be > 0");
    if (c.payment_frequency < 1) fail("swap.payment_frequency", "must be >= 1");
    if (c.grid_step <= 0.0 || c.grid_step > c.maturity)
        fail("pricing.grid_step_years", "must be in (0, maturity]");
    for (double t : c.event_times)
        if (!(t > 0.0 && t < c.maturity))
            fail("grid.event_times", "must lie strictly inside (0, maturity)");
    for (double s : c.shocks_bps)
        if (s < 0.0) fail("grid.shocks_bps", "must be >= 0");
    if (!(c.crisis_fraction > 0.0 && c.crisis_fraction <= 1.0))
        fail("analytics.crisis_fraction", "must be in (0,1]");
    for (double h : c.horizons_years)
        if (h <= 0.0) fail("analytics.horizons_years", "must be > 0");
    for (double q : c.recovery_quantiles)
        if (q < 0.0 || q > 1.0) fail("analytics.quantiles", "must be in [0,1]");
    if (c.prepare.median_filter_points < 1 || c.prepare.median_filter_points % 2 == 0)
        fail("analytics.median_filter_points", "must be a positive odd number");
    if (c.prepare.min_span_years <= 0.0) fail("analytics.min_span_years", "must be > 0");
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: invalid JSON: ") + e.what());
    }

    RunConfig c = default_config();

    if (j.contains("market")) {
        const auto& m = j["market"];
        if (m.contains("yield_nodes")) {
            c.yield_nodes.clear();
            if (!m["yield_nodes"].is_array()) fail("market.yield_nodes", "expected an array");
            for (const auto& node : m["yield_nodes"]) {
                if (!node.is_array() || node.size() != 2)
                    fail("market.yield_nodes", "each node must be [time, rate]");
                c.yield_nodes.emplace_back(require_number(node[0], "market.yield_nodes"),
                                           require_number(node[1], "market.yield_nodes"));
            }
        }
        if (m.contains("normal_vol_bps"))
            c.normal_vol_bps = require_number(m["normal_vol_bps"], "market.normal_vol_bps");
    }
    if (j.contains("funding") && j["funding"].contains("spread_bps"))
        c.funding_spread_bps = require_number(j["funding"]["spread_bps"], "funding.spread_bps");
    if (j.contains("credit")) {
        const auto& cr = j["credit"];
        if (cr.contains("base_cds_bps"))
            c.base_cds_bps = require_number(cr["base_cds_bps"], "credit.base_cds_bps");
        if (cr.contains("recovery"))
            c.recovery = require_number(cr["recovery"], "credit.recovery");
    }
    if (j.contains("swap")) {
        const auto& s = j["swap"];
        if (s.contains("notional")) c.notional = require_number(s["notional"], "swap.notional");
        if (s.contains("maturity")) c.maturity = require_number(s["maturity"], "swap.maturity");
        if (s.contains("payment_frequency")) {
            if (!s["payment_frequency"].is_number_integer())
                fail("swap.payment_frequency", "expected an integer");
            c.payment_frequency = s["payment_frequency"].get<int>();
        }
        if (s.contains("direction")) {
            const std::string d = s["direction"].get<std::string>();
            if (d == "payer-fixed")
                c.direction = Direction::PayerFixed;
            else if (d == "receiver-fixed")
                c.direction = Direction::ReceiverFixed;
            else
                fail("swap.direction", "must be payer-fixed or receiver-fixed");
        }
        if (s.contains("fixed_rate") && !s["fixed_rate"].is_null()) {
            if (s["fixed_rate"].is_string()) {
                if (s["fixed_rate"].get<std::string>() != "atm")
                    fail("swap.fixed_rate", "must be a number or \"atm\"");
            } else {
                c.fixed_rate = require_number(s["fixed_rate"], "swap.fixed_rate");
            }
        }
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (g.contains("shocks_bps")) c.shocks_bps = number_list(g["shocks_bps"], "grid.shocks_bps");
        if (g.contains("event_times"))
            c.event_times = number_list(g["event_times"], "grid.event_times");
        if (g.contains("change_fractions"))
            c.change_fractions = number_list(g["change_fractions"], "grid.change_fractions");
        if (g.contains("dvols_bps")) c.dvols_bps = number_list(g["dvols_bps"], "grid.dvols_bps");
        if (g.contains("vol_table_event_time"))
            c.vol_table_event_time =
                require_number(g["vol_table_event_time"], "grid.vol_table_event_time");
    }
    if (j.contains("pricing") && j["pricing"].contains("grid_step_years"))
        c.grid_step = require_number(j["pricing"]["grid_step_years"], "pricing.grid_step_years");
    if (j.contains("analytics")) {
        const auto& a = j["analytics"];
        if (a.contains("shock_thresholds_bps"))
            c.shock_thresholds_bps =
                number_list(a["shock_thresholds_bps"], "analytics.shock_thresholds_bps");
        if (a.contains("crisis_threshold_bps"))
            c.crisis_threshold_bps =
                require_number(a["crisis_threshold_bps"], "analytics.crisis_threshold_bps");
        if (a.contains("crisis_fraction"))
            c.crisis_fraction = require_number(a["crisis_fraction"], "analytics.crisis_fraction");
        if (a.contains("horizons_years"))
            c.horizons_years = number_list(a["horizons_years"], "analytics.horizons_years");
        if (a.contains("quantiles"))
            c.recovery_quantiles = number_list(a["quantiles"], "analytics.quantiles");
        if (a.contains("min_span_years"))
            c.prepare.min_span_years =
                require_number(a["min_span_years"], "analytics.min_span_years");
        if (a.contains("median_filter_points")) {
            if (!a["median_filter_points"].is_number_integer())
                fail("analytics.median_filter_points", "expected an integer");
            c.prepare.median_filter_points = a["median_filter_points"].get<int>();
        }
        if (a.contains("regions")) {
            if (!a["regions"].is_array()) fail("analytics.regions", "expected an array");
            c.prepare.regions.clear();
            for (const auto& r : a["regions"]) {
                const auto region = cds::parse_region(r.get<std::string>());
                if (!region) fail("analytics.regions", "unknown region");
                c.prepare.regions.push_back(*region);
            }
        }
    }

    validate(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace xvakit
