// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "strategies.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace xvakit {

namespace {

CreditCurve flat_credit(double spread_bps, const PricingOptions& options) {
    return CreditCurve::flat(spread_bps, options.recovery);
}

XvaBreakdown vanilla_breakdown(const SwapSpec& swap, const MarketState& market,
                               const Scenario& scenario, const FundingCurve& funding,
                               const PricingOptions& options) {
    const auto profile = exposure_profile_vanilla(swap, market, options.grid_step);
    const auto credit = flat_credit(scenario.reached_bps(), options);
    return xva_total(profile, credit, funding, 0.0, swap.maturity);
}

} // namespace

StrategyPrice price_strategy(const SwapSpec& swap, const MarketState& market,
                             const Scenario& scenario, const FundingCurve& funding,
                             const StrategySpec& strategy, const PricingOptions& options) {
    const double T = swap.maturity;
    const auto vanilla = vanilla_breakdown(swap, market, scenario, funding, options);

    StrategyPrice price;
    switch (strategy.kind) {
    case StrategyKind::Vanilla:
        price.first_leg = vanilla;
        price.total = vanilla;
        price.reduction_pct = 0.0;
        return price;

    case StrategyKind::Reset: {
        // The inception CDS level is locked in for the whole life of the trade.
        const auto profile = exposure_profile_reset(swap, market, strategy.event_time,
                                                    options.grid_step);
        const auto credit = flat_credit(scenario.reached_bps(), options);
        price.first_leg = xva_total(profile, credit, funding, 0.0, T);
        price.total = price.first_leg;
        break;
    }

    case StrategyKind::MandatoryBreak:
    case StrategyKind::Restructuring: {
        const double t_m = strategy.event_time;
        if (!(t_m > 0.0 && t_m < T))
            throw std::domain_error("break time must lie strictly inside (0, maturity)");
        if (scenario.continuation_cds_bps() <= 0.0)
            throw std::domain_error("continuation CDS level must be > 0");

        // First leg: the original trade, alive up to the break.
        const auto vanilla_profile = exposure_profile_vanilla(swap, market, options.grid_step);
        const auto credit0 = flat_credit(scenario.reached_bps(), options);
        price.first_leg = xva_total(vanilla_profile, credit0, funding, 0.0, t_m);

        // Continuation: fresh ATM trade from the break, same-as-now curve,
        // shifted vol and credit, survival restarting at the break date.
        MarketState cont_market = market;
        cont_market.normal_vol_bps = market.normal_vol_bps + scenario.dvol_bps;
        if (cont_market.normal_vol_bps < 0.0)
            throw std::domain_error("continuation vol must be >= 0");
        const auto cont_profile =
            exposure_profile_forward_start(swap, cont_market, t_m, options.grid_step);
        const auto cont_credit = flat_credit(scenario.continuation_cds_bps(), options);
        XvaBreakdown cont = xva_total(cont_profile, cont_credit, funding, t_m, T);
        if (options.discount_continuation) {
            const double df = funding.base().discount(t_m);
            cont.cva *= df;
            cont.fva *= df;
        }
        price.continuation_leg = cont;
        price.total = {price.first_leg.cva + cont.cva, price.first_leg.fva + cont.fva};
        break;
    }
    }

    StrategyPrice vanilla_price;
    vanilla_price.total = vanilla;
    price.reduction_pct = reduction_pct(price, vanilla_price);
    return price;
}

double reduction_pct(const StrategyPrice& strategy_price, const StrategyPrice& vanilla_price) {
    const double base = vanilla_price.total.xva();
    if (!(base > 0.0))
        throw std::domain_error("reduction_pct: vanilla xva must be > 0");
    return 100.0 * (base - strategy_price.total.xva()) / base;
}

GridResult scenario_grid(const SwapSpec& swap, const MarketState& market,
                         const FundingCurve& funding, double base_cds_bps,
                         const std::vector<double>& shocks_bps,
                         const std::vector<double>& event_times,
                         const std::vector<double>& changes_bps,
                         const std::vector<double>& dvols_bps,
                         const PricingOptions& options, int threads) {
    GridResult result;
    for (double shock : shocks_bps)
        for (double t : event_times) {
            GridCell c;
            c.shock_bps = shock;
            c.event_time = t;
            result.reset.push_back(c);
        }
    for (double shock : shocks_bps)
        for (double change : changes_bps)
            for (double dvol : dvols_bps)
                for (double t : event_times) {
                    GridCell c;
                    c.shock_bps = shock;
                    c.event_time = t;
                    c.cds_change_bps = change;
                    c.dvol_bps = dvol;
                    result.mb.push_back(c);
                }

    auto evaluate = [&](GridCell& cell, StrategyKind kind) {
        try {
            Scenario scenario;
            scenario.base_cds_bps = base_cds_bps;
            scenario.shock_bps = cell.shock_bps;
            scenario.cds_change_bps = cell.cds_change_bps;
            scenario.dvol_bps = cell.dvol_bps;
            const StrategySpec spec{kind, cell.event_time};
            cell.reduction_pct =
                price_strategy(swap, market, scenario, funding, spec, options).reduction_pct;
        } catch (const std::exception& e) {
            cell.valid = false;
            cell.error = e.what();
        }
    };

    const std::size_t n_reset = result.reset.size();
    const std::size_t n_total = n_reset + result.mb.size();
    auto evaluate_index = [&](std::size_t i) {
        if (i < n_reset)
            evaluate(result.reset[i], StrategyKind::Reset);
        else
            evaluate(result.mb[i - n_reset], StrategyKind::MandatoryBreak);
    };

    const int n_threads = std::max(threads, 1);
    if (n_threads == 1) {
        for (std::size_t i = 0; i < n_total; ++i) evaluate_index(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < n_total;
                     i += static_cast<std::size_t>(n_threads))
                    evaluate_index(i);
            });
        for (auto& th : pool) th.join();
    }
    return result;
}

BreakEvenResult break_even_recovery(const SwapSpec& swap, const MarketState& market,
                                    const FundingCurve& funding, double base_cds_bps,
                                    double shock_bps, double event_time,
                                    const PricingOptions& options) {
    Scenario scenario;
    scenario.base_cds_bps = base_cds_bps;
    scenario.shock_bps = shock_bps;

    const double reset_red =
        price_strategy(swap, market, scenario, funding,
                       {StrategyKind::Reset, event_time}, options)
            .reduction_pct;

    auto mb_red = [&](double change) {
        Scenario s = scenario;
        s.cds_change_bps = change;
        return price_strategy(swap, market, s, funding,
                              {StrategyKind::MandatoryBreak, event_time}, options)
            .reduction_pct;
    };

    BreakEvenResult out;
    out.reset_reduction_pct = reset_red;

    double lo = -shock_bps;
    double hi = 2.0 * shock_bps;
    // keep the continuation CDS positive at the upper end of the bracket
    hi = std::min(hi, base_cds_bps + shock_bps - 0.1);
    double g_lo = mb_red(lo) - reset_red;
    double g_hi = mb_red(hi) - reset_red;
    if (g_lo >= 0.0 || g_hi <= 0.0) {
        // no sign change: report the nearer bracket edge
        out.bracketed = false;
        out.cds_change_bps = (g_lo >= 0.0) ? lo : hi;
        out.mb_reduction_pct = mb_red(out.cds_change_bps);
        return out;
    }
    while (hi - lo > 0.1) {
        const double mid = 0.5 * (lo + hi);
        if (mb_red(mid) - reset_red < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    out.cds_change_bps = 0.5 * (lo + hi);
    out.mb_reduction_pct = mb_red(out.cds_change_bps);
    return out;
}

} // namespace xvakit
