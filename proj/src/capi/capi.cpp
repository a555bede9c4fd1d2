// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "xvakit/xvakit.h"

#include "../core/cds.hpp"
#include "../core/config.hpp"
#include "../core/report.hpp"
#include "../core/strategies.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace fs = std::filesystem;

struct xvk_config {
    xvakit::RunConfig cfg;
};

struct xvk_grid {
    xvakit::GridResult result;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return XVK_E_DOMAIN;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return XVK_E_DOMAIN;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return XVK_E_CONFIG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return XVK_E_INTERNAL;
    }
}

int require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return XVK_E_DOMAIN;
    }
    return XVK_OK;
}

xvakit::Scenario make_scenario(const xvakit::RunConfig& cfg, double shock_bps,
                               double cds_change_bps, double dvol_bps) {
    xvakit::Scenario s;
    s.base_cds_bps = cfg.base_cds_bps;
    s.shock_bps = shock_bps;
    s.cds_change_bps = cds_change_bps;
    s.dvol_bps = dvol_bps;
    return s;
}

xvakit::StrategyKind to_kind(xvk_strategy_kind kind) {
    switch (kind) {
    case XVK_STRATEGY_VANILLA: return xvakit::StrategyKind::Vanilla;
    case XVK_STRATEGY_RESET: return xvakit::StrategyKind::Reset;
    case XVK_STRATEGY_MANDATORY_BREAK: return xvakit::StrategyKind::MandatoryBreak;
    case XVK_STRATEGY_RESTRUCTURING: return xvakit::StrategyKind::Restructuring;
    }
    throw std::invalid_argument("unknown strategy kind");
}

xvk_xva_breakdown pack(const xvakit::XvaBreakdown& b) {
    return {b.cva, b.fva, b.xva()};
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path.string() + "'");
    return out;
}

} // namespace

extern "C" {

const char* xvk_version(void) { return "0.1.0"; }

const char* xvk_last_error(void) { return g_last_error.c_str(); }

int xvk_config_load(const char* path, xvk_config** out) {
    if (int rc = require(path && out, "null argument")) return rc;
    return guarded([&] {
        *out = new xvk_config{xvakit::load_config(path)};
        return XVK_OK;
    });
}

int xvk_config_parse(const char* json_text, xvk_config** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] {
        *out = new xvk_config{xvakit::parse_config(json_text)};
        return XVK_OK;
    });
}

int xvk_config_default(xvk_config** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] {
        *out = new xvk_config{xvakit::default_config()};
        return XVK_OK;
    });
}

void xvk_config_free(xvk_config* cfg) { delete cfg; }

int xvk_config_set_grid_step(xvk_config* cfg, double years) {
    if (int rc = require(cfg != nullptr, "null config")) return rc;
    return guarded([&] {
        if (!(years > 0.0 && years <= cfg->cfg.maturity))
            throw std::domain_error("grid step must be in (0, maturity]");
        cfg->cfg.grid_step = years;
        return XVK_OK;
    });
}

int xvk_price(const xvk_config* cfg, xvk_strategy_kind kind, double event_time,
              double shock_bps, double cds_change_bps, double dvol_bps,
              xvk_price_result* out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    return guarded([&] {
        const auto& c = cfg->cfg;
        const auto scenario = make_scenario(c, shock_bps, cds_change_bps, dvol_bps);
        const xvakit::StrategySpec spec{to_kind(kind), event_time};
        const auto price = xvakit::price_strategy(c.swap(), c.market(), scenario, c.funding(),
                                                  spec, c.pricing_options());
        out->total = pack(price.total);
        out->first_leg = pack(price.first_leg);
        out->has_continuation = price.continuation_leg.has_value() ? 1 : 0;
        out->continuation_leg =
            price.continuation_leg ? pack(*price.continuation_leg) : xvk_xva_breakdown{0, 0, 0};
        out->reduction_pct = price.reduction_pct;
        return XVK_OK;
    });
}

int xvk_exposure_write_csv(const xvk_config* cfg, xvk_strategy_kind kind, double event_time,
                           double shock_bps, const char* path) {
    if (int rc = require(cfg && path, "null argument")) return rc;
    return guarded([&] {
        const auto& c = cfg->cfg;
        const auto market = c.market();
        const auto swap = c.swap();
        (void)shock_bps;  // the exposure shape does not depend on the credit scenario
        xvakit::ExposureProfile profile;
        switch (to_kind(kind)) {
        case xvakit::StrategyKind::Vanilla:
            profile = xvakit::exposure_profile_vanilla(swap, market, c.grid_step);
            break;
        case xvakit::StrategyKind::Reset:
            profile = xvakit::exposure_profile_reset(swap, market, event_time, c.grid_step);
            break;
        case xvakit::StrategyKind::MandatoryBreak:
        case xvakit::StrategyKind::Restructuring:
            profile = xvakit::exposure_profile_truncated(swap, market, event_time, c.grid_step);
            break;
        }
        auto out = open_out(path);
        xvakit::report::write_profile_csv(out, profile);
        return XVK_OK;
    });
}

int xvk_grid_compute(const xvk_config* cfg, int threads, xvk_grid** out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    return guarded([&] {
        const auto& c = cfg->cfg;
        auto grid = xvakit::scenario_grid(c.swap(), c.market(), c.funding(), c.base_cds_bps,
                                          c.shocks_bps, c.event_times, c.all_changes(),
                                          c.dvols_bps, c.pricing_options(), threads);
        *out = new xvk_grid{std::move(grid)};
        return XVK_OK;
    });
}

int xvk_grid_reset_count(const xvk_grid* grid) {
    return grid ? static_cast<int>(grid->result.reset.size()) : 0;
}

int xvk_grid_mb_count(const xvk_grid* grid) {
    return grid ? static_cast<int>(grid->result.mb.size()) : 0;
}

int xvk_grid_reset_cell(const xvk_grid* grid, int index, xvk_reset_cell* out) {
    if (int rc = require(grid && out, "null argument")) return rc;
    if (int rc = require(index >= 0 && index < xvk_grid_reset_count(grid), "index out of range"))
        return rc;
    const auto& c = grid->result.reset[static_cast<std::size_t>(index)];
    *out = {c.shock_bps, c.event_time, c.reduction_pct};
    return XVK_OK;
}

int xvk_grid_mb_cell(const xvk_grid* grid, int index, xvk_mb_cell* out) {
    if (int rc = require(grid && out, "null argument")) return rc;
    if (int rc = require(index >= 0 && index < xvk_grid_mb_count(grid), "index out of range"))
        return rc;
    const auto& c = grid->result.mb[static_cast<std::size_t>(index)];
    *out = {c.shock_bps, c.event_time, c.cds_change_bps, c.dvol_bps, c.reduction_pct,
            c.valid ? 1 : 0};
    return XVK_OK;
}

int xvk_grid_write(const xvk_grid* grid, const xvk_config* cfg, const char* out_dir) {
    if (int rc = require(grid && cfg && out_dir, "null argument")) return rc;
    return guarded([&] {
        const auto& c = cfg->cfg;
        const fs::path dir(out_dir);
        fs::create_directories(dir);
        namespace rep = xvakit::report;
        {
            auto out = open_out(dir / "reset_grid.csv");
            rep::write_reset_grid_csv(out, grid->result, c.event_times);
        }
        {
            auto out = open_out(dir / "mb_grid.csv");
            rep::write_mb_grid_csv(out, grid->result, c.event_times);
        }
        {
            auto out = open_out(dir / "mb_vol_grid.csv");
            rep::write_mb_vol_grid_csv(out, grid->result, c.vol_table_event_time, c.dvols_bps);
        }
        {
            auto out = open_out(dir / "reset_grid.txt");
            rep::write_reset_grid_text(out, grid->result, c.event_times);
        }
        {
            auto out = open_out(dir / "mb_grid.txt");
            rep::write_mb_grid_text(out, grid->result, c.event_times);
        }
        {
            auto out = open_out(dir / "mb_vol_grid.txt");
            rep::write_mb_vol_grid_text(out, grid->result, c.vol_table_event_time, c.dvols_bps);
        }
        return XVK_OK;
    });
}

void xvk_grid_free(xvk_grid* grid) { delete grid; }

int xvk_break_even(const xvk_config* cfg, double shock_bps, double event_time,
                   xvk_break_even_result* out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    return guarded([&] {
        const auto& c = cfg->cfg;
        const auto r = xvakit::break_even_recovery(c.swap(), c.market(), c.funding(),
                                                   c.base_cds_bps, shock_bps, event_time,
                                                   c.pricing_options());
        *out = {r.cds_change_bps, r.bracketed ? 1 : 0, r.mb_reduction_pct,
                r.reset_reduction_pct};
        return XVK_OK;
    });
}

int xvk_cds_run(const xvk_config* cfg, xvk_cds_mode mode, const char* corpus_path,
                const char* out_dir, xvk_cds_summary* out) {
    if (int rc = require(cfg && corpus_path && out_dir, "null argument")) return rc;
    return guarded([&] {
        const auto& c = cfg->cfg;
        std::ifstream in(corpus_path);
        if (!in) {
            g_last_error = std::string("cannot open corpus '") + corpus_path + "'";
            return XVK_E_INPUT;
        }
        const auto parsed = xvakit::cds::parse_corpus(in);
        if (parsed.quotes.empty()) {
            g_last_error = "no usable rows in corpus";
            return XVK_E_INPUT;
        }
        const auto corpus = xvakit::cds::prepare(parsed.quotes, c.prepare);

        std::map<double, std::vector<xvakit::cds::ShockEvent>> events_by_threshold;
        std::vector<xvakit::cds::ShockEvent> all_events;
        for (double threshold : c.shock_thresholds_bps) {
            auto& bucket = events_by_threshold[threshold];
            for (const auto& series : corpus) {
                auto evs = xvakit::cds::detect_shocks(series, threshold);
                bucket.insert(bucket.end(), evs.begin(), evs.end());
            }
            all_events.insert(all_events.end(), bucket.begin(), bucket.end());
        }

        std::vector<xvakit::cds::ShockEvent> crisis_events;
        for (const auto& series : corpus) {
            auto evs = xvakit::cds::detect_shocks(series, c.crisis_threshold_bps);
            crisis_events.insert(crisis_events.end(), evs.begin(), evs.end());
        }
        const auto calendar =
            xvakit::cds::detect_crises(crisis_events, corpus, c.crisis_fraction);

        const fs::path dir(out_dir);
        fs::create_directories(dir);
        namespace rep = xvakit::report;
        {
            auto f = open_out(dir / "events.csv");
            rep::write_events_csv(f, all_events);
        }
        if (!parsed.errors.empty()) {
            auto f = open_out(dir / "parse_errors.csv");
            f << "line,message\n";
            for (const auto& e : parsed.errors) f << e.line << ',' << e.message << '\n';
        }
        if (mode == XVK_CDS_CRISES || mode == XVK_CDS_RECOVERY) {
            auto f = open_out(dir / "timeline.csv");
            rep::write_timeline_csv(f, calendar);
        }
        if (mode == XVK_CDS_RECOVERY) {
            const auto tables = xvakit::cds::recovery_quantile_table(
                events_by_threshold, corpus, calendar, c.horizons_years, c.recovery_quantiles);
            auto f = open_out(dir / "recovery.csv");
            rep::write_recovery_csv(f, tables);
        }

        if (out) {
            out->rows_parsed = static_cast<long>(parsed.quotes.size());
            out->row_errors = static_cast<long>(parsed.errors.size());
            out->names_prepared = static_cast<long>(corpus.size());
            out->events = static_cast<long>(all_events.size());
            long crisis_dates = 0;
            for (const auto& p : calendar)
                if (p.flag == 1) ++crisis_dates;
            out->crisis_dates = crisis_dates;
        }
        return XVK_OK;
    });
}

} // extern "C"
