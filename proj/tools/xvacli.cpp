// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Links only the C API; every number printed here is
// produced by the library, the CLI adds no arithmetic.

#include <xvakit/xvakit.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInput = 2;

int exit_code(int status) {
    if (status == XVK_OK) return kExitOk;
    if (status == XVK_E_INPUT) return kExitInput;
    return kExitConfig;
}

int report_failure(int status) {
    std::fprintf(stderr, "error: %s\n", xvk_last_error());
    return exit_code(status);
}

struct ConfigHandle {
    xvk_config* cfg = nullptr;
    ~ConfigHandle() { xvk_config_free(cfg); }
};

int load_config(const std::string& path, double grid_step, ConfigHandle& handle) {
    int rc = path.empty() ? xvk_config_default(&handle.cfg)
                          : xvk_config_load(path.c_str(), &handle.cfg);
    if (rc != XVK_OK) return rc;
    if (grid_step > 0.0) rc = xvk_config_set_grid_step(handle.cfg, grid_step);
    return rc;
}

void print_breakdown(const char* label, const xvk_xva_breakdown& b) {
    std::printf("%-14s cva=%.8f fva=%.8f xva=%.8f\n", label, b.cva, b.fva, b.xva);
}

xvk_strategy_kind parse_kind(const std::string& s) {
    if (s == "vanilla") return XVK_STRATEGY_VANILLA;
    if (s == "reset") return XVK_STRATEGY_RESET;
    if (s == "mb" || s == "mandatory-break") return XVK_STRATEGY_MANDATORY_BREAK;
    return XVK_STRATEGY_RESTRUCTURING;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"xvakit: client-side XVA strategy pricing and CDS shock analytics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    double grid_step = 0.0;
    int threads = 1;
    app.add_option("--config", config_path, "configuration file (JSON)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--grid-step", grid_step, "exposure grid step in years (overrides config)");
    app.add_option("--threads", threads, "worker threads for grid cells")
        ->capture_default_str();

    // price
    auto* price = app.add_subcommand("price", "price one strategy and print the XVA breakdown");
    std::string strategy = "vanilla";
    double event_time = 2.0, shock = 500.0, change = 0.0, dvol = 0.0;
    std::string profile_csv;
    price->add_option("--strategy", strategy, "vanilla|reset|mb|restructuring")
        ->check(CLI::IsMember({"vanilla", "reset", "mb", "mandatory-break", "restructuring"}))
        ->capture_default_str();
    price->add_option("--event-time", event_time, "reset/break point in years")
        ->capture_default_str();
    price->add_option("--shock", shock, "CDS shock in bps")->capture_default_str();
    price->add_option("--change", change, "CDS improvement at the event date in bps")
        ->capture_default_str();
    price->add_option("--dvol", dvol, "normal vol change at the event date in bps")
        ->capture_default_str();
    price->add_option("--profile-csv", profile_csv, "also write the exposure profile CSV here");

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "run the full scenario grid and emit tables");

    // breakeven
    auto* breakeven = app.add_subcommand("breakeven",
                                         "CDS recovery at which a Mandatory Break matches a Reset");
    double be_shock = 500.0, be_time = 2.0;
    breakeven->add_option("--shock", be_shock, "CDS shock in bps")->capture_default_str();
    breakeven->add_option("--event-time", be_time, "break point in years")->capture_default_str();

    // cds subcommands
    std::string corpus_path;
    auto* cds_analyze = app.add_subcommand("cds-analyze", "detect shocks, write events.csv");
    auto* cds_crises = app.add_subcommand("cds-crises", "also write the crisis timeline");
    auto* cds_recovery = app.add_subcommand("cds-recovery", "also write the recovery table");
    for (auto* cmd : {cds_analyze, cds_crises, cds_recovery})
        cmd->add_option("--corpus", corpus_path, "corpus CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    ConfigHandle handle;
    if (int rc = load_config(config_path, grid_step, handle); rc != XVK_OK)
        return report_failure(rc);

    if (price->parsed()) {
        xvk_price_result result{};
        const auto kind = parse_kind(strategy);
        int rc = xvk_price(handle.cfg, kind, event_time, shock, change, dvol, &result);
        if (rc != XVK_OK) return report_failure(rc);
        print_breakdown("first leg:", result.first_leg);
        if (result.has_continuation) print_breakdown("continuation:", result.continuation_leg);
        print_breakdown("total:", result.total);
        std::printf("reduction vs vanilla: %.4f%%\n", result.reduction_pct);
        if (!profile_csv.empty()) {
            rc = xvk_exposure_write_csv(handle.cfg, kind, event_time, shock,
                                        profile_csv.c_str());
            if (rc != XVK_OK) return report_failure(rc);
            std::printf("exposure profile written to %s\n", profile_csv.c_str());
        }
        return kExitOk;
    }

    if (grid_cmd->parsed()) {
        xvk_grid* grid = nullptr;
        int rc = xvk_grid_compute(handle.cfg, threads, &grid);
        if (rc != XVK_OK) return report_failure(rc);
        std::unique_ptr<xvk_grid, decltype(&xvk_grid_free)> guard(grid, &xvk_grid_free);
        rc = xvk_grid_write(grid, handle.cfg, out_dir.c_str());
        if (rc != XVK_OK) return report_failure(rc);
        std::printf("grid written to %s (%d reset cells, %d MB cells)\n", out_dir.c_str(),
                    xvk_grid_reset_count(grid), xvk_grid_mb_count(grid));
        return kExitOk;
    }

    if (breakeven->parsed()) {
        xvk_break_even_result result{};
        int rc = xvk_break_even(handle.cfg, be_shock, be_time, &result);
        if (rc != XVK_OK) return report_failure(rc);
        std::printf("break-even cds change: %.1f bps (%s)\n", result.cds_change_bps,
                    result.bracketed ? "bracketed" : "outside bracket");
        std::printf("mb reduction at root: %.4f%%, reset reduction: %.4f%%\n",
                    result.mb_reduction_pct, result.reset_reduction_pct);
        return kExitOk;
    }

    xvk_cds_mode mode = XVK_CDS_ANALYZE;
    if (cds_crises->parsed()) mode = XVK_CDS_CRISES;
    if (cds_recovery->parsed()) mode = XVK_CDS_RECOVERY;
    xvk_cds_summary summary{};
    int rc = xvk_cds_run(handle.cfg, mode, corpus_path.c_str(), out_dir.c_str(), &summary);
    if (rc != XVK_OK) return report_failure(rc);
    std::printf("rows parsed: %ld (errors: %ld)\n", summary.rows_parsed, summary.row_errors);
    if (summary.row_errors > 0)
        std::printf("row errors with line numbers written to %s/parse_errors.csv\n",
                    out_dir.c_str());
    std::printf("names prepared: %ld\n", summary.names_prepared);
    std::printf("shock events: %ld\n", summary.events);
    if (mode != XVK_CDS_ANALYZE) std::printf("crisis dates: %ld\n", summary.crisis_dates);
    if (summary.events == 0) std::printf("warning: no shock events detected\n");
    return kExitOk;
}
