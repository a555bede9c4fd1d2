/* Copyright (c) 2026 the xvakit authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the xvakit shared library.
 *
 * All entry points return a status code; XVK_OK on success. On failure a
 * human-readable message is available from xvk_last_error() (thread-local).
 * Handles are opaque and must be released with the matching _free call.
 */

#ifndef XVAKIT_H
#define XVAKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define XVK_API __declspec(dllexport)
#else
#define XVK_API __attribute__((visibility("default")))
#endif

/* status codes */
#define XVK_OK 0
#define XVK_E_CONFIG 1   /* configuration missing/invalid */
#define XVK_E_INPUT 2    /* input data unusable */
#define XVK_E_DOMAIN 3   /* argument outside an operation's domain */
#define XVK_E_INTERNAL 4

typedef struct xvk_config xvk_config;
typedef struct xvk_grid xvk_grid;

typedef enum {
    XVK_STRATEGY_VANILLA = 0,
    XVK_STRATEGY_RESET = 1,
    XVK_STRATEGY_MANDATORY_BREAK = 2,
    XVK_STRATEGY_RESTRUCTURING = 3
} xvk_strategy_kind;

typedef struct {
    double cva;
    double fva;
    double xva;
} xvk_xva_breakdown;

typedef struct {
    xvk_xva_breakdown total;
    xvk_xva_breakdown first_leg;
    xvk_xva_breakdown continuation_leg; /* zeros when has_continuation == 0 */
    int has_continuation;
    double reduction_pct; /* vs the vanilla trade, same scenario */
} xvk_price_result;

typedef struct {
    double shock_bps;
    double event_time;
    double reduction_pct;
} xvk_reset_cell;

typedef struct {
    double shock_bps;
    double event_time;
    double cds_change_bps;
    double dvol_bps;
    double reduction_pct;
    int valid; /* 0: the scenario was rejected, see error message in CSV/NA cell */
} xvk_mb_cell;

typedef struct {
    double cds_change_bps;
    int bracketed; /* 0: no sign change inside [-shock, 2*shock] */
    double mb_reduction_pct;
    double reset_reduction_pct;
} xvk_break_even_result;

typedef enum {
    XVK_CDS_ANALYZE = 0,  /* events CSV */
    XVK_CDS_CRISES = 1,   /* events + crisis timeline CSV */
    XVK_CDS_RECOVERY = 2  /* events + timeline + recovery table CSV */
} xvk_cds_mode;

typedef struct {
    long rows_parsed;
    long row_errors;
    long names_prepared;
    long events;
    long crisis_dates;
} xvk_cds_summary;

XVK_API const char* xvk_version(void);

/* Message for the last failing call on this thread; empty string if none. */
XVK_API const char* xvk_last_error(void);

/* ---- configuration ---- */
XVK_API int xvk_config_load(const char* path, xvk_config** out);
XVK_API int xvk_config_parse(const char* json_text, xvk_config** out);
XVK_API int xvk_config_default(xvk_config** out);
XVK_API void xvk_config_free(xvk_config* cfg);
XVK_API int xvk_config_set_grid_step(xvk_config* cfg, double years);

/* ---- strategy pricing ----
 * shock/change/dvol describe the credit scenario; event_time is the reset or
 * break point (ignored for the vanilla strategy). */
XVK_API int xvk_price(const xvk_config* cfg, xvk_strategy_kind kind, double event_time,
                      double shock_bps, double cds_change_bps, double dvol_bps,
                      xvk_price_result* out);

/* Exposure profile (t, epe, ene, ev) of the strategy's inception trade as CSV. */
XVK_API int xvk_exposure_write_csv(const xvk_config* cfg, xvk_strategy_kind kind,
                                   double event_time, double shock_bps, const char* path);

/* ---- scenario grid ---- */
XVK_API int xvk_grid_compute(const xvk_config* cfg, int threads, xvk_grid** out);
XVK_API int xvk_grid_reset_count(const xvk_grid* grid);
XVK_API int xvk_grid_mb_count(const xvk_grid* grid);
XVK_API int xvk_grid_reset_cell(const xvk_grid* grid, int index, xvk_reset_cell* out);
XVK_API int xvk_grid_mb_cell(const xvk_grid* grid, int index, xvk_mb_cell* out);
/* Write reset_grid/mb_grid/mb_vol_grid as .csv and .txt under out_dir. */
XVK_API int xvk_grid_write(const xvk_grid* grid, const xvk_config* cfg, const char* out_dir);
XVK_API void xvk_grid_free(xvk_grid* grid);

/* ---- break-even CDS recovery ---- */
XVK_API int xvk_break_even(const xvk_config* cfg, double shock_bps, double event_time,
                           xvk_break_even_result* out);

/* ---- historical CDS analytics ----
 * Reads the corpus CSV (date,name,region,tenor,spread_bps), writes
 * events.csv / timeline.csv / recovery.csv under out_dir depending on mode.
 * Fails with XVK_E_INPUT only when no row is usable. */
XVK_API int xvk_cds_run(const xvk_config* cfg, xvk_cds_mode mode, const char* corpus_path,
                        const char* out_dir, xvk_cds_summary* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* XVAKIT_H */
