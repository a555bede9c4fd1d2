// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dates.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xvakit::cds {

enum class Region { Asia, Europe, NorthAmerica };

std::optional<Region> parse_region(const std::string& s);
std::string region_name(Region r);

enum class Tenor { Y1, Y5 };

struct RawQuote {
    Date date = 0;
    std::string name;
    Region region = Region::Europe;
    Tenor tenor = Tenor::Y5;
    double spread_bps = 0.0;
};

struct RowError {
    std::size_t line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<RawQuote> quotes;
    std::vector<RowError> errors;
};

/// One row per quote: date,name,region,tenor,spread_bps. An optional header
/// row is skipped. Bad rows are collected, not fatal.
ParseResult parse_corpus(std::istream& in);

/// Prepared series: per-name max(1Y,5Y) composite on the business-day grid,
/// gaps linearly interpolated, 21-point centered rolling median applied.
struct CdsSeries {
    std::string name;
    Region region = Region::Europe;
    std::vector<Date> dates;      // strictly increasing business days
    std::vector<double> spreads;  // bps, > 0

    Date first() const { return dates.front(); }
    Date last() const { return dates.back(); }
    bool covers(Date d) const { return d >= first() && d <= last(); }
};

struct PrepareOptions {
    std::vector<Region> regions = {Region::Asia, Region::Europe, Region::NorthAmerica};
    double min_span_years = 2.1;
    int median_filter_points = 21;
};

std::vector<CdsSeries> prepare(const std::vector<RawQuote>& quotes,
                               const PrepareOptions& options = {});

struct ShockEvent {
    std::string name;
    Date date = 0;
    double size_bps = 0.0;       // CDS(t) - 10% quantile of the trailing year
    double threshold_bps = 0.0;
};

/// Chronological scan: at every grid date with at least one year of history,
/// shock size = CDS(t) - quantile(10%, window [t-1y, t)). An event fires the
/// first time size >= threshold; detection is then suppressed for one year.
std::vector<ShockEvent> detect_shocks(const CdsSeries& series, double threshold_bps);

struct CrisisPoint {
    Date date = 0;
    int active = 0;
    int shocked = 0;             // names with an event in (date - 1y, date]
    double pct = 0.0;
    int flag = 0;                // 1 crisis, 0 normal, -1 undefined (no active names)
};

/// Calendar over all business days spanned by the corpus. Crisis iff the
/// fraction of active names with a >= threshold shock in the trailing year
/// reaches crisis_fraction (paper default: 250bps shocks, 6%).
std::vector<CrisisPoint> detect_crises(const std::vector<ShockEvent>& events,
                                       const std::vector<CdsSeries>& corpus,
                                       double crisis_fraction = 0.06);

/// Change to the median CDS level inside [t + 0.95h, t + 1.05h) minus CDS(t).
/// Empty when the series does not extend past 1.05 * horizon after the shock.
std::optional<double> recovery_change(const CdsSeries& series, Date shock_date,
                                      double horizon_years);

struct RecoveryCell {
    std::vector<double> quantiles;   // one per requested level; empty if count == 0
    int count = 0;
};

struct RecoveryTable {
    double threshold_bps = 0.0;
    std::vector<double> horizons_years;
    std::vector<double> quantile_levels;
    std::vector<RecoveryCell> cells;  // indexed by horizon
};

/// Table-1-style quantiles of recovery_change over events whose shock date
/// falls in a crisis period.
std::vector<RecoveryTable> recovery_quantile_table(
    const std::map<double, std::vector<ShockEvent>>& events_by_threshold,
    const std::vector<CdsSeries>& corpus, const std::vector<CrisisPoint>& calendar,
    const std::vector<double>& horizons_years, const std::vector<double>& quantile_levels);

} // namespace xvakit::cds
