// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0
//
// Naive brute-force reference for the CDS analytics pipeline. Every step is
// written as a direct O(n^2) scan of the documented conventions (type-7
// quantiles, 365.25-day year, window [t-1y, t), shrunken median-filter edges)
// with none of the incremental bookkeeping used by the production code.

#pragma once

#include "core/cds.hpp"
#include "core/dates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace cdsref {

using xvakit::Date;
using xvakit::kDaysPerYear;
using xvakit::cds::CdsSeries;
using xvakit::cds::CrisisPoint;
using xvakit::cds::PrepareOptions;
using xvakit::cds::RawQuote;
using xvakit::cds::RecoveryTable;
using xvakit::cds::ShockEvent;

// Type-7 quantile: linear interpolation between order statistics.
inline double quantile7(std::vector<double> xs, double p) {
    std::sort(xs.begin(), xs.end());
    const double h = (static_cast<double>(xs.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= xs.size()) return xs.back();
    return xs[lo] + (h - static_cast<double>(lo)) * (xs[lo + 1] - xs[lo]);
}

inline std::vector<CdsSeries> prepare(const std::vector<RawQuote>& quotes,
                                      const PrepareOptions& options = {}) {
    std::map<std::string, std::map<Date, double>> by_name;
    std::map<std::string, xvakit::cds::Region> regions;
    for (const auto& q : quotes) {
        auto& slot = by_name[q.name];
        auto it = slot.find(q.date);
        if (it == slot.end())
            slot[q.date] = q.spread_bps;
        else
            it->second = std::max(it->second, q.spread_bps);
        regions.emplace(q.name, q.region);
    }

    std::vector<CdsSeries> out;
    for (const auto& [name, obs] : by_name) {
        const auto region = regions.at(name);
        if (std::find(options.regions.begin(), options.regions.end(), region) ==
            options.regions.end())
            continue;
        if (obs.size() < 2) continue;
        const Date first = obs.begin()->first;
        const Date last = obs.rbegin()->first;
        if (static_cast<double>(last - first) < options.min_span_years * kDaysPerYear) continue;

        CdsSeries series;
        series.name = name;
        series.region = region;
        std::vector<Date> odates;
        std::vector<double> ovals;
        for (const auto& [d, v] : obs) {
            odates.push_back(d);
            ovals.push_back(v);
        }
        for (Date d = first; d <= last; ++d) {
            if (!xvakit::is_business_day(d)) continue;
            // last observation at or before d, by direct scan
            std::size_t k = 0;
            for (std::size_t j = 0; j < odates.size(); ++j)
                if (odates[j] <= d) k = j;
            double v;
            if (odates[k] == d) {
                v = ovals[k];
            } else {
                const double w = static_cast<double>(d - odates[k]) /
                                 static_cast<double>(odates[k + 1] - odates[k]);
                v = ovals[k] + w * (ovals[k + 1] - ovals[k]);
            }
            series.dates.push_back(d);
            series.spreads.push_back(v);
        }
        if (series.dates.size() < 2) continue;

        const int half = options.median_filter_points / 2;
        const auto n = static_cast<int>(series.spreads.size());
        std::vector<double> filtered(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<double> window;
            for (int j = std::max(0, i - half); j < std::min(n, i + half + 1); ++j)
                window.push_back(series.spreads[static_cast<std::size_t>(j)]);
            filtered[static_cast<std::size_t>(i)] = quantile7(window, 0.5);
        }
        series.spreads = filtered;
        out.push_back(series);
    }
    return out;
}

inline std::vector<ShockEvent> detect_shocks(const CdsSeries& series, double threshold_bps) {
    std::vector<ShockEvent> events;
    for (std::size_t i = 0; i < series.dates.size(); ++i) {
        const Date t = series.dates[i];
        if (static_cast<double>(t - series.dates.front()) < kDaysPerYear) continue;
        if (!events.empty() &&
            static_cast<double>(t - events.back().date) < kDaysPerYear)
            continue;
        std::vector<double> window;
        for (std::size_t j = 0; j < i; ++j)
            if (static_cast<double>(t - series.dates[j]) <= kDaysPerYear)
                window.push_back(series.spreads[j]);
        if (window.empty()) continue;
        const double size = series.spreads[i] - quantile7(window, 0.10);
        if (size >= threshold_bps)
            events.push_back({series.name, t, size, threshold_bps});
    }
    return events;
}

inline std::vector<CrisisPoint> detect_crises(const std::vector<ShockEvent>& events,
                                              const std::vector<CdsSeries>& corpus,
                                              double crisis_fraction = 0.06) {
    std::vector<CrisisPoint> calendar;
    if (corpus.empty()) return calendar;
    Date lo = corpus.front().first(), hi = corpus.front().last();
    for (const auto& s : corpus) {
        lo = std::min(lo, s.first());
        hi = std::max(hi, s.last());
    }
    const auto shock_days = static_cast<Date>(std::floor(kDaysPerYear));
    for (Date d = lo; d <= hi; ++d) {
        if (!xvakit::is_business_day(d)) continue;
        CrisisPoint p;
        p.date = d;
        for (const auto& s : corpus)
            if (s.covers(d)) ++p.active;
        std::vector<std::string> shocked;
        for (const auto& e : events)
            if (e.date <= d && d - e.date <= shock_days) shocked.push_back(e.name);
        std::sort(shocked.begin(), shocked.end());
        shocked.erase(std::unique(shocked.begin(), shocked.end()), shocked.end());
        p.shocked = static_cast<int>(shocked.size());
        if (p.active == 0) {
            p.flag = -1;
        } else {
            p.pct = 100.0 * p.shocked / p.active;
            p.flag = (static_cast<double>(p.shocked) / p.active >= crisis_fraction) ? 1 : 0;
        }
        calendar.push_back(p);
    }
    return calendar;
}

inline std::optional<double> recovery_change(const CdsSeries& series, Date shock_date,
                                             double horizon_years) {
    const double lower = shock_date + 0.95 * horizon_years * kDaysPerYear;
    const double upper = shock_date + 1.05 * horizon_years * kDaysPerYear;
    if (static_cast<double>(series.last()) < upper) return std::nullopt;
    double at_shock = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < series.dates.size(); ++i)
        if (series.dates[i] <= shock_date) {
            at_shock = series.spreads[i];
            found = true;
        }
    if (!found) return std::nullopt;
    std::vector<double> window;
    for (std::size_t i = 0; i < series.dates.size(); ++i) {
        const double d = static_cast<double>(series.dates[i]);
        if (d >= lower && d < upper) window.push_back(series.spreads[i]);
    }
    if (window.empty()) return std::nullopt;
    return quantile7(window, 0.5) - at_shock;
}

inline std::vector<RecoveryTable> recovery_quantile_table(
    const std::map<double, std::vector<ShockEvent>>& events_by_threshold,
    const std::vector<CdsSeries>& corpus, const std::vector<CrisisPoint>& calendar,
    const std::vector<double>& horizons_years, const std::vector<double>& quantile_levels) {
    auto in_crisis = [&](Date d) {
        for (const auto& p : calendar)
            if (p.date == d) return p.flag == 1;
        return false;
    };
    auto series_of = [&](const std::string& name) -> const CdsSeries* {
        for (const auto& s : corpus)
            if (s.name == name) return &s;
        return nullptr;
    };

    std::vector<RecoveryTable> tables;
    for (const auto& [threshold, events] : events_by_threshold) {
        RecoveryTable table;
        table.threshold_bps = threshold;
        table.horizons_years = horizons_years;
        table.quantile_levels = quantile_levels;
        for (double h : horizons_years) {
            std::vector<double> changes;
            for (const auto& e : events) {
                if (!in_crisis(e.date)) continue;
                const auto* s = series_of(e.name);
                if (!s) continue;
                if (auto c = cdsref::recovery_change(*s, e.date, h)) changes.push_back(*c);
            }
            xvakit::cds::RecoveryCell cell;
            cell.count = static_cast<int>(changes.size());
            if (!changes.empty())
                for (double q : quantile_levels) cell.quantiles.push_back(quantile7(changes, q));
            table.cells.push_back(cell);
        }
        tables.push_back(table);
    }
    return tables;
}

} // namespace cdsref
