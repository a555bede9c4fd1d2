// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "cds.hpp"
#include "mathutil.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace xvakit::cds {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return fields;
}

} // namespace

std::optional<Region> parse_region(const std::string& s) {
    if (s == "Asia") return Region::Asia;
    if (s == "Europe") return Region::Europe;
    if (s == "NorthAmerica" || s == "North America") return Region::NorthAmerica;
    return std::nullopt;
}

std::string region_name(Region r) {
    switch (r) {
    case Region::Asia: return "Asia";
    case Region::Europe: return "Europe";
    case Region::NorthAmerica: return "NorthAmerica";
    }
    return "?";
}

ParseResult parse_corpus(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv_row(line);
        if (lineno == 1 && !fields.empty() && fields[0] == "date") continue;  // header
        if (fields.size() != 5) {
            result.errors.push_back({lineno, "expected 5 fields, got " +
                                                 std::to_string(fields.size())});
            continue;
        }
        try {
            RawQuote q;
            q.date = parse_iso_date(fields[0]);
            q.name = fields[1];
            if (q.name.empty()) throw std::invalid_argument("empty name");
            const auto region = parse_region(fields[2]);
            if (!region) throw std::invalid_argument("unknown region '" + fields[2] + "'");
            q.region = *region;
            if (fields[3] == "1Y")
                q.tenor = Tenor::Y1;
            else if (fields[3] == "5Y")
                q.tenor = Tenor::Y5;
            else
                throw std::invalid_argument("tenor must be 1Y or 5Y");
            std::size_t pos = 0;
            q.spread_bps = std::stod(fields[4], &pos);
            if (pos != fields[4].size()) throw std::invalid_argument("bad spread");
            if (!(q.spread_bps > 0.0)) throw std::invalid_argument("spread must be > 0");
            result.quotes.push_back(std::move(q));
        } catch (const std::exception& e) {
            result.errors.push_back({lineno, e.what()});
        }
    }
    return result;
}

std::vector<CdsSeries> prepare(const std::vector<RawQuote>& quotes,
                               const PrepareOptions& options) {
    struct NameData {
        Region region;
        std::map<Date, double> by_date;  // max over tenors quoted that day
    };
    std::map<std::string, NameData> names;
    for (const auto& q : quotes) {
        auto [it, inserted] = names.try_emplace(q.name, NameData{q.region, {}});
        auto [vit, fresh] = it->second.by_date.try_emplace(q.date, q.spread_bps);
        if (!fresh) vit->second = std::max(vit->second, q.spread_bps);
    }

    const double min_span_days = options.min_span_years * kDaysPerYear;
    const int half = options.median_filter_points / 2;

    std::vector<CdsSeries> out;
    for (auto& [name, data] : names) {
        if (std::find(options.regions.begin(), options.regions.end(), data.region) ==
            options.regions.end())
            continue;
        if (data.by_date.size() < 2) continue;
        const Date first = data.by_date.begin()->first;
        const Date last = data.by_date.rbegin()->first;
        if (static_cast<double>(last - first) < min_span_days) continue;

        // business-day grid with linear interpolation over gaps
        std::vector<Date> obs_dates;
        std::vector<double> obs_vals;
        for (const auto& [d, v] : data.by_date) {
            obs_dates.push_back(d);
            obs_vals.push_back(v);
        }
        CdsSeries series;
        series.name = name;
        series.region = data.region;
        std::size_t k = 0;
        for (Date d = first; d <= last; ++d) {
            if (!is_business_day(d)) continue;
            while (k + 1 < obs_dates.size() && obs_dates[k + 1] <= d) ++k;
            double v;
            if (obs_dates[k] == d || k + 1 >= obs_dates.size()) {
                v = obs_vals[k];
            } else {
                const double w = static_cast<double>(d - obs_dates[k]) /
                                 static_cast<double>(obs_dates[k + 1] - obs_dates[k]);
                v = obs_vals[k] + w * (obs_vals[k + 1] - obs_vals[k]);
            }
            series.dates.push_back(d);
            series.spreads.push_back(v);
        }
        if (series.dates.size() < 2) continue;

        // centered rolling median; shrunken windows at the edges
        const auto n = series.spreads.size();
        std::vector<double> filtered(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t lo = (i >= static_cast<std::size_t>(half)) ? i - half : 0;
            const std::size_t hi = std::min(n, i + half + 1);
            filtered[i] = median(std::vector<double>(series.spreads.begin() + lo,
                                                     series.spreads.begin() + hi));
        }
        series.spreads = std::move(filtered);
        out.push_back(std::move(series));
    }
    return out;
}

std::vector<ShockEvent> detect_shocks(const CdsSeries& series, double threshold_bps) {
    std::vector<ShockEvent> events;
    const auto& dates = series.dates;
    const auto& vals = series.spreads;
    const Date first = dates.front();
    double last_event = -1e18;
    std::size_t lo = 0;
    for (std::size_t i = 0; i < dates.size(); ++i) {
        const Date t = dates[i];
        if (static_cast<double>(t - first) < kDaysPerYear) continue;
        if (static_cast<double>(t) - last_event < kDaysPerYear) continue;
        while (static_cast<double>(t - dates[lo]) > kDaysPerYear) ++lo;
        if (lo >= i) continue;  // empty trailing window
        const double q10 =
            quantile(std::vector<double>(vals.begin() + lo, vals.begin() + i), 0.10);
        const double size = vals[i] - q10;
        if (size >= threshold_bps) {
            events.push_back({series.name, t, size, threshold_bps});
            last_event = static_cast<double>(t);
        }
    }
    return events;
}

std::vector<CrisisPoint> detect_crises(const std::vector<ShockEvent>& events,
                                       const std::vector<CdsSeries>& corpus,
                                       double crisis_fraction) {
    std::vector<CrisisPoint> calendar;
    if (corpus.empty()) return calendar;
    Date lo = corpus.front().first(), hi = corpus.front().last();
    for (const auto& s : corpus) {
        lo = std::min(lo, s.first());
        hi = std::max(hi, s.last());
    }
    std::vector<Date> days;
    for (Date d = lo; d <= hi; ++d)
        if (is_business_day(d)) days.push_back(d);

    auto index_of = [&](Date d) {
        return static_cast<std::size_t>(
            std::lower_bound(days.begin(), days.end(), d) - days.begin());
    };

    // difference arrays for active names and names shocked in the trailing year
    std::vector<int> active_diff(days.size() + 1, 0);
    for (const auto& s : corpus) {
        active_diff[index_of(s.first())] += 1;
        const auto end = index_of(s.last() + 1);
        active_diff[end] -= 1;
    }
    // per-name events are >= 1y apart, so the trailing-year intervals of one
    // name never overlap and a plain sum counts names, not events
    std::vector<int> shocked_diff(days.size() + 1, 0);
    for (const auto& e : events) {
        const auto start = index_of(e.date);
        // dates d with 0 <= d - e.date < kDaysPerYear
        const auto end = index_of(e.date + static_cast<Date>(std::floor(kDaysPerYear)) + 1);
        shocked_diff[start] += 1;
        shocked_diff[std::min(end, days.size())] -= 1;
    }

    int active = 0, shocked = 0;
    for (std::size_t i = 0; i < days.size(); ++i) {
        active += active_diff[i];
        shocked += shocked_diff[i];
        CrisisPoint p;
        p.date = days[i];
        p.active = active;
        p.shocked = shocked;
        if (active == 0) {
            p.flag = -1;
        } else {
            p.pct = 100.0 * static_cast<double>(shocked) / static_cast<double>(active);
            p.flag = (static_cast<double>(shocked) / static_cast<double>(active) >=
                      crisis_fraction)
                         ? 1
                         : 0;
        }
        calendar.push_back(p);
    }
    return calendar;
}

std::optional<double> recovery_change(const CdsSeries& series, Date shock_date,
                                      double horizon_years) {
    const double hd = horizon_years * kDaysPerYear;
    const double lower = static_cast<double>(shock_date) + 0.95 * hd;
    const double upper = static_cast<double>(shock_date) + 1.05 * hd;
    if (static_cast<double>(series.last()) < upper) return std::nullopt;

    // CDS(t): value at the shock date (last grid point <= shock_date)
    auto it = std::upper_bound(series.dates.begin(), series.dates.end(), shock_date);
    if (it == series.dates.begin()) return std::nullopt;
    const double at_shock = series.spreads[static_cast<std::size_t>(
        it - series.dates.begin() - 1)];

    std::vector<double> window;
    for (std::size_t i = 0; i < series.dates.size(); ++i) {
        const double d = static_cast<double>(series.dates[i]);
        if (d >= lower && d < upper) window.push_back(series.spreads[i]);
    }
    if (window.empty()) return std::nullopt;
    return median(std::move(window)) - at_shock;
}

std::vector<RecoveryTable> recovery_quantile_table(
    const std::map<double, std::vector<ShockEvent>>& events_by_threshold,
    const std::vector<CdsSeries>& corpus, const std::vector<CrisisPoint>& calendar,
    const std::vector<double>& horizons_years, const std::vector<double>& quantile_levels) {
    std::unordered_map<std::string, const CdsSeries*> by_name;
    for (const auto& s : corpus) by_name[s.name] = &s;

    auto in_crisis = [&](Date d) {
        auto it = std::lower_bound(calendar.begin(), calendar.end(), d,
                                   [](const CrisisPoint& p, Date x) { return p.date < x; });
        return it != calendar.end() && it->date == d && it->flag == 1;
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
                auto sit = by_name.find(e.name);
                if (sit == by_name.end()) continue;
                if (auto c = recovery_change(*sit->second, e.date, h)) changes.push_back(*c);
            }
            RecoveryCell cell;
            cell.count = static_cast<int>(changes.size());
            if (!changes.empty())
                for (double q : quantile_levels) cell.quantiles.push_back(quantile(changes, q));
            table.cells.push_back(std::move(cell));
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

} // namespace xvakit::cds
