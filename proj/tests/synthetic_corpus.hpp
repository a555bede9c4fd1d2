// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic synthetic CDS corpus with injected step-shocks and known
// recovery paths. Self-contained (own calendar arithmetic) so that tests
// linking only the shared library can use it as well.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace corpus {

// days since 1970-01-01 -> (y, m, d), civil calendar
inline void civil_from_days(int z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int yr = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp < 10 ? mp + 3 : mp - 9;
    y = yr + (m <= 2);
}

inline int days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int>(doe) - 719468;
}

inline bool is_weekday(int day) {
    const int wd = ((day % 7) + 7) % 7;  // 0 = Thursday (1970-01-01)
    return wd != 2 && wd != 3;           // Saturday, Sunday
}

inline std::string iso(int day) {
    int y;
    unsigned m, d;
    civil_from_days(day, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
    return buf;
}

struct Name {
    std::string id;
    std::string region;
    double base_bps;
    int start_day;
    int end_day;
    int shock_day;        // 0: no injected shock
    double shock_bps;
    double recovery_bps;  // linear fall-back over two years after the shock
    int spike_day;        // 0: none; one-day +5000bps outlier
};

// 100 names over 2015-2019: ten +600 steps in one week of 2016-03 (a crisis:
// 10% of active names), five +1200 steps spread over 2017, three short-lived
// names below the span cutoff, one spiky name, the rest quiet.
inline std::vector<Name> default_names() {
    const int start = days_from_civil(2015, 1, 1);
    const int end = days_from_civil(2019, 12, 31);
    const char* regions[] = {"Europe", "NorthAmerica", "Asia"};
    std::vector<Name> names;
    for (int i = 0; i < 100; ++i) {
        Name n;
        char id[8];
        std::snprintf(id, sizeof(id), "N%03d", i);
        n.id = id;
        n.region = regions[i % 3];
        n.base_bps = 80.0 + 2.0 * i;
        n.start_day = start;
        n.end_day = end;
        n.shock_day = 0;
        n.shock_bps = 0.0;
        n.recovery_bps = 0.0;
        n.spike_day = 0;
        if (i < 10) {
            n.shock_day = days_from_civil(2016, 3, 1) + i / 2;
            n.shock_bps = 600.0;
            n.recovery_bps = 400.0 + 10.0 * i;
        } else if (i < 15) {
            n.shock_day = days_from_civil(2017, 2, 1) + 50 * (i - 10);
            n.shock_bps = 1200.0;
            n.recovery_bps = 900.0;
        } else if (i < 18) {
            // too short for the 2.1y span rule
            n.start_day = days_from_civil(2018, 6, 1);
        } else if (i == 20) {
            n.spike_day = days_from_civil(2016, 9, 14);
        }
        names.push_back(n);
    }
    return names;
}

inline double level_on(const Name& n, int day) {
    double v = n.base_bps;
    if (n.shock_day > 0 && day >= n.shock_day) {
        const double since = day - n.shock_day;
        const double fall = n.recovery_bps * std::min(since / 730.0, 1.0);
        v += n.shock_bps - fall;
    }
    if (n.spike_day > 0 && day == n.spike_day) v += 5000.0;
    return v;
}

/// CSV text for the corpus; quotes on weekdays, both tenors with the 5Y on
/// top except every 7th name where the 1Y leads. Small deterministic noise.
inline std::string csv(const std::vector<Name>& names, bool header = true) {
    std::string out;
    if (header) out += "date,name,region,tenor,spread_bps\n";
    std::mt19937 rng(20150101);
    std::uniform_real_distribution<double> noise(-4.0, 4.0);
    char line[128];
    for (const auto& n : names) {
        const bool one_year_leads = (n.id.back() - '0') % 7 == 0;
        for (int day = n.start_day; day <= n.end_day; ++day) {
            const double eps = noise(rng);  // one draw per calendar day, every name
            if (!is_weekday(day)) continue;
            const double lead = level_on(n, day) + eps;
            const double lag = lead - 15.0;
            const double y5 = one_year_leads ? lag : lead;
            const double y1 = one_year_leads ? lead : lag;
            std::snprintf(line, sizeof(line), "%s,%s,%s,5Y,%.4f\n", iso(day).c_str(),
                          n.id.c_str(), n.region.c_str(), y5);
            out += line;
            std::snprintf(line, sizeof(line), "%s,%s,%s,1Y,%.4f\n", iso(day).c_str(),
                          n.id.c_str(), n.region.c_str(), y1);
            out += line;
        }
    }
    return out;
}

inline std::string default_csv() { return csv(default_names()); }

} // namespace corpus
