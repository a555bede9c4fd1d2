// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "dates.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace xvakit {

namespace chr = std::chrono;

Date parse_iso_date(const std::string& s) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3)
        throw std::invalid_argument("bad date: '" + s + "'");
    const chr::year_month_day ymd{chr::year{y}, chr::month{static_cast<unsigned>(m)},
                                  chr::day{static_cast<unsigned>(d)}};
    if (!ymd.ok())
        throw std::invalid_argument("bad date: '" + s + "'");
    return chr::sys_days{ymd}.time_since_epoch().count();
}

std::string format_iso_date(Date d) {
    const chr::year_month_day ymd{chr::sys_days{chr::days{d}}};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

bool is_business_day(Date d) {
    const chr::weekday wd{chr::sys_days{chr::days{d}}};
    return wd != chr::Saturday && wd != chr::Sunday;
}

} // namespace xvakit
