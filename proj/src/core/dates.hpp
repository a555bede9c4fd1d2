// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace xvakit {

/// Days since 1970-01-01; plain int keeps series arithmetic cheap.
using Date = int;

constexpr double kDaysPerYear = 365.25;

/// Parse "YYYY-MM-DD"; throws std::invalid_argument on malformed input.
Date parse_iso_date(const std::string& s);

std::string format_iso_date(Date d);

/// Monday..Friday
bool is_business_day(Date d);

} // namespace xvakit
