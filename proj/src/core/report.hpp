// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cds.hpp"
#include "config.hpp"
#include "exposure.hpp"
#include "strategies.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace xvakit::report {

void write_profile_csv(std::ostream& out, const ExposureProfile& profile);

/// reset grid: rows = shock, columns = event times
void write_reset_grid_csv(std::ostream& out, const GridResult& grid,
                          const std::vector<double>& event_times);
/// MB grid at dvol = 0: rows = shock x change, columns = event times
void write_mb_grid_csv(std::ostream& out, const GridResult& grid,
                       const std::vector<double>& event_times);
/// MB vol table at one break point: rows = shock x change, columns = dvols
void write_mb_vol_grid_csv(std::ostream& out, const GridResult& grid, double event_time,
                           const std::vector<double>& dvols_bps);

/// aligned-text twins of the three grid tables
void write_reset_grid_text(std::ostream& out, const GridResult& grid,
                           const std::vector<double>& event_times);
void write_mb_grid_text(std::ostream& out, const GridResult& grid,
                        const std::vector<double>& event_times);
void write_mb_vol_grid_text(std::ostream& out, const GridResult& grid, double event_time,
                            const std::vector<double>& dvols_bps);

void write_events_csv(std::ostream& out, const std::vector<cds::ShockEvent>& events);
void write_timeline_csv(std::ostream& out, const std::vector<cds::CrisisPoint>& calendar);
void write_recovery_csv(std::ostream& out, const std::vector<cds::RecoveryTable>& tables);

} // namespace xvakit::report
