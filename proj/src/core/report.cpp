// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

namespace xvakit::report {

namespace {

using Key = std::tuple<double, double, double, double>;  // shock, time, change, dvol

std::map<Key, const GridCell*> index_mb(const GridResult& grid) {
    std::map<Key, const GridCell*> idx;
    for (const auto& c : grid.mb)
        idx[{c.shock_bps, c.event_time, c.cds_change_bps, c.dvol_bps}] = &c;
    return idx;
}

void put_cell(std::ostream& out, const GridCell* cell) {
    if (cell && cell->valid)
        out << std::fixed << std::setprecision(6) << cell->reduction_pct;
    else
        out << "NA";
}

void put_cell_text(std::ostream& out, const GridCell* cell, int width) {
    if (cell && cell->valid)
        out << std::setw(width) << std::fixed << std::setprecision(1) << cell->reduction_pct;
    else
        out << std::setw(width) << "NA";
}

std::vector<double> sorted_shocks(const GridResult& grid) {
    std::set<double> s;
    for (const auto& c : grid.reset) s.insert(c.shock_bps);
    for (const auto& c : grid.mb) s.insert(c.shock_bps);
    return {s.begin(), s.end()};
}

std::vector<double> sorted_changes(const GridResult& grid) {
    std::set<double> s;
    for (const auto& c : grid.mb) s.insert(c.cds_change_bps);
    return {s.begin(), s.end()};
}

} // namespace

void write_profile_csv(std::ostream& out, const ExposureProfile& profile) {
    out << "t,epe,ene,ev\n" << std::fixed << std::setprecision(10);
    for (std::size_t i = 0; i < profile.grid.size(); ++i)
        out << profile.grid[i] << ',' << profile.epe[i] << ',' << profile.ene[i] << ','
            << profile.ev[i] << '\n';
}

void write_reset_grid_csv(std::ostream& out, const GridResult& grid,
                          const std::vector<double>& event_times) {
    std::map<std::pair<double, double>, const GridCell*> idx;
    for (const auto& c : grid.reset) idx[{c.shock_bps, c.event_time}] = &c;
    out << "shock_bps";
    for (double t : event_times) out << ",reset_" << t << "y";
    out << '\n';
    for (double shock : sorted_shocks(grid)) {
        out << shock;
        for (double t : event_times) {
            out << ',';
            auto it = idx.find({shock, t});
            put_cell(out, it == idx.end() ? nullptr : it->second);
        }
        out << '\n';
    }
}

void write_mb_grid_csv(std::ostream& out, const GridResult& grid,
                       const std::vector<double>& event_times) {
    const auto idx = index_mb(grid);
    out << "shock_bps,cds_change_bps";
    for (double t : event_times) out << ",break_" << t << "y";
    out << '\n';
    for (double shock : sorted_shocks(grid))
        for (double change : sorted_changes(grid)) {
            bool any = false;
            for (double t : event_times)
                if (idx.count({shock, t, change, 0.0})) any = true;
            if (!any) continue;
            out << shock << ',' << change;
            for (double t : event_times) {
                out << ',';
                auto it = idx.find({shock, t, change, 0.0});
                put_cell(out, it == idx.end() ? nullptr : it->second);
            }
            out << '\n';
        }
}

void write_mb_vol_grid_csv(std::ostream& out, const GridResult& grid, double event_time,
                           const std::vector<double>& dvols_bps) {
    const auto idx = index_mb(grid);
    out << "shock_bps,cds_change_bps";
    for (double v : dvols_bps) out << ",dvol_" << v << "bps";
    out << '\n';
    for (double shock : sorted_shocks(grid))
        for (double change : sorted_changes(grid)) {
            bool any = false;
            for (double v : dvols_bps)
                if (idx.count({shock, event_time, change, v})) any = true;
            if (!any) continue;
            out << shock << ',' << change;
            for (double v : dvols_bps) {
                out << ',';
                auto it = idx.find({shock, event_time, change, v});
                put_cell(out, it == idx.end() ? nullptr : it->second);
            }
            out << '\n';
        }
}

void write_reset_grid_text(std::ostream& out, const GridResult& grid,
                           const std::vector<double>& event_times) {
    std::map<std::pair<double, double>, const GridCell*> idx;
    for (const auto& c : grid.reset) idx[{c.shock_bps, c.event_time}] = &c;
    out << "XVA reduction (%) with a Reset, by reset point (years)\n";
    out << std::setw(10) << "shock";
    for (double t : event_times) out << std::setw(9) << t;
    out << '\n';
    for (double shock : sorted_shocks(grid)) {
        out << std::setw(10) << std::fixed << std::setprecision(0) << shock;
        for (double t : event_times) {
            auto it = idx.find({shock, t});
            put_cell_text(out, it == idx.end() ? nullptr : it->second, 9);
        }
        out << '\n';
    }
}

void write_mb_grid_text(std::ostream& out, const GridResult& grid,
                        const std::vector<double>& event_times) {
    const auto idx = index_mb(grid);
    out << "XVA reduction (%) with a Mandatory Break, by break point (years), dvol = 0\n";
    out << std::setw(10) << "shock" << std::setw(10) << "change";
    for (double t : event_times) out << std::setw(9) << t;
    out << '\n';
    for (double shock : sorted_shocks(grid))
        for (double change : sorted_changes(grid)) {
            bool any = false;
            for (double t : event_times)
                if (idx.count({shock, t, change, 0.0})) any = true;
            if (!any) continue;
            out << std::setw(10) << std::fixed << std::setprecision(0) << shock << std::setw(10)
                << change;
            for (double t : event_times) {
                auto it = idx.find({shock, t, change, 0.0});
                put_cell_text(out, it == idx.end() ? nullptr : it->second, 9);
            }
            out << '\n';
        }
}

void write_mb_vol_grid_text(std::ostream& out, const GridResult& grid, double event_time,
                            const std::vector<double>& dvols_bps) {
    const auto idx = index_mb(grid);
    out << "XVA reduction (%) with a Mandatory Break at " << event_time
        << "y, by volatility change (bps)\n";
    out << std::setw(10) << "shock" << std::setw(10) << "change";
    for (double v : dvols_bps) out << std::setw(9) << v;
    out << '\n';
    for (double shock : sorted_shocks(grid))
        for (double change : sorted_changes(grid)) {
            bool any = false;
            for (double v : dvols_bps)
                if (idx.count({shock, event_time, change, v})) any = true;
            if (!any) continue;
            out << std::setw(10) << std::fixed << std::setprecision(0) << shock << std::setw(10)
                << change;
            for (double v : dvols_bps) {
                auto it = idx.find({shock, event_time, change, v});
                put_cell_text(out, it == idx.end() ? nullptr : it->second, 9);
            }
            out << '\n';
        }
}

void write_events_csv(std::ostream& out, const std::vector<cds::ShockEvent>& events) {
    out << "name,date,threshold_bps,size_bps\n";
    for (const auto& e : events)
        out << e.name << ',' << format_iso_date(e.date) << ',' << e.threshold_bps << ','
            << std::fixed << std::setprecision(4) << e.size_bps << '\n';
}

void write_timeline_csv(std::ostream& out, const std::vector<cds::CrisisPoint>& calendar) {
    out << "date,active,shocked,pct_shocked,crisis_flag\n";
    for (const auto& p : calendar) {
        out << format_iso_date(p.date) << ',' << p.active << ',' << p.shocked << ',';
        if (p.flag < 0)
            out << "NA,NA\n";
        else
            out << std::fixed << std::setprecision(4) << p.pct << ',' << p.flag << '\n';
    }
}

void write_recovery_csv(std::ostream& out, const std::vector<cds::RecoveryTable>& tables) {
    out << "shock_bps,quantile";
    if (!tables.empty())
        for (double h : tables.front().horizons_years) out << ',' << h << "y";
    out << '\n';
    for (const auto& t : tables) {
        for (std::size_t qi = 0; qi < t.quantile_levels.size(); ++qi) {
            out << t.threshold_bps << ',' << t.quantile_levels[qi];
            for (const auto& cell : t.cells) {
                out << ',';
                if (cell.count == 0)
                    out << "NA";
                else
                    out << std::fixed << std::setprecision(4) << cell.quantiles[qi];
            }
            out << '\n';
        }
        out << t.threshold_bps << ",n";
        for (const auto& cell : t.cells) out << ',' << cell.count;
        out << '\n';
    }
}

} // namespace xvakit::report
