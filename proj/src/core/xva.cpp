// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#include "xva.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace xvakit {

namespace {

constexpr double kEps = 1e-9;

// Grid abscissae and exposure values restricted to [t_a, t_b]; endpoints are
// linearly interpolated when they fall between grid points.
struct WindowSlice {
    std::vector<double> t;
    std::vector<double> x;
};

WindowSlice slice_window(const std::vector<double>& grid, const std::vector<double>& values,
                         double t_a, double t_b) {
    if (!(t_a >= -kEps && t_a < t_b))
        throw std::domain_error("xva window: need 0 <= t_a < t_b");
    if (t_a < grid.front() - kEps || t_b > grid.back() + kEps)
        throw std::domain_error("xva window: window not covered by the profile grid");

    auto interp = [&](double t) {
        std::size_t i = 1;
        while (i + 1 < grid.size() && grid[i] < t) ++i;
        const double w = (t - grid[i - 1]) / (grid[i] - grid[i - 1]);
        return values[i - 1] + w * (values[i] - values[i - 1]);
    };

    WindowSlice s;
    s.t.push_back(t_a);
    s.x.push_back(interp(t_a));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] > t_a + kEps && grid[i] < t_b - kEps) {
            s.t.push_back(grid[i]);
            s.x.push_back(values[i]);
        }
    }
    s.t.push_back(t_b);
    s.x.push_back(interp(t_b));
    return s;
}

double trapezoid(const WindowSlice& s, const std::function<double(double, double)>& integrand) {
    double acc = 0.0;
    double f_prev = integrand(s.t.front(), s.x.front());
    for (std::size_t i = 1; i < s.t.size(); ++i) {
        const double f = integrand(s.t[i], s.x[i]);
        acc += 0.5 * (f_prev + f) * (s.t[i] - s.t[i - 1]);
        f_prev = f;
    }
    return acc;
}

} // namespace

double cva(const ExposureProfile& profile, const CreditCurve& credit,
           const FundingCurve& funding, double t_a, double t_b) {
    const auto s = slice_window(profile.grid, profile.epe, t_a, t_b);
    const double lambda_a = credit.cumulative_hazard(t_a);
    return credit.lgd() *
           trapezoid(s, [&](double u, double epe) {
               const double survival = std::exp(-(credit.cumulative_hazard(u) - lambda_a));
               return credit.hazard(u) * survival * funding.discount(u) * epe;
           });
}

double fva(const ExposureProfile& profile, const CreditCurve& credit,
           const FundingCurve& funding, double t_a, double t_b) {
    const auto s = slice_window(profile.grid, profile.ev, t_a, t_b);
    const double lambda_a = credit.cumulative_hazard(t_a);
    return trapezoid(s, [&](double u, double ev) {
        const double survival = std::exp(-(credit.cumulative_hazard(u) - lambda_a));
        return funding.spread_bps(u) * 1e-4 * survival * funding.discount(u) * ev;
    });
}

XvaBreakdown xva_total(const ExposureProfile& profile, const CreditCurve& credit,
                       const FundingCurve& funding, double t_a, double t_b) {
    return {cva(profile, credit, funding, t_a, t_b),
            fva(profile, credit, funding, t_a, t_b)};
}

} // namespace xvakit
