// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "curves.hpp"
#include "exposure.hpp"

namespace xvakit {

struct XvaBreakdown {
    double cva = 0.0;
    double fva = 0.0;
    double xva() const { return cva + fva; }
};

/// CVA over [t_a, t_b] by trapezoidal quadrature on the profile grid:
///   LGD * integral lambda(u) * exp(-int_{t_a}^{u} lambda) * D_rF(u) * epe(u) du
/// The survival factor restarts at t_a (conditional survival); the funding
/// discount factor is always measured from time 0.
double cva(const ExposureProfile& profile, const CreditCurve& credit,
           const FundingCurve& funding, double t_a, double t_b);

/// FVA over [t_a, t_b]:
///   integral s_F(u) * exp(-int_{t_a}^{u} lambda) * D_rF(u) * ev(u) du
double fva(const ExposureProfile& profile, const CreditCurve& credit,
           const FundingCurve& funding, double t_a, double t_b);

XvaBreakdown xva_total(const ExposureProfile& profile, const CreditCurve& credit,
                       const FundingCurve& funding, double t_a, double t_b);

} // namespace xvakit
