// Copyright (c) 2026 the xvakit authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/curves.hpp"

#include <cmath>
#include <stdexcept>

using namespace xvakit;

TEST_CASE("StepFunction value and integral") {
    StepFunction flat(3.0);
    CHECK(flat.value(0.0) == 3.0);
    CHECK(flat.value(7.5) == 3.0);
    CHECK(flat.integral(2.0) == doctest::Approx(6.0));

    StepFunction steps({0.0, 1.0, 3.0}, {1.0, 2.0, 4.0});
    CHECK(steps.value(0.5) == 1.0);
    CHECK(steps.value(1.0) == 2.0);
    CHECK(steps.value(10.0) == 4.0);
    CHECK(steps.integral(0.5) == doctest::Approx(0.5));
    CHECK(steps.integral(2.0) == doctest::Approx(1.0 + 2.0));
    CHECK(steps.integral(4.0) == doctest::Approx(1.0 + 4.0 + 4.0));

    CHECK_THROWS_AS(StepFunction({0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StepFunction({0.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(flat.value(-0.1), std::domain_error);
}

TEST_CASE("YieldCurve discount factors") {
    const auto flat2 = YieldCurve::flat(0.02);
    CHECK(flat2.discount(0.0) == 1.0);
    CHECK(flat2.discount(1.0) == doctest::Approx(std::exp(-0.02)).epsilon(1e-12));
    CHECK(flat2.discount(1.0) == doctest::Approx(0.980199).epsilon(1e-6));

    const auto flat0 = YieldCurve::flat(0.0);
    CHECK(flat0.discount(7.0) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(flat2.discount(-1.0), std::domain_error);
    CHECK_THROWS_AS(YieldCurve({}), std::invalid_argument);
    CHECK_THROWS_AS(YieldCurve({{1.0, 0.01}, {1.0, 0.02}}), std::invalid_argument);
    CHECK_THROWS_AS(YieldCurve({{0.0, 0.01}}), std::invalid_argument);
}

TEST_CASE("YieldCurve flat-forward interpolation and positivity") {
    const YieldCurve curve({{1.0, -0.004}, {5.0, 0.001}, {10.0, 0.002}});
    // log D linear between nodes
    const double l1 = std::log(curve.discount(1.0));
    const double l5 = std::log(curve.discount(5.0));
    const double l3 = std::log(curve.discount(3.0));
    CHECK(l3 == doctest::Approx(l1 + (l5 - l1) * 0.5).epsilon(1e-12));

    // multiplicative across adjacent intervals
    const double fwd = (l5 - l1) / 4.0;
    CHECK(curve.discount(2.5) ==
          doctest::Approx(curve.discount(1.0) * std::exp(fwd * 1.5)).epsilon(1e-12));

    for (double t = 0.0; t <= 100.0; t += 0.7) CHECK(curve.discount(t) > 0.0);
    CHECK(curve.discount(0.0) == 1.0);
}

TEST_CASE("YieldCurve zero rate consistency") {
    const YieldCurve curve({{2.0, 0.01}, {10.0, 0.02}});
    for (double t : {0.5, 2.0, 6.0, 15.0})
        CHECK(curve.discount(t) ==
              doctest::Approx(std::exp(-curve.zero_rate(t) * t)).epsilon(1e-12));
}

TEST_CASE("FundingCurve adds the spread") {
    const FundingCurve funding(YieldCurve::flat(0.01), 100.0);
    CHECK(funding.discount(0.0) == 1.0);
    CHECK(funding.discount(1.0) == doctest::Approx(std::exp(-0.02)).epsilon(1e-12));
    CHECK(funding.discount(5.0) <= funding.base().discount(5.0));

    const FundingCurve zero(YieldCurve::flat(0.0), 0.0);
    CHECK(zero.discount(5.0) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(FundingCurve(YieldCurve::flat(0.01), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(funding.discount(-0.5), std::domain_error);
}

TEST_CASE("CreditCurve credit triangle") {
    const auto credit = CreditCurve::flat(600.0, 0.4);
    CHECK(credit.hazard(3.0) == doctest::Approx(0.10).epsilon(1e-12));
    CHECK(credit.survival(0.0) == 1.0);
    CHECK(credit.survival(1.0) == doctest::Approx(std::exp(-0.10)).epsilon(1e-12));
    CHECK(credit.survival(1.0) == doctest::Approx(0.904837).epsilon(1e-6));
    CHECK(credit.lgd() == doctest::Approx(0.6));

    const auto riskless = CreditCurve::flat(0.0, 0.4);
    CHECK(riskless.survival(10.0) == 1.0);
    CHECK(riskless.default_probability_bucket(2.0, 0.5) == 0.0);

    CHECK(credit.default_probability_bucket(0.0, 0.5) ==
          doctest::Approx(1.0 - std::exp(-0.05)).epsilon(1e-12));
    CHECK(credit.default_probability_bucket(0.0, 0.5) == doctest::Approx(0.048771).epsilon(1e-5));

    CHECK_THROWS_AS(CreditCurve::flat(100.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CreditCurve::flat(100.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(CreditCurve::flat(-5.0, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(credit.survival(-1.0), std::domain_error);
    CHECK_THROWS_AS(credit.default_probability_bucket(1.0, 0.0), std::domain_error);
}

TEST_CASE("survival monotone and buckets partition") {
    const CreditCurve credit(StepFunction({0.0, 2.0, 5.0}, {100.0, 400.0, 50.0}), 0.25);
    double prev = 1.0;
    for (double t = 0.0; t <= 30.0; t += 0.25) {
        const double s = credit.survival(t);
        CHECK(s <= prev + 1e-15);
        prev = s;
    }
    // bucketed default probabilities over a partition of [0, T]
    const double T = 12.0;
    double sum = 0.0;
    for (double t = 0.0; t < T - 1e-9; t += 0.5)
        sum += credit.default_probability_bucket(t, 0.5);
    CHECK(sum == doctest::Approx(1.0 - credit.survival(T)).epsilon(1e-12));
}
