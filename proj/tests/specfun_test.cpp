// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace dnsdisc {
namespace {

// Explicit power series in long double; valid for any integer a as the
// polynomial continuation, where C(n+a, n-i) vanishes for n-i > n+a >= 0.
long double series_laguerre(int n, int a, long double x) {
  long double sum = 0.0L;
  long double xi_over_fact = 1.0L;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) xi_over_fact *= x / i;
    const int top = n + a;
    const int bottom = n - i;
    long double c = 0.0L;
    if (top >= 0 && bottom <= top) {
      c = 1.0L;
      for (int j = 1; j <= bottom; ++j) c = c * (top - bottom + j) / j;
    }
    sum += ((i % 2) ? -1.0L : 1.0L) * c * xi_over_fact;
  }
  return sum;
}

TEST(LogFactorial, MatchesDirectSum) {
  long double direct = 0.0L;
  for (int n = 1; n <= 170; ++n) {
    direct += std::log(static_cast<long double>(n));
    EXPECT_NEAR(log_factorial(n), static_cast<double>(direct), 1e-13 * std::max(1.0L, direct))
        << "n=" << n;
  }
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_THROW(log_factorial(-1), std::domain_error);
}

TEST(LogBinomial, SymmetricAndExact) {
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(log_binomial(n, k), log_binomial(n, n - k));
  }
  EXPECT_DOUBLE_EQ(binomial(10, 3), 120.0);
  EXPECT_DOUBLE_EQ(binomial(52, 5), 2598960.0);
  EXPECT_EQ(binomial(3, 5), 0.0);
  EXPECT_EQ(binomial(3, -1), 0.0);
  EXPECT_THROW(log_binomial(3, 5), std::domain_error);
}

TEST(Laguerre, MatchesPowerSeries) {
  for (int n = 0; n <= 12; ++n) {
    for (int a = -n; a <= 8; ++a) {
      for (int xi = -3; xi <= 3; ++xi) {
        const long double x = xi;
        const long double want = series_laguerre(n, a, x);
        const double got = laguerre(n, a, static_cast<double>(x));
        EXPECT_NEAR(got, static_cast<double>(want), 1e-10 * std::max(1.0L, std::abs(want)))
            << "n=" << n << " a=" << a << " x=" << xi;
      }
    }
  }
}

TEST(Laguerre, ReflectionCase) {
  // L_4^{(-2)}(x) = x^2 / 12 * L_2^{(2)}(x) = x^2 (x^2 - 8x + 12) / 24.
  const double x = 1.3;
  EXPECT_NEAR(laguerre(4, -2, x), x * x * (x * x - 8 * x + 12) / 24.0, 1e-14);
}

TEST(Laguerre, ValueAtZeroIsBinomial) {
  for (int n = 0; n <= 20; ++n) {
    for (int a = 0; a <= 10; ++a) {
      EXPECT_NEAR(laguerre(n, a, 0.0), binomial(n + a, n), 1e-12 * binomial(n + a, n));
    }
  }
}

TEST(Laguerre, LogFormSurvivesLargeDegree) {
  // At negative x every series term is positive, so the long-double series
  // is an exact-enough reference even where the value overflows a double.
  for (const auto& [n, a, x] : {std::tuple{400, 30, -50.0L}, std::tuple{600, 5, -400.0L}}) {
    const SignedLog got = log_laguerre(n, a, static_cast<double>(x));
    const long double want = std::log(series_laguerre(n, a, x));
    EXPECT_EQ(got.sign, 1);
    EXPECT_NEAR(got.log_abs, static_cast<double>(want), 1e-12 * std::abs(want)) << n;
  }
  EXPECT_GT(log_laguerre(600, 5, -400.0).log_abs, 709.0);
  const SignedLog moderate = log_laguerre(30, 3, 7.5);
  EXPECT_NEAR(moderate.value(), static_cast<double>(series_laguerre(30, 3, 7.5L)),
              1e-9 * std::abs(moderate.value()));
  EXPECT_THROW(laguerre(-1, 0, 1.0), std::domain_error);
}

TEST(LaguerreTable, AgreesWithPointEvaluation) {
  const double x = 2.7;
  const LaguerreTable table(15, 6, x);
  for (int d = 0; d <= 15; ++d) {
    for (int a = -std::min(d, 6); a <= 6; ++a) {
      EXPECT_NEAR(table(d, a).value(), laguerre(d, a, x),
                  1e-11 * std::max(1.0, std::abs(laguerre(d, a, x))))
          << "d=" << d << " a=" << a;
    }
  }
  EXPECT_THROW((void)table(16, 0), std::out_of_range);
  EXPECT_THROW((void)table(2, -3), std::out_of_range);
}

TEST(SignedLog, RoundTripAndProduct) {
  for (const double v : {-3.5, -1e-200, 0.0, 2.0, 1e250}) {
    EXPECT_NEAR(SignedLog::from_value(v).value(), v, 1e-13 * std::abs(v));
  }
  EXPECT_DOUBLE_EQ((SignedLog::from_value(-2.0) * SignedLog::from_value(4.0)).value(), -8.0);
  EXPECT_TRUE((SignedLog::zero() * SignedLog::from_value(3.0)).is_zero());
}

}  // namespace
}  // namespace dnsdisc
