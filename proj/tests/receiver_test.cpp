// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/receiver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dnsdisc/states.hpp"

namespace dnsdisc {
namespace {

DiscriminationProblem equal(double mu, int h, int k, double nt, double p0 = 0.5) {
  return DiscriminationProblem::normalized({{mu, 0.0}, h, nt}, {{mu, 0.0}, k, nt}, p0);
}

TEST(Decide, MonotoneInCount) {
  EXPECT_EQ(decide(0, 2), Hypothesis::one);
  EXPECT_EQ(decide(2, 2), Hypothesis::one);
  EXPECT_EQ(decide(3, 2), Hypothesis::zero);
  EXPECT_EQ(decide(0, kNoThreshold), Hypothesis::zero);
  for (int n_th = -1; n_th < 5; ++n_th) {
    for (int c = 0; c < 10; ++c) {
      if (decide(c, n_th) == Hypothesis::zero) {
        EXPECT_EQ(decide(c + 1, n_th), Hypothesis::zero);
      }
    }
  }
}

TEST(OptimalThreshold, HandValues) {
  // k = 0 vs h = 1 at nt = 0.2: lambda_0 = p1 * 1/1.2 - p0 * 0 > 0 and
  // lambda_1 = p1 * 0.2/1.44 - p0 * 1/1.44 < 0, so n_th = 0.
  EXPECT_EQ(optimal_threshold(equal(0.0, 1, 0, 0.2)), 0);
  EXPECT_EQ(optimal_threshold(equal(0.0, 2, 0, 0.5)), 1);
  // Noiseless OOK limit: n_th = h - 1.
  EXPECT_EQ(optimal_threshold(equal(0.0, 3, 0, 0.0)), 2);
}

TEST(OptimalThreshold, IsTheMinimizer) {
  for (const double mu : {0.0, 1.0, 2.0}) {
    for (const double nt : {0.05, 0.5, 1.0}) {
      for (const double p0 : {0.3, 0.7}) {
        for (int h = 1; h <= 4; ++h) {
          for (int k = 0; k <= h; ++k) {
            const auto p = equal(mu, h, k, nt, p0);
            const int n_opt = optimal_threshold(p);
            const double at_opt = kennedy_error(p, n_opt);
            double best = std::numeric_limits<double>::infinity();
            for (int n = kNoThreshold; n < 80; ++n) best = std::min(best, kennedy_error(p, n));
            EXPECT_LE(at_opt - best, 1e-12);
            // One step either way never helps.
            if (n_opt >= 0) {
              EXPECT_GE(kennedy_error(p, n_opt - 1), at_opt - 1e-15);
            }
            EXPECT_GE(kennedy_error(p, n_opt + 1), at_opt - 1e-15);
            EXPECT_NEAR(at_opt, helstrom_general(p), 1e-9);
          }
        }
      }
    }
  }
}

TEST(KennedyError, EqualsEigenvalueForm) {
  // P_K(n_th) = p1 - sum_{n <= n_th} lambda_n with lambda the spectrum of
  // the decision operator after displacing by -mu.
  const auto p = equal(0.7, 3, 1, 0.3, 0.4);
  const auto spectrum = closed_form_eigenvalues(p, 120);
  double partial = 0.0;
  for (int n = 0; n < 20; ++n) {
    partial += spectrum.lambda[n];
    EXPECT_NEAR(kennedy_error(p, n), p.p1 - partial, 1e-12) << n;
  }
  EXPECT_DOUBLE_EQ(kennedy_error(p, kNoThreshold), p.p1);
}

TEST(ThresholdCondition, SingleCrossing) {
  for (const double nt : {0.05, 0.3, 2.0}) {
    for (int h = 1; h <= 6; ++h) {
      for (int k = 0; k <= h; ++k) {
        const auto p = equal(0.0, h, k, nt, 0.45);
        int crossings = 0;
        bool prev = threshold_condition(p, h);
        for (Index n = h + 1; n < 400; ++n) {
          const bool now = threshold_condition(p, n);
          EXPECT_FALSE(now && !prev) << "condition returns after failing, n=" << n;
          crossings += (prev != now);
          prev = now;
        }
        EXPECT_LE(crossings, 1);
      }
    }
  }
}

TEST(KennedyError, GeneralFormMatchesSpecialCase) {
  const auto p = equal(1.2, 2, 0, 0.4, 0.5);
  for (int n = 0; n < 6; ++n) {
    EXPECT_NEAR(kennedy_error(p, ReceiverConfig{Complex{-1.2, 0.0}, n}), kennedy_error(p, n), 1e-12);
  }
  // Unequal displacements need the general form.
  const auto q = DiscriminationProblem::normalized({{0.0, 0.0}, 1, 0.2}, {{0.5, 0.0}, 0, 0.2}, 0.5);
  EXPECT_THROW(kennedy_error(q, 0), std::invalid_argument);
  const double pe = kennedy_error(q, ReceiverConfig{Complex{-0.5, 0.0}, 0});
  EXPECT_GE(pe, helstrom_general(q) - 1e-12);
  EXPECT_LE(pe, 0.5);
}

TEST(Simulate, WithinFiveSigma) {
  const auto p = equal(1.0, 2, 0, 0.3, 0.5);
  const auto config = optimal_receiver(p);
  const std::uint64_t trials = 400'000;
  const auto sim = simulate(p, config, trials, 99, 2);
  const double pe = kennedy_error(p, config);
  const double sigma = std::sqrt(pe * (1.0 - pe) / trials);
  EXPECT_EQ(sim.trials, trials);
  EXPECT_LT(std::abs(sim.error_rate() - pe), 5.0 * sigma);
}

TEST(Simulate, DegeneratePrior) {
  // p0 = 1: hypothesis 1 never occurs; with n_th = -1 nothing is ever wrong.
  const auto p = equal(0.5, 2, 0, 0.2, 1.0);
  const auto sim = simulate(p, ReceiverConfig{Complex{-0.5, 0.0}, kNoThreshold}, 10'000, 3);
  EXPECT_EQ(sim.errors, 0u);
  EXPECT_EQ(kennedy_error(p, kNoThreshold), 0.0);
}

TEST(Simulate, DeterministicAcrossWorkerCounts) {
  const auto p = equal(0.8, 3, 1, 0.5, 0.4);
  const auto config = optimal_receiver(p);
  const auto one = simulate(p, config, 300'000, 12345, 1);
  const auto four = simulate(p, config, 300'000, 12345, 4);
  const auto again = simulate(p, config, 300'000, 12345, 4);
  EXPECT_EQ(one.errors, four.errors);
  EXPECT_EQ(four.errors, again.errors);
  EXPECT_NE(simulate(p, config, 300'000, 12346, 4).errors, one.errors);
  EXPECT_THROW(simulate(p, config, 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace dnsdisc
