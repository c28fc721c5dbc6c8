// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/discrimination.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "dnsdisc/oracle.hpp"
#include "dnsdisc/states.hpp"

namespace dnsdisc {
namespace {

DiscriminationProblem make(Complex xi, int h, Complex mu, int k, double nt, double p0 = 0.5) {
  return DiscriminationProblem::normalized({xi, h, nt}, {mu, k, nt}, p0);
}

TEST(Problem, NormalizationSwapsHypotheses) {
  const auto p = DiscriminationProblem::normalized({{1.0, 0.0}, 0, 0.1}, {{0.0, 0.0}, 2, 0.1}, 0.3);
  EXPECT_EQ(p.h(), 2);
  EXPECT_EQ(p.k(), 0);
  EXPECT_DOUBLE_EQ(p.p0, 0.7);
  EXPECT_DOUBLE_EQ(p.p1, 0.3);
  EXPECT_TRUE(p.is_ordered());
  EXPECT_THROW(DiscriminationProblem::normalized({}, {}, 0.6, 0.6), std::invalid_argument);
  EXPECT_THROW(DiscriminationProblem::normalized({}, {}, -0.1), std::invalid_argument);
}

TEST(HelstromPure, KnownCoherentValue) {
  // Vacuum vs coherent |alpha>: |<0|alpha>|^2 = exp(-|alpha|^2).
  const double alpha = 0.8;
  const double overlap2 = std::exp(-alpha * alpha);
  const double want = 0.5 * (1.0 - std::sqrt(1.0 - overlap2));
  EXPECT_NEAR(helstrom_pure(make({0.0, 0.0}, 0, {alpha, 0.0}, 0, 0.0)), want, 1e-16);
  EXPECT_THROW(helstrom_pure(make({0.0, 0.0}, 0, {alpha, 0.0}, 0, 0.1)), std::invalid_argument);
}

TEST(Helstrom, ZeroErrorConditions) {
  // Equal displacement and h != k: orthogonal pure states.
  for (int h = 1; h <= 3; ++h) {
    EXPECT_LT(helstrom_pure(make({0.4, 0.2}, h, {0.4, 0.2}, 0, 0.0)), 1e-15);
  }
  // h = k = 1 at |mu - xi| = 1.
  const auto root = make({0.0, 0.0}, 1, std::polar(1.0, 0.6), 1, 0.0);
  EXPECT_LT(helstrom_pure(root), 1e-15);
  EXPECT_LT(helstrom_general(root, problem_dim(root, Reduction::displace_and_rotate, 1e-13)), 1e-12);
}

TEST(Helstrom, IdenticalStatesGiveSmallerPrior) {
  const auto p = make({0.7, -0.2}, 2, {0.7, -0.2}, 2, 0.3, 0.35);
  EXPECT_NEAR(helstrom_general(p), 0.35, 1e-12);
  EXPECT_NEAR(helstrom_closed_form(p), 0.35, 1e-12);
}

TEST(Helstrom, SymmetricUnderHypothesisSwap) {
  const DnsParams a{{0.2, 0.5}, 1, 0.3};
  const DnsParams b{{-0.6, 0.1}, 3, 0.3};
  const auto ab = DiscriminationProblem::normalized(a, b, 0.4);
  Index dim = problem_dim(ab, Reduction::none);
  const auto direct = DiscriminationProblem{b, a, 0.6, 0.4};
  EXPECT_NEAR(helstrom_general(ab), helstrom_general(direct, dim, Reduction::none), 1e-10);
}

TEST(Helstrom, NoiseOnlyHurts) {
  for (double d = 0.0; d <= 3.0; d += 0.5) {
    for (const auto& [h, k] : {std::pair{0, 0}, {1, 0}, {2, 1}, {3, 3}}) {
      const double clean = helstrom_general(make({0.0, 0.0}, h, {d, 0.0}, k, 0.0));
      const double noisy = helstrom_general(make({0.0, 0.0}, h, {d, 0.0}, k, 0.2));
      EXPECT_GE(noisy, clean - 1e-9) << "d=" << d << " h=" << h << " k=" << k;
    }
  }
}

TEST(Helstrom, BoundedByPriors) {
  for (const double p0 : {0.1, 0.5, 0.8}) {
    const double pe = helstrom_general(make({0.3, 0.0}, 2, {-0.5, 0.4}, 1, 0.6, p0));
    EXPECT_GE(pe, 0.0);
    EXPECT_LE(pe, std::min(p0, 1.0 - p0) + 1e-12);
  }
}

TEST(Helstrom, DisplacementInvariance) {
  const auto base = make({0.0, 0.0}, 2, {0.9, 0.0}, 0, 0.4, 0.45);
  const Complex shift{-0.7, 1.1};
  const auto moved = make(shift, 2, Complex{0.9, 0.0} + shift, 0, 0.4, 0.45);
  const double reduced = helstrom_general(moved);
  const double unreduced = helstrom_general(moved, problem_dim(moved, Reduction::none), Reduction::none);
  EXPECT_NEAR(reduced, helstrom_general(base), 1e-12);
  EXPECT_NEAR(unreduced, reduced, 1e-9);
}

TEST(Helstrom, AgreesWithOracle) {
  const auto p = make({0.0, 0.3}, 2, {0.8, -0.5}, 1, 0.3, 0.6);
  EXPECT_NEAR(helstrom_general(p), oracle_helstrom(p, problem_dim(p, Reduction::none)), 1e-9);
}

TEST(ClosedForm, MatchesGeneral) {
  for (const double nt : {0.05, 0.2, 1.0}) {
    for (int h = 0; h <= 5; ++h) {
      for (int k = 0; k <= h; ++k) {
        const auto p = make({1.0, -0.5}, h, {1.0, -0.5}, k, nt, 0.4);
        EXPECT_NEAR(helstrom_closed_form(p), helstrom_general(p), 1e-10)
            << "nt=" << nt << " h=" << h << " k=" << k;
      }
    }
  }
  EXPECT_THROW(helstrom_closed_form(make({0.0, 0.0}, 1, {0.1, 0.0}, 0, 0.2)), std::invalid_argument);
}

TEST(ClosedForm, EigenvaluesMatchDecisionOperatorDiagonal) {
  // With xi = mu the decision operator is diagonal after displacing by -mu.
  const auto p = make({0.0, 0.0}, 3, {0.0, 0.0}, 1, 0.3, 0.5);
  const Index dim = problem_dim(p);
  const auto spectrum = closed_form_eigenvalues(p, dim);
  const auto delta = decision_operator(p, dim);
  for (Index n = 0; n < dim; ++n) {
    EXPECT_NEAR(spectrum.lambda[n], delta(n, n).real(), 1e-14) << n;
  }
}

}  // namespace
}  // namespace dnsdisc
