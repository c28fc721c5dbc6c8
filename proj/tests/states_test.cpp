// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/states.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "dnsdisc/oracle.hpp"

namespace dnsdisc {
namespace {

double max_abs(const Matrix<Complex>& m) { return m.cwiseAbs().maxCoeff(); }

TEST(NoiselessDns, KZeroIsCoherentState) {
  const Complex mu{0.8, -0.5};
  const Index dim = 30;
  const auto psi = noiseless_dns(mu, 0, dim);
  // <n|mu> = exp(-|mu|^2/2) mu^n / sqrt(n!).
  for (Index n = 0; n < dim; ++n) {
    const Complex want = std::exp(-0.5 * std::norm(mu) - 0.5 * std::lgamma(n + 1.0)) *
                         std::pow(mu, static_cast<double>(n));
    EXPECT_LT(std::abs(psi(n) - want), 1e-15) << n;
  }
}

TEST(NoiselessDns, NormalizedAndOrthogonal) {
  const Complex mu{-0.3, 1.1};
  const Index dim = 50;
  const auto a = noiseless_dns(mu, 2, dim);
  const auto b = noiseless_dns(mu, 3, dim);
  EXPECT_NEAR(a.squaredNorm(), 1.0, 1e-12);
  EXPECT_LT(std::abs(a.dot(b)), 1e-12);
  EXPECT_THROW(noiseless_dns(Complex{3.0, 0.0}, 2, 8), TruncationError);
  EXPECT_THROW(noiseless_dns(mu, 8, 8), std::invalid_argument);
}

TEST(NoiselessDns, MatchesOracle) {
  const Complex mu{1.2, 0.4};
  for (int k = 0; k <= 4; ++k) {
    const auto psi = noiseless_dns(mu, k, 40);
    const auto oracle = oracle_noiseless_dns(mu, k, 40);
    EXPECT_LT((psi - oracle).cwiseAbs().maxCoeff(), 1e-12) << k;
  }
}

TEST(InnerProduct, MatchesVectors) {
  // <xi, h | mu, k> between noiseless DNS, including the composition phase.
  const Index dim = 60;
  for (const auto& [h, k] : {std::pair{0, 0}, {2, 1}, {3, 0}, {4, 4}}) {
    const Complex xi{0.3, -0.2};
    const Complex mu{-0.7, 0.9};
    const Complex want = noiseless_dns(xi, h, dim).dot(noiseless_dns(mu, k, dim));
    EXPECT_LT(std::abs(dns_inner_product(xi, h, mu, k) - want), 1e-13) << h << "," << k;
  }
  EXPECT_THROW(dns_inner_product({}, 0, {}, 1), std::invalid_argument);
}

TEST(InnerProduct, VanishesAtLaguerreRoot) {
  // h = k = 1: the overlap is exp(-d^2/2) (1 - d^2), zero at d = 1.
  EXPECT_LT(std::abs(dns_inner_product({0.0, 0.0}, 1, {0.6, 0.8}, 1)), 1e-16);
}

TEST(ThermalState, TraceAndMean) {
  const double nt = 0.7;
  const Index dim = choose_dim(DnsParams{{0.0, 0.0}, 0, nt}, 1e-12);
  const auto rho = thermal_state(nt, dim);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
  double mean = 0.0;
  for (Index n = 0; n < dim; ++n) mean += n * rho(n, n);
  EXPECT_NEAR(mean, nt, 1e-9);
  EXPECT_DOUBLE_EQ(thermal_state(0.0, 4)(0, 0), 1.0);
}

TEST(NoisyDns, ReducesToPureState) {
  const Complex mu{0.5, 0.5};
  const auto rho = noisy_dns<Complex>({mu, 2, 0.0}, 30);
  const auto psi = noiseless_dns(mu, 2, 30);
  EXPECT_LT(max_abs(rho - psi * psi.adjoint()), 1e-14);
}

TEST(NoisyDns, IsADensityMatrix) {
  const DnsParams p{{-0.9, 0.4}, 3, 0.4};
  const Index dim = choose_dim(p);
  const auto rho = noisy_dns<Complex>(p, dim);
  EXPECT_LT(hermitian_defect(rho), 1e-15);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-9);
  EXPECT_GT(eigh(rho).values.minCoeff(), -1e-12);
}

TEST(NoisyDns, MatchesOracle) {
  for (const DnsParams& p : {DnsParams{{0.0, 0.0}, 0, 0.2}, DnsParams{{1.1, -0.4}, 2, 0.3},
                             DnsParams{{-0.2, 1.7}, 4, 1.0}}) {
    const Index dim = choose_dim(p);
    const auto rho = noisy_dns<Complex>(p, dim);
    const auto oracle = oracle_noisy_dns(p, dim);
    EXPECT_LT(max_abs(rho - oracle.rho), 1e-10);
  }
}

TEST(NoisyDns, DisplacementCovariance) {
  // D(b) rho(mu,k) D(b)^dag = rho(mu + b, k).
  const DnsParams p{{0.3, 0.1}, 1, 0.25};
  const Complex b{-0.4, 0.6};
  const Index dim = 80;
  const auto d = displacement_matrix<Complex>(b, dim);
  const Matrix<Complex> moved = d * noisy_dns<Complex>(p, dim) * d.adjoint();
  const auto direct = noisy_dns<Complex>({p.mu + b, p.k, p.nt}, dim);
  EXPECT_LT(max_abs((moved - direct).topLeftCorner(25, 25)), 1e-11);
}

TEST(NoisyDns, PhaseCovariance) {
  // R(t) rho(mu,k) R(t)^dag = rho(mu e^{it}, k) with R(t) = exp(i t n).
  const DnsParams p{{0.9, 0.0}, 2, 0.5};
  const double t = 1.3;
  const Index dim = choose_dim(p);
  const auto r = phase_rotation(t, dim);
  const Matrix<Complex> rotated = r * noisy_dns<Complex>(p, dim) * r.adjoint();
  const auto direct = noisy_dns<Complex>({p.mu * std::polar(1.0, t), p.k, p.nt}, dim);
  EXPECT_LT(max_abs(rotated - direct), 1e-14);
}

TEST(NoisyDns, RealScalarForRealAmplitude) {
  const DnsParams p{{1.3, 0.0}, 2, 0.2};
  const Index dim = choose_dim(p);
  const auto re = noisy_dns<double>(p, dim);
  const auto cx = noisy_dns<Complex>(p, dim);
  EXPECT_LT((re.cast<Complex>() - cx).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(noisy_dns<double>({{1.0, 0.1}, 0, 0.2}, 10), std::invalid_argument);
}

TEST(PhotonStatistics, SumsAndMeanMatchClosedForm) {
  for (const DnsParams& p : {DnsParams{{0.0, 0.0}, 2, 0.5}, DnsParams{{1.0, -1.0}, 1, 0.2},
                             DnsParams{{0.4, 0.0}, 3, 0.0}}) {
    const auto stats = photon_statistics(p, choose_dim(p, 1e-12));
    double total = 0.0;
    double mean = 0.0;
    for (std::size_t n = 0; n < stats.size(); ++n) {
      EXPECT_GE(stats[n], 0.0);
      total += stats[n];
      mean += n * stats[n];
    }
    EXPECT_NEAR(total, 1.0, 1e-11);
    // |mu|^2 + k (nt + 1) + nt.
    EXPECT_NEAR(mean, std::norm(p.mu) + p.k * (p.nt + 1.0) + p.nt, 1e-8);
    EXPECT_DOUBLE_EQ(mean_photons(p), std::norm(p.mu) + p.k * (p.nt + 1.0) + p.nt);
  }
}

TEST(PhotonStatistics, PhotonAddedThermalHasNoLowCounts) {
  // mu = 0: p(n) = 0 for n < k.
  const auto stats = photon_statistics({{0.0, 0.0}, 3, 0.4}, 40);
  for (int n = 0; n < 3; ++n) EXPECT_EQ(stats[n], 0.0);
  EXPECT_GT(stats[3], 0.0);
}

}  // namespace
}  // namespace dnsdisc
