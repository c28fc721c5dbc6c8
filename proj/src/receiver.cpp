// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/receiver.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <thread>
#include <vector>

#include "dnsdisc/states.hpp"

namespace dnsdisc {

namespace {

constexpr std::uint64_t kChunkTrials = 1u << 16;

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  for (auto& c : cdf) c /= acc;
  cdf.back() = 1.0;
  return cdf;
}

std::int64_t sample(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min<std::int64_t>(it - cdf.begin(), static_cast<std::int64_t>(cdf.size()) - 1);
}

std::uint64_t run_chunk(std::uint64_t seed, std::uint64_t chunk, std::uint64_t trials, double p0,
                        const std::vector<double>& cdf0, const std::vector<double>& cdf1, int n_th) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Hypothesis truth = uniform(rng) < p0 ? Hypothesis::zero : Hypothesis::one;
    const auto& cdf = truth == Hypothesis::zero ? cdf0 : cdf1;
    if (decide(sample(cdf, uniform(rng)), n_th) != truth) ++errors;
  }
  return errors;
}

}  // namespace

bool threshold_condition(const DiscriminationProblem& problem, Index n) {
  const auto t = detail::eigenvalue_terms(problem, n);
  return t.log_signal >= t.log_noise;
}

int optimal_threshold(const DiscriminationProblem& problem, int max_threshold) {
  detail::require_equal_displacement(problem, "optimal_threshold");
  const int h = problem.h();
  if (h - 1 >= max_threshold) return max_threshold;
  for (int n = h; n <= max_threshold; ++n) {
    if (!threshold_condition(problem, n)) return n - 1;
  }
  return max_threshold;
}

ReceiverConfig optimal_receiver(const DiscriminationProblem& problem, int max_threshold) {
  return {-problem.state1.mu, optimal_threshold(problem, max_threshold)};
}

double kennedy_error(const DiscriminationProblem& problem, int n_th) {
  detail::require_equal_displacement(problem, "kennedy_error");
  return kennedy_error(problem, ReceiverConfig{-problem.state1.mu, n_th});
}

double kennedy_error(const DiscriminationProblem& problem, const ReceiverConfig& config) {
  problem.validate();
  if (config.n_th < 0) return problem.p1;
  const DnsParams s0{problem.state0.mu + config.beta, problem.state0.k, problem.state0.nt};
  const DnsParams s1{problem.state1.mu + config.beta, problem.state1.k, problem.state1.nt};
  const Index dim = Index{config.n_th} + 1;
  const auto stats0 = photon_statistics(s0, dim);
  const auto stats1 = photon_statistics(s1, dim);
  double accept0 = 0.0;
  double accept1 = 0.0;
  for (Index n = 0; n < dim; ++n) {
    accept0 += stats0[static_cast<std::size_t>(n)];
    accept1 += stats1[static_cast<std::size_t>(n)];
  }
  return problem.p0 * accept0 + problem.p1 * (1.0 - accept1);
}

SimulationResult simulate(const DiscriminationProblem& problem, const ReceiverConfig& config,
                          std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  problem.validate();
  if (trials == 0) throw std::invalid_argument("simulate: trials must be >= 1");
  const DnsParams s0{problem.state0.mu + config.beta, problem.state0.k, problem.state0.nt};
  const DnsParams s1{problem.state1.mu + config.beta, problem.state1.k, problem.state1.nt};
  const std::array<DnsParams, 2> states{s0, s1};
  const Index dim = std::max(choose_dim(states), Index{config.n_th} + 2);
  const auto cdf0 = cumulative(photon_statistics(s0, dim));
  const auto cdf1 = cumulative(photon_statistics(s1, dim));

  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  std::vector<std::uint64_t> errors(chunks, 0);
  auto work = [&](unsigned w) {
    for (std::uint64_t c = w; c < chunks; c += workers) {
      const std::uint64_t n = std::min(kChunkTrials, trials - c * kChunkTrials);
      errors[c] = run_chunk(seed, c, n, problem.p0, cdf0, cdf1, config.n_th);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  SimulationResult out;
  out.trials = trials;
  for (auto e : errors) out.errors += e;
  return out;
}

}  // namespace dnsdisc
