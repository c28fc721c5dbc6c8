// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file receiver.hpp
 * @brief Kennedy receiver with threshold detection.
 *
 * The receiver displaces the incoming state by beta, counts photons, and
 * decides rho_1 (the low-photon hypothesis, k <= h) when the count is at
 * most n_th, rho_0 otherwise. With xi == mu and beta = -mu it attains the
 * Helstrom bound at the optimal threshold.
 */

#pragma once

#include <cstdint>

#include "dnsdisc/discrimination.hpp"

namespace dnsdisc {

enum class Hypothesis : int { zero = 0, one = 1 };

/// Displacement beta and count threshold n_th. n_th == -1 never accepts rho_1.
struct ReceiverConfig {
  Complex beta{0.0, 0.0};
  int n_th = 0;
};

inline constexpr int kNoThreshold = -1;

/// Count rule: hypothesis one iff count <= n_th.
inline Hypothesis decide(std::int64_t count, int n_th) {
  return count <= n_th ? Hypothesis::one : Hypothesis::zero;
}

/// p1 C(n,k) nt^{h-k} >= p0 C(n,h), i.e. lambda_n >= 0 for n >= h.
bool threshold_condition(const DiscriminationProblem& problem, Index n);

/**
 * Largest n with p1 C(n,k) nt^{h-k} >= p0 C(n,h), scanning upward from
 * n = h and stopping at the first failure. Returns h - 1 when the
 * condition already fails at n = h (kNoThreshold if h == 0) and caps the
 * result at max_threshold when the condition never fails.
 * Requires xi == mu, h >= k and a shared nt. For nt == 0 the convention
 * 0^0 = 1 applies.
 */
int optimal_threshold(const DiscriminationProblem& problem, int max_threshold = 4095);

/// Receiver for equal displacements: beta = -mu with the optimal threshold.
ReceiverConfig optimal_receiver(const DiscriminationProblem& problem, int max_threshold = 4095);

/**
 * Error probability p0 P(n <= n_th | rho_0) + p1 P(n > n_th | rho_1) for
 * beta = -mu, from the photon statistics of rho(0, h) and rho(0, k).
 * Requires xi == mu.
 */
double kennedy_error(const DiscriminationProblem& problem, int n_th);

/**
 * Same count rule for an arbitrary displacement beta: the statistics are
 * those of rho(xi + beta, h) and rho(mu + beta, k). No optimality claim
 * when xi != mu.
 */
double kennedy_error(const DiscriminationProblem& problem, const ReceiverConfig& config);

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  [[nodiscard]] double error_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(trials);
  }
};

/**
 * Monte Carlo run of the receiver. Trials are split into fixed-size
 * chunks, each with its own generator seeded from (seed, chunk index), so
 * the result depends on the seed only and not on the worker count.
 */
SimulationResult simulate(const DiscriminationProblem& problem, const ReceiverConfig& config,
                          std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

}  // namespace dnsdisc
