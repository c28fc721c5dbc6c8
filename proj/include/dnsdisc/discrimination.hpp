// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file discrimination.hpp
 * @brief Minimum error probability for telling rho_0 = rho(xi, h) from
 *        rho_1 = rho(mu, k) with priors p0, p1.
 *
 * Three routes:
 *  - helstrom_pure: closed form for two pure states from their overlap.
 *  - helstrom_general: eigendecomposition of p1 rho_1 - p0 rho_0 on the
 *    truncated space. Works for any pair.
 *  - helstrom_closed_form: equal displacements (xi == mu) and a shared
 *    thermal occupancy, where the decision operator is diagonal after
 *    displacing by -mu and its eigenvalues are known in closed form.
 */

#pragma once

#include <vector>

#include "dnsdisc/dns_params.hpp"
#include "dnsdisc/fock.hpp"

namespace dnsdisc {

inline constexpr double kPriorSumTol = 1e-12;

/// Two hypotheses and their priors. state0 is rho(xi, h), state1 is rho(mu, k).
struct DiscriminationProblem {
  DnsParams state0;
  DnsParams state1;
  double p0 = 0.5;
  double p1 = 0.5;

  /// Validates priors and swaps the hypotheses (with their priors) if
  /// state0.k < state1.k, so that h >= k afterwards.
  static DiscriminationProblem normalized(DnsParams state0, DnsParams state1, double p0,
                                          double p1);
  /// p1 = 1 - p0.
  static DiscriminationProblem normalized(DnsParams state0, DnsParams state1, double p0) {
    return normalized(state0, state1, p0, 1.0 - p0);
  }

  void validate() const;
  [[nodiscard]] bool is_ordered() const { return state0.k >= state1.k; }
  [[nodiscard]] bool equal_displacement() const { return state0.mu == state1.mu; }
  [[nodiscard]] bool both_pure() const { return state0.is_pure() && state1.is_pure(); }
  [[nodiscard]] int h() const { return state0.k; }
  [[nodiscard]] int k() const { return state1.k; }
};

/// lambda_n indexed by photon number.
struct EigenvalueSpectrum {
  std::vector<double> lambda;
};

/// How helstrom_general builds the decision operator.
enum class Reduction {
  /// Displace both states by -xi and rotate mu - xi onto the positive real
  /// axis; the decision operator is then real symmetric.
  displace_and_rotate,
  /// Use the states as given (complex Hermitian).
  none,
};

/// Pure-state bound 1/2 - 1/2 sqrt(1 - 4 p0 p1 |<psi0|psi1>|^2).
/// Throws std::invalid_argument unless both states have nt == 0.
double helstrom_pure(const DiscriminationProblem& problem);

/// Truncation dimension helstrom_general uses when none is given.
Index problem_dim(const DiscriminationProblem& problem,
                  Reduction reduction = Reduction::displace_and_rotate,
                  double tol = kTruncationTol);

/**
 * Helstrom bound p1 - sum_{lambda > 0} lambda from the spectrum of
 * p1 rho_1 - p0 rho_0. The trace-norm form 1/2 (1 - ||Delta||_1) is
 * evaluated as well; IntegrityError if the two disagree by more than 1e-9.
 */
double helstrom_general(const DiscriminationProblem& problem, Index dim,
                        Reduction reduction = Reduction::displace_and_rotate);
double helstrom_general(const DiscriminationProblem& problem);

/// Decision operator p1 rho_1 - p0 rho_0 for the given reduction.
Matrix<Complex> decision_operator(const DiscriminationProblem& problem, Index dim,
                                  Reduction reduction = Reduction::none);

/**
 * Diagonal of the displaced decision operator for xi == mu:
 *   n <  k:       0
 *   k <= n < h:   p1 C(n,k) nt^{n-k} / (nt+1)^{n+1}
 *   n >= h:       p1 C(n,k) nt^{n-k} / (nt+1)^{n+1} - p0 C(n,h) nt^{n-h} / (nt+1)^{n+1}
 * for n = 0..n_max. The two terms of the last branch are subtracted in log
 * space so the sign survives near the crossing.
 */
EigenvalueSpectrum closed_form_eigenvalues(const DiscriminationProblem& problem, Index n_max);

/// p1 - sum_{n <= n_th} lambda_n with n_th the optimal Kennedy threshold.
double helstrom_closed_form(const DiscriminationProblem& problem);

/// Whether a lambda contributes to the positive-eigenvalue sum. Zero does not.
inline bool counts_as_positive(double lambda) { return lambda > 0.0; }

namespace detail {

/// Throws std::invalid_argument unless the problem is ordered, xi == mu,
/// and both states share nt.
void require_equal_displacement(const DiscriminationProblem& problem, const char* who);

/// log of the two terms of lambda_n (-inf when a term vanishes).
struct EigenvalueTerms {
  double log_signal;  // p1 C(n,k) nt^{n-k} / (nt+1)^{n+1}
  double log_noise;   // p0 C(n,h) nt^{n-h} / (nt+1)^{n+1}, -inf for n < h
};
EigenvalueTerms eigenvalue_terms(const DiscriminationProblem& problem, Index n);

}  // namespace detail

}  // namespace dnsdisc
