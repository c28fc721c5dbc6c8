// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Brute-force reference constructions for validation.
 *
 * Everything here is built from ladder-operator matrices and matrix
 * products in long double. No Laguerre polynomial and no closed-form
 * matrix element is used, so agreement with states.hpp and
 * discrimination.hpp is independent evidence.
 *
 * The displacement operator is assembled in normal order,
 *   D(mu) = e^{-|mu|^2/2} exp(mu a^dag) exp(-mu* a),
 * from the finite power series of the nilpotent truncated ladder
 * matrices. Every entry of that product is exact on the truncated space.
 */

#pragma once

#include <span>

#include "dnsdisc/discrimination.hpp"
#include "dnsdisc/fock.hpp"

namespace dnsdisc {

using OracleScalar = std::complex<long double>;

struct OracleState {
  DensityMatrix<Complex> rho;   // cropped to the requested dim
  double unnormalized_trace;    // tr(a^dag^k rho_th a^k) on the working space
  Index working_dim;
};

/// dim + 4k + ceil(8 |mu|) + ceil(10 (nt + 1)): room for the upward shift
/// of k creation operators, the spread of the displacement, and the
/// thermal tail.
Index oracle_working_dim(const DnsParams& params, Index dim);

/// D(mu) on the truncated space via the normal-ordered operator product.
Matrix<OracleScalar> oracle_displacement(Complex mu, Index dim);

/// D(mu)|k> from oracle_displacement.
FockVector<Complex> oracle_noiseless_dns(Complex mu, int k, Index dim);

/**
 * rho(mu, k) = D(mu) a^dag^k rho_th a^k D(mu)^dag / tr(...), built on the
 * working space, normalized by its own trace, then cropped to dim.
 */
OracleState oracle_noisy_dns(const DnsParams& params, Index dim);

/// sum_n n rho_nn.
double oracle_mean_photons(const DensityMatrix<Complex>& rho);

struct CommutatorDeviation {
  double annihilation = 0.0;  // max |[a, D] - alpha D|
  double creation = 0.0;      // max |[a^dag, D] - alpha* D|
  double canonical = 0.0;     // max |[a, a^dag] - I|
  [[nodiscard]] double max() const { return std::max({annihilation, creation, canonical}); }
};

/// Ladder/displacement commutators on the top-left (dim/2) block, where
/// truncation does not reach. Requires dim >= 16.
CommutatorDeviation oracle_commutators(Index dim, std::span<const Complex> alphas);

/// Helstrom bound from oracle states with no displacement reduction.
double oracle_helstrom(const DiscriminationProblem& problem, Index dim);

}  // namespace dnsdisc
