// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief Number, coherent, thermal, and (noisy) displaced number states.
 *
 * A noisy displaced number state is rho(mu, k) = D(mu) a^dag^k rho_th a^k
 * D(mu)^dag / (k! (nt+1)^k). Its Fock matrix elements are evaluated from a
 * closed form that is a finite double sum over Laguerre polynomials; every
 * term is assembled in signed-log form.
 *
 * Entry points are templated on the scalar. Real scalars require a real
 * displacement and are what the discrimination layer uses after rotating
 * the residual displacement onto the positive real axis.
 */

#pragma once

#include <vector>

#include "dnsdisc/dns_params.hpp"
#include "dnsdisc/fock.hpp"

namespace dnsdisc {

/// Negative photon probabilities above this magnitude are an integrity error.
inline constexpr double kNegativeProbabilityTol = 1e-12;

/**
 * Amplitudes b_n = <n|D(mu)|k> of the pure state D(mu)|k>.
 * Throws TruncationError when the captured norm falls short of 1 by more
 * than tol (pass tol >= 1 to skip the check).
 */
template <typename Scalar = Complex>
FockVector<Scalar> noiseless_dns(Scalar mu, int k, Index dim, double tol = kTruncationTol) {
  if (k < 0) throw std::invalid_argument("noiseless_dns: k must be >= 0");
  if (k >= dim) throw std::invalid_argument("noiseless_dns: need k < dim");
  const LaguerreTable lag(dim - 1, dim - 1, std::norm(mu));
  FockVector<Scalar> amp(dim);
  for (Index n = 0; n < dim; ++n) amp(n) = detail::displacement_element(mu, n, Index{k}, lag);
  const double missing = 1.0 - amp.squaredNorm();
  if (missing > tol) {
    throw TruncationError("noiseless_dns: dim " + std::to_string(dim) +
                          " leaves tail mass " + std::to_string(missing));
  }
  return amp;
}

/**
 * Overlap <xi, h | mu, k> for h >= k:
 *   e^{i Im(xi* mu)} sqrt(k!/h!) (mu-xi)^{h-k} e^{-|mu-xi|^2/2} L_k^{(h-k)}(|mu-xi|^2).
 * The leading phase comes from D(-xi) D(mu) = e^{i Im(xi* mu)} D(mu - xi); it
 * does not affect |overlap|.
 */
Complex dns_inner_product(Complex xi, int h, Complex mu, int k);

/// Diagonal thermal state with p(n) = nt^n / (nt+1)^{n+1}.
template <typename Scalar = double>
DensityMatrix<Scalar> thermal_state(double nt, Index dim) {
  if (!(nt >= 0.0)) throw std::invalid_argument("thermal_state: nt must be >= 0");
  DensityMatrix<Scalar> rho = DensityMatrix<Scalar>::Zero(dim, dim);
  if (nt == 0.0) {
    rho(0, 0) = Scalar(1);
    return rho;
  }
  const double log_ratio = std::log(nt) - std::log1p(nt);
  for (Index n = 0; n < dim; ++n) {
    rho(n, n) = Scalar(std::exp(static_cast<double>(n) * log_ratio - std::log1p(nt)));
  }
  return rho;
}

namespace detail {

/// Closed-form <n|rho(mu,k)|m> for m >= n and nt > 0.
Complex noisy_dns_element(const DnsParams& params, Index n, Index m, const LaguerreTable& lag);

/// Laguerre table sized for every entry of a dim x dim noisy DNS matrix.
LaguerreTable noisy_dns_laguerre_table(const DnsParams& params, Index dim);

}  // namespace detail

/**
 * Fock matrix of rho(mu, k) with thermal occupancy nt.
 *
 * nt == 0 takes the pure path (outer product of noiseless_dns) because the
 * closed form's Laguerre argument -|mu|^2/(nt(nt+1)) is singular there.
 * Below nt ~ 1e-6 the closed form loses accuracy to cancellation between
 * terms of order nt^{-k}.
 */
template <typename Scalar = Complex>
DensityMatrix<Scalar> noisy_dns(const DnsParams& params, Index dim) {
  params.validate();
  const Scalar mu = detail::from_complex<Scalar>(params.mu);
  if (params.is_pure()) {
    const FockVector<Scalar> psi = noiseless_dns(mu, params.k, dim, 1.0);
    return psi * psi.adjoint();
  }
  const LaguerreTable lag = detail::noisy_dns_laguerre_table(params, dim);
  DensityMatrix<Scalar> rho(dim, dim);
  for (Index m = 0; m < dim; ++m) {
    for (Index n = 0; n <= m; ++n) {
      const Complex v = detail::noisy_dns_element(params, n, m, lag);
      if constexpr (is_complex_v<Scalar>) {
        rho(n, m) = v;
        rho(m, n) = std::conj(v);
      } else {
        rho(n, m) = v.real();
        rho(m, n) = v.real();
      }
    }
  }
  return rho;
}

/**
 * Photon-number distribution p(n) = <n|rho(mu,k)|n> for n < dim.
 * Values in [-1e-12, 0) are clipped to zero; anything more negative throws
 * IntegrityError.
 */
std::vector<double> photon_statistics(const DnsParams& params, Index dim);

/// Closed-form mean photon number |mu|^2 + k(nt+1) + nt.
double mean_photons(const DnsParams& params);

}  // namespace dnsdisc
