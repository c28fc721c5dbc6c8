// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace dnsdisc {

namespace {

/// Signed sum of exp(l_t) * s_t, scaled by the largest l_t.
class LogSumAccumulator {
 public:
  void add(double log_abs, int sign) {
    if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity()) return;
    terms_.push_back({log_abs, sign});
  }

  [[nodiscard]] double value() const {
    if (terms_.empty()) return 0.0;
    double lmax = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms_) lmax = std::max(lmax, t.log_abs);
    double s = 0.0;
    for (const auto& t : terms_) s += t.sign * std::exp(t.log_abs - lmax);
    return s * std::exp(lmax);
  }

  void clear() { terms_.clear(); }

 private:
  std::vector<SignedLog> terms_;
};

double log_or_neg_inf(double v) {
  return v == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(v);
}

}  // namespace

Complex dns_inner_product(Complex xi, int h, Complex mu, int k) {
  if (k < 0 || h < k) throw std::invalid_argument("dns_inner_product: need 0 <= k <= h");
  const Complex delta = mu - xi;
  const LaguerreTable lag(k, h - k, std::norm(delta));
  const Complex core = detail::displacement_element(delta, Index{h}, Index{k}, lag);
  return std::polar(1.0, std::imag(std::conj(xi) * mu)) * core;
}

namespace detail {

LaguerreTable noisy_dns_laguerre_table(const DnsParams& params, Index dim) {
  const double x = -std::norm(params.mu) / (params.nt * (params.nt + 1.0));
  const Index top = std::max<Index>(dim - 1, 0);
  return LaguerreTable(top, std::max<Index>(top, params.k), x);
}

// <n|rho|m> =
//   sum_{i<=min(k,n)} sum_{j<=min(k,m)} (-1)^{i+j} C(m,j) C(k,i) / (k-j)!
//     * sqrt(n!/m!) e^{-|mu|^2/(nt+1)} |mu|^{2(k-j)} (mu*)^{m-n}
//     * nt^{n-i} / (nt+1)^{m+k-j+1} * L_{n-i}^{(m-n+i-j)}(-|mu|^2/(nt(nt+1)))
Complex noisy_dns_element(const DnsParams& params, Index n, Index m, const LaguerreTable& lag) {
  const int k = params.k;
  const double nt = params.nt;
  const double r2 = std::norm(params.mu);
  const double log_r = log_or_neg_inf(std::sqrt(r2));
  if (r2 == 0.0 && m != n) return {0.0, 0.0};

  const double log_nt = std::log(nt);
  const double log_nt1 = std::log1p(nt);
  double base = -r2 / (nt + 1.0) + 0.5 * (log_factorial(n) - log_factorial(m));
  if (m > n) base += static_cast<double>(m - n) * log_r;

  thread_local LogSumAccumulator acc;
  acc.clear();
  const Index i_max = std::min<Index>(k, n);
  const Index j_max = std::min<Index>(k, m);
  for (Index i = 0; i <= i_max; ++i) {
    for (Index j = 0; j <= j_max; ++j) {
      if (r2 == 0.0 && j < k) continue;
      const SignedLog lag_val = lag(n - i, m - n + i - j);
      if (lag_val.is_zero()) continue;
      double l = base + log_binomial(m, j) + log_binomial(k, i) - log_factorial(k - j) +
                 static_cast<double>(n - i) * log_nt -
                 static_cast<double>(m + k - j + 1) * log_nt1 + lag_val.log_abs;
      if (j < k) l += 2.0 * static_cast<double>(k - j) * log_r;
      const int sign = ((i + j) % 2 == 0 ? 1 : -1) * lag_val.sign;
      acc.add(l, sign);
    }
  }
  const double mag = acc.value();
  if (m == n) return {mag, 0.0};
  const Complex phase = std::conj(unit_power(params.mu, m - n));
  return phase * mag;
}

}  // namespace detail

std::vector<double> photon_statistics(const DnsParams& params, Index dim) {
  params.validate();
  if (dim < 1) throw std::invalid_argument("photon_statistics: dim must be >= 1");
  std::vector<double> p(static_cast<std::size_t>(dim));
  if (params.is_pure()) {
    const Index top = std::max<Index>(dim - 1, params.k);
    const LaguerreTable lag(top, top, std::norm(params.mu));
    for (Index n = 0; n < dim; ++n) {
      p[static_cast<std::size_t>(n)] =
          std::norm(detail::displacement_element(params.mu, n, Index{params.k}, lag));
    }
    return p;
  }
  const double x = -std::norm(params.mu) / (params.nt * (params.nt + 1.0));
  const LaguerreTable lag(dim - 1, params.k, x);
  for (Index n = 0; n < dim; ++n) {
    double v = detail::noisy_dns_element(params, n, n, lag).real();
    if (v < 0.0) {
      if (v < -kNegativeProbabilityTol) {
        throw IntegrityError("photon_statistics: p(" + std::to_string(n) +
                             ") = " + std::to_string(v) + " is negative");
      }
      v = 0.0;
    }
    p[static_cast<std::size_t>(n)] = v;
  }
  return p;
}

double mean_photons(const DnsParams& params) {
  params.validate();
  return std::norm(params.mu) + params.k * (params.nt + 1.0) + params.nt;
}

}  // namespace dnsdisc
