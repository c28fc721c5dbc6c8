// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>

namespace dnsdisc {

using Complex = std::complex<double>;

/// Identifies a noisy displaced number state rho(mu, k) with thermal
/// occupancy nt. nt == 0 is the pure state D(mu)|k>.
struct DnsParams {
  Complex mu{0.0, 0.0};
  int k = 0;
  double nt = 0.0;

  void validate() const {
    if (k < 0) throw std::invalid_argument("DnsParams: photon-addition count k must be >= 0");
    if (!(nt >= 0.0)) throw std::invalid_argument("DnsParams: thermal occupancy nt must be >= 0");
  }

  [[nodiscard]] bool is_pure() const { return nt == 0.0; }

  friend bool operator==(const DnsParams&, const DnsParams&) = default;
};

}  // namespace dnsdisc
