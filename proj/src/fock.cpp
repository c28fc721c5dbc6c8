// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/fock.hpp"

#include <cmath>
#include <string>

#include "dnsdisc/states.hpp"

namespace dnsdisc {

namespace {

Index dim_for_state(const DnsParams& params, double tol, Index cap) {
  const double np = mean_photons(params);
  Index trial = static_cast<Index>(std::ceil(np + 10.0 * std::sqrt(np + 1.0) + params.k + 10.0));
  trial = std::min(trial, cap);
  for (;;) {
    const std::vector<double> p = photon_statistics(params, trial);
    long double captured = 0.0L;
    for (Index n = 0; n < trial; ++n) {
      captured += p[static_cast<std::size_t>(n)];
      if (1.0L - captured < static_cast<long double>(tol)) return n + 1;
    }
    if (trial >= cap) {
      throw TruncationError("choose_dim: tail mass " +
                            std::to_string(static_cast<double>(1.0L - captured)) +
                            " still above tolerance at the hard cap N=" + std::to_string(cap));
    }
    trial = std::min(2 * trial, cap);
  }
}

}  // namespace

Index choose_dim(std::span<const DnsParams> params, double tol, Index cap) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw std::invalid_argument("choose_dim: tol must lie in (0, 1e-3]");
  }
  Index dim = 1;
  for (const auto& p : params) dim = std::max(dim, dim_for_state(p, tol, cap));
  return dim;
}

}  // namespace dnsdisc
