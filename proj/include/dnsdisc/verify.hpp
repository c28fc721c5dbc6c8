// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnsdisc/discrimination.hpp"

namespace dnsdisc {

/// Points at which closed forms are compared against the oracle.
struct VerificationGrid {
  std::vector<DnsParams> states;
  std::vector<DiscriminationProblem> noiseless_pairs;
  std::vector<DiscriminationProblem> equal_displacement;
  std::vector<DiscriminationProblem> oracle_pairs;
  Index commutator_dim = 64;
  std::vector<Complex> commutator_alphas;

  /// "default", "quick" or "empty". Throws std::invalid_argument otherwise.
  static VerificationGrid preset(std::string_view name);
  [[nodiscard]] bool empty() const;
};

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;
  std::string worst_point;
  std::size_t count = 0;
  [[nodiscard]] bool passed() const { return worst <= tolerance; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t total_checks() const;
};

/// Runs every closed-form vs oracle comparison on the grid. A tolerance
/// override replaces every per-check tolerance.
VerificationReport run_verification(const VerificationGrid& grid,
                                    std::optional<double> tolerance_override = std::nullopt);

std::string describe(const DnsParams& params);
std::string describe(const DiscriminationProblem& problem);

}  // namespace dnsdisc
