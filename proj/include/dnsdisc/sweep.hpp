// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sweep.hpp
 * @brief Grid evaluation behind the command-line tool.
 *
 * A point is evaluated by every method that applies to it; the results
 * are cross-checked before they are returned, so a row that comes back
 * is a row whose methods agree.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dnsdisc/discrimination.hpp"

namespace dnsdisc {

/// Agreement required between deterministic methods in one row.
inline constexpr double kCrossMethodTol = 1e-9;
/// Monte Carlo must land within this many binomial standard deviations.
inline constexpr double kMonteCarloSigmas = 5.0;

struct EvalOptions {
  std::optional<Index> dim;     // override of the automatic truncation
  double tol = kTruncationTol;  // truncation tolerance when dim is automatic
  std::uint64_t trials = 0;     // Monte Carlo trials; 0 disables the column
  std::uint64_t seed = 1;
  bool timing = false;          // fill wall_ms
};

/// One evaluated grid point. state0 = rho(xi, h), state1 = rho(mu, k), as given.
struct SweepResult {
  DnsParams state0;
  DnsParams state1;
  double p0 = 0.5;
  Index dim = 0;
  std::optional<double> pe_pure;
  std::optional<double> pe_general;
  std::optional<double> pe_closed_form;
  std::optional<double> pe_kennedy;
  std::optional<double> pe_monte_carlo;
  std::optional<int> n_th;
  double wall_ms = 0.0;
};

/// Evaluates every applicable method; IntegrityError if they disagree.
SweepResult evaluate_point(const DnsParams& state0, const DnsParams& state1, double p0,
                           const EvalOptions& options = {});

/// On-off keying: DNS rho(0,h) vs rho(0,0) against coherent rho(alpha,0)
/// vs rho(0,0) with |alpha|^2 = h (nt + 1), which equalizes the
/// prior-averaged mean photon number.
struct OokResult {
  int h = 1;
  double nt = 0.0;
  double p0 = 0.5;
  double alpha = 0.0;
  double mean_photons_per_bit = 0.0;
  Index dim_dns = 0;
  Index dim_coherent = 0;
  double pe_dns_closed_form = 0.0;
  double pe_dns_general = 0.0;
  double pe_coherent = 0.0;
};

OokResult evaluate_ook(int h, double nt, double p0, const EvalOptions& options = {});

inline constexpr const char* kOokEnergyRule =
    "|alpha|^2 = h*(nt+1) so that p0*n_p(0,h,nt) + p1*n_p(0,0,nt) = p0*n_p(alpha,0,nt) + "
    "p1*n_p(0,0,nt) with n_p(mu,k,nt) = |mu|^2 + k*(nt+1) + nt";

/// A (state0, state1) pair on a figure grid.
struct GridPoint {
  DnsParams state0;
  DnsParams state1;
};

struct FigureOptions {
  std::vector<std::pair<int, int>> kh_pairs{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 3}};
  double max_separation = 4.0;
  double separation_step = 0.05;
  std::vector<int> fig3_ks{0, 1, 2, 3};
  int max_gap = 6;
  int max_h = 8;
  std::vector<double> ook_nts{0.1, 0.2, 0.5};
};

/**
 * Grid points of figures 1-3, in emission order.
 *  fig 1: |mu - xi| in [0, max_separation] for each (k, h), nt = 0.
 *  fig 2: the same at nt = 0.2.
 *  fig 3: mu = xi = 1, nt = 0.2, h = k + gap for gap in [0, max_gap].
 * Figure 4 is the OOK table; see evaluate_ook.
 */
std::vector<GridPoint> figure_points(int fig, const FigureOptions& options = {});

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

/// Shortest-round-trip-safe fixed formatting: 17 significant digits.
std::string format_double(double v);

std::string csv_header(bool timing);
std::string csv_row(const SweepResult& row, bool timing);
std::string ook_csv_header();
std::string ook_csv_row(const OokResult& row);

}  // namespace dnsdisc
