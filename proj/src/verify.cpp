// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/verify.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dnsdisc/oracle.hpp"
#include "dnsdisc/receiver.hpp"
#include "dnsdisc/states.hpp"

namespace dnsdisc {

namespace {

constexpr double kMeanTruncationTol = 1e-12;

class Check {
 public:
  Check(std::string name, double tolerance, std::optional<double> override_tol)
      : result_{std::move(name), override_tol.value_or(tolerance), 0.0, "", 0} {}

  void record(double deviation, const std::string& point) {
    ++result_.count;
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    if (deviation > result_.worst || result_.worst_point.empty()) {
      result_.worst = std::max(result_.worst, deviation);
      result_.worst_point = point;
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

double kennedy_optimality_gap(const DiscriminationProblem& problem) {
  const Index dim = problem_dim(problem);
  const double helstrom = helstrom_general(problem, dim);
  double best = std::numeric_limits<double>::infinity();
  for (int n = kNoThreshold; n < dim; ++n) best = std::min(best, kennedy_error(problem, n));
  const int n_opt = optimal_threshold(problem, static_cast<int>(dim) - 1);
  const double at_opt = kennedy_error(problem, n_opt);
  return std::max({std::abs(best - helstrom), std::abs(at_opt - helstrom), at_opt - best});
}

}  // namespace

std::string describe(const DnsParams& p) {
  std::ostringstream os;
  os.precision(6);
  os << "(mu=" << p.mu.real() << (p.mu.imag() < 0 ? "" : "+") << p.mu.imag() << "i, k=" << p.k
     << ", nt=" << p.nt << ")";
  return os.str();
}

std::string describe(const DiscriminationProblem& problem) {
  std::ostringstream os;
  os << "rho0=" << describe(problem.state0) << " rho1=" << describe(problem.state1)
     << " p0=" << problem.p0;
  return os.str();
}

VerificationGrid VerificationGrid::preset(std::string_view name) {
  VerificationGrid g;
  if (name == "empty") {
    g.commutator_dim = 0;
    return g;
  }
  const bool quick = name == "quick";
  if (!quick && name != "default") {
    throw std::invalid_argument("unknown verification grid preset '" + std::string(name) + "'");
  }

  const std::vector<Complex> mus =
      quick ? std::vector<Complex>{{0.0, 0.0}, {-0.4, 0.9}}
            : std::vector<Complex>{{0.0, 0.0}, {0.7, 0.0}, {-0.4, 0.9}, {1.2, -1.1},
                                   std::polar(2.0, 2.3)};
  const std::vector<double> nts = quick ? std::vector<double>{0.3, 1.0}
                                        : std::vector<double>{0.1, 0.3, 1.0};
  const int k_max = quick ? 2 : 4;
  for (const Complex mu : mus) {
    for (int k = 0; k <= k_max; ++k) {
      for (const double nt : nts) g.states.push_back({mu, k, nt});
    }
  }

  // Noiseless pairs: k, h <= 3 and |mu - xi| <= 3.
  const std::vector<std::array<int, 2>> kh = {{0, 0}, {0, 1}, {1, 1}, {1, 3}, {2, 3}};
  const std::vector<double> gaps = quick ? std::vector<double>{0.0, 1.5, 3.0}
                                         : std::vector<double>{0.0, 0.75, 1.5, 2.25, 3.0};
  const Complex xi{0.0, 0.3};
  for (const auto& [k, h] : kh) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      const Complex mu = xi + std::polar(gaps[i], 0.4 * static_cast<double>(i));
      g.noiseless_pairs.push_back(
          DiscriminationProblem::normalized({xi, h, 0.0}, {mu, k, 0.0}, 0.5));
    }
  }

  // Equal displacements with a shared nt.
  const std::vector<Complex> shared_mu =
      quick ? std::vector<Complex>{{1.0, 0.0}} : std::vector<Complex>{{0.0, 0.0}, {1.2, -1.1}};
  const std::vector<double> priors = quick ? std::vector<double>{0.5} : std::vector<double>{0.3, 0.5};
  for (const Complex mu : shared_mu) {
    for (const double nt : nts) {
      for (int k = 0; k <= k_max; ++k) {
        for (int h = k; h <= k_max; ++h) {
          for (const double p0 : priors) {
            g.equal_displacement.push_back(
                DiscriminationProblem::normalized({mu, h, nt}, {mu, k, nt}, p0));
          }
        }
      }
    }
  }

  // Unequal displacements against the unreduced brute-force bound.
  g.oracle_pairs = {
      DiscriminationProblem::normalized({{0.0, 0.0}, 1, 0.3}, {{1.0, 0.5}, 0, 0.3}, 0.5),
      DiscriminationProblem::normalized({{-0.5, 0.2}, 2, 0.1}, {{0.6, -0.7}, 1, 0.1}, 0.4),
  };
  if (!quick) {
    g.oracle_pairs.push_back(
        DiscriminationProblem::normalized({{0.3, -0.3}, 3, 1.0}, {{-0.8, 0.9}, 3, 1.0}, 0.5));
    g.oracle_pairs.push_back(
        DiscriminationProblem::normalized({{1.0, 0.0}, 0, 0.2}, {{0.0, 1.0}, 2, 0.5}, 0.7));
  }

  g.commutator_dim = 64;
  g.commutator_alphas = {{0.3, 0.0}, {0.7, 0.2}, {1.5, 0.0}};
  return g;
}

bool VerificationGrid::empty() const {
  return states.empty() && noiseless_pairs.empty() && equal_displacement.empty() &&
         oracle_pairs.empty() && commutator_alphas.empty();
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

std::size_t VerificationReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.count;
  return n;
}

VerificationReport run_verification(const VerificationGrid& grid,
                                    std::optional<double> tolerance_override) {
  Check closed_form("noisy_dns_vs_oracle", 1e-10, tolerance_override);
  Check normalization("normalization_constant", 1e-8, tolerance_override);
  Check mean_oracle("mean_photons_vs_oracle", 1e-7, tolerance_override);
  Check mean_stats("photon_statistics_mean", 1e-8, tolerance_override);
  for (const auto& params : grid.states) {
    const std::string point = describe(params);
    const Index dim = choose_dim(params);
    // The oracle and the means use a finer truncation so the tail sum
    // n p(n) is negligible; the Fock-matrix comparison uses the leading block.
    const Index mean_dim = std::max(dim, choose_dim(params, kMeanTruncationTol));
    const auto oracle = oracle_noisy_dns(params, mean_dim);
    const auto rho = noisy_dns<Complex>(params, dim);
    closed_form.record((rho - oracle.rho.topLeftCorner(dim, dim)).cwiseAbs().maxCoeff(), point);

    const double expected_trace =
        std::exp(log_factorial(params.k) + params.k * std::log1p(params.nt));
    normalization.record(std::abs(oracle.unnormalized_trace / expected_trace - 1.0), point);

    const double closed_mean = mean_photons(params);
    mean_oracle.record(std::abs(oracle_mean_photons(oracle.rho) - closed_mean), point);

    const auto stats = photon_statistics(params, mean_dim);
    double mean = 0.0;
    for (std::size_t n = 0; n < stats.size(); ++n) mean += static_cast<double>(n) * stats[n];
    mean_stats.record(std::abs(mean - closed_mean), point);
  }

  Check pure("pure_vs_general", 1e-9, tolerance_override);
  for (const auto& problem : grid.noiseless_pairs) {
    pure.record(std::abs(helstrom_pure(problem) - helstrom_general(problem)), describe(problem));
  }

  Check closed("closed_form_vs_general", 1e-10, tolerance_override);
  Check kennedy("kennedy_optimality", 1e-9, tolerance_override);
  for (const auto& problem : grid.equal_displacement) {
    closed.record(std::abs(helstrom_closed_form(problem) - helstrom_general(problem)),
                  describe(problem));
    kennedy.record(kennedy_optimality_gap(problem), describe(problem));
  }

  Check unreduced("general_vs_oracle_helstrom", 1e-9, tolerance_override);
  for (const auto& problem : grid.oracle_pairs) {
    const Index dim = problem_dim(problem, Reduction::none);
    unreduced.record(std::abs(helstrom_general(problem) - oracle_helstrom(problem, dim)),
                     describe(problem));
  }

  Check commutators("ladder_commutators", 1e-8, tolerance_override);
  if (!grid.commutator_alphas.empty()) {
    commutators.record(oracle_commutators(grid.commutator_dim, grid.commutator_alphas).max(),
                       "dim=" + std::to_string(grid.commutator_dim));
  }

  VerificationReport report;
  for (Check* c : {&closed_form, &normalization, &mean_oracle, &mean_stats, &pure, &closed, &kennedy,
                   &unreduced, &commutators}) {
    report.checks.push_back(c->take());
  }
  return report;
}

}  // namespace dnsdisc
