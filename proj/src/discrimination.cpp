// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/discrimination.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "dnsdisc/receiver.hpp"
#include "dnsdisc/states.hpp"

namespace dnsdisc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kFormAgreementTol = 1e-9;
constexpr Index kClosedFormMaxTerms = 10'000'000;

// e * log(base) with 0^0 = 1 and 0^e = 0 for e > 0.
double log_power(double base, Index e) {
  if (e == 0) return 0.0;
  return base == 0.0 ? kNegInf : static_cast<double>(e) * std::log(base);
}

double log_prior(double p) { return p == 0.0 ? kNegInf : std::log(p); }

double lambda_from_terms(const detail::EigenvalueTerms& t) {
  if (t.log_signal == kNegInf && t.log_noise == kNegInf) return 0.0;
  if (t.log_signal >= t.log_noise) return -std::exp(t.log_signal) * std::expm1(t.log_noise - t.log_signal);
  return std::exp(t.log_noise) * std::expm1(t.log_signal - t.log_noise);
}

// Maps a computed error probability into [0, min(p0, p1)], allowing for
// truncation-level overshoot.
double settle_error(double pe, const DiscriminationProblem& problem) {
  const double upper = std::min(problem.p0, problem.p1);
  if (pe < -kFormAgreementTol || pe > upper + kFormAgreementTol) {
    throw IntegrityError("error probability " + std::to_string(pe) + " outside [0, " +
                         std::to_string(upper) + "]");
  }
  return std::clamp(pe, 0.0, upper);
}

double helstrom_from_spectrum(const Eigen::VectorXd& values, const DiscriminationProblem& problem) {
  double positive = 0.0;
  double absolute = 0.0;
  for (Index i = 0; i < values.size(); ++i) {
    if (counts_as_positive(values(i))) positive += values(i);
    absolute += std::abs(values(i));
  }
  const double pe = problem.p1 - positive;
  const double pe_trace_norm = 0.5 * (1.0 - absolute);
  if (std::abs(pe - pe_trace_norm) > kFormAgreementTol) {
    throw IntegrityError("helstrom_general: positive-sum form " + std::to_string(pe) +
                         " and trace-norm form " + std::to_string(pe_trace_norm) + " disagree");
  }
  return settle_error(pe, problem);
}

std::array<DnsParams, 2> reduced_states(const DiscriminationProblem& problem) {
  const double residual = std::abs(problem.state1.mu - problem.state0.mu);
  return {DnsParams{Complex{0.0, 0.0}, problem.state0.k, problem.state0.nt},
          DnsParams{Complex{residual, 0.0}, problem.state1.k, problem.state1.nt}};
}

}  // namespace

DiscriminationProblem DiscriminationProblem::normalized(DnsParams state0, DnsParams state1,
                                                        double p0, double p1) {
  DiscriminationProblem out{state0, state1, p0, p1};
  out.validate();
  if (!out.is_ordered()) {
    std::swap(out.state0, out.state1);
    std::swap(out.p0, out.p1);
  }
  return out;
}

void DiscriminationProblem::validate() const {
  state0.validate();
  state1.validate();
  if (!(p0 >= 0.0 && p1 >= 0.0) || std::abs(p0 + p1 - 1.0) > kPriorSumTol) {
    throw std::invalid_argument("DiscriminationProblem: priors must be non-negative and sum to 1");
  }
}

double helstrom_pure(const DiscriminationProblem& problem) {
  problem.validate();
  if (!problem.both_pure()) {
    throw std::invalid_argument("helstrom_pure: both states must be noiseless (nt == 0)");
  }
  const auto& s0 = problem.state0;
  const auto& s1 = problem.state1;
  const Complex overlap = s0.k >= s1.k ? dns_inner_product(s0.mu, s0.k, s1.mu, s1.k)
                                       : std::conj(dns_inner_product(s1.mu, s1.k, s0.mu, s0.k));
  const double x = std::min(1.0, 4.0 * problem.p0 * problem.p1 * std::norm(overlap));
  // 1/2 (1 - sqrt(1 - x)) without cancellation for small x.
  return x / (2.0 * (1.0 + std::sqrt(1.0 - x)));
}

Index problem_dim(const DiscriminationProblem& problem, Reduction reduction, double tol) {
  problem.validate();
  if (reduction == Reduction::displace_and_rotate) {
    const auto states = reduced_states(problem);
    return choose_dim(states, tol);
  }
  const std::array<DnsParams, 2> states{problem.state0, problem.state1};
  return choose_dim(states, tol);
}

Matrix<Complex> decision_operator(const DiscriminationProblem& problem, Index dim,
                                  Reduction reduction) {
  problem.validate();
  if (reduction == Reduction::displace_and_rotate) {
    const auto states = reduced_states(problem);
    return problem.p1 * noisy_dns<Complex>(states[1], dim) -
           problem.p0 * noisy_dns<Complex>(states[0], dim);
  }
  return problem.p1 * noisy_dns<Complex>(problem.state1, dim) -
         problem.p0 * noisy_dns<Complex>(problem.state0, dim);
}

double helstrom_general(const DiscriminationProblem& problem, Index dim, Reduction reduction) {
  problem.validate();
  if (reduction == Reduction::displace_and_rotate) {
    const auto states = reduced_states(problem);
    const Matrix<double> delta =
        problem.p1 * noisy_dns<double>(states[1], dim) - problem.p0 * noisy_dns<double>(states[0], dim);
    return helstrom_from_spectrum(eigh(delta).values, problem);
  }
  return helstrom_from_spectrum(eigh(decision_operator(problem, dim, reduction)).values, problem);
}

double helstrom_general(const DiscriminationProblem& problem) {
  return helstrom_general(problem, problem_dim(problem));
}

namespace detail {

void require_equal_displacement(const DiscriminationProblem& problem, const char* who) {
  problem.validate();
  if (!problem.is_ordered()) {
    throw std::invalid_argument(std::string(who) + ": hypotheses must satisfy h >= k");
  }
  if (!problem.equal_displacement()) {
    throw std::invalid_argument(std::string(who) + ": requires equal displacements (xi == mu)");
  }
  if (problem.state0.nt != problem.state1.nt) {
    throw std::invalid_argument(std::string(who) + ": requires a shared thermal occupancy");
  }
}

EigenvalueTerms eigenvalue_terms(const DiscriminationProblem& problem, Index n) {
  const Index k = problem.k();
  const Index h = problem.h();
  const double nt = problem.state1.nt;
  const double log_norm = static_cast<double>(n + 1) * std::log1p(nt);
  EigenvalueTerms t{kNegInf, kNegInf};
  if (n >= k) {
    t.log_signal = log_prior(problem.p1) + log_binomial(n, k) + log_power(nt, n - k) - log_norm;
  }
  if (n >= h) {
    t.log_noise = log_prior(problem.p0) + log_binomial(n, h) + log_power(nt, n - h) - log_norm;
  }
  return t;
}

}  // namespace detail

EigenvalueSpectrum closed_form_eigenvalues(const DiscriminationProblem& problem, Index n_max) {
  detail::require_equal_displacement(problem, "closed_form_eigenvalues");
  EigenvalueSpectrum out;
  out.lambda.reserve(static_cast<std::size_t>(std::max<Index>(n_max + 1, 0)));
  for (Index n = 0; n <= n_max; ++n) {
    out.lambda.push_back(lambda_from_terms(detail::eigenvalue_terms(problem, n)));
  }
  return out;
}

double helstrom_closed_form(const DiscriminationProblem& problem) {
  detail::require_equal_displacement(problem, "helstrom_closed_form");
  const Index h = problem.h();
  const double nt = problem.state1.nt;
  // Past this index both photon-number laws are decreasing in n.
  const Index settle =
      std::max<Index>(h, static_cast<Index>(std::ceil((h + 1) * (nt + 1.0))));
  double sum = 0.0;
  for (Index n = 0; n < kClosedFormMaxTerms; ++n) {
    if (n >= h && !threshold_condition(problem, n)) return settle_error(problem.p1 - sum, problem);
    const double lambda = lambda_from_terms(detail::eigenvalue_terms(problem, n));
    sum += lambda;
    if (n >= settle && lambda <= 1e-16 * sum) return settle_error(problem.p1 - sum, problem);
  }
  throw IntegrityError("helstrom_closed_form: eigenvalue sum did not converge");
}

}  // namespace dnsdisc
