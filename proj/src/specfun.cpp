// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/specfun.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace dnsdisc {

namespace {

constexpr std::int64_t kExactFactorialMax = 20;

const std::array<double, kExactFactorialMax + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kExactFactorialMax + 1> t{};
    std::uint64_t f = 1;
    for (std::int64_t i = 0; i <= kExactFactorialMax; ++i) {
      if (i > 0) f *= static_cast<std::uint64_t>(i);
      t[static_cast<std::size_t>(i)] = std::log(static_cast<double>(f));
    }
    return t;
  }();
  return table;
}

// Threshold at which the recurrence state is rescaled.
constexpr double kRescale = 1e150;
const double kLogRescale = std::log(kRescale);

SignedLog recurrence(std::int64_t n, std::int64_t a, double x) {
  double prev = 1.0;
  if (n == 0) return SignedLog::from_value(prev);
  const double ad = static_cast<double>(a);
  double cur = 1.0 + ad - x;
  double log_scale = 0.0;
  for (std::int64_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0 + ad - x) * cur - (jd + ad) * prev) / (jd + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += kLogRescale;
    }
  }
  SignedLog out = SignedLog::from_value(cur);
  if (!out.is_zero()) out.log_abs += log_scale;
  return out;
}

}  // namespace

SignedLog SignedLog::from_value(double v) {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

double log_factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument " + std::to_string(n));
  if (n <= kExactFactorialMax) return log_factorial_table()[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::domain_error("log_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
  const std::int64_t lo = std::min(k, n - k);
  const std::int64_t hi = n - lo;
  return log_factorial(n) - log_factorial(lo) - log_factorial(hi);
}

double binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  return std::round(std::exp(log_binomial(n, k)));
}

SignedLog log_laguerre(std::int64_t n, std::int64_t a, double x) {
  if (n < 0) throw std::domain_error("laguerre: negative degree " + std::to_string(n));
  if (a >= 0 || a < -n) return recurrence(n, a, x);

  // Reflection onto L_{n-r}^{(r)} with r = -a.
  const std::int64_t r = -a;
  if (x == 0.0) return SignedLog::zero();
  SignedLog prefactor;
  prefactor.log_abs = static_cast<double>(r) * std::log(std::abs(x)) + log_factorial(n - r) -
                      log_factorial(n);
  prefactor.sign = (x < 0.0 || r % 2 == 0) ? 1 : -1;
  return prefactor * recurrence(n - r, r, x);
}

LaguerreTable::LaguerreTable(std::int64_t max_degree, std::int64_t max_param, double x)
    : max_degree_(max_degree), max_param_(max_param), x_(x) {
  if (max_degree < 0 || max_param < 0) {
    throw std::domain_error("LaguerreTable: negative table bounds");
  }
  const auto stride = static_cast<std::size_t>(max_degree + 1);
  values_.resize(stride * static_cast<std::size_t>(max_param + 1));
  for (std::int64_t a = 0; a <= max_param; ++a) {
    SignedLog* row = values_.data() + static_cast<std::size_t>(a) * stride;
    const double ad = static_cast<double>(a);
    double prev = 1.0;
    double cur = 1.0 + ad - x;
    double log_scale = 0.0;
    row[0] = SignedLog::from_value(1.0);
    for (std::int64_t d = 1; d <= max_degree; ++d) {
      if (d > 1) {
        const double jd = static_cast<double>(d - 1);
        const double next = ((2.0 * jd + 1.0 + ad - x) * cur - (jd + ad) * prev) / (jd + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescale) {
          cur /= kRescale;
          prev /= kRescale;
          log_scale += kLogRescale;
        }
      }
      SignedLog v = SignedLog::from_value(cur);
      if (!v.is_zero()) v.log_abs += log_scale;
      row[d] = v;
    }
  }
}

SignedLog LaguerreTable::operator()(std::int64_t d, std::int64_t a) const {
  if (d < 0 || d > max_degree_ || a > max_param_ || a < -d) {
    throw std::out_of_range("LaguerreTable: (d=" + std::to_string(d) + ", a=" +
                            std::to_string(a) + ") outside table");
  }
  const auto stride = static_cast<std::size_t>(max_degree_ + 1);
  if (a >= 0) return values_[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(d)];
  const std::int64_t r = -a;
  if (r > max_param_) throw std::out_of_range("LaguerreTable: reflected parameter outside table");
  if (x_ == 0.0) return SignedLog::zero();
  SignedLog prefactor;
  prefactor.log_abs =
      static_cast<double>(r) * std::log(std::abs(x_)) + log_factorial(d - r) - log_factorial(d);
  prefactor.sign = (x_ < 0.0 || r % 2 == 0) ? 1 : -1;
  return prefactor *
         values_[static_cast<std::size_t>(r) * stride + static_cast<std::size_t>(d - r)];
}

double laguerre(std::int64_t n, std::int64_t a, double x) {
  return log_laguerre(n, a, x).value();
}

}  // namespace dnsdisc
