// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file specfun.hpp
 * @brief Scalar special functions: log-factorials, log-binomials and
 *        generalized Laguerre polynomials with integer parameter.
 *
 * Closed forms for displaced number states multiply factorially large
 * and exponentially small factors. Everything here is therefore also
 * available in signed-log form so callers can assemble products in log
 * space and exponentiate once.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace dnsdisc {

/// A real number stored as sign * exp(log_abs). Zero has sign 0.
struct SignedLog {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static SignedLog zero() { return {}; }
  static SignedLog from_value(double v);

  [[nodiscard]] double value() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
  }
  [[nodiscard]] bool is_zero() const { return sign == 0; }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
};

/// ln(n!). Exact product for n <= 20, lgamma above.
double log_factorial(std::int64_t n);

/// ln C(n, k) for 0 <= k <= n. Throws std::domain_error otherwise.
/// Evaluated on min(k, n - k) so the result is symmetric bit-for-bit.
double log_binomial(std::int64_t n, std::int64_t k);

/// C(n, k) as a double; zero when k < 0 or k > n.
double binomial(std::int64_t n, std::int64_t k);

/**
 * Generalized Laguerre polynomial L_n^{(a)}(x) for integer a.
 *
 * Uses the three-term recurrence in n for a >= 0 and for a < -n.
 * For -n <= a < 0 the reflection
 *   L_n^{(-r)}(x) = (-x)^r (n-r)!/n! L_{n-r}^{(r)}(x)
 * reduces to a non-negative parameter. Throws std::domain_error for n < 0.
 */
double laguerre(std::int64_t n, std::int64_t a, double x);

/// Same as laguerre() but in signed-log form; the recurrence is rescaled
/// internally so it does not overflow for large degree or |x|.
SignedLog log_laguerre(std::int64_t n, std::int64_t a, double x);

/**
 * All L_d^{(a)}(x) for 0 <= d <= max_degree and 0 <= a <= max_param at a
 * fixed x, one recurrence pass per parameter. Lookups with
 * -d <= a < 0 go through the reflection identity. Entries are signed-log.
 */
class LaguerreTable {
 public:
  LaguerreTable(std::int64_t max_degree, std::int64_t max_param, double x);

  /// Throws std::out_of_range outside the tabulated domain or for a < -d.
  [[nodiscard]] SignedLog operator()(std::int64_t d, std::int64_t a) const;

  [[nodiscard]] double x() const { return x_; }

 private:
  std::int64_t max_degree_;
  std::int64_t max_param_;
  double x_;
  std::vector<SignedLog> values_;  // row-major in (a, d)
};

}  // namespace dnsdisc
