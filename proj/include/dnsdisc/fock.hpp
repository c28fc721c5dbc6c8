// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Dense linear algebra on the truncated Fock space {|0>, ..., |N-1>}.
 *
 * All matrix types are plain Eigen dense types templated on the scalar.
 * Real scalars are used whenever every displacement in a problem has been
 * rotated onto the non-negative real axis; complex scalars otherwise.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "dnsdisc/dns_params.hpp"
#include "dnsdisc/specfun.hpp"

namespace dnsdisc {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Pure-state amplitudes on |0>..|N-1>.
template <typename Scalar = Complex>
using FockVector = Vector<Scalar>;

/// Hermitian operator on the truncated space. Physical states have unit
/// trace up to the truncation tail; decision operators are plain Hermitian.
template <typename Scalar = Complex>
using DensityMatrix = Matrix<Scalar>;

inline constexpr double kTruncationTol = 1e-10;
inline constexpr Index kDimHardCap = 4096;
inline constexpr double kHermitianTol = 1e-10;

/// Raised when a requested truncation would exceed the hard cap.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal numerical consistency check fails.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

namespace detail {

/// (z / |z|)^p; 1 when z == 0 (the magnitude carries the zero).
template <typename Scalar>
Scalar unit_power(Scalar z, Index p) {
  if (p == 0 || z == Scalar(0)) return Scalar(1);
  if constexpr (is_complex_v<Scalar>) {
    return std::polar(1.0, static_cast<double>(p) * std::arg(z));
  } else {
    return (z < 0 && (p % 2 != 0)) ? Scalar(-1) : Scalar(1);
  }
}

template <typename Scalar>
Scalar from_complex(Complex z) {
  if constexpr (is_complex_v<Scalar>) {
    return z;
  } else {
    if (z.imag() != 0.0) {
      throw std::invalid_argument("real-scalar construction requires a real displacement");
    }
    return z.real();
  }
}

}  // namespace detail

/// Annihilation operator a with a|n> = sqrt(n)|n-1>.
template <typename Scalar = double>
Matrix<Scalar> annihilation(Index dim) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Matrix<Scalar> a = Matrix<Scalar>::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = Scalar(std::sqrt(static_cast<Real>(n)));
  return a;
}

template <typename Scalar = double>
Matrix<Scalar> creation(Index dim) {
  return annihilation<Scalar>(dim).transpose();
}

template <typename Scalar = double>
Matrix<Scalar> number_operator(Index dim) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Matrix<Scalar> num = Matrix<Scalar>::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) num(n, n) = Scalar(static_cast<Real>(n));
  return num;
}

/// R(theta) = diag(exp(i n theta)); R(theta) rho(mu) R(theta)^dag = rho(mu e^{i theta}).
inline Matrix<Complex> phase_rotation(double theta, Index dim) {
  Vector<Complex> d(dim);
  for (Index n = 0; n < dim; ++n) d(n) = std::polar(1.0, static_cast<double>(n) * theta);
  return d.asDiagonal();
}

namespace detail {

/// <row|D(mu)|col> with L_{min}^{(gap)}(|mu|^2) supplied by the caller.
template <typename Scalar>
Scalar displacement_element(Scalar mu, Index row, Index col, const LaguerreTable& lag) {
  const double r = std::abs(mu);
  const double r2 = r * r;
  const Index lo = std::min(row, col);
  const Index gap = std::abs(row - col);
  if (gap > 0 && r == 0.0) return Scalar(0);
  SignedLog mag = lag(lo, gap);
  if (mag.is_zero()) return Scalar(0);
  mag.log_abs += 0.5 * (log_factorial(lo) - log_factorial(lo + gap)) - 0.5 * r2;
  if (gap > 0) mag.log_abs += static_cast<double>(gap) * std::log(r);
  // Below the diagonal the phase is mu^{gap}; above it is (-mu*)^{gap}.
  Scalar phase = unit_power(mu, gap);
  if (row < col) {
    if constexpr (is_complex_v<Scalar>) phase = std::conj(phase);
    if (gap % 2 != 0) phase = -phase;
  }
  return phase * mag.value();
}

}  // namespace detail

/**
 * Matrix elements <h|D(mu)|k> on the truncated space, built entry-wise:
 *   h >= k:  sqrt(k!/h!) mu^{h-k} e^{-|mu|^2/2} L_k^{(h-k)}(|mu|^2)
 *   h <  k:  sqrt(h!/k!) (-mu*)^{k-h} e^{-|mu|^2/2} L_h^{(k-h)}(|mu|^2)
 * Each entry is exact; only unitarity is lost near the truncation edge.
 */
template <typename Scalar = Complex>
Matrix<Scalar> displacement_matrix(Scalar mu, Index dim) {
  if (dim < 1) throw std::invalid_argument("displacement_matrix: dim must be >= 1");
  const LaguerreTable lag(dim - 1, dim - 1, std::norm(mu));
  Matrix<Scalar> d(dim, dim);
  for (Index col = 0; col < dim; ++col) {
    for (Index row = 0; row < dim; ++row) d(row, col) = detail::displacement_element(mu, row, col, lag);
  }
  return d;
}

/// max |M - M^dag| entrywise.
template <typename Derived>
double hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigen-decomposition result; values ascending, column j of vectors pairs with values(j).
template <typename Scalar>
struct EigenSystem {
  Eigen::VectorXd values;
  Matrix<Scalar> vectors;
};

/// Hermitian eigendecomposition. Rejects input whose Hermitian defect
/// exceeds kHermitianTol relative to max(1, max|M|).
template <typename Derived>
EigenSystem<typename Derived::Scalar> eigh(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("eigh: matrix is not square");
  if (m.size() == 0) return {};
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = hermitian_defect(m);
  if (!(defect <= kHermitianTol * scale)) {
    throw std::invalid_argument("eigh: input is not Hermitian (defect " + std::to_string(defect) +
                                ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(m.eval());
  if (solver.info() != Eigen::Success) throw IntegrityError("eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Sum of |lambda| over the spectrum of a Hermitian matrix.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
  return eigh(m).values.cwiseAbs().sum();
}

/// Sum of strictly positive eigenvalues; exact zeros are excluded.
template <typename Derived>
double positive_eigen_sum(const Eigen::MatrixBase<Derived>& m) {
  const auto sys = eigh(m);
  double s = 0.0;
  for (Index i = 0; i < sys.values.size(); ++i) {
    if (sys.values(i) > 0.0) s += sys.values(i);
  }
  return s;
}

/**
 * Smallest truncation N such that every listed state has photon-number
 * tail mass sum_{n >= N} p(n) below tol. The search starts near the
 * closed-form mean photon number and is verified against the exact photon
 * statistics. Throws TruncationError if N would exceed cap.
 */
Index choose_dim(std::span<const DnsParams> params, double tol = kTruncationTol,
                 Index cap = kDimHardCap);

inline Index choose_dim(const DnsParams& params, double tol = kTruncationTol,
                        Index cap = kDimHardCap) {
  return choose_dim(std::span<const DnsParams>(&params, 1), tol, cap);
}

}  // namespace dnsdisc
