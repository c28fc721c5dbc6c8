// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/oracle.hpp"

#include <cmath>

namespace dnsdisc {

namespace {

using OMatrix = Matrix<OracleScalar>;
using OVector = Vector<OracleScalar>;

OracleScalar to_oracle(Complex z) { return {z.real(), z.imag()}; }

Complex to_double(OracleScalar z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// a^dag v on the truncated space; the top component falls off.
OVector apply_creation(const OVector& v) {
  OVector out = OVector::Zero(v.size());
  for (Index n = 0; n + 1 < v.size(); ++n) {
    out(n + 1) = std::sqrt(static_cast<long double>(n + 1)) * v(n);
  }
  return out;
}

// exp(c a^dag) = sum_j (c a^dag)^j / j!, a finite sum on the truncated space.
OMatrix exp_creation(OracleScalar c, Index dim) {
  OMatrix out = OMatrix::Zero(dim, dim);
  for (Index m = 0; m < dim; ++m) {
    OVector term = OVector::Zero(dim);
    term(m) = 1.0L;
    OVector acc = term;
    for (Index j = 1; m + j < dim; ++j) {
      term = apply_creation(term) * (c / static_cast<long double>(j));
      acc += term;
    }
    out.col(m) = acc;
  }
  return out;
}

OMatrix thermal(long double nt, Index dim) {
  OMatrix rho = OMatrix::Zero(dim, dim);
  long double p = 1.0L / (nt + 1.0L);
  const long double ratio = nt / (nt + 1.0L);
  for (Index n = 0; n < dim; ++n) {
    rho(n, n) = p;
    p *= ratio;
  }
  return rho;
}

DensityMatrix<Complex> crop(const OMatrix& m, Index dim) {
  return m.topLeftCorner(dim, dim).unaryExpr([](OracleScalar z) { return to_double(z); });
}

}  // namespace

Index oracle_working_dim(const DnsParams& params, Index dim) {
  // The last term keeps the thermal tail lost at the top of the working
  // space well below the closed-form tolerance even when k = 0 and mu = 0.
  return dim + 4 * Index{params.k} + static_cast<Index>(std::ceil(8.0 * std::abs(params.mu))) +
         static_cast<Index>(std::ceil(10.0 * (params.nt + 1.0)));
}

Matrix<OracleScalar> oracle_displacement(Complex mu, Index dim) {
  if (dim < 1) throw std::invalid_argument("oracle_displacement: dim must be >= 1");
  const OracleScalar m = to_oracle(mu);
  const long double gauss = std::exp(-0.5L * std::norm(m));
  // exp(-mu* a) = exp(-mu a^dag)^dag.
  return gauss * exp_creation(m, dim) * exp_creation(-m, dim).adjoint();
}

FockVector<Complex> oracle_noiseless_dns(Complex mu, int k, Index dim) {
  if (k < 0 || k >= dim) throw std::invalid_argument("oracle_noiseless_dns: need 0 <= k < dim");
  const OMatrix d = oracle_displacement(mu, dim);
  return d.col(k).unaryExpr([](OracleScalar z) { return to_double(z); });
}

OracleState oracle_noisy_dns(const DnsParams& params, Index dim) {
  params.validate();
  const Index work = oracle_working_dim(params, dim);
  if (work > kDimHardCap) throw TruncationError("oracle_noisy_dns: working dimension above cap");

  const OMatrix up = creation<OracleScalar>(work);
  OMatrix sigma = thermal(static_cast<long double>(params.nt), work);
  for (int i = 0; i < params.k; ++i) sigma = up * sigma * up.adjoint();
  const long double trace = sigma.trace().real();

  const OMatrix d = oracle_displacement(params.mu, work);
  const OMatrix rho = d * sigma * d.adjoint() / trace;
  return {crop(rho, dim), static_cast<double>(trace), work};
}

double oracle_mean_photons(const DensityMatrix<Complex>& rho) {
  double s = 0.0;
  for (Index n = 0; n < rho.rows(); ++n) s += static_cast<double>(n) * rho(n, n).real();
  return s;
}

CommutatorDeviation oracle_commutators(Index dim, std::span<const Complex> alphas) {
  if (dim < 16) throw std::invalid_argument("oracle_commutators: dim must be >= 16");
  const Index guard = dim / 2;
  const OMatrix a = annihilation<OracleScalar>(dim);
  const OMatrix ad = a.adjoint();
  auto block_max = [guard](const OMatrix& m) {
    return static_cast<double>(m.topLeftCorner(guard, guard).cwiseAbs().maxCoeff());
  };

  CommutatorDeviation out;
  out.canonical = block_max(a * ad - ad * a - OMatrix::Identity(dim, dim));
  for (const Complex alpha : alphas) {
    const OracleScalar al = to_oracle(alpha);
    const OMatrix d = oracle_displacement(alpha, dim);
    out.annihilation = std::max(out.annihilation, block_max(a * d - d * a - al * d));
    out.creation = std::max(out.creation, block_max(ad * d - d * ad - std::conj(al) * d));
  }
  return out;
}

double oracle_helstrom(const DiscriminationProblem& problem, Index dim) {
  problem.validate();
  const auto rho0 = oracle_noisy_dns(problem.state0, dim).rho;
  const auto rho1 = oracle_noisy_dns(problem.state1, dim).rho;
  const Matrix<Complex> delta = problem.p1 * rho1 - problem.p0 * rho0;
  const Matrix<Complex> hermitian = 0.5 * (delta + delta.adjoint());
  const auto values = eigh(hermitian).values;
  double positive = 0.0;
  for (Index i = 0; i < values.size(); ++i) {
    if (counts_as_positive(values(i))) positive += values(i);
  }
  return problem.p1 - positive;
}

}  // namespace dnsdisc
