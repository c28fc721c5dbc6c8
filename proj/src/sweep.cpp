// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "dnsdisc/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "dnsdisc/receiver.hpp"
#include "dnsdisc/states.hpp"
#include "dnsdisc/verify.hpp"

namespace dnsdisc {

namespace {

void require_agreement(const char* name_a, double a, const char* name_b, double b, double tol,
                       const DiscriminationProblem& problem) {
  if (!(std::abs(a - b) <= tol)) {
    throw IntegrityError(std::string(name_a) + "=" + format_double(a) + " and " + name_b + "=" +
                         format_double(b) + " disagree beyond " + format_double(tol) + " at " +
                         describe(problem));
  }
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

SweepResult evaluate_point(const DnsParams& state0, const DnsParams& state1, double p0,
                           const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult r;
  r.state0 = state0;
  r.state1 = state1;
  r.p0 = p0;
  const auto problem = DiscriminationProblem::normalized(state0, state1, p0);
  r.dim = options.dim.value_or(problem_dim(problem, Reduction::displace_and_rotate, options.tol));
  r.pe_general = helstrom_general(problem, r.dim);

  if (problem.both_pure()) {
    r.pe_pure = helstrom_pure(problem);
    require_agreement("pe_pure", *r.pe_pure, "pe_general", *r.pe_general, kCrossMethodTol, problem);
  }

  if (problem.equal_displacement() && problem.state0.nt == problem.state1.nt) {
    r.pe_closed_form = helstrom_closed_form(problem);
    require_agreement("pe_closed_form", *r.pe_closed_form, "pe_general", *r.pe_general,
                      kCrossMethodTol, problem);
    const int cap = static_cast<int>(std::max<Index>(r.dim - 1, problem.h()));
    r.n_th = optimal_threshold(problem, cap);
    r.pe_kennedy = kennedy_error(problem, *r.n_th);
    require_agreement("pe_kennedy", *r.pe_kennedy, "pe_closed_form", *r.pe_closed_form,
                      kCrossMethodTol, problem);
    if (options.trials > 0) {
      const auto sim = simulate(problem, ReceiverConfig{-problem.state1.mu, *r.n_th},
                                options.trials, options.seed);
      r.pe_monte_carlo = sim.error_rate();
      const double pe = *r.pe_kennedy;
      const double sigma = std::sqrt(pe * (1.0 - pe) / static_cast<double>(options.trials));
      require_agreement("pe_monte_carlo", *r.pe_monte_carlo, "pe_kennedy", pe,
                        kMonteCarloSigmas * sigma + 1.0 / static_cast<double>(options.trials),
                        problem);
    }
  }

  if (options.timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  }
  return r;
}

OokResult evaluate_ook(int h, double nt, double p0, const EvalOptions& options) {
  if (h < 1) throw std::invalid_argument("evaluate_ook: h must be >= 1");
  OokResult r;
  r.h = h;
  r.nt = nt;
  r.p0 = p0;
  r.alpha = std::sqrt(h * (nt + 1.0));
  const DnsParams off{Complex{0.0, 0.0}, 0, nt};
  const DnsParams dns_on{Complex{0.0, 0.0}, h, nt};
  const DnsParams coherent_on{Complex{r.alpha, 0.0}, 0, nt};
  r.mean_photons_per_bit = p0 * mean_photons(dns_on) + (1.0 - p0) * mean_photons(off);

  const auto dns = DiscriminationProblem::normalized(dns_on, off, p0);
  r.dim_dns = options.dim.value_or(problem_dim(dns, Reduction::displace_and_rotate, options.tol));
  r.pe_dns_closed_form = helstrom_closed_form(dns);
  r.pe_dns_general = helstrom_general(dns, r.dim_dns);
  require_agreement("pe_dns_closed_form", r.pe_dns_closed_form, "pe_dns_general",
                    r.pe_dns_general, kCrossMethodTol, dns);

  const auto coherent = DiscriminationProblem::normalized(coherent_on, off, p0);
  r.dim_coherent =
      options.dim.value_or(problem_dim(coherent, Reduction::displace_and_rotate, options.tol));
  r.pe_coherent = helstrom_general(coherent, r.dim_coherent);
  return r;
}

std::vector<GridPoint> figure_points(int fig, const FigureOptions& options) {
  std::vector<GridPoint> out;
  switch (fig) {
    case 1:
    case 2: {
      const double nt = fig == 1 ? 0.0 : 0.2;
      if (!(options.separation_step > 0.0)) {
        throw std::invalid_argument("figure_points: separation step must be positive");
      }
      const auto steps =
          static_cast<int>(std::floor(options.max_separation / options.separation_step + 1e-9));
      for (const auto& [k, h] : options.kh_pairs) {
        for (int i = 0; i <= steps; ++i) {
          const double d = i * options.separation_step;
          out.push_back({DnsParams{Complex{0.0, 0.0}, h, nt}, DnsParams{Complex{d, 0.0}, k, nt}});
        }
      }
      break;
    }
    case 3: {
      const Complex mu{1.0, 0.0};
      for (const int k : options.fig3_ks) {
        for (int gap = 0; gap <= options.max_gap; ++gap) {
          out.push_back({DnsParams{mu, k + gap, 0.2}, DnsParams{mu, k, 0.2}});
        }
      }
      break;
    }
    default:
      throw std::invalid_argument("figure_points: figure must be 1, 2 or 3 (4 is the OOK table)");
  }
  return out;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_header(bool timing) {
  std::string h =
      "xi_re,xi_im,h,mu_re,mu_im,k,nt0,nt1,p0,dim,pe_pure,pe_general,pe_closed_form,pe_kennedy,"
      "pe_monte_carlo,n_th";
  if (timing) h += ",wall_ms";
  return h;
}

std::string csv_row(const SweepResult& r, bool timing) {
  std::ostringstream os;
  os << format_double(r.state0.mu.real()) << ',' << format_double(r.state0.mu.imag()) << ','
     << r.state0.k << ',' << format_double(r.state1.mu.real()) << ','
     << format_double(r.state1.mu.imag()) << ',' << r.state1.k << ','
     << format_double(r.state0.nt) << ',' << format_double(r.state1.nt) << ','
     << format_double(r.p0) << ',' << r.dim << ',' << opt(r.pe_pure) << ','
     << opt(r.pe_general) << ',' << opt(r.pe_closed_form) << ',' << opt(r.pe_kennedy) << ','
     << opt(r.pe_monte_carlo) << ',' << (r.n_th ? std::to_string(*r.n_th) : std::string());
  if (timing) os << ',' << format_double(r.wall_ms);
  return os.str();
}

std::string ook_csv_header() {
  return "h,nt,p0,alpha,mean_photons_per_bit,dim_dns,dim_coherent,pe_dns_closed_form,"
         "pe_dns_general,pe_coherent";
}

std::string ook_csv_row(const OokResult& r) {
  std::ostringstream os;
  os << r.h << ',' << format_double(r.nt) << ',' << format_double(r.p0) << ','
     << format_double(r.alpha) << ',' << format_double(r.mean_photons_per_bit) << ','
     << r.dim_dns << ',' << r.dim_coherent << ',' << format_double(r.pe_dns_closed_form) << ','
     << format_double(r.pe_dns_general) << ',' << format_double(r.pe_coherent);
  return os.str();
}

}  // namespace dnsdisc
