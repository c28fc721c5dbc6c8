// Copyright 2026 The dnsdisc Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: single-point bounds, receiver evaluation,
// figure sweeps, the OOK comparison, Monte Carlo, and oracle verification.
// CSV goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad flags, 3 numerical
// integrity failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dnsdisc/oracle.hpp"
#include "dnsdisc/receiver.hpp"
#include "dnsdisc/states.hpp"
#include "dnsdisc/sweep.hpp"
#include "dnsdisc/verify.hpp"

namespace {

using namespace dnsdisc;

constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadFlags = 2, kIntegrity = 3 };

struct Flags {
  std::string mu = "0";
  std::string xi = "0";
  std::string beta;
  int k = 0;
  int h = 0;
  double nt = 0.0;
  double p0 = 0.5;
  long dim = 0;  // 0 = automatic
  double tol = kTruncationTol;
  std::uint64_t seed = 1;
  std::uint64_t trials = 0;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  int fig = 1;
  int n_th = kNoThreshold - 1;  // below kNoThreshold = automatic
  bool timing = false;
  // sweep/ook overrides
  std::string pairs;
  double dmax = 4.0;
  double step = 0.05;
  std::string ks;
  int max_gap = 6;
  int hmin = 1;
  int hmax = 8;
  std::string nts;
  // verify
  std::string grid = "default";
  double tol_override = 0.0;
};

Complex parse_complex(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != text.substr(0, comma).size()) throw std::invalid_argument("trailing");
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string tail = text.substr(comma + 1);
      im = std::stod(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("trailing");
    }
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + " expects re[,im], got '" + text + "'");
  }
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) {
      throw std::invalid_argument(std::string(flag) + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--pairs expects k:h,k:h,...");
    out.emplace_back(parse_list<int>(item.substr(0, colon), "--pairs").at(0),
                     parse_list<int>(item.substr(colon + 1), "--pairs").at(0));
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

EvalOptions eval_options(const Flags& f) {
  EvalOptions o;
  if (f.dim > 0) o.dim = f.dim;
  o.tol = f.tol;
  o.trials = f.trials;
  o.seed = f.seed;
  o.timing = f.timing;
  return o;
}

void print_provenance(std::ostream& os, const std::vector<std::string>& argv) {
  os << "# dnsdisc " << kVersion << '\n' << "# command:";
  for (const auto& a : argv) os << ' ' << a;
  os << '\n';
}

// Problem in the tool's convention: hypothesis 0 = rho(xi, h), hypothesis 1 = rho(mu, k).
std::pair<DnsParams, DnsParams> states_from(const Flags& f) {
  const DnsParams s0{parse_complex(f.xi, "--xi"), f.h, f.nt};
  const DnsParams s1{parse_complex(f.mu, "--mu"), f.k, f.nt};
  s0.validate();
  s1.validate();
  return {s0, s1};
}

int run_helstrom(const Flags& f, std::ostream& out) {
  const auto [s0, s1] = states_from(f);
  const auto row = evaluate_point(s0, s1, f.p0, eval_options(f));
  out << csv_header(f.timing) << '\n' << csv_row(row, f.timing) << '\n';
  return kOk;
}

// Threshold minimizing the receiver error over [-1, dim) for an arbitrary beta.
int best_threshold(const DiscriminationProblem& problem, const ReceiverConfig& base, Index dim) {
  int best = kNoThreshold;
  double best_pe = kennedy_error(problem, ReceiverConfig{base.beta, kNoThreshold});
  for (int n = 0; n < dim; ++n) {
    const double pe = kennedy_error(problem, ReceiverConfig{base.beta, n});
    if (pe < best_pe) {
      best_pe = pe;
      best = n;
    }
  }
  return best;
}

ReceiverConfig receiver_from(const Flags& f, const DiscriminationProblem& problem, Index& dim) {
  ReceiverConfig config;
  const bool equal = problem.equal_displacement() && problem.state0.nt == problem.state1.nt;
  if (!f.beta.empty()) {
    config.beta = parse_complex(f.beta, "--beta");
  } else if (equal) {
    config.beta = -problem.state1.mu;
  } else {
    throw std::invalid_argument("unequal displacements need an explicit --beta");
  }
  const std::array<DnsParams, 2> shifted{
      DnsParams{problem.state0.mu + config.beta, problem.state0.k, problem.state0.nt},
      DnsParams{problem.state1.mu + config.beta, problem.state1.k, problem.state1.nt}};
  dim = f.dim > 0 ? f.dim : choose_dim(shifted, f.tol);
  if (f.n_th >= kNoThreshold) {
    config.n_th = f.n_th;
  } else if (equal && config.beta == -problem.state1.mu) {
    config.n_th = optimal_threshold(problem, static_cast<int>(std::max<Index>(dim - 1, problem.h())));
  } else {
    config.n_th = best_threshold(problem, config, dim);
  }
  return config;
}

int run_kennedy(const Flags& f, std::ostream& out) {
  const auto [s0, s1] = states_from(f);
  const auto problem = DiscriminationProblem::normalized(s0, s1, f.p0);
  Index dim = 0;
  const auto config = receiver_from(f, problem, dim);
  const double pe = kennedy_error(problem, config);
  const double helstrom = helstrom_general(problem, problem_dim(problem, Reduction::displace_and_rotate, f.tol));
  out << "xi_re,xi_im,h,mu_re,mu_im,k,nt,p0,beta_re,beta_im,n_th,pe_kennedy,pe_general\n"
      << format_double(s0.mu.real()) << ',' << format_double(s0.mu.imag()) << ',' << s0.k << ','
      << format_double(s1.mu.real()) << ',' << format_double(s1.mu.imag()) << ',' << s1.k << ','
      << format_double(f.nt) << ',' << format_double(f.p0) << ','
      << format_double(config.beta.real()) << ',' << format_double(config.beta.imag()) << ','
      << config.n_th << ',' << format_double(pe) << ',' << format_double(helstrom) << '\n';
  return kOk;
}

int run_simulate(const Flags& f, std::ostream& out) {
  const auto [s0, s1] = states_from(f);
  const auto problem = DiscriminationProblem::normalized(s0, s1, f.p0);
  Index dim = 0;
  const auto config = receiver_from(f, problem, dim);
  const std::uint64_t trials = f.trials > 0 ? f.trials : 1'000'000;
  const auto sim = simulate(problem, config, trials, f.seed, f.workers);
  const double pe = kennedy_error(problem, config);
  const double sigma = std::sqrt(pe * (1.0 - pe) / static_cast<double>(trials));
  out << "xi_re,xi_im,h,mu_re,mu_im,k,nt,p0,beta_re,beta_im,n_th,trials,seed,errors,"
         "pe_monte_carlo,pe_kennedy,sigma\n"
      << format_double(s0.mu.real()) << ',' << format_double(s0.mu.imag()) << ',' << s0.k << ','
      << format_double(s1.mu.real()) << ',' << format_double(s1.mu.imag()) << ',' << s1.k << ','
      << format_double(f.nt) << ',' << format_double(f.p0) << ','
      << format_double(config.beta.real()) << ',' << format_double(config.beta.imag()) << ','
      << config.n_th << ',' << trials << ',' << f.seed << ',' << sim.errors << ','
      << format_double(sim.error_rate()) << ',' << format_double(pe) << ','
      << format_double(sigma) << '\n';
  return kOk;
}

FigureOptions figure_options(const Flags& f) {
  FigureOptions o;
  if (!f.pairs.empty()) o.kh_pairs = parse_pairs(f.pairs);
  o.max_separation = f.dmax;
  o.separation_step = f.step;
  if (!f.ks.empty()) o.fig3_ks = parse_list<int>(f.ks, "--ks");
  o.max_gap = f.max_gap;
  o.max_h = f.hmax;
  if (!f.nts.empty()) o.ook_nts = parse_list<double>(f.nts, "--nts");
  return o;
}

int run_ook(const Flags& f, std::ostream& out) {
  const auto o = figure_options(f);
  if (f.hmin < 1 || f.hmax < f.hmin) throw std::invalid_argument("need 1 <= --hmin <= --hmax");
  std::vector<std::pair<int, double>> points;
  for (const double nt : o.ook_nts) {
    for (int h = f.hmin; h <= f.hmax; ++h) points.emplace_back(h, nt);
  }
  std::vector<OokResult> rows(points.size());
  const auto options = eval_options(f);
  parallel_for(points.size(), f.workers, [&](std::size_t i) {
    rows[i] = evaluate_ook(points[i].first, points[i].second, f.p0, options);
  });
  out << "# energy matching: " << kOokEnergyRule << '\n' << ook_csv_header() << '\n';
  for (const auto& r : rows) out << ook_csv_row(r) << '\n';
  return kOk;
}

int run_sweep(const Flags& f, std::ostream& out) {
  if (f.fig == 4) return run_ook(f, out);
  const auto points = figure_points(f.fig, figure_options(f));
  std::vector<SweepResult> rows(points.size());
  const auto options = eval_options(f);
  parallel_for(points.size(), f.workers, [&](std::size_t i) {
    rows[i] = evaluate_point(points[i].state0, points[i].state1, f.p0, options);
  });
  out << csv_header(f.timing) << '\n';
  for (const auto& r : rows) out << csv_row(r, f.timing) << '\n';
  return kOk;
}

int run_verify(const Flags& f, std::ostream& out) {
  const auto grid = VerificationGrid::preset(f.grid);
  if (grid.empty()) {
    std::cerr << "warning: 0 checks (empty grid)\n";
  }
  std::optional<double> override_tol;
  if (f.tol_override > 0.0) override_tol = f.tol_override;
  const auto report = run_verification(grid, override_tol);
  out << "check,count,worst,tolerance,status,worst_point\n";
  for (const auto& c : report.checks) {
    out << c.name << ',' << c.count << ',' << format_double(c.worst) << ','
        << format_double(c.tolerance) << ',' << (c.passed() ? "pass" : "FAIL") << ','
        << csv_quote(c.worst_point) << '\n';
    if (!c.passed()) {
      std::cerr << "FAIL " << c.name << ": deviation " << format_double(c.worst) << " > "
                << format_double(c.tolerance) << " at " << c.worst_point << '\n';
    }
  }
  std::cerr << report.total_checks() << " checks, " << (report.passed() ? "all passed" : "FAILED")
            << '\n';
  return report.passed() ? kOk : kVerifyFailed;
}

void add_point_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mu", f.mu, "displacement of hypothesis 1, re[,im]");
  cmd->add_option("--xi", f.xi, "displacement of hypothesis 0, re[,im]");
  cmd->add_option("--k", f.k, "photon-addition count of hypothesis 1")->check(CLI::NonNegativeNumber);
  cmd->add_option("--h", f.h, "photon-addition count of hypothesis 0")->check(CLI::NonNegativeNumber);
}

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--nt", f.nt, "mean thermal photon number")->check(CLI::NonNegativeNumber);
  cmd->add_option("--p0", f.p0, "prior of hypothesis 0 (p1 = 1 - p0)")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--dim", f.dim, "truncation dimension override")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", f.tol, "truncation tail tolerance")->check(CLI::Range(1e-300, 1e-3));
  cmd->add_option("--seed", f.seed, "Monte Carlo seed");
  cmd->add_option("--trials", f.trials, "Monte Carlo trials (0 disables)");
  cmd->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--timing", f.timing, "append a wall_ms column (not byte-stable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrimination of noisy displaced number states"};
  app.set_version_flag("--version", std::string("dnsdisc ") + kVersion);
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  app.require_subcommand(1);
  Flags f;

  auto* helstrom = app.add_subcommand("helstrom", "minimum error probability by every applicable method");
  add_point_flags(helstrom, f);
  add_common_flags(helstrom, f);

  auto* kennedy = app.add_subcommand("kennedy", "Kennedy receiver with threshold detection");
  add_point_flags(kennedy, f);
  add_common_flags(kennedy, f);
  kennedy->add_option("--beta", f.beta, "receiver displacement re[,im] (default -mu)");
  kennedy->add_option("--n-th", f.n_th, "count threshold (default: optimal)");

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of the Kennedy receiver");
  add_point_flags(simulate_cmd, f);
  add_common_flags(simulate_cmd, f);
  simulate_cmd->add_option("--beta", f.beta, "receiver displacement re[,im] (default -mu)");
  simulate_cmd->add_option("--n-th", f.n_th, "count threshold (default: optimal)");

  auto* sweep = app.add_subcommand("sweep", "figure grids (1-3) and the OOK table (4)");
  add_common_flags(sweep, f);
  sweep->add_option("--fig", f.fig, "figure id")->check(CLI::Range(1, 4));
  sweep->add_option("--pairs", f.pairs, "fig 1/2 (k:h) families, e.g. 0:0,1:1,0:1");
  sweep->add_option("--dmax", f.dmax, "fig 1/2 largest |mu - xi|")->check(CLI::NonNegativeNumber);
  sweep->add_option("--step", f.step, "fig 1/2 |mu - xi| step")->check(CLI::PositiveNumber);
  sweep->add_option("--ks", f.ks, "fig 3 values of k, e.g. 0,1,2,3");
  sweep->add_option("--max-gap", f.max_gap, "fig 3 largest h - k")->check(CLI::NonNegativeNumber);
  sweep->add_option("--hmin", f.hmin, "fig 4 smallest h");
  sweep->add_option("--hmax", f.hmax, "fig 4 largest h");
  sweep->add_option("--nts", f.nts, "fig 4 thermal occupancies, e.g. 0.1,0.2,0.5");

  auto* ook = app.add_subcommand("ook", "on-off keying: DNS vs coherent state at equal energy");
  add_common_flags(ook, f);
  ook->add_option("--hmin", f.hmin, "smallest h");
  ook->add_option("--hmax", f.hmax, "largest h");
  ook->add_option("--nts", f.nts, "thermal occupancies, e.g. 0.1,0.2,0.5");

  auto* verify = app.add_subcommand("verify", "compare closed forms against brute-force oracles");
  verify->add_option("--grid", f.grid, "grid preset")->check(CLI::IsMember({"default", "quick", "empty"}));
  verify->add_option("--tol", f.tol_override, "replace every check tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  }

  const std::vector<std::string> args(argv, argv + argc);
  std::ostringstream out;
  int code = kOk;
  try {
    if (*verify) {
      code = run_verify(f, out);
    } else {
      print_provenance(out, args);
      if (*helstrom) code = run_helstrom(f, out);
      else if (*kennedy) code = run_kennedy(f, out);
      else if (*simulate_cmd) code = run_simulate(f, out);
      else if (*sweep) code = run_sweep(f, out);
      else if (*ook) code = run_ook(f, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  }
  std::cout << out.str();
  return code;
}
