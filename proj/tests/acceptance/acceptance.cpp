//------------------------------------------------------------------------------
//
//   Copyright 2026 The qauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status if
// any criterion fails. Criteria that cannot hold as stated are still checked
// literally; extra "note:" lines report the related quantities that do hold.

#include "qauction/asymptotics.hpp"
#include "qauction/auction_measure.hpp"
#include "qauction/montecarlo.hpp"
#include "qauction/profit.hpp"

#include "oracle.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace qauction;
namespace fs = std::filesystem;

struct Outcome
{
  bool        pass = true;
  std::string detail;
};

std::string fmt(char const *pattern, auto... args)
{
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, pattern, args...);
  return buffer;
}

unsigned worker_threads()
{
  return std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
}

Strategy const kStd = Strategy::gaussian(0.0, 1.0);

struct Row
{
  std::size_t n;
  double      max_rho;
  double      rho_inf;
  double      ratio;
};

constexpr std::array<Row, 10> kTable{{{1, 0.27603, 0.0, NAN},
                                      {2, 0.410091, 0.282095, 1.45373},
                                      {3, 0.498606, 0.423142, 1.17834},
                                      {4, 0.564273, 0.514688, 1.09634},
                                      {5, 0.616195, 0.581482, 1.0597},
                                      {6, 0.658949, 0.633603, 1.04},
                                      {7, 0.695165, 0.676089, 1.02822},
                                      {8, 0.726489, 0.7118, 1.02064},
                                      {9, 0.754024, 0.742507, 1.01551},
                                      {10, 0.77854, 0.769376, 1.01191}}};

Outcome table_reproduction()
{
  auto const start = std::chrono::steady_clock::now();
  double     worst_max = 0.0, worst_inf = 0.0, worst_ratio = 0.0;
  for (auto const &row : kTable)
  {
    double const best  = max_rho(kStd, row.n).rho_star;
    double const limit = rho_seller(kStd, row.n, WithdrawalPrice::unbounded()).rho;
    worst_max          = std::max(worst_max, std::fabs(best - row.max_rho));
    worst_inf          = std::max(worst_inf, std::fabs(limit - row.rho_inf));
    if (row.n > 1)
    {
      worst_ratio = std::max(worst_ratio, std::fabs(best / limit - row.ratio));
    }
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst_max <= 5e-5 && worst_inf <= 5e-5 && worst_ratio <= 5e-4 && secs < 10.0,
          fmt("max|d max|=%.2e max|d rho_inf|=%.2e max|d ratio|=%.2e time=%.2fs", worst_max, worst_inf,
              worst_ratio, secs)};
}

Outcome closed_forms()
{
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10; ++n)
  {
    worst = std::max(worst, std::fabs(rho_limit_identity(kStd, n) -
                                      rho_seller(kStd, n, WithdrawalPrice::unbounded()).rho));
  }
  double const d2 = std::fabs(rho_seller(kStd, 2, WithdrawalPrice::unbounded()).rho - 0.5 / std::sqrt(M_PI));
  double const d3 =
      std::fabs(rho_seller(kStd, 3, WithdrawalPrice::unbounded()).rho - 0.75 / std::sqrt(M_PI));
  return {worst <= 1e-8 && d2 <= 1e-9 && d3 <= 1e-9,
          fmt("identity max diff=%.2e N=2 diff=%.2e N=3 diff=%.2e", worst, d2, d3)};
}

Outcome fixed_point(std::vector<std::string> &notes)
{
  double worst_literal = 0.0, worst_diagonal = 0.0, worst_agree = 0.0;
  for (std::size_t n = 1; n <= 10; ++n)
  {
    auto const   gs  = max_rho_golden_section(kStd, n);
    auto const   fp  = max_rho_fixed_point(kStd, n);
    double const rho = rho_seller(kStd, n, WithdrawalPrice::at(gs.p_star)).rho;
    worst_literal    = std::max(worst_literal, std::fabs(rho + gs.p_star));
    worst_diagonal   = std::max(worst_diagonal, std::fabs(rho - gs.p_star));
    worst_agree      = std::max({worst_agree, std::fabs(fp.p_star - gs.p_star),
                                 std::fabs(fp.rho_star - gs.rho_star)});
  }
  notes.push_back(fmt("note: criterion 3 with the opposite sign, max|rho(p*) - p*| = %.2e (%s); "
                      "the maximum lies where rho equals +p*, so |rho + p*| = 2 rho* there",
                      worst_diagonal, worst_diagonal <= 1e-5 ? "holds" : "fails"));
  notes.push_back(fmt("note: criterion 3 fixed-point vs golden-section agreement = %.2e (%s)",
                      worst_agree, worst_agree <= 1e-6 ? "holds" : "fails"));
  return {worst_literal <= 1e-5 && worst_agree <= 1e-6,
          fmt("max|rho(p*) + p*|=%.4f (bound 1e-5) fixed-point agreement=%.2e", worst_literal,
              worst_agree)};
}

Outcome monte_carlo()
{
  auto const start = std::chrono::steady_clock::now();
  double     worst = 0.0;
  for (std::size_t n : {1U, 2U, 3U, 5U, 10U})
  {
    for (auto p : {WithdrawalPrice::unbounded(), WithdrawalPrice::at(0.0), WithdrawalPrice::at(-0.5)})
    {
      auto const   mc  = estimate_rho_seller(kStd, n, p, {1'000'000, 42, worker_threads()});
      double const ref = rho_seller(kStd, n, p).rho;
      worst            = std::max(worst, std::fabs(mc.rho_estimate - ref) / mc.std_error);
    }
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 3.0 && secs < 60.0, fmt("max |mc - quad| / se = %.2f over 15 cases, time=%.1fs", worst, secs)};
}

Outcome asymptotics()
{
  double const fit_gap = std::fabs(asymptotic_max_rho(100) - log_fit(100));
  bool         monotone = true;
  double       prev     = std::numeric_limits<double>::infinity();
  std::string  gaps;
  for (std::size_t n : {100U, 1000U, 10000U})
  {
    double const rel = std::fabs(max_rho(kStd, n).rho_star - asymptotic_max_rho(n)) / asymptotic_max_rho(n);
    monotone         = monotone && rel < prev;
    prev             = rel;
    gaps += fmt("%.4f ", rel);
  }
  double worst_fit = 0.0;
  for (std::size_t n = 3; n <= 100; ++n)
  {
    worst_fit = std::max(worst_fit, std::fabs(max_rho(kStd, n).rho_star - log_fit(n)));
  }
  return {fit_gap <= 0.02 && monotone && worst_fit <= 0.05,
          fmt("|asym-fit|(100)=%.4f rel gaps (1e2,1e3,1e4)=%smax|max_rho-fit| N=3..100=%.4f", fit_gap,
              gaps.c_str(), worst_fit)};
}

Outcome gumbel()
{
  double const e2 = gumbel_sup_distance(100);
  double const e4 = gumbel_sup_distance(10000);
  double const k2 = empirical_gumbel_distance(100, {100'000, 7, worker_threads()});
  double const k4 = empirical_gumbel_distance(10000, {100'000, 7, worker_threads()});
  return {e4 < e2 && k4 < k2, fmt("exact %.4f -> %.4f, empirical KS %.4f -> %.4f", e2, e4, k2, k4)};
}

Outcome bidder_line()
{
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i)
  {
    double const q = -5.0 + 0.1 * i;
    worst = std::max(worst, std::fabs(rho_bidder(kStd, 1, WithdrawalPrice::unbounded(), q) - 0.5 * q));
  }
  double const s    = 0.5 * std::erfc(1.0 / std::sqrt(2.0));
  double const spot = std::fabs(rho_bidder(kStd, 2, WithdrawalPrice::unbounded(), 1.0) - s / (1.0 + s));
  return {worst <= 1e-12 && spot <= 1e-9, fmt("N=1 max dev=%.1e N=2 spot dev=%.1e", worst, spot)};
}

Outcome sigma_invariance()
{
  std::vector<std::vector<double>> cols;
  for (double sigma : {0.5, 1.0, 2.0})
  {
    std::vector<double> col;
    for (std::size_t n = 2; n <= 10; ++n)
    {
      col.push_back(profit_ratio(Strategy::gaussian(0.0, sigma), n));
    }
    cols.push_back(col);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < cols[0].size(); ++i)
  {
    worst = std::max({worst, std::fabs(cols[0][i] - cols[1][i]), std::fabs(cols[2][i] - cols[1][i])});
  }
  return {worst <= 1e-6, fmt("max ratio spread across sigma=%.2e", worst)};
}

Outcome brute_force()
{
  std::vector<std::pair<std::vector<double>, std::vector<double>>> const shapes{
      {{-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}},
      {{-2.0, -0.5, 0.5, 1.5}, {0.3, 1.0, 0.2, 0.6}},
      {{-1.5, 0.5, 2.0}, {1.0, 0.5, 0.0}}};
  std::pair<std::vector<double>, std::vector<double>> const seller{{-0.8, 0.1, 1.2}, {0.2, 1.0, 0.1}};

  double worst_analytic = 0.0;
  double worst_z        = 0.0;
  for (std::size_t n = 1; n <= 3; ++n)
  {
    std::vector<Strategy>    bidders;
    std::vector<oracle::Pwl> refs;
    for (std::size_t k = 0; k < n; ++k)
    {
      bidders.push_back(Strategy::tabulated(shapes[k].first, shapes[k].second));
      refs.emplace_back(shapes[k].first, shapes[k].second);
    }
    AuctionConfig const      cfg{Strategy::tabulated(seller.first, seller.second), bidders};
    oracle::PwlAuction const ref{oracle::Pwl{seller.first, seller.second}, refs};
    auto const               sim = simulate_config(cfg, {100'000, 11, worker_threads()});
    for (std::size_t k = 0; k < n; ++k)
    {
      double const p = ref.probability(k);
      worst_analytic = std::max(worst_analytic, std::fabs(transaction_probability(cfg, k) - p));
      for (double q = -1.95; q <= 1.95; q += 0.1)
      {
        worst_analytic = std::max(worst_analytic, std::fabs(transaction_density(cfg, k, q) - ref.density(k, q)));
      }
      double const band = std::sqrt(p * (1.0 - p) / 100'000.0);
      worst_z           = std::max(worst_z, std::fabs(sim.bidders[k].deal_rate - p) / band);
    }
  }
  return {worst_analytic <= 1e-6 && worst_z <= 3.0,
          fmt("max analytic dev=%.1e max simulation z=%.2f", worst_analytic, worst_z)};
}

std::string slurp(fs::path const &p)
{
  std::ifstream      in{p, std::ios::binary};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism()
{
  auto const dir = fs::temp_directory_path() / "qauction_acceptance";
  fs::create_directories(dir);
  auto const out = (dir / "out").string();

  std::vector<std::string> const commands{
      "table1 --n-max 6",
      "asym --n 10 100 1000",
      "gumbel --trials 50000 --seed 3",
      std::string{"simulate --trials 300000 --seed 5 "} + QAUCTION_CONFIG_DIR + "/tabulated_n3.json",
      std::string{"simulate --trials 300000 --seed 5 --format json "} + QAUCTION_CONFIG_DIR +
          "/resale_2d.json"};

  std::size_t mismatches = 0;
  std::size_t runs       = 0;
  for (auto const &cmd : commands)
  {
    std::string reference;
    for (unsigned threads : {1U, 2U, 8U, 1U})
    {
      fs::remove(out);
      std::string const line = std::string{QAUCTION_CLI_PATH} + " " + cmd +
                               " --threads " + std::to_string(threads) + " --out " + out;
      int const status = std::system(line.c_str());
      ++runs;
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
      {
        return {false, "command failed: " + line};
      }
      std::string const bytes = slurp(out) + slurp(out + ".manifest.json");
      if (reference.empty())
      {
        reference = bytes;
      }
      else if (bytes != reference)
      {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, fmt("%zu invocations, %zu byte mismatches", runs, mismatches)};
}

}  // namespace

int main()
{
  std::vector<std::pair<char const *, std::function<Outcome(std::vector<std::string> &)>>> const criteria{
      {"Table reproduction", [](auto &) { return table_reproduction(); }},
      {"Closed-form cross-check", [](auto &) { return closed_forms(); }},
      {"Fixed-point property", [](auto &notes) { return fixed_point(notes); }},
      {"Monte Carlo equivalence", [](auto &) { return monte_carlo(); }},
      {"Asymptotics", [](auto &) { return asymptotics(); }},
      {"Gumbel convergence", [](auto &) { return gumbel(); }},
      {"Bidder line", [](auto &) { return bidder_line(); }},
      {"Sigma invariance", [](auto &) { return sigma_invariance(); }},
      {"Brute-force oracle", [](auto &) { return brute_force(); }},
      {"Determinism", [](auto &) { return determinism(); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    std::vector<std::string> notes;
    Outcome                  o;
    try
    {
      o = criteria[i].second(notes);
    }
    catch (std::exception const &e)
    {
      o = {false, std::string{"exception: "} + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
    for (auto const &n : notes)
    {
      std::cout << "      " << n << std::endl;
    }
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
