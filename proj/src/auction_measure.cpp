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

#include "qauction/auction_measure.hpp"

#include "qauction/error.hpp"
#include "qauction/quadrature.hpp"

#include <string>

namespace qauction {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void append_kinks(Strategy const &s, double sign, std::vector<double> &out)
{
  auto const window = support(s, 1);
  for (double x : window.breakpoints)
  {
    out.push_back(sign * x);
  }
  for (double x : atoms(s))
  {
    if (std::isfinite(x))
    {
      out.push_back(sign * x);
    }
  }
}

}  // namespace

WithdrawalPrice WithdrawalPrice::at(double p)
{
  if (!std::isfinite(p))
  {
    throw InvalidArgument("p_prime: must be finite (use WithdrawalPrice::unbounded())");
  }
  return WithdrawalPrice{p};
}

AuctionConfig::AuctionConfig(Strategy seller_strategy, std::vector<Strategy> bidder_strategies)
  : seller{std::move(seller_strategy)}
  , bidders{std::move(bidder_strategies)}
{
  if (bidders.empty())
  {
    throw InvalidArgument("bidders: an auction needs at least one bidder");
  }
}

double transaction_density(AuctionConfig const &cfg, std::size_t k, double q_k)
{
  if (k >= cfg.bidders.size())
  {
    throw InvalidArgument("k: bidder index " + std::to_string(k) + " out of range");
  }
  double const eta = density(cfg.bidders[k], q_k);

  double log_rivals = 0.0;
  for (std::size_t m = 0; m < cfg.bidders.size(); ++m)
  {
    if (m == k)
    {
      continue;
    }
    if (atom_mass(cfg.bidders[m], q_k) > 0.0)
    {
      throw TieAmbiguity("tie-ambiguity: bidder " + std::to_string(m) +
                         " has an atom at q = " + std::to_string(q_k));
    }
    log_rivals += log_survival(cfg.bidders[m], q_k);
  }
  if (eta == 0.0 || log_rivals == -kInf)
  {
    return 0.0;
  }
  double const acceptance = cdf(cfg.seller, -q_k);
  return eta * std::exp(log_rivals) * acceptance;
}

double winner_measure_identical(Strategy const &eta, std::size_t n_bidders,
                                WithdrawalPrice p_prime, double q)
{
  if (n_bidders == 0)
  {
    throw DomainError("winner_measure_identical: N must be >= 1");
  }
  if (!p_prime.accepts(q))
  {
    return 0.0;
  }
  return first_order_statistic_density(eta, n_bidders, q) / static_cast<double>(n_bidders);
}

double dominant_bidder_measure(Strategy const &eta, WithdrawalPrice p_prime, double q)
{
  if (!p_prime.accepts(q))
  {
    return 0.0;
  }
  return density(eta, q);
}

double transaction_probability(AuctionConfig const &cfg, std::size_t k)
{
  if (k >= cfg.bidders.size())
  {
    throw InvalidArgument("k: bidder index " + std::to_string(k) + " out of range");
  }
  auto window = support(cfg.bidders[k], cfg.bidders.size());
  for (std::size_t m = 0; m < cfg.bidders.size(); ++m)
  {
    if (m != k)
    {
      append_kinks(cfg.bidders[m], 1.0, window.breakpoints);
    }
  }
  append_kinks(cfg.seller, -1.0, window.breakpoints);

  return quadrature::integrate([&](double q) { return transaction_density(cfg, k, q); },
                               window.lo, window.hi, {.abs_tol = 1e-11}, window.breakpoints)
      .value;
}

double winner_probability_identical(Strategy const &eta, std::size_t n_bidders,
                                    WithdrawalPrice p_prime)
{
  auto const window = support(eta, n_bidders);
  double const hi   = std::min(window.hi, p_prime.acceptance_limit());
  return quadrature::integrate(
             [&](double q) { return winner_measure_identical(eta, n_bidders, p_prime, q); },
             window.lo, hi, {.abs_tol = 1e-11}, window.breakpoints)
      .value;
}

}  // namespace qauction
