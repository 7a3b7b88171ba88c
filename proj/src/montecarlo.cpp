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

#include "qauction/montecarlo.hpp"

#include "qauction/asymptotics.hpp"
#include "qauction/error.hpp"
#include "qauction/normal.hpp"
#include "qauction/parallel.hpp"

#include <cmath>
#include <limits>

namespace qauction {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Tally
{
  explicit Tally(std::size_t n_bidders = 0)
    : wins(n_bidders, 0)
    , deals(n_bidders, 0)
    , margin_sum(n_bidders, 0.0)
    , margin_sq(n_bidders, 0.0)
  {}

  std::uint64_t trials = 0;
  // x = -[deal] q', y = [deal]
  double sx  = 0.0;
  double sy  = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;

  std::vector<std::uint64_t> wins;
  std::vector<std::uint64_t> deals;
  std::vector<double>        margin_sum;
  std::vector<double>        margin_sq;
  double                     resale_sum = 0.0;
  double                     resale_sq  = 0.0;

  void add_outcome(AuctionOutcome const &o)
  {
    ++trials;
    double const x = o.accomplished ? -o.q_win : 0.0;
    double const y = o.accomplished ? 1.0 : 0.0;
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
    if (o.winner)
    {
      ++wins[*o.winner];
      if (o.accomplished)
      {
        ++deals[*o.winner];
      }
    }
  }

  void merge(Tally const &other)
  {
    trials += other.trials;
    sx += other.sx;
    sy += other.sy;
    sxx += other.sxx;
    syy += other.syy;
    sxy += other.sxy;
    for (std::size_t k = 0; k < wins.size(); ++k)
    {
      wins[k] += other.wins[k];
      deals[k] += other.deals[k];
      margin_sum[k] += other.margin_sum[k];
      margin_sq[k] += other.margin_sq[k];
    }
    resale_sum += other.resale_sum;
    resale_sq += other.resale_sq;
  }
};

// Mean and standard error of a sample from its sum and sum of squares.
std::pair<double, double> mean_and_error(double sum, double sum_sq, std::uint64_t count)
{
  if (count == 0)
  {
    return {kNaN, kNaN};
  }
  auto const   n    = static_cast<double>(count);
  double const mean = sum / n;
  if (count < 2)
  {
    return {mean, kNaN};
  }
  double const var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

SimulationReport make_report(Tally const &t, std::uint64_t seed)
{
  SimulationReport r;
  r.n_trials = t.trials;
  r.seed     = seed;
  if (t.trials == 0)
  {
    return r;
  }
  auto const   n  = static_cast<double>(t.trials);
  double const mx = t.sx / n;
  double const my = t.sy / n;

  r.deal_rate               = my;
  r.mean_conditional_profit = mx;
  r.rho_estimate            = mx / (1.0 + my);

  if (t.trials >= 2)
  {
    double const vxx = std::max(0.0, (t.sxx - n * mx * mx) / (n - 1.0));
    double const vyy = std::max(0.0, (t.syy - n * my * my) / (n - 1.0));
    double const vxy = (t.sxy - n * mx * my) / (n - 1.0);
    double const gx  = 1.0 / (1.0 + my);
    double const gy  = -mx / ((1.0 + my) * (1.0 + my));
    double const var = gx * gx * vxx + gy * gy * vyy + 2.0 * gx * gy * vxy;
    r.std_error      = std::sqrt(std::max(0.0, var) / n);
  }
  return r;
}

JointSimulationReport make_joint_report(Tally const &t, std::uint64_t seed)
{
  JointSimulationReport out;
  out.report = make_report(t, seed);
  auto const n = static_cast<double>(std::max<std::uint64_t>(t.trials, 1));
  for (std::size_t k = 0; k < t.wins.size(); ++k)
  {
    BidderSummary b;
    b.win_rate  = static_cast<double>(t.wins[k]) / n;
    b.deal_rate = static_cast<double>(t.deals[k]) / n;
    std::tie(b.mean_margin, b.margin_std_error) =
        mean_and_error(t.margin_sum[k], t.margin_sq[k], t.deals[k]);
    out.bidders.push_back(b);
  }
  std::tie(out.mean_winner_resale, out.mean_winner_resale_std_error) =
      mean_and_error(t.resale_sum, t.resale_sq, t.trials);
  return out;
}

template <typename Trial>
Tally run_trials(std::size_t n_bidders, SimulationOptions const &options, Trial const &trial)
{
  auto const batches = parallel::batch_count(options.n_trials, kBatchSize);
  auto const tallies = parallel::map_ordered<Tally>(batches, options.threads, [&](std::size_t b) {
    Rng        rng   = Rng::substream(options.seed, b);
    auto const count = parallel::batch_length(options.n_trials, kBatchSize, b);
    Tally      tally{n_bidders};
    for (std::uint64_t i = 0; i < count; ++i)
    {
      trial(rng, tally);
    }
    return tally;
  });

  Tally total{n_bidders};
  for (auto const &t : tallies)
  {
    total.merge(t);
  }
  return total;
}

void require_trials(std::uint64_t n_trials, std::uint64_t minimum)
{
  if (n_trials < minimum)
  {
    throw InvalidArgument("trials: need at least " + std::to_string(minimum) + " trials");
  }
}

}  // namespace

std::size_t argmin_uniform_ties(std::span<double const> qs, Rng &rng)
{
  std::size_t best  = 0;
  std::size_t ties  = 1;
  for (std::size_t k = 1; k < qs.size(); ++k)
  {
    if (qs[k] < qs[best])
    {
      best = k;
      ties = 1;
    }
    else if (qs[k] == qs[best])
    {
      ++ties;
    }
  }
  if (ties == 1)
  {
    return best;
  }
  auto pick = rng.below(ties);
  for (std::size_t k = best; k < qs.size(); ++k)
  {
    if (qs[k] == qs[best] && pick-- == 0)
    {
      return k;
    }
  }
  return best;
}

AuctionOutcome simulate_once(AuctionConfig const &cfg, Rng &rng)
{
  std::vector<double> qs(cfg.bidders.size());
  for (std::size_t k = 0; k < qs.size(); ++k)
  {
    qs[k] = sample(cfg.bidders[k], rng);
  }
  AuctionOutcome out;
  out.p_seller     = sample(cfg.seller, rng);
  std::size_t const k = argmin_uniform_ties(qs, rng);
  out.winner       = k;
  out.q_win        = qs[k];
  out.accomplished = rationality(out.q_win, out.p_seller);
  return out;
}

JointSimulationReport simulate_config(AuctionConfig const &cfg, SimulationOptions const &options)
{
  require_trials(options.n_trials, 2);
  auto const tally = run_trials(cfg.bidders.size(), options, [&cfg](Rng &rng, Tally &t) {
    t.add_outcome(simulate_once(cfg, rng));
  });
  auto report = make_joint_report(tally, options.seed);
  for (auto &b : report.bidders)
  {
    b.mean_margin      = kNaN;
    b.margin_std_error = kNaN;
  }
  report.mean_winner_resale           = kNaN;
  report.mean_winner_resale_std_error = kNaN;
  return report;
}

SimulationReport estimate_rho_seller(Strategy const &eta, std::size_t n_bidders,
                                     WithdrawalPrice p_prime, SimulationOptions const &options)
{
  require_trials(options.n_trials, 1000);
  if (n_bidders == 0)
  {
    throw DomainError("estimate_rho_seller: N must be >= 1");
  }
  AuctionConfig const cfg{Strategy::dirac(p_prime.value()),
                          std::vector<Strategy>(n_bidders, eta)};
  return simulate_config(cfg, options).report;
}

JointSimulationReport simulate_joint(std::vector<JointStrategy2D> const &bidders,
                                     SellerStrategy const &seller,
                                     SimulationOptions const &options)
{
  require_trials(options.n_trials, 1000);
  if (bidders.empty())
  {
    throw InvalidArgument("bidders: an auction needs at least one bidder");
  }

  auto const tally = run_trials(bidders.size(), options, [&](Rng &rng, Tally &t) {
    std::vector<double> ps(bidders.size());
    std::vector<double> qs(bidders.size());
    for (std::size_t k = 0; k < bidders.size(); ++k)
    {
      std::tie(ps[k], qs[k]) = bidders[k].sample(rng);
    }
    double const p_seller = std::visit(
        [&rng](auto const &s) {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Strategy>)
          {
            return sample(s, rng);
          }
          else
          {
            return s.sample(rng).first;
          }
        },
        seller);

    AuctionOutcome o;
    std::size_t const k = argmin_uniform_ties(qs, rng);
    o.winner            = k;
    o.q_win             = qs[k];
    o.p_seller          = p_seller;
    o.accomplished      = rationality(o.q_win, p_seller);
    t.add_outcome(o);

    t.resale_sum += ps[k];
    t.resale_sq += ps[k] * ps[k];
    if (o.accomplished)
    {
      // Resale at e^{p_k} after buying at e^{-q_win}.
      double const margin = ps[k] + o.q_win;
      t.margin_sum[k] += margin;
      t.margin_sq[k] += margin * margin;
    }
  });
  return make_joint_report(tally, options.seed);
}

double empirical_gumbel_distance(std::size_t n_bidders, SimulationOptions const &options)
{
  auto const norming = norming_constants(n_bidders);
  require_trials(options.n_trials, 1);
  auto const n       = static_cast<double>(n_bidders);
  auto const batches = parallel::batch_count(options.n_trials, kBatchSize);

  auto const chunks = parallel::map_ordered<std::vector<double>>(
      batches, options.threads, [&](std::size_t b) {
        Rng        rng   = Rng::substream(options.seed, b);
        auto const count = parallel::batch_length(options.n_trials, kBatchSize, b);
        std::vector<double> xs(count);
        for (auto &x : xs)
        {
          // max of N standard normals by inversion: P(max <= m) = Phi(m)^N,
          // so the upper tail of m is 1 - U^{1/N} = -expm1(ln U / N).
          double const tail    = -std::expm1(std::log(rng.uniform()) / n);
          double const highest = normal::upper_quantile(tail);
          x                    = norming.a_n * highest + norming.b_n;
        }
        return xs;
      });

  std::vector<double> all;
  all.reserve(options.n_trials);
  for (auto const &c : chunks)
  {
    all.insert(all.end(), c.begin(), c.end());
  }
  return ks_distance(std::move(all), gumbel_cdf);
}

}  // namespace qauction
