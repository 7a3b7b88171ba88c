#pragma once
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
#include "qauction/joint_strategy.hpp"
#include "qauction/rng.hpp"
#include "qauction/strategy.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace qauction {

/// Result of one simulated English auction.
struct AuctionOutcome
{
  std::optional<std::size_t> winner;
  double                     q_win       = 0.0;  // min over the drawn q_k
  bool                       accomplished = false;
  double                     p_seller    = 0.0;
};

/**
 * Plain Monte Carlo estimate of the seller profit intensity.
 *
 * Each trial contributes x = -[deal] q' and y = [deal]. With the common 1/N
 * factors cancelled, rho = E(x) / (1 + E(y)); std_error comes from the delta
 * method with the empirical covariance of (x, y).
 */
struct SimulationReport
{
  std::uint64_t n_trials               = 0;
  double        deal_rate               = 0.0;
  double        mean_conditional_profit = 0.0;  // E(-[deal] q_win), zero when no deal
  double        rho_estimate            = 0.0;
  double        std_error               = 0.0;
  std::uint64_t seed                    = 0;
};

struct BidderSummary
{
  double win_rate  = 0.0;  // P(k wins)
  double deal_rate = 0.0;  // P(k wins and the deal closes)
  /// Mean of p_k + q_win over trials that k won and closed; the winner's log
  /// resale margin. NaN when bidder k never closed a deal.
  double mean_margin      = 0.0;
  double margin_std_error = 0.0;
};

struct JointSimulationReport
{
  SimulationReport           report;
  std::vector<BidderSummary> bidders;
  /// Winner's resale log-price p_k' averaged over all trials.
  double mean_winner_resale           = 0.0;
  double mean_winner_resale_std_error = 0.0;
};

struct SimulationOptions
{
  std::uint64_t n_trials = 1'000'000;
  std::uint64_t seed     = 0;
  unsigned      threads  = 1;
};

/// Trials are grouped into batches of this size; batch b draws from
/// Rng::substream(seed, b). Results are independent of the thread count.
inline constexpr std::uint64_t kBatchSize = 1U << 14U;

/// Index of the smallest value, ties broken uniformly at random.
std::size_t argmin_uniform_ties(std::span<double const> qs, Rng &rng);

AuctionOutcome simulate_once(AuctionConfig const &cfg, Rng &rng);

/// Simulates an arbitrary configuration; reports rho and per-bidder
/// win/deal frequencies (mean_margin is NaN: 1-D strategies carry no resale price).
JointSimulationReport simulate_config(AuctionConfig const &cfg, SimulationOptions const &options);

/// N identical bidders playing eta against a seller who fixes p'.
/// Throws InvalidArgument for n_trials < 1000.
SimulationReport estimate_rho_seller(Strategy const &eta, std::size_t n_bidders,
                                     WithdrawalPrice p_prime, SimulationOptions const &options);

using SellerStrategy = std::variant<Strategy, JointStrategy2D>;

/// Bidders draw (p_k, q_k) jointly; the winner is argmin q_k and the deal
/// closes when q_win + p_seller <= 0. A 2-D seller contributes its p draw.
JointSimulationReport simulate_joint(std::vector<JointStrategy2D> const &bidders,
                                     SellerStrategy const &seller,
                                     SimulationOptions const &options);

/// Kolmogorov-Smirnov distance between n samples of a_N (-q') + b_N, with
/// q' the minimum of N standard normals, and the Gumbel CDF.
double empirical_gumbel_distance(std::size_t n_bidders, SimulationOptions const &options);

/// sup |F_n - F| for a sample and a continuous CDF.
template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf &&cdf);

}  // namespace qauction

#include "qauction/detail/ks_distance.ipp"
