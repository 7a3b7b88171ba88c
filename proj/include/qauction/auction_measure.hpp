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

#include "qauction/strategy.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace qauction {

/**
 * The seller's log withdrawal price p'. A seller who fixes no withdrawal
 * price is represented by the distinct unbounded() value rather than a large
 * negative number, so limits are evaluated exactly.
 */
class WithdrawalPrice
{
public:
  static constexpr WithdrawalPrice unbounded() noexcept
  {
    return WithdrawalPrice{-std::numeric_limits<double>::infinity()};
  }

  /// Throws InvalidArgument unless p is finite.
  static WithdrawalPrice at(double p);

  constexpr bool is_unbounded() const noexcept
  {
    return value_ == -std::numeric_limits<double>::infinity();
  }

  /// p' itself; -infinity when unbounded.
  constexpr double value() const noexcept
  {
    return value_;
  }

  /// Largest winning log variable q that the seller accepts: -p'.
  constexpr double acceptance_limit() const noexcept
  {
    return -value_;
  }

  constexpr bool accepts(double q) const noexcept
  {
    return is_unbounded() || q + value_ <= 0.0;
  }

  friend constexpr bool operator==(WithdrawalPrice, WithdrawalPrice) = default;

private:
  constexpr explicit WithdrawalPrice(double v) noexcept
    : value_{v}
  {}

  double value_;
};

/// Seller strategy over p = ln c_seller and N >= 1 bidder strategies over
/// q_k = -ln c_k.
struct AuctionConfig
{
  AuctionConfig(Strategy seller_strategy, std::vector<Strategy> bidder_strategies);

  Strategy              seller;
  std::vector<Strategy> bidders;
};

/// The rationality condition [q + p <= 0], boundary included.
constexpr bool rationality(double q, double p) noexcept
{
  return q + p <= 0.0;
}

/**
 * Density that bidder k wins at log variable q_k and the seller accepts:
 *
 *   eta_k(q_k) * prod_{m != k} P(q_m > q_k) * P(p <= -q_k).
 *
 * Bidder k needs a pointwise density. Another bidder with an atom exactly at
 * q_k raises TieAmbiguity; the analytic path has no tie-breaking rule.
 */
double transaction_density(AuctionConfig const &cfg, std::size_t k, double q_k);

/// Per-bidder winner measure for N identical bidders:
/// [q + p' <= 0] eta(q) S(q)^(N-1). No factor N.
double winner_measure_identical(Strategy const &eta, std::size_t n_bidders,
                                WithdrawalPrice p_prime, double q);

/// Reduction when a single bidder dominates: [q + p' <= 0] eta(q).
double dominant_bidder_measure(Strategy const &eta, WithdrawalPrice p_prime, double q);

/// Integral of transaction_density over q for bidder k.
double transaction_probability(AuctionConfig const &cfg, std::size_t k);

/// Integral of winner_measure_identical over q.
double winner_probability_identical(Strategy const &eta, std::size_t n_bidders,
                                    WithdrawalPrice p_prime);

}  // namespace qauction
