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
#include "qauction/strategy.hpp"

#include <cstddef>
#include <string_view>

namespace qauction {

/**
 * Seller profit intensity at a fixed withdrawal price, with the two
 * integrals it is built from:
 *
 *   numerator   = -int_{-inf}^{-p'} q eta(q) S(q)^(N-1) dq
 *   denominator = 1/N + int_{-inf}^{-p'} eta(q) S(q)^(N-1) dq
 *   rho         = numerator / denominator
 */
struct ProfitResult
{
  double          rho         = 0.0;
  double          numerator   = 0.0;
  double          denominator = 0.0;
  WithdrawalPrice p_prime     = WithdrawalPrice::unbounded();
};

enum class MaxMethod
{
  fixed_point,
  golden_section,
};

std::string_view to_string(MaxMethod method) noexcept;

struct MaxProfit
{
  double    p_star     = 0.0;
  double    rho_star   = 0.0;
  MaxMethod method     = MaxMethod::golden_section;
  int       iterations = 0;
};

ProfitResult rho_seller(Strategy const &eta, std::size_t n_bidders, WithdrawalPrice p_prime);

/// rho_N(-inf) through the order-statistic mean: -E(min)/2. Shares no
/// integrand with rho_seller.
double rho_limit_identity(Strategy const &eta, std::size_t n_bidders);

/// Iterates p' <- rho_N(p') from p' = 0 until successive iterates differ by
/// at most 1e-10. Requires a Gaussian eta. Falls back to golden section
/// (and reports it in `method`) if 200 iterations do not suffice.
MaxProfit max_rho_fixed_point(Strategy const &eta, std::size_t n_bidders);

/// Golden-section search for the argmax of rho_N on
/// [m - (6 + sqrt(2 ln N)) s, m + 6 s], with m = -mean(eta) and s the
/// standard deviation of eta; tolerance 1e-8 on p'.
MaxProfit max_rho_golden_section(Strategy const &eta, std::size_t n_bidders);

/// Fixed point for Gaussian strategies, golden section otherwise.
MaxProfit max_rho(Strategy const &eta, std::size_t n_bidders);

/// max rho / rho(-inf). Gaussian eta, N >= 2.
double profit_ratio(Strategy const &eta, std::size_t n_bidders);

/// Profit intensity of a bidder who bids the fixed log variable q' against
/// N-1 rivals playing eta: [q' + p' <= 0] q' / (1 + S(q')^(1-N)).
double rho_bidder(Strategy const &eta, std::size_t n_bidders, WithdrawalPrice p_prime,
                  double q_prime);

/// Average loss intensity of bidders when the seller fixes no withdrawal
/// price: -2 rho_inf / (1 + N).
double bidder_loss_intensity(double rho_inf, std::size_t n_bidders);

}  // namespace qauction
