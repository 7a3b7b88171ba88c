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

#include "qauction/profit.hpp"

#include "qauction/error.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

namespace {

using namespace qauction;

struct Row
{
  std::size_t n;
  double      max_rho;
  double      rho_inf;
  double      ratio;
};

// Published profit intensities for Gaussian(0, 1) bidders.
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

Strategy const kStd = Strategy::gaussian(0.0, 1.0);

TEST(Profit, PublishedTable)
{
  for (auto const &row : kTable)
  {
    EXPECT_NEAR(max_rho(kStd, row.n).rho_star, row.max_rho, 5e-5) << row.n;
    EXPECT_NEAR(rho_seller(kStd, row.n, WithdrawalPrice::unbounded()).rho, row.rho_inf, 5e-5);
    if (row.n > 1)
    {
      EXPECT_NEAR(profit_ratio(kStd, row.n), row.ratio, 5e-4) << row.n;
    }
  }
  EXPECT_THROW(profit_ratio(kStd, 1), DomainError);
}

TEST(Profit, ClosedFormLimits)
{
  EXPECT_NEAR(rho_seller(kStd, 2, WithdrawalPrice::unbounded()).rho, 0.5 / std::sqrt(M_PI), 1e-9);
  EXPECT_NEAR(rho_seller(kStd, 3, WithdrawalPrice::unbounded()).rho, 0.42314218766081722, 1e-9);
  EXPECT_NEAR(rho_seller(kStd, 1, WithdrawalPrice::unbounded()).rho, 0.0, 1e-10);
}

TEST(Profit, LimitIdentityHoldsBeyondGaussians)
{
  std::vector<Strategy> const etas{
      kStd, Strategy::gaussian(0.3, 1.7),
      Strategy::mixture({0.25, 0.75}, {Strategy::gaussian(-1.0, 0.4), Strategy::gaussian(0.5, 1.0)}),
      Strategy::tabulated({-2.0, -0.5, 0.0, 1.0, 2.5}, {0.0, 1.0, 0.6, 0.8, 0.0})};
  for (auto const &eta : etas)
  {
    for (std::size_t n = 1; n <= 10; ++n)
    {
      EXPECT_NEAR(rho_limit_identity(eta, n), rho_seller(eta, n, WithdrawalPrice::unbounded()).rho,
                  1e-8)
          << n;
    }
  }
}

TEST(Profit, NumeratorAndDenominatorAgainstOracle)
{
  // N = 2 at p' = 0.3: integrals over q <= -0.3 with an erfc-based integrand.
  auto const   r   = rho_seller(kStd, 2, WithdrawalPrice::at(0.3));
  double const num = oracle::simpson(
      [](double q) { return -q * oracle::normal_pdf(q) * oracle::normal_survival(q); }, -12.0, -0.3,
      20000);
  double const den = oracle::simpson(
      [](double q) { return oracle::normal_pdf(q) * oracle::normal_survival(q); }, -12.0, -0.3, 20000);
  EXPECT_NEAR(r.numerator, num, 1e-10);
  EXPECT_NEAR(r.denominator, 0.5 + den, 1e-10);
  EXPECT_NEAR(r.rho, num / (0.5 + den), 1e-10);
}

TEST(Profit, FarWithdrawalPriceMatchesUnbounded)
{
  for (double sigma : {0.5, 1.0, 2.0})
  {
    auto const eta = Strategy::gaussian(0.0, sigma);
    for (std::size_t n : {1U, 2U, 5U, 10U})
    {
      EXPECT_NEAR(rho_seller(eta, n, WithdrawalPrice::at(-40.0 * sigma)).rho,
                  rho_seller(eta, n, WithdrawalPrice::unbounded()).rho, 1e-10);
    }
  }
}

TEST(Profit, ScalesWithSigma)
{
  for (std::size_t n : {1U, 3U, 8U})
  {
    for (double p : {-1.0, 0.0, 0.6})
    {
      double const base = rho_seller(kStd, n, WithdrawalPrice::at(p)).rho;
      for (double sigma : {0.5, 2.0, 4.0})
      {
        double const scaled =
            rho_seller(Strategy::gaussian(0.0, sigma), n, WithdrawalPrice::at(sigma * p)).rho;
        EXPECT_NEAR(scaled, sigma * base, 1e-9 * sigma);
      }
    }
  }
}

TEST(Profit, MaximaIncreaseWithN)
{
  double prev = -1.0;
  for (std::size_t n = 1; n <= 30; ++n)
  {
    double const best = max_rho(kStd, n).rho_star;
    EXPECT_GT(best, prev) << n;
    EXPECT_GE(best, rho_seller(kStd, n, WithdrawalPrice::unbounded()).rho);
    prev = best;
  }
}

TEST(Profit, ArgmaxSitsOnTheDiagonal)
{
  for (std::size_t n = 1; n <= 10; ++n)
  {
    auto const g = max_rho_golden_section(kStd, n);
    EXPECT_NEAR(rho_seller(kStd, n, WithdrawalPrice::at(g.p_star)).rho, g.p_star, 1e-5) << n;
  }
}

TEST(Profit, FixedPointAgreesWithGoldenSection)
{
  for (std::size_t n = 1; n <= 10; ++n)
  {
    auto const fp = max_rho_fixed_point(kStd, n);
    auto const gs = max_rho_golden_section(kStd, n);
    EXPECT_EQ(fp.method, MaxMethod::fixed_point);
    EXPECT_EQ(gs.method, MaxMethod::golden_section);
    EXPECT_NEAR(fp.p_star, gs.p_star, 1e-6) << n;
    EXPECT_NEAR(fp.rho_star, gs.rho_star, 1e-6) << n;
    EXPECT_LE(fp.iterations, 200);
  }
}

TEST(Profit, MaxIsNoWorseThanNeighbours)
{
  for (std::size_t n : {2U, 6U})
  {
    auto const best = max_rho(kStd, n);
    for (double dp : {-0.05, -0.01, 0.01, 0.05})
    {
      EXPECT_LE(rho_seller(kStd, n, WithdrawalPrice::at(best.p_star + dp)).rho, best.rho_star + 1e-12);
    }
  }
}

TEST(Profit, MethodNames)
{
  EXPECT_EQ(to_string(MaxMethod::fixed_point), "fixed-point");
  EXPECT_EQ(to_string(MaxMethod::golden_section), "golden-section");
}

TEST(Profit, NonGaussianMaximumUsesGoldenSection)
{
  auto const eta = Strategy::tabulated({-2.0, 0.0, 2.0}, {0.0, 1.0, 0.0});
  auto const r   = max_rho(eta, 3);
  EXPECT_EQ(r.method, MaxMethod::golden_section);
  EXPECT_THROW(max_rho_fixed_point(eta, 3), DomainError);
}

TEST(Bidder, SingleBidderLine)
{
  for (int i = 0; i <= 100; ++i)
  {
    double const q = -3.0 + 0.06 * i;
    EXPECT_NEAR(rho_bidder(kStd, 1, WithdrawalPrice::unbounded(), q), 0.5 * q, 1e-12);
  }
}

TEST(Bidder, TwoBiddersSpotValue)
{
  double const s = oracle::normal_survival(1.0);
  EXPECT_NEAR(rho_bidder(kStd, 2, WithdrawalPrice::unbounded(), 1.0), s / (1.0 + s), 1e-12);
  EXPECT_NEAR(rho_bidder(kStd, 2, WithdrawalPrice::unbounded(), 1.0), 0.13693050922016763, 1e-12);
}

TEST(Bidder, RejectedBidEarnsNothing)
{
  EXPECT_EQ(rho_bidder(kStd, 3, WithdrawalPrice::at(0.5), -0.4), 0.0);
  EXPECT_NE(rho_bidder(kStd, 3, WithdrawalPrice::at(0.5), -0.6), 0.0);
}

TEST(Bidder, DeepTailDoesNotOverflow)
{
  double const r = rho_bidder(kStd, 10000, WithdrawalPrice::unbounded(), 40.0);
  EXPECT_EQ(r, 0.0);
  double const low = rho_bidder(kStd, 10000, WithdrawalPrice::unbounded(), -40.0);
  EXPECT_NEAR(low, -20.0, 1e-12);
}

TEST(Bidder, LossIntensity)
{
  EXPECT_NEAR(bidder_loss_intensity(0.282095, 2), -0.18806333333, 1e-10);
  EXPECT_NEAR(bidder_loss_intensity(0.769376, 10), -0.13988654545, 1e-10);
}

TEST(Profit, ResultInvariants)
{
  for (std::size_t n : {1U, 2U, 9U})
  {
    for (auto p : {WithdrawalPrice::unbounded(), WithdrawalPrice::at(-1.0), WithdrawalPrice::at(2.0)})
    {
      auto const r = rho_seller(kStd, n, p);
      EXPECT_GE(r.denominator, 1.0 / n);
      EXPECT_EQ(r.rho, r.numerator / r.denominator);
      EXPECT_EQ(r.p_prime, p);
    }
  }
}

TEST(Profit, MaxProfitInvariants)
{
  for (std::size_t n = 1; n <= 10; ++n)
  {
    for (auto const &m : {max_rho_fixed_point(kStd, n), max_rho_golden_section(kStd, n)})
    {
      double const at_star = rho_seller(kStd, n, WithdrawalPrice::at(m.p_star)).rho;
      EXPECT_NEAR(m.rho_star, at_star, 1e-8);
      if (m.method == MaxMethod::fixed_point)
      {
        // Residual of p' <- rho(p'); see the README note on the sign.
        EXPECT_LE(std::fabs(at_star - m.p_star), 1e-6);
      }
    }
  }
}

}  // namespace
