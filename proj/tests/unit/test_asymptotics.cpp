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

#include "qauction/asymptotics.hpp"

#include "qauction/error.hpp"
#include "qauction/profit.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace qauction;

TEST(Asymptotics, NormingConstants)
{
  EXPECT_NEAR(norming_constants(4).a_n, 1.6651092223153955, 1e-15);
  EXPECT_NEAR(norming_constants(100).b_n, -7.1812384355875868, 1e-14);
  EXPECT_EQ(norming_constants(100).n, 100U);
  EXPECT_THROW(norming_constants(1), DomainError);
}

TEST(Asymptotics, AsymptoticMaximum)
{
  EXPECT_NEAR(asymptotic_max_rho(100), 1.2782251533279238, 1e-13);
  EXPECT_NEAR(asymptotic_max_rho(10000), 1.9364496779717546, 1e-13);
  EXPECT_THROW(asymptotic_max_rho(2), DomainError);
}

TEST(Asymptotics, LogFit)
{
  EXPECT_NEAR(log_fit(100), 1.2670857390574991, 1e-14);
  EXPECT_NEAR(asymptotic_max_rho(100) - log_fit(100), 0.011139414270424627, 1e-12);
  EXPECT_NEAR(log_fit(1), 0.3, 1e-15);
}

TEST(Asymptotics, GumbelCdf)
{
  EXPECT_NEAR(gumbel_cdf(0.0), std::exp(-1.0), 1e-16);
  EXPECT_EQ(gumbel_cdf(-1e3), 0.0);
  EXPECT_EQ(gumbel_cdf(1e3), 1.0);
}

TEST(Asymptotics, RescaledCdfAgainstOracle)
{
  for (std::size_t n : {2U, 10U, 100U})
  {
    auto const c = norming_constants(n);
    for (double x = -3.0; x <= 6.0; x += 0.5)
    {
      double const expected = std::pow(1.0 - oracle::normal_survival((x - c.b_n) / c.a_n), n);
      EXPECT_NEAR(rescaled_winner_cdf(n, x), expected, 1e-13) << n << " " << x;
    }
  }
}

TEST(Asymptotics, RescaledCdfIsMonotone)
{
  double prev = 0.0;
  for (double x = -10.0; x <= 20.0; x += 0.01)
  {
    double const f = rescaled_winner_cdf(1000, x);
    ASSERT_GE(f, prev);
    ASSERT_LE(f, 1.0);
    prev = f;
  }
}

TEST(Asymptotics, SupDistanceShrinks)
{
  double const d2 = gumbel_sup_distance(100);
  double const d4 = gumbel_sup_distance(10000);
  EXPECT_NEAR(d2, 0.058915, 5e-5);
  EXPECT_NEAR(d4, 0.040458, 5e-5);
  EXPECT_LT(d4, d2);
  EXPECT_LT(gumbel_sup_distance(1000000), d4);
}

TEST(Asymptotics, QuadratureTracksAsymptoticRelativeGap)
{
  auto const eta = Strategy::gaussian(0.0, 1.0);
  double     prev = 1.0;
  for (std::size_t n : {100U, 1000U, 10000U})
  {
    double const gap = std::fabs(max_rho(eta, n).rho_star / asymptotic_max_rho(n) - 1.0);
    EXPECT_LT(gap, prev) << n;
    prev = gap;
  }
}

}  // namespace
