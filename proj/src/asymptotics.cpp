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
#include "qauction/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qauction {

NormingConstants norming_constants(std::size_t n_bidders)
{
  if (n_bidders < 2)
  {
    throw DomainError("norming_constants: N must be >= 2");
  }
  double const log_n = std::log(static_cast<double>(n_bidders));
  return {std::sqrt(2.0 * log_n),
          0.5 * (std::log(4.0 * std::numbers::pi) + std::log(log_n)) - 2.0 * log_n, n_bidders};
}

double gumbel_cdf(double x)
{
  return std::exp(-std::exp(-x));
}

double asymptotic_max_rho(std::size_t n_bidders)
{
  if (n_bidders < 3)
  {
    throw DomainError("asymptotic_max_rho: N must be >= 3");
  }
  double const log_n = std::log(static_cast<double>(n_bidders));
  return std::sqrt(0.5 * log_n) +
         (2.0 * kEulerGamma - std::log(4.0 * std::numbers::pi) - std::log(log_n)) /
             (4.0 * std::sqrt(2.0 * log_n));
}

double log_fit(std::size_t n_bidders)
{
  if (n_bidders < 1)
  {
    throw DomainError("log_fit: N must be >= 1");
  }
  return 0.21 * std::log(static_cast<double>(n_bidders)) + 0.3;
}

double rescaled_winner_cdf(std::size_t n_bidders, double x)
{
  auto const c = norming_constants(n_bidders);
  // a X + b <= x  <=>  q' >= (b - x) / a.
  double const q = (c.b_n - x) / c.a_n;
  return std::exp(static_cast<double>(n_bidders) * normal::log_survival(q));
}

double gumbel_sup_distance(std::size_t n_bidders, std::span<double const> xs)
{
  double worst = 0.0;
  for (double x : xs)
  {
    worst = std::max(worst, std::fabs(rescaled_winner_cdf(n_bidders, x) - gumbel_cdf(x)));
  }
  return worst;
}

double gumbel_sup_distance(std::size_t n_bidders)
{
  constexpr std::size_t kPoints = 2001;
  std::vector<double>   xs(kPoints);
  for (std::size_t i = 0; i < kPoints; ++i)
  {
    xs[i] = -5.0 + 15.0 * static_cast<double>(i) / static_cast<double>(kPoints - 1);
  }
  return gumbel_sup_distance(n_bidders, xs);
}

}  // namespace qauction
