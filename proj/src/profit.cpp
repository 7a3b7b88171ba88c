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
#include "qauction/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qauction {
namespace {

constexpr double kInf            = std::numeric_limits<double>::infinity();
constexpr double kQuadratureTol  = 1e-10;
constexpr double kFixedPointTol  = 1e-10;
constexpr int    kFixedPointIter = 200;
constexpr double kGoldenTol      = 1e-8;

void require_density(Strategy const &eta)
{
  if (eta.has_atoms())
  {
    throw NoPointwiseDensity{};
  }
}

}  // namespace

std::string_view to_string(MaxMethod method) noexcept
{
  switch (method)
  {
  case MaxMethod::fixed_point:
    return "fixed-point";
  case MaxMethod::golden_section:
    return "golden-section";
  }
  return "unknown";
}

ProfitResult rho_seller(Strategy const &eta, std::size_t n_bidders, WithdrawalPrice p_prime)
{
  if (n_bidders == 0)
  {
    throw DomainError("rho_seller: N must be >= 1");
  }
  require_density(eta);

  auto const   window = support(eta, n_bidders);
  double const hi     = std::min(window.hi, p_prime.acceptance_limit());
  auto const   n      = static_cast<double>(n_bidders);

  // Per-bidder winner measure, eta S^(N-1).
  auto const measure = [&](double q) { return first_order_statistic_density(eta, n_bidders, q) / n; };

  quadrature::Options const options{.abs_tol = kQuadratureTol};
  double const profit =
      quadrature::integrate([&](double q) { return -q * measure(q); }, window.lo, hi, options,
                            window.breakpoints)
          .value;
  double const acceptance =
      quadrature::integrate(measure, window.lo, hi, options, window.breakpoints).value;

  ProfitResult result;
  result.numerator   = profit;
  result.denominator = 1.0 / n + acceptance;
  result.rho         = result.numerator / result.denominator;
  result.p_prime     = p_prime;
  return result;
}

double rho_limit_identity(Strategy const &eta, std::size_t n_bidders)
{
  return -0.5 * order_stat_mean(eta, n_bidders);
}

MaxProfit max_rho_golden_section(Strategy const &eta, std::size_t n_bidders)
{
  if (n_bidders == 0)
  {
    throw DomainError("max_rho: N must be >= 1");
  }
  double const centre = -mean(eta);
  double const scale  = std::sqrt(variance(eta));
  double const spread = std::sqrt(2.0 * std::log(static_cast<double>(n_bidders)));

  auto const rho = [&](double p) { return rho_seller(eta, n_bidders, WithdrawalPrice::at(p)).rho; };

  double const inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double       a       = centre - (6.0 + spread) * scale;
  double       b       = centre + 6.0 * scale;
  double       c       = b - inv_phi * (b - a);
  double       d       = a + inv_phi * (b - a);
  double       fc      = rho(c);
  double       fd      = rho(d);
  int          iterations = 0;
  while (b - a > kGoldenTol)
  {
    ++iterations;
    if (fc >= fd)
    {
      b  = d;
      d  = c;
      fd = fc;
      c  = b - inv_phi * (b - a);
      fc = rho(c);
    }
    else
    {
      a  = c;
      c  = d;
      fc = fd;
      d  = a + inv_phi * (b - a);
      fd = rho(d);
    }
  }

  MaxProfit out;
  out.p_star     = 0.5 * (a + b);
  out.rho_star   = rho(out.p_star);
  out.method     = MaxMethod::golden_section;
  out.iterations = iterations;
  return out;
}

MaxProfit max_rho_fixed_point(Strategy const &eta, std::size_t n_bidders)
{
  if (!eta.is_gaussian())
  {
    throw DomainError("max_rho_fixed_point: fixed-point maximization requires a Gaussian strategy");
  }
  if (n_bidders == 0)
  {
    throw DomainError("max_rho: N must be >= 1");
  }

  double p = 0.0;
  for (int j = 1; j <= kFixedPointIter; ++j)
  {
    double const next = rho_seller(eta, n_bidders, WithdrawalPrice::at(p)).rho;
    if (!std::isfinite(next))
    {
      break;
    }
    if (std::fabs(next - p) <= kFixedPointTol)
    {
      MaxProfit out;
      out.p_star     = next;
      out.rho_star   = rho_seller(eta, n_bidders, WithdrawalPrice::at(next)).rho;
      out.method     = MaxMethod::fixed_point;
      out.iterations = j;
      return out;
    }
    p = next;
  }
  return max_rho_golden_section(eta, n_bidders);
}

MaxProfit max_rho(Strategy const &eta, std::size_t n_bidders)
{
  if (eta.is_gaussian())
  {
    return max_rho_fixed_point(eta, n_bidders);
  }
  return max_rho_golden_section(eta, n_bidders);
}

double profit_ratio(Strategy const &eta, std::size_t n_bidders)
{
  if (n_bidders < 2)
  {
    throw DomainError("profit_ratio: N must be >= 2 (rho_1(-inf) = 0)");
  }
  if (!eta.is_gaussian())
  {
    throw DomainError("profit_ratio: requires a Gaussian strategy");
  }
  return max_rho(eta, n_bidders).rho_star /
         rho_seller(eta, n_bidders, WithdrawalPrice::unbounded()).rho;
}

double rho_bidder(Strategy const &eta, std::size_t n_bidders, WithdrawalPrice p_prime,
                  double q_prime)
{
  if (n_bidders == 0)
  {
    throw DomainError("rho_bidder: N must be >= 1");
  }
  if (!p_prime.accepts(q_prime))
  {
    return 0.0;
  }
  if (n_bidders == 1)
  {
    return 0.5 * q_prime;
  }
  double const ls = log_survival(eta, q_prime);
  if (ls == -kInf)
  {
    return 0.0;
  }
  // S^(1-N) = exp(-(N-1) ln S); overflow to +inf correctly yields 0.
  double const rivals = std::exp(-static_cast<double>(n_bidders - 1) * ls);
  return q_prime / (1.0 + rivals);
}

double bidder_loss_intensity(double rho_inf, std::size_t n_bidders)
{
  return -2.0 * rho_inf / (1.0 + static_cast<double>(n_bidders));
}

}  // namespace qauction
