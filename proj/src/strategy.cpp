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

#include "qauction/error.hpp"
#include "qauction/normal.hpp"
#include "qauction/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qauction {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double log_sum_exp(std::vector<double> const &terms)
{
  double const peak = terms.empty() ? -kInf : *std::max_element(terms.begin(), terms.end());
  if (peak == -kInf)
  {
    return -kInf;
  }
  double sum = 0.0;
  for (double t : terms)
  {
    sum += std::exp(t - peak);
  }
  return peak + std::log(sum);
}

}  // namespace

// -- Tabulated ----------------------------------------------------------------

Tabulated::Tabulated(std::vector<double> grid, std::vector<double> values)
  : grid_{std::move(grid)}
  , values_{std::move(values)}
{
  if (grid_.size() < 2)
  {
    throw InvalidArgument("grid: needs at least two points");
  }
  if (grid_.size() != values_.size())
  {
    throw InvalidArgument("values: length differs from grid");
  }
  for (std::size_t i = 0; i < grid_.size(); ++i)
  {
    if (!std::isfinite(grid_[i]))
    {
      throw InvalidArgument("grid[" + std::to_string(i) + "]: not finite");
    }
    if (i > 0 && !(grid_[i] > grid_[i - 1]))
    {
      throw InvalidArgument("grid[" + std::to_string(i) + "]: grid must be strictly increasing");
    }
    if (!std::isfinite(values_[i]) || values_[i] < 0.0)
    {
      throw InvalidArgument("values[" + std::to_string(i) + "]: must be finite and >= 0");
    }
  }

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
  {
    total += 0.5 * (grid_[i + 1] - grid_[i]) * (values_[i] + values_[i + 1]);
  }
  if (!(total > 0.0))
  {
    throw InvalidArgument("values: density has zero total mass");
  }
  for (double &v : values_)
  {
    v /= total;
  }

  std::size_t const n = grid_.size();
  tail_.assign(n, 0.0);
  head_.assign(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;)
  {
    tail_[i] = tail_[i + 1] + 0.5 * (grid_[i + 1] - grid_[i]) * (values_[i] + values_[i + 1]);
  }
  for (std::size_t i = 1; i < n; ++i)
  {
    head_[i] = head_[i - 1] + 0.5 * (grid_[i] - grid_[i - 1]) * (values_[i - 1] + values_[i]);
  }
}

double Tabulated::density(double q) const
{
  if (q < grid_.front() || q > grid_.back())
  {
    return 0.0;
  }
  auto const it = std::upper_bound(grid_.begin(), grid_.end(), q);
  if (it == grid_.end())
  {
    return values_.back();
  }
  auto const i = static_cast<std::size_t>(it - grid_.begin()) - 1;
  double const t = (q - grid_[i]) / (grid_[i + 1] - grid_[i]);
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

double Tabulated::survival(double q) const
{
  if (q <= grid_.front())
  {
    return 1.0;
  }
  if (q >= grid_.back())
  {
    return 0.0;
  }
  auto const i = static_cast<std::size_t>(std::upper_bound(grid_.begin(), grid_.end(), q) -
                                          grid_.begin()) - 1;
  return 0.5 * (grid_[i + 1] - q) * (density(q) + values_[i + 1]) + tail_[i + 1];
}

double Tabulated::quantile(double u) const
{
  if (u <= 0.0)
  {
    return grid_.front();
  }
  if (u >= 1.0)
  {
    return grid_.back();
  }
  auto i = static_cast<std::size_t>(std::upper_bound(head_.begin(), head_.end(), u) -
                                    head_.begin());
  i = std::clamp<std::size_t>(i, 1, grid_.size() - 1) - 1;

  double const h    = grid_[i + 1] - grid_[i];
  double const r    = u - head_[i];
  double const a    = 0.5 * h * (values_[i + 1] - values_[i]);
  double const b    = h * values_[i];
  double const disc = std::max(0.0, b * b + 4.0 * a * r);
  double const den  = b + std::sqrt(disc);
  double const t    = den > 0.0 ? 2.0 * r / den : 0.0;
  return grid_[i] + h * std::clamp(t, 0.0, 1.0);
}

double Tabulated::mean() const
{
  // Two-point Gauss-Legendre is exact for the quadratic q * f(q) per segment.
  double       m = 0.0;
  double const g = 0.5 / std::sqrt(3.0);
  for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
  {
    double const c = 0.5 * (grid_[i] + grid_[i + 1]);
    double const h = grid_[i + 1] - grid_[i];
    for (double x : {c - g * h, c + g * h})
    {
      m += 0.5 * h * x * density(x);
    }
  }
  return m;
}

double Tabulated::second_moment() const
{
  // Three-point Gauss-Legendre, exact for the cubic q^2 f(q).
  double       m  = 0.0;
  double const g  = 0.5 * std::sqrt(0.6);
  double const w0 = 8.0 / 18.0;
  double const w1 = 5.0 / 18.0;
  for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
  {
    double const c = 0.5 * (grid_[i] + grid_[i + 1]);
    double const h = grid_[i + 1] - grid_[i];
    m += h * (w0 * c * c * density(c) + w1 * (c - g * h) * (c - g * h) * density(c - g * h) +
              w1 * (c + g * h) * (c + g * h) * density(c + g * h));
  }
  return m;
}

// -- Strategy factories -------------------------------------------------------

Strategy Strategy::gaussian(double mu, double sigma)
{
  if (!std::isfinite(mu))
  {
    throw InvalidArgument("mu: must be finite");
  }
  if (!std::isfinite(sigma) || !(sigma > 0.0))
  {
    throw InvalidArgument("sigma: must be finite and > 0");
  }
  return Strategy{Gaussian{mu, sigma}};
}

Strategy Strategy::dirac(double q0)
{
  if (std::isnan(q0))
  {
    throw InvalidArgument("q0: must not be NaN");
  }
  return Strategy{Dirac{q0}};
}

Strategy Strategy::mixture(std::vector<double> weights, std::vector<Strategy> components)
{
  if (weights.empty())
  {
    throw InvalidArgument("weights: mixture needs at least one component");
  }
  if (weights.size() != components.size())
  {
    throw InvalidArgument("weights: length differs from components");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i)
  {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0)
    {
      throw InvalidArgument("weights[" + std::to_string(i) + "]: must be finite and >= 0");
    }
    sum += weights[i];
  }
  if (std::fabs(sum - 1.0) > 1e-12)
  {
    throw InvalidArgument("weights: must sum to 1 (got " + std::to_string(sum) + ")");
  }
  return Strategy{Mixture{std::move(weights), std::move(components)}};
}

Strategy Strategy::tabulated(std::vector<double> grid, std::vector<double> values)
{
  return Strategy{Tabulated{std::move(grid), std::move(values)}};
}

bool Strategy::has_atoms() const noexcept
{
  return std::visit(Overloaded{
                        [](Gaussian const &) { return false; },
                        [](Dirac const &) { return true; },
                        [](Tabulated const &) { return false; },
                        [](Mixture const &m) {
                          return std::any_of(m.components.begin(), m.components.end(),
                                             [](Strategy const &c) { return c.has_atoms(); });
                        },
                    },
                    v_);
}

// -- Pointwise functions ------------------------------------------------------

double density(Strategy const &s, double q)
{
  return std::visit(Overloaded{
                        [q](Gaussian const &g) { return normal::pdf((q - g.mu) / g.sigma) / g.sigma; },
                        [](Dirac const &) -> double { throw NoPointwiseDensity{}; },
                        [q](Tabulated const &t) { return t.density(q); },
                        [q](Mixture const &m) {
                          double value = 0.0;
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            double const d = density(m.components[i], q);
                            value += m.weights[i] * d;
                          }
                          return value;
                        },
                    },
                    s.variant());
}

double log_density(Strategy const &s, double q)
{
  return std::visit(Overloaded{
                        [q](Gaussian const &g) {
                          return normal::log_pdf((q - g.mu) / g.sigma) - std::log(g.sigma);
                        },
                        [](Dirac const &) -> double { throw NoPointwiseDensity{}; },
                        [q](Tabulated const &t) { return std::log(t.density(q)); },
                        [q](Mixture const &m) {
                          std::vector<double> terms;
                          terms.reserve(m.weights.size());
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            double const ld = log_density(m.components[i], q);
                            if (m.weights[i] > 0.0)
                            {
                              terms.push_back(std::log(m.weights[i]) + ld);
                            }
                          }
                          return log_sum_exp(terms);
                        },
                    },
                    s.variant());
}

double survival(Strategy const &s, double q)
{
  return std::visit(Overloaded{
                        [q](Gaussian const &g) { return normal::survival((q - g.mu) / g.sigma); },
                        [q](Dirac const &d) { return q <= d.q0 ? 1.0 : 0.0; },
                        [q](Tabulated const &t) { return t.survival(q); },
                        [q](Mixture const &m) {
                          double value = 0.0;
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            value += m.weights[i] * survival(m.components[i], q);
                          }
                          return std::min(value, 1.0);
                        },
                    },
                    s.variant());
}

double log_survival(Strategy const &s, double q)
{
  return std::visit(Overloaded{
                        [q](Gaussian const &g) {
                          return normal::log_survival((q - g.mu) / g.sigma);
                        },
                        [q](Dirac const &d) { return q <= d.q0 ? 0.0 : -kInf; },
                        [q](Tabulated const &t) {
                          // Near the left edge S is 1 - (small head mass).
                          if (q <= t.grid().front())
                          {
                            return 0.0;
                          }
                          return std::log(t.survival(q));
                        },
                        [q](Mixture const &m) {
                          std::vector<double> terms;
                          terms.reserve(m.weights.size());
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            if (m.weights[i] > 0.0)
                            {
                              terms.push_back(std::log(m.weights[i]) +
                                              log_survival(m.components[i], q));
                            }
                          }
                          return std::min(log_sum_exp(terms), 0.0);
                        },
                    },
                    s.variant());
}

double atom_mass(Strategy const &s, double x)
{
  return std::visit(Overloaded{
                        [](Gaussian const &) { return 0.0; },
                        [x](Dirac const &d) { return x == d.q0 ? 1.0 : 0.0; },
                        [](Tabulated const &) { return 0.0; },
                        [x](Mixture const &m) {
                          double value = 0.0;
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            value += m.weights[i] * atom_mass(m.components[i], x);
                          }
                          return value;
                        },
                    },
                    s.variant());
}

double cdf(Strategy const &s, double x)
{
  if (auto const *g = s.get_if<Gaussian>())
  {
    return normal::cdf((x - g->mu) / g->sigma);
  }
  return std::clamp(1.0 - survival(s, x) + atom_mass(s, x), 0.0, 1.0);
}

std::vector<double> atoms(Strategy const &s)
{
  std::vector<double> out;
  if (auto const *d = s.get_if<Dirac>())
  {
    out.push_back(d->q0);
  }
  else if (auto const *m = s.get_if<Mixture>())
  {
    for (std::size_t i = 0; i < m->components.size(); ++i)
    {
      if (m->weights[i] > 0.0)
      {
        auto const inner = atoms(m->components[i]);
        out.insert(out.end(), inner.begin(), inner.end());
      }
    }
  }
  return out;
}

double sample(Strategy const &s, Rng &rng)
{
  return std::visit(Overloaded{
                        [&rng](Gaussian const &g) {
                          return g.mu + g.sigma * normal::quantile(rng.uniform());
                        },
                        [](Dirac const &d) { return d.q0; },
                        [&rng](Tabulated const &t) { return t.quantile(rng.uniform()); },
                        [&rng](Mixture const &m) {
                          double const u    = rng.uniform();
                          double       acc  = 0.0;
                          std::size_t  pick = m.weights.size() - 1;
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            acc += m.weights[i];
                            if (u < acc)
                            {
                              pick = i;
                              break;
                            }
                          }
                          // Rounding can leave the tail pointing at a zero weight.
                          while (m.weights[pick] == 0.0 && pick > 0)
                          {
                            --pick;
                          }
                          return sample(m.components[pick], rng);
                        },
                    },
                    s.variant());
}

double mean(Strategy const &s)
{
  return std::visit(Overloaded{
                        [](Gaussian const &g) { return g.mu; },
                        [](Dirac const &d) { return d.q0; },
                        [](Tabulated const &t) { return t.mean(); },
                        [](Mixture const &m) {
                          double value = 0.0;
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            if (m.weights[i] > 0.0)
                            {
                              value += m.weights[i] * mean(m.components[i]);
                            }
                          }
                          return value;
                        },
                    },
                    s.variant());
}

double variance(Strategy const &s)
{
  return std::visit(Overloaded{
                        [](Gaussian const &g) { return g.sigma * g.sigma; },
                        [](Dirac const &) { return 0.0; },
                        [](Tabulated const &t) {
                          double const m = t.mean();
                          return std::max(0.0, t.second_moment() - m * m);
                        },
                        [&s](Mixture const &m) {
                          double const overall = mean(s);
                          double       value   = 0.0;
                          for (std::size_t i = 0; i < m.weights.size(); ++i)
                          {
                            if (m.weights[i] > 0.0)
                            {
                              double const d = mean(m.components[i]) - overall;
                              value += m.weights[i] * (variance(m.components[i]) + d * d);
                            }
                          }
                          return value;
                        },
                    },
                    s.variant());
}

Support support(Strategy const &s, std::size_t n_bidders)
{
  double const spread = std::sqrt(2.0 * std::log(static_cast<double>(std::max<std::size_t>(n_bidders, 1))));
  return std::visit(Overloaded{
                        [spread](Gaussian const &g) {
                          return Support{g.mu - (8.0 + spread) * g.sigma, g.mu + 8.0 * g.sigma, {}};
                        },
                        [](Dirac const &d) { return Support{d.q0, d.q0, {}}; },
                        [](Tabulated const &t) {
                          return Support{t.grid().front(), t.grid().back(), t.grid()};
                        },
                        [n_bidders](Mixture const &m) {
                          Support out{kInf, -kInf, {}};
                          for (std::size_t i = 0; i < m.components.size(); ++i)
                          {
                            if (m.weights[i] == 0.0 || m.components[i].get_if<Dirac>() != nullptr)
                            {
                              continue;
                            }
                            auto const inner = support(m.components[i], n_bidders);
                            out.lo           = std::min(out.lo, inner.lo);
                            out.hi           = std::max(out.hi, inner.hi);
                            out.breakpoints.insert(out.breakpoints.end(), inner.breakpoints.begin(),
                                                   inner.breakpoints.end());
                          }
                          if (out.lo > out.hi)
                          {
                            out.lo = out.hi = 0.0;
                          }
                          std::sort(out.breakpoints.begin(), out.breakpoints.end());
                          return out;
                        },
                    },
                    s.variant());
}

double first_order_statistic_density(Strategy const &s, std::size_t n_bidders, double q)
{
  if (n_bidders == 0)
  {
    throw DomainError("first_order_statistic_density: N must be >= 1");
  }
  if (n_bidders == 1)
  {
    return density(s, q);
  }
  double const ld = log_density(s, q);
  double const ls = log_survival(s, q);
  if (ld == -kInf || ls == -kInf)
  {
    return 0.0;
  }
  auto const n = static_cast<double>(n_bidders);
  return n * std::exp(ld + (n - 1.0) * ls);
}

double order_stat_mean(Strategy const &s, std::size_t n_bidders)
{
  if (n_bidders == 0)
  {
    throw DomainError("order_stat_mean: N must be >= 1");
  }
  if (s.has_atoms())
  {
    throw NoPointwiseDensity{};
  }
  auto const window = support(s, n_bidders);
  auto const result = quadrature::integrate(
      [&](double q) { return q * first_order_statistic_density(s, n_bidders, q); }, window.lo,
      window.hi, {.abs_tol = 1e-9}, window.breakpoints);
  return result.value;
}

}  // namespace qauction
