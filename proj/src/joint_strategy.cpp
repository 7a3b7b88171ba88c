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

#include "qauction/joint_strategy.hpp"

#include "qauction/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qauction {
namespace {

void check_axis(std::vector<double> const &grid, char const *name)
{
  if (grid.empty())
  {
    throw InvalidArgument(std::string{name} + ": must not be empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    if (!std::isfinite(grid[i]))
    {
      throw InvalidArgument(std::string{name} + "[" + std::to_string(i) + "]: not finite");
    }
    if (i > 0 && !(grid[i] > grid[i - 1]))
    {
      throw InvalidArgument(std::string{name} + "[" + std::to_string(i) +
                            "]: grid must be strictly increasing");
    }
  }
}

// Trapezoid weights; a single node carries unit weight (point mass).
std::vector<double> trapezoid_weights(std::vector<double> const &grid)
{
  std::vector<double> w(grid.size(), 0.0);
  if (grid.size() == 1)
  {
    w[0] = 1.0;
    return w;
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
  {
    double const h = 0.5 * (grid[i + 1] - grid[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

// Segment index and fraction of x on grid (x clamped inside).
std::pair<std::size_t, double> locate(std::vector<double> const &grid, double x)
{
  if (x <= grid.front())
  {
    return {0, 0.0};
  }
  if (x >= grid.back())
  {
    return {grid.size() - 2, 1.0};
  }
  auto const i = static_cast<std::size_t>(std::upper_bound(grid.begin(), grid.end(), x) -
                                          grid.begin()) - 1;
  return {i, (x - grid[i]) / (grid[i + 1] - grid[i])};
}

double profile_cdf(std::vector<double> const &grid, std::vector<double> const &profile, double x)
{
  if (grid.size() == 1)
  {
    return x >= grid.front() ? 1.0 : 0.0;
  }
  if (std::all_of(profile.begin(), profile.end(), [](double v) { return v == 0.0; }))
  {
    return 0.0;
  }
  Tabulated const slice{grid, profile};
  return 1.0 - slice.survival(x);
}

}  // namespace

JointStrategy2D::JointStrategy2D(std::vector<double> p_grid, std::vector<double> q_grid,
                                 std::vector<std::vector<double>> values)
  : p_grid_{std::move(p_grid)}
  , q_grid_{std::move(q_grid)}
  , values_{std::move(values)}
{
  check_axis(p_grid_, "p_grid");
  check_axis(q_grid_, "q_grid");
  if (values_.size() != p_grid_.size())
  {
    throw InvalidArgument("values: expected " + std::to_string(p_grid_.size()) + " rows");
  }
  for (std::size_t i = 0; i < values_.size(); ++i)
  {
    if (values_[i].size() != q_grid_.size())
    {
      throw InvalidArgument("values[" + std::to_string(i) + "]: expected " +
                            std::to_string(q_grid_.size()) + " columns");
    }
    for (std::size_t j = 0; j < values_[i].size(); ++j)
    {
      if (!std::isfinite(values_[i][j]) || values_[i][j] < 0.0)
      {
        throw InvalidArgument("values[" + std::to_string(i) + "][" + std::to_string(j) +
                              "]: must be finite and >= 0 (signed densities are not supported)");
      }
    }
  }

  auto const wp = trapezoid_weights(p_grid_);
  auto const wq = trapezoid_weights(q_grid_);

  p_marginal_.assign(p_grid_.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < p_grid_.size(); ++i)
  {
    for (std::size_t j = 0; j < q_grid_.size(); ++j)
    {
      p_marginal_[i] += wq[j] * values_[i][j];
    }
    total += wp[i] * p_marginal_[i];
  }
  if (!(total > 0.0))
  {
    throw InvalidArgument("values: density has zero total mass");
  }
  for (auto &row : values_)
  {
    for (double &v : row)
    {
      v /= total;
    }
  }
  for (double &m : p_marginal_)
  {
    m /= total;
  }

  if (p_grid_.size() > 1)
  {
    p_dist_.emplace(p_grid_, p_marginal_);
  }
  row_dists_.resize(p_grid_.size());
  if (q_grid_.size() > 1)
  {
    for (std::size_t i = 0; i < p_grid_.size(); ++i)
    {
      if (p_marginal_[i] > 0.0)
      {
        row_dists_[i].emplace(q_grid_, values_[i]);
      }
    }
  }
}

JointStrategy2D JointStrategy2D::point(double p0, double q0)
{
  return JointStrategy2D{{p0}, {q0}, {{1.0}}};
}

JointStrategy2D JointStrategy2D::separable(std::vector<double> p_grid, std::vector<double> p_values,
                                           std::vector<double> q_grid, std::vector<double> q_values)
{
  if (p_values.size() != p_grid.size() || q_values.size() != q_grid.size())
  {
    throw InvalidArgument("values: length differs from grid");
  }
  std::vector<std::vector<double>> table(p_grid.size(), std::vector<double>(q_grid.size()));
  for (std::size_t i = 0; i < p_grid.size(); ++i)
  {
    for (std::size_t j = 0; j < q_grid.size(); ++j)
    {
      table[i][j] = p_values[i] * q_values[j];
    }
  }
  return JointStrategy2D{std::move(p_grid), std::move(q_grid), std::move(table)};
}

std::vector<double> JointStrategy2D::row_at(double p) const
{
  if (p_grid_.size() == 1)
  {
    return values_.front();
  }
  auto const [i, t] = locate(p_grid_, p);
  std::vector<double> row(q_grid_.size());
  for (std::size_t j = 0; j < q_grid_.size(); ++j)
  {
    row[j] = (1.0 - t) * values_[i][j] + t * values_[i + 1][j];
  }
  return row;
}

std::vector<double> JointStrategy2D::column_at(double q) const
{
  std::vector<double> column(p_grid_.size());
  if (q_grid_.size() == 1)
  {
    for (std::size_t i = 0; i < p_grid_.size(); ++i)
    {
      column[i] = values_[i].front();
    }
    return column;
  }
  auto const [j, t] = locate(q_grid_, q);
  for (std::size_t i = 0; i < p_grid_.size(); ++i)
  {
    column[i] = (1.0 - t) * values_[i][j] + t * values_[i][j + 1];
  }
  return column;
}

double JointStrategy2D::density(double p, double q) const
{
  if (p_grid_.size() < 2 || q_grid_.size() < 2)
  {
    throw NoPointwiseDensity{};
  }
  if (p < p_grid_.front() || p > p_grid_.back() || q < q_grid_.front() || q > q_grid_.back())
  {
    return 0.0;
  }
  auto const [i, s] = locate(p_grid_, p);
  auto const [j, t] = locate(q_grid_, q);
  return (1.0 - s) * ((1.0 - t) * values_[i][j] + t * values_[i][j + 1]) +
         s * ((1.0 - t) * values_[i + 1][j] + t * values_[i + 1][j + 1]);
}

std::pair<double, double> JointStrategy2D::sample(Rng &rng) const
{
  double      p   = p_grid_.front();
  std::size_t row = 0;
  if (p_dist_)
  {
    p = p_dist_->quantile(rng.uniform());
    // q | p is the bilinear blend of the two bracketing rows, i.e. a
    // two-component mixture weighted by (1 - t) m_i and t m_{i+1}.
    auto const [i, t] = locate(p_grid_, p);
    double const lower = (1.0 - t) * p_marginal_[i];
    double const upper = t * p_marginal_[i + 1];
    row                = (rng.uniform() * (lower + upper) < lower) ? i : i + 1;
  }
  else
  {
    // Keep the stream layout identical whether or not p is a point.
    rng.uniform();
    rng.uniform();
  }

  double q = q_grid_.front();
  if (row_dists_[row])
  {
    q = row_dists_[row]->quantile(rng.uniform());
  }
  else
  {
    rng.uniform();
  }
  return {p, q};
}

Strategy JointStrategy2D::p_marginal() const
{
  if (p_grid_.size() == 1)
  {
    return Strategy::dirac(p_grid_.front());
  }
  return Strategy::tabulated(p_grid_, p_marginal_);
}

Strategy JointStrategy2D::q_marginal() const
{
  if (q_grid_.size() == 1)
  {
    return Strategy::dirac(q_grid_.front());
  }
  auto const          wp = trapezoid_weights(p_grid_);
  std::vector<double> marginal(q_grid_.size(), 0.0);
  for (std::size_t i = 0; i < p_grid_.size(); ++i)
  {
    for (std::size_t j = 0; j < q_grid_.size(); ++j)
    {
      marginal[j] += wp[i] * values_[i][j];
    }
  }
  return Strategy::tabulated(q_grid_, marginal);
}

double JointStrategy2D::demand_curve(double q_fixed, double p) const
{
  return profile_cdf(p_grid_, column_at(q_fixed), p);
}

double JointStrategy2D::supply_curve(double p_fixed, double q) const
{
  return profile_cdf(q_grid_, row_at(p_fixed), q);
}

}  // namespace qauction
