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

#include "qauction/rng.hpp"
#include "qauction/strategy.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qauction {

/**
 * Non-negative joint density over (p, q) tabulated on a rectangular grid and
 * interpolated bilinearly. values[i][j] is the density at (p_grid[i], q_grid[j]).
 *
 * An axis with a single node is a point mass on that axis; a 1x1 table is a
 * point mass in the plane. The table is renormalized at construction.
 *
 * With bilinear interpolation the p-marginal is piecewise linear on p_grid and
 * the conditional density of q given p is piecewise linear on q_grid, so
 * sampling by marginal-then-conditional inversion is exact.
 */
class JointStrategy2D
{
public:
  JointStrategy2D(std::vector<double> p_grid, std::vector<double> q_grid,
                  std::vector<std::vector<double>> values);

  static JointStrategy2D point(double p0, double q0);

  /// Outer product of two 1-D tabulated densities on the given grids.
  static JointStrategy2D separable(std::vector<double> p_grid, std::vector<double> p_values,
                                   std::vector<double> q_grid, std::vector<double> q_values);

  std::vector<double> const &p_grid() const noexcept
  {
    return p_grid_;
  }
  std::vector<double> const &q_grid() const noexcept
  {
    return q_grid_;
  }
  std::vector<std::vector<double>> const &values() const noexcept
  {
    return values_;
  }

  /// Bilinear density; zero outside the grid. Only meaningful when both
  /// axes have at least two nodes.
  double density(double p, double q) const;

  /// Draws (p, q).
  std::pair<double, double> sample(Rng &rng) const;

  /// Marginal distribution of p (Dirac when the p axis has one node).
  Strategy p_marginal() const;
  /// Marginal distribution of q.
  Strategy q_marginal() const;

  /// Conditional CDF of p along the slice q = q_fixed:
  /// int_{-inf}^{p} eta(r, q_fixed) dr, normalized by the slice mass.
  double demand_curve(double q_fixed, double p) const;

  /// Conditional CDF of q along the slice p = p_fixed:
  /// int_{-inf}^{q} eta(p_fixed, r) dr, normalized by the slice mass.
  double supply_curve(double p_fixed, double q) const;

private:
  // Row of the table interpolated at p (a density profile over q_grid).
  std::vector<double> row_at(double p) const;
  // Column of the table interpolated at q (a profile over p_grid).
  std::vector<double> column_at(double q) const;

  std::vector<double>              p_grid_;
  std::vector<double>              q_grid_;
  std::vector<std::vector<double>> values_;
  std::vector<double>              p_marginal_;  // q-integral of each row
  std::optional<Tabulated>         p_dist_;      // empty when the p axis is a point
  std::vector<std::optional<Tabulated>> row_dists_;  // empty for zero-mass rows or a point q axis
};

}  // namespace qauction
