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

#include <cstddef>
#include <variant>
#include <vector>

namespace qauction {

class Strategy;

struct Gaussian
{
  double mu    = 0.0;
  double sigma = 1.0;
};

/// Point mass at q0. q0 may be +/-infinity (used internally for a seller
/// who accepts every bid).
struct Dirac
{
  double q0 = 0.0;
};

struct Mixture
{
  std::vector<double>   weights;
  std::vector<Strategy> components;
};

/**
 * Piecewise-linear density on a strictly increasing grid, zero outside it.
 * Values are renormalized at construction so that the trapezoid integral is
 * exactly one; survival and quantiles are then exact for that density.
 */
class Tabulated
{
public:
  Tabulated(std::vector<double> grid, std::vector<double> values);

  std::vector<double> const &grid() const noexcept
  {
    return grid_;
  }
  std::vector<double> const &values() const noexcept
  {
    return values_;
  }

  double density(double q) const;
  double survival(double q) const;
  /// Inverse CDF: the q with P(X <= q) = u, u in (0, 1).
  double quantile(double u) const;
  double mean() const;
  double second_moment() const;

private:
  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> tail_;  // tail_[i] = mass on [grid_[i], grid_.back()]
  std::vector<double> head_;  // head_[i] = mass on [grid_.front(), grid_[i]]
};

/// Probability density over a log-price. Construct through the named
/// factories; they validate parameters and throw InvalidArgument.
class Strategy
{
public:
  using Variant = std::variant<Gaussian, Dirac, Mixture, Tabulated>;

  static Strategy gaussian(double mu, double sigma);
  static Strategy dirac(double q0);
  static Strategy mixture(std::vector<double> weights, std::vector<Strategy> components);
  static Strategy tabulated(std::vector<double> grid, std::vector<double> values);

  Variant const &variant() const noexcept
  {
    return v_;
  }

  template <typename T>
  T const *get_if() const noexcept
  {
    return std::get_if<T>(&v_);
  }

  bool is_gaussian() const noexcept
  {
    return std::holds_alternative<Gaussian>(v_);
  }

  /// True when the strategy (or any mixture component) has a point mass.
  bool has_atoms() const noexcept;

private:
  explicit Strategy(Variant v)
    : v_{std::move(v)}
  {}

  Variant v_;
};

/// Integration window used by all quadrature over a strategy.
struct Support
{
  double              lo = 0.0;
  double              hi = 0.0;
  std::vector<double> breakpoints;
};

double density(Strategy const &s, double q);
double log_density(Strategy const &s, double q);

/// S(q) = P(X >= q). For atoms the boundary is inclusive: S(q0) = 1 for Dirac(q0).
double survival(Strategy const &s, double q);

/// ln S(q), accurate where S(q) itself would round to 1 or underflow.
/// Returns -infinity when S(q) = 0.
double log_survival(Strategy const &s, double q);

/// P(X <= x), boundary inclusive.
double cdf(Strategy const &s, double x);

/// P(X = x): nonzero only at atoms.
double atom_mass(Strategy const &s, double x);

/// Locations of every atom (Dirac components), in traversal order.
std::vector<double> atoms(Strategy const &s);

double sample(Strategy const &s, Rng &rng);

double mean(Strategy const &s);
double variance(Strategy const &s);

/// Window for integrands containing S(q)^(N-1). For Gaussians the left edge
/// widens with sqrt(2 ln N) because the minimum of N draws moves left.
Support support(Strategy const &s, std::size_t n_bidders);

/// Density of the minimum of n_bidders iid draws: N eta(q) S(q)^(N-1).
double first_order_statistic_density(Strategy const &s, std::size_t n_bidders, double q);

/// E(min of n_bidders iid draws), adaptive quadrature to 1e-9 absolute.
double order_stat_mean(Strategy const &s, std::size_t n_bidders);

}  // namespace qauction
