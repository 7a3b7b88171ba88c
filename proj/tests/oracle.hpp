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

#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library; the point is to disagree with it
// loudly if either side is wrong.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

inline double normal_survival(double z)
{
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

inline double normal_pdf(double z)
{
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

// 5-point Gauss-Legendre on [a, b]; exact for polynomials of degree <= 9.
template <typename F>
double gauss_legendre5(F const &f, double a, double b)
{
  static constexpr std::array<double, 5> x = {0.0, 0.5384693101056831, -0.5384693101056831,
                                              0.9061798459386640, -0.9061798459386640};
  static constexpr std::array<double, 5> w = {0.5688888888888889, 0.4786286704993665,
                                              0.4786286704993665, 0.2369268850561891,
                                              0.2369268850561891};
  double const c = 0.5 * (a + b);
  double const h = 0.5 * (b - a);
  double       s = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
  {
    s += w[i] * f(c + h * x[i]);
  }
  return s * h;
}

// Composite Simpson on a uniform grid.
template <typename F>
double simpson(F const &f, double a, double b, std::size_t panels)
{
  panels += panels % 2;
  double const h = (b - a) / static_cast<double>(panels);
  double       s = f(a) + f(b);
  for (std::size_t i = 1; i < panels; ++i)
  {
    s += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  }
  return s * h / 3.0;
}

// Piecewise-linear density on a grid, normalized by its exact area.
struct Pwl
{
  std::vector<double> x;
  std::vector<double> y;

  Pwl(std::vector<double> grid, std::vector<double> values) : x(std::move(grid)), y(std::move(values))
  {
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
    {
      area += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
    }
    for (auto &v : y)
    {
      v /= area;
    }
  }

  double operator()(double q) const
  {
    if (q < x.front() || q > x.back())
    {
      return 0.0;
    }
    auto const it = std::upper_bound(x.begin(), x.end(), q);
    if (it == x.end())
    {
      return y.back();
    }
    std::size_t const i = static_cast<std::size_t>(it - x.begin()) - 1;
    double const      t = (q - x[i]) / (x[i + 1] - x[i]);
    return y[i] + t * (y[i + 1] - y[i]);
  }

  // Mass on [lo, hi] by nested cell-wise summation.
  double mass(double lo, double hi) const
  {
    lo = std::max(lo, x.front());
    hi = std::min(hi, x.back());
    if (!(lo < hi))
    {
      return 0.0;
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
    {
      double const a = std::max(lo, x[i]);
      double const b = std::min(hi, x[i + 1]);
      if (a < b)
      {
        total += gauss_legendre5(*this, a, b);
      }
    }
    return total;
  }
};

// A coarse sealed-bid configuration of piecewise-linear strategies. The
// seller density is over p; bidder densities are over q.
struct PwlAuction
{
  Pwl              seller;
  std::vector<Pwl> bidders;

  // Density of "bidder k bids q, every rival bids above q and the seller
  // accepts", with each factor summed cell by cell.
  double density(std::size_t k, double q) const
  {
    double v = bidders[k](q);
    for (std::size_t j = 0; j < bidders.size() && v != 0.0; ++j)
    {
      if (j != k)
      {
        v *= bidders[j].mass(q, bidders[j].x.back());
      }
    }
    return v * seller.mass(seller.x.front(), -q);
  }

  // Probability that bidder k wins and the deal closes.
  double probability(std::size_t k) const
  {
    std::vector<double> cuts = bidders[k].x;
    for (auto const &b : bidders)
    {
      cuts.insert(cuts.end(), b.x.begin(), b.x.end());
    }
    for (double p : seller.x)
    {
      cuts.push_back(-p);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
      if (cuts[i + 1] <= bidders[k].x.front() || cuts[i] >= bidders[k].x.back())
      {
        continue;
      }
      total += gauss_legendre5([&](double q) { return density(k, q); }, cuts[i], cuts[i + 1]);
    }
    return total;
  }
};

}  // namespace oracle
