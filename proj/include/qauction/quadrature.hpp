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

#include "qauction/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace qauction::quadrature {

struct Options
{
  double abs_tol       = 1e-10;
  int    max_intervals = 4000;
};

struct Result
{
  double value     = 0.0;
  double error     = 0.0;
  int    intervals = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525048286, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for kNodes[1], kNodes[3], ..., kNodes[9].
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment
{
  double a;
  double b;
  double value;
  double error;
};

template <typename F>
Segment gauss_kronrod_21(F &f, double a, double b)
{
  double const center      = 0.5 * (a + b);
  double const half_length = 0.5 * (b - a);

  std::array<double, 21> fv{};
  fv[10] = f(center);
  for (std::size_t j = 0; j < 10; ++j)
  {
    double const dx = half_length * kNodes[j];
    fv[j]           = f(center - dx);
    fv[20 - j]      = f(center + dx);
  }

  double kronrod = kKronrodWeights[10] * fv[10];
  double gauss   = 0.0;
  double abs_sum = kKronrodWeights[10] * std::fabs(fv[10]);
  for (std::size_t j = 0; j < 10; ++j)
  {
    double const pair = fv[j] + fv[20 - j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::fabs(fv[j]) + std::fabs(fv[20 - j]));
    if (j % 2 == 1)
    {
      gauss += kGaussWeights[j / 2] * pair;
    }
  }

  double const mean = 0.5 * kronrod;
  double       asc  = kKronrodWeights[10] * std::fabs(fv[10] - mean);
  for (std::size_t j = 0; j < 10; ++j)
  {
    asc += kKronrodWeights[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[20 - j] - mean));
  }

  double const value = kronrod * half_length;
  asc *= std::fabs(half_length);
  abs_sum *= std::fabs(half_length);

  double error = std::fabs((kronrod - gauss) * half_length);
  if (asc != 0.0 && error != 0.0)
  {
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  }
  double const roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * std::numeric_limits<double>::epsilon()))
  {
    error = std::max(roundoff, error);
  }
  return {a, b, value, error};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b] to an
/// absolute error target. Interior breakpoints (kinks, discontinuities) seed
/// the initial partition. Throws NumericalFailure when the interval budget
/// runs out before the target is met.
template <typename F>
Result integrate(F &&f, double a, double b, Options const &options = {},
                 std::span<double const> breakpoints = {})
{
  if (!(b > a))
  {
    return {};
  }

  std::vector<double> edges{a};
  for (double x : breakpoints)
  {
    if (x > a && x < b)
    {
      edges.push_back(x);
    }
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto const by_error = [](detail::Segment const &l, detail::Segment const &r) {
    return l.error < r.error;
  };

  std::vector<detail::Segment> heap;
  heap.reserve(static_cast<std::size_t>(options.max_intervals) + 1);
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
  {
    heap.push_back(detail::gauss_kronrod_21(f, edges[i], edges[i + 1]));
    total_error += heap.back().error;
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  while (total_error > options.abs_tol)
  {
    std::pop_heap(heap.begin(), heap.end(), by_error);
    detail::Segment const worst = heap.back();
    heap.pop_back();

    double const mid = 0.5 * (worst.a + worst.b);
    if (static_cast<int>(heap.size()) + 2 > options.max_intervals || !(mid > worst.a) ||
        !(mid < worst.b))
    {
      heap.push_back(worst);
      throw NumericalFailure("adaptive quadrature did not converge", total_error);
    }

    auto const left  = detail::gauss_kronrod_21(f, worst.a, mid);
    auto const right = detail::gauss_kronrod_21(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;

    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  // Sum in left-to-right order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(),
            [](detail::Segment const &l, detail::Segment const &r) { return l.a < r.a; });
  Result result;
  for (auto const &s : heap)
  {
    result.value += s.value;
    result.error += s.error;
  }
  result.intervals = static_cast<int>(heap.size());
  return result;
}

}  // namespace qauction::quadrature
