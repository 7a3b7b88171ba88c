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

// Large-N behaviour of the auction with standard normal bidders.
//
// The winning bid's log-price is X = -q' = max of N standard normals. With
// the norming constants below, a_N X + b_N converges in distribution to the
// Gumbel law exp(-exp(-x)).

#include <cstddef>
#include <span>

namespace qauction {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

struct NormingConstants
{
  double      a_n = 0.0;  // sqrt(2 ln N)
  double      b_n = 0.0;  // (ln 4 pi + ln ln N)/2 - 2 ln N
  std::size_t n   = 0;
};

/// Throws DomainError for N < 2.
NormingConstants norming_constants(std::size_t n_bidders);

double gumbel_cdf(double x);

/// sqrt(ln N / 2) + (2 gamma - ln 4 pi - ln ln N) / (4 sqrt(2 ln N)).
/// Throws DomainError for N < 3.
double asymptotic_max_rho(std::size_t n_bidders);

/// 0.21 ln N + 0.3 (natural logarithm).
double log_fit(std::size_t n_bidders);

/// Exact CDF of a_N X + b_N for standard normal bidders, from
/// P(q' > q) = S(q)^N evaluated in the log domain.
double rescaled_winner_cdf(std::size_t n_bidders, double x);

/// sup over the given points of |rescaled_winner_cdf - gumbel_cdf|.
double gumbel_sup_distance(std::size_t n_bidders, std::span<double const> xs);

/// sup distance over 2001 equally spaced points on [-5, 10].
double gumbel_sup_distance(std::size_t n_bidders);

}  // namespace qauction
