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

// Standard normal distribution helpers used throughout the library.
//
// Everything here works on the standardized variable z. Tail quantities are
// evaluated so that relative accuracy is kept far into the tails: the upper
// survival is exact to rounding until it underflows (|z| ~ 38), and the log
// survival stays accurate for any finite z.

namespace qauction::normal {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;

double pdf(double z);
double log_pdf(double z);

/// P(Z > z).
double survival(double z);

/// P(Z <= z).
double cdf(double z);

/// ln P(Z > z). Uses a continued fraction for the Mills ratio beyond z = 8
/// and log1p of the lower tail for z < 0.
double log_survival(double z);

/// ln P(Z <= z).
double log_cdf(double z);

/// Inverse of cdf on (0, 1).
double quantile(double p);

/// Inverse of survival on (0, 1): returns z with P(Z > z) = tail. Accurate
/// for tiny tail probabilities that cannot be represented as 1 - p.
double upper_quantile(double tail);

}  // namespace qauction::normal
