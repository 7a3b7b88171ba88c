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

#include "qauction/normal.hpp"

#include <cmath>
#include <limits>

namespace qauction::normal {
namespace {

constexpr double kInvSqrt2   = 0.707106781186547524400844362105;
constexpr double kTailSwitch = 8.0;

// Mills ratio S(z)/pdf(z) for z >= kTailSwitch, from the continued fraction
// R(z) = 1/(z + 1/(z + 2/(z + 3/(z + ...)))) evaluated backwards.
double mills_ratio(double z)
{
  constexpr int kTerms = 80;
  double t = z;
  for (int k = kTerms; k >= 1; --k)
  {
    t = z + static_cast<double>(k) / t;
  }
  return 1.0 / t;
}

// Wichura, AS241 (PPND16). Returns z with cdf(z) = p, for p in (0, 1).
double as241(double p)
{
  double const q = p - 0.5;
  if (std::fabs(q) <= 0.425)
  {
    double const r = 0.180625 - q * q;
    double const num =
        ((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
             6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
           1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
         1.3314166789178437745e+2) * r + 3.3871328727963666080e0;
    double const den =
        ((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
             3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
           5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
         4.2313330701600911252e+1) * r + 1.0;
    return q * num / den;
  }

  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value{};
  if (r <= 5.0)
  {
    r -= 1.6;
    double const num =
        ((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
             2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
           3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
         4.63033784615654529590e0) * r + 1.42343711074968357734e0;
    double const den =
        ((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
             1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
           6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
         2.05319162663775882187e0) * r + 1.0;
    value = num / den;
  }
  else
  {
    r -= 5.0;
    double const num =
        ((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
             1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
           2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
         5.46378491116411436990e0) * r + 6.65790464350110377720e0;
    double const den =
        ((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
             1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
           1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
         5.99832206555887937690e-1) * r + 1.0;
    value = num / den;
  }
  return (q < 0.0) ? -value : value;
}

}  // namespace

double pdf(double z)
{
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double log_pdf(double z)
{
  return -0.5 * z * z - kLogSqrt2Pi;
}

double survival(double z)
{
  return 0.5 * std::erfc(z * kInvSqrt2);
}

double cdf(double z)
{
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

double log_survival(double z)
{
  if (std::isnan(z))
  {
    return z;
  }
  if (z == std::numeric_limits<double>::infinity())
  {
    return -std::numeric_limits<double>::infinity();
  }
  if (z > kTailSwitch)
  {
    return log_pdf(z) + std::log(mills_ratio(z));
  }
  if (z >= 0.0)
  {
    return std::log(survival(z));
  }
  return std::log1p(-cdf(z));
}

double log_cdf(double z)
{
  return log_survival(-z);
}

double quantile(double p)
{
  if (!(p > 0.0))
  {
    return (p == 0.0) ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::quiet_NaN();
  }
  if (!(p < 1.0))
  {
    return (p == 1.0) ? std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::quiet_NaN();
  }
  if (p > 0.5)
  {
    return upper_quantile(1.0 - p);
  }
  double x = as241(p);
  // One Halley step against the erfc-based cdf.
  double const density = pdf(x);
  if (density > 0.0 && std::isnormal(p))
  {
    double const u = (cdf(x) - p) / density;
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double upper_quantile(double tail)
{
  if (!(tail > 0.0))
  {
    return (tail == 0.0) ? std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::quiet_NaN();
  }
  if (!(tail < 1.0))
  {
    return (tail == 1.0) ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::quiet_NaN();
  }
  if (tail > 0.5)
  {
    return -quantile(1.0 - tail);
  }
  double x = -as241(tail);
  double const density = pdf(x);
  if (density > 0.0 && std::isnormal(tail))
  {
    double const u = (survival(x) - tail) / density;
    x += u / (1.0 - 0.5 * x * u);
  }
  return x;
}

}  // namespace qauction::normal
