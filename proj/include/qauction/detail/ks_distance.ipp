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

#include <algorithm>
#include <vector>

namespace qauction {

template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf &&cdf)
{
  if (sample.empty())
  {
    return 0.0;
  }
  std::sort(sample.begin(), sample.end());
  auto const n       = static_cast<double>(sample.size());
  double     largest = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i)
  {
    double const f  = cdf(sample[i]);
    double const lo = static_cast<double>(i) / n;
    double const hi = static_cast<double>(i + 1) / n;
    largest         = std::max({largest, hi - f, f - lo});
  }
  return largest;
}

}  // namespace qauction
