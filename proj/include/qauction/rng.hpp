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

#include <array>
#include <cstdint>

namespace qauction {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

/**
 * xoshiro256** (Blackman, Vigna 2018) with SplitMix64 seeding.
 *
 * The algorithm and all derived quantities (uniform doubles, bounded
 * integers) are fully specified here, so a given seed yields the same stream
 * on every platform and standard library. std:: distributions are avoided for
 * that reason.
 *
 * Substreams: Rng::substream(seed, k) keys an independent generator from the
 * pair (seed, k). Parallel Monte Carlo gives batch k its own substream, so
 * results do not depend on how batches are scheduled onto threads.
 */
class Rng
{
public:
  explicit Rng(std::uint64_t seed) noexcept
  {
    std::uint64_t sm = seed;
    for (auto &word : state_)
    {
      word = mix64(sm);
      sm += 0x9E3779B97F4A7C15ULL;
    }
  }

  static Rng substream(std::uint64_t seed, std::uint64_t index) noexcept
  {
    return Rng{mix64(seed ^ mix64(index + 1U))};
  }

  std::uint64_t next() noexcept
  {
    std::uint64_t const result = rotl(state_[1] * 5U, 7) * 9U;
    std::uint64_t const t      = state_[1] << 17U;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept
  {
    return (static_cast<double>(next() >> 11U) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n), n > 0, without modulo bias.
  std::uint64_t below(std::uint64_t n) noexcept
  {
    std::uint64_t const threshold = (0 - n) % n;
    for (;;)
    {
      auto const product = static_cast<unsigned __int128>(next()) * n;
      if (static_cast<std::uint64_t>(product) >= threshold)
      {
        return static_cast<std::uint64_t>(product >> 64U);
      }
    }
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
  {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace qauction
