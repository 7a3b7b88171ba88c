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

// Report generation behind the `qauction` command-line tool. Each command
// returns a Table (plot-ready, fixed column order) or a JSON document; the
// tool renders it and writes the run manifest next to it.

#include "qauction/auction_measure.hpp"
#include "qauction/json_io.hpp"
#include "qauction/montecarlo.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qauction::cli {

inline constexpr char const *kToolVersion = "0.1.0";

enum ExitCode : int
{
  kOk            = 0,
  kUsage         = 1,
  kInputError    = 2,
  kNumericalFail = 3,
  kIoError       = 4,
};

struct Table
{
  std::vector<std::string>              header;
  std::vector<std::vector<std::string>> rows;
};

/// Fixed formatting for every numeric cell: 10 significant digits.
std::string format_number(double x);

std::string render_csv(Table const &t);
json_io::Json render_json(Table const &t);

struct RunManifest
{
  std::string                  command;
  json_io::Json                parameters = json_io::Json::object();
  std::optional<std::uint64_t> seed;
  std::string                  output_path = "-";
  std::string                  tool_version = kToolVersion;
};

json_io::Json to_json(RunManifest const &m);

/// N, max_rho, rho_inf, ratio for N = 1..n_max (ratio blank for N = 1).
Table table1(std::size_t n_max, double sigma, unsigned threads = 1);

/// (p', rho_N(p')) on `steps` evenly spaced points of [p_min, p_max].
/// With `prices`, the first column is the withdrawal price e^{p'}.
Table rho_curve(std::size_t n_bidders, double p_min, double p_max, std::size_t steps, double sigma,
                bool prices = false);

/// N, max_rho, asymptotic_max_rho, log_fit and their differences. max_rho
/// is computed by quadrature only for N <= quadrature_cutoff; above it the
/// max_rho cell and the differences involving it hold "NA".
Table asym(std::vector<std::size_t> const &ns, double sigma, std::size_t quadrature_cutoff,
           unsigned threads = 1);

/// q' followed by one rho_bidder column per N. With `prices`, the first
/// column is the bid price e^{-q'}.
Table bidder(std::vector<std::size_t> const &ns, double q_min, double q_max, std::size_t steps,
             WithdrawalPrice p_prime, double sigma, bool prices = false);

/// N, exact sup distance to Gumbel, empirical KS distance.
Table gumbel(std::vector<std::size_t> const &ns, SimulationOptions const &options);

/// Simulates a parsed configuration and returns the report as JSON.
json_io::Json simulate(json_io::AnyConfig const &cfg, SimulationOptions const &options);

/// Parses "-inf" (any case, also "-infinity") or a finite number.
WithdrawalPrice parse_withdrawal_price(std::string const &text);

}  // namespace qauction::cli
