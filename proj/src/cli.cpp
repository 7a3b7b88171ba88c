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

#include "qauction/cli.hpp"

#include "qauction/asymptotics.hpp"
#include "qauction/error.hpp"
#include "qauction/parallel.hpp"
#include "qauction/profit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qauction::cli {
namespace {

constexpr char const *kMissing = "NA";

std::vector<double> linspace(double lo, double hi, std::size_t steps)
{
  std::vector<double> xs(steps);
  for (std::size_t i = 0; i < steps; ++i)
  {
    xs[i] = (i + 1 == steps) ? hi
                             : lo + (hi - lo) * static_cast<double>(i) /
                                        static_cast<double>(steps - 1);
  }
  return xs;
}

void require_sigma(double sigma)
{
  if (!std::isfinite(sigma) || !(sigma > 0.0))
  {
    throw InvalidArgument("sigma: must be finite and > 0");
  }
}

json_io::Json curves_json(JointStrategy2D const &j)
{
  double const lo = std::min(j.p_grid().front(), -j.q_grid().back());
  double const hi = std::max(j.p_grid().back(), -j.q_grid().front());
  double const q_fixed = mean(j.q_marginal());
  double const p_fixed = mean(j.p_marginal());

  json_io::Json axis   = json_io::Json::array();
  json_io::Json demand = json_io::Json::array();
  json_io::Json supply = json_io::Json::array();
  for (double x : linspace(lo, hi, lo < hi ? 21 : 1))
  {
    axis.push_back(x);
    demand.push_back(j.demand_curve(q_fixed, x));
    supply.push_back(j.supply_curve(p_fixed, -x));
  }
  return json_io::Json{{"q_fixed", q_fixed}, {"p_fixed", p_fixed}, {"log_price", axis},
                       {"demand", demand},   {"supply", supply}};
}

}  // namespace

std::string format_number(double x)
{
  if (std::isnan(x))
  {
    return kMissing;
  }
  if (std::isinf(x))
  {
    return x > 0 ? "inf" : "-inf";
  }
  if (x == 0.0)
  {
    return "0";  // folds -0
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

std::string render_csv(Table const &t)
{
  std::ostringstream out;
  auto const line = [&out](std::vector<std::string> const &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (auto const &r : t.rows)
  {
    line(r);
  }
  return out.str();
}

json_io::Json render_json(Table const &t)
{
  json_io::Json rows = json_io::Json::array();
  for (auto const &r : t.rows)
  {
    json_io::Json row = json_io::Json::object();
    for (std::size_t i = 0; i < t.header.size(); ++i)
    {
      auto const &cell = r[i];
      if (cell.empty() || cell == kMissing)
      {
        row[t.header[i]] = nullptr;
      }
      else
      {
        row[t.header[i]] = std::stod(cell);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

json_io::Json to_json(RunManifest const &m)
{
  json_io::Json j{{"command", m.command}, {"parameters", m.parameters}};
  j["seed"]         = m.seed ? json_io::Json(*m.seed) : json_io::Json(nullptr);
  j["output_path"]  = m.output_path;
  j["tool_version"] = m.tool_version;
  return j;
}

Table table1(std::size_t n_max, double sigma, unsigned threads)
{
  if (n_max < 1)
  {
    throw InvalidArgument("n-max: must be >= 1");
  }
  require_sigma(sigma);
  auto const eta = Strategy::gaussian(0.0, sigma);

  Table t{{"N", "max_rho", "rho_inf", "ratio"}, {}};
  t.rows = parallel::map_ordered<std::vector<std::string>>(n_max, threads, [&](std::size_t i) {
    std::size_t const n       = i + 1;
    double const      best    = max_rho(eta, n).rho_star;
    double const      limit   = rho_seller(eta, n, WithdrawalPrice::unbounded()).rho;
    std::string const ratio   = n == 1 ? "" : format_number(best / limit);
    return std::vector<std::string>{std::to_string(n), format_number(best), format_number(limit),
                                    ratio};
  });
  return t;
}

Table rho_curve(std::size_t n_bidders, double p_min, double p_max, std::size_t steps, double sigma,
                bool prices)
{
  if (n_bidders < 1)
  {
    throw InvalidArgument("n: must be >= 1");
  }
  if (steps < 2)
  {
    throw InvalidArgument("steps: must be >= 2");
  }
  if (!(p_min < p_max))
  {
    throw InvalidArgument("p-min: must be < p-max");
  }
  require_sigma(sigma);
  auto const eta = Strategy::gaussian(0.0, sigma);

  Table t{{prices ? "withdrawal_price" : "p_prime", "rho"}, {}};
  for (double p : linspace(p_min, p_max, steps))
  {
    double const rho = rho_seller(eta, n_bidders, WithdrawalPrice::at(p)).rho;
    t.rows.push_back({format_number(prices ? std::exp(p) : p), format_number(rho)});
  }
  return t;
}

Table asym(std::vector<std::size_t> const &ns, double sigma, std::size_t quadrature_cutoff,
           unsigned threads)
{
  require_sigma(sigma);
  for (auto n : ns)
  {
    if (n < 3)
    {
      throw InvalidArgument("n: every N must be >= 3");
    }
  }
  auto const eta = Strategy::gaussian(0.0, sigma);

  Table t{{"N", "max_rho", "asymptotic", "log_fit", "asymptotic_minus_fit", "max_rho_minus_asymptotic",
           "max_rho_minus_fit"},
          {}};
  t.rows = parallel::map_ordered<std::vector<std::string>>(ns.size(), threads, [&](std::size_t i) {
    std::size_t const n    = ns[i];
    double const      a    = sigma * asymptotic_max_rho(n);
    double const      f    = sigma * log_fit(n);
    double const      best = n <= quadrature_cutoff ? max_rho(eta, n).rho_star
                                                    : std::numeric_limits<double>::quiet_NaN();
    return std::vector<std::string>{std::to_string(n),     format_number(best),
                                    format_number(a),      format_number(f),
                                    format_number(a - f),  format_number(best - a),
                                    format_number(best - f)};
  });
  return t;
}

Table bidder(std::vector<std::size_t> const &ns, double q_min, double q_max, std::size_t steps,
             WithdrawalPrice p_prime, double sigma, bool prices)
{
  if (ns.empty())
  {
    throw InvalidArgument("n: need at least one N");
  }
  if (steps < 2)
  {
    throw InvalidArgument("steps: must be >= 2");
  }
  if (!(q_min < q_max))
  {
    throw InvalidArgument("q-min: must be < q-max");
  }
  require_sigma(sigma);
  auto const eta = Strategy::gaussian(0.0, sigma);

  Table t{{prices ? "bid_price" : "q_prime"}, {}};
  for (auto n : ns)
  {
    if (n < 1)
    {
      throw InvalidArgument("n: every N must be >= 1");
    }
    t.header.push_back("rho_N" + std::to_string(n));
  }
  for (double q : linspace(q_min, q_max, steps))
  {
    std::vector<std::string> row{format_number(prices ? std::exp(-q) : q)};
    for (auto n : ns)
    {
      row.push_back(format_number(rho_bidder(eta, n, p_prime, q)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table gumbel(std::vector<std::size_t> const &ns, SimulationOptions const &options)
{
  Table t{{"N", "exact_sup_distance", "empirical_ks_distance"}, {}};
  for (auto n : ns)
  {
    if (n < 2)
    {
      throw InvalidArgument("n: every N must be >= 2");
    }
    t.rows.push_back({std::to_string(n), format_number(gumbel_sup_distance(n)),
                      format_number(empirical_gumbel_distance(n, options))});
  }
  return t;
}

json_io::Json simulate(json_io::AnyConfig const &cfg, SimulationOptions const &options)
{
  if (auto const *plain = std::get_if<AuctionConfig>(&cfg))
  {
    return json_io::to_json(simulate_config(*plain, options));
  }
  auto const &joint  = std::get<json_io::JointConfig>(cfg);
  auto        report = json_io::to_json(simulate_joint(joint.bidders, joint.seller, options));
  json_io::Json curves = json_io::Json::array();
  for (auto const &b : joint.bidders)
  {
    curves.push_back(curves_json(b));
  }
  report["curves"] = curves;
  return report;
}

WithdrawalPrice parse_withdrawal_price(std::string const &text)
{
  std::string lower;
  std::transform(text.begin(), text.end(), std::back_inserter(lower),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "-inf" || lower == "-infinity")
  {
    return WithdrawalPrice::unbounded();
  }
  std::size_t consumed = 0;
  double      value    = 0.0;
  try
  {
    value = std::stod(text, &consumed);
  }
  catch (std::exception const &)
  {
    throw InvalidArgument("p-prime: expected a number or -inf, got '" + text + "'");
  }
  if (consumed != text.size() || !std::isfinite(value))
  {
    throw InvalidArgument("p-prime: expected a number or -inf, got '" + text + "'");
  }
  return WithdrawalPrice::at(value);
}

}  // namespace qauction::cli
