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

#include "qauction/json_io.hpp"

#include "qauction/error.hpp"

namespace qauction::json_io {
namespace {

std::string join(std::string const &path, std::string const &field)
{
  return path.empty() ? field : path + "." + field;
}

[[noreturn]] void fail(std::string const &path, std::string const &what)
{
  throw InvalidArgument((path.empty() ? std::string{"<root>"} : path) + ": " + what);
}

Json const &field(Json const &j, std::string const &path, char const *name)
{
  if (!j.is_object())
  {
    fail(path, "expected an object");
  }
  auto const it = j.find(name);
  if (it == j.end())
  {
    fail(join(path, name), "missing field");
  }
  return *it;
}

double number(Json const &j, std::string const &path)
{
  if (!j.is_number())
  {
    fail(path, "expected a number");
  }
  return j.get<double>();
}

std::vector<double> numbers(Json const &j, std::string const &path)
{
  if (!j.is_array())
  {
    fail(path, "expected an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
  {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Runs a factory and prefixes its InvalidArgument message with `path`.
template <typename Make>
auto with_path(std::string const &path, Make &&make) -> decltype(make())
{
  try
  {
    return make();
  }
  catch (InvalidArgument const &e)
  {
    if (path.empty())
    {
      throw;
    }
    throw InvalidArgument(path + "." + e.what());
  }
}

}  // namespace

Json parse(std::string const &text)
{
  try
  {
    return Json::parse(text);
  }
  catch (nlohmann::json::parse_error const &e)
  {
    throw InvalidArgument(std::string{"<root>: invalid JSON: "} + e.what());
  }
}

Strategy strategy_from_json(Json const &j, std::string const &path)
{
  auto const &type_field = field(j, path, "type");
  if (!type_field.is_string())
  {
    fail(join(path, "type"), "expected a string");
  }
  auto const type = type_field.get<std::string>();

  if (type == "gaussian")
  {
    double const mu    = number(field(j, path, "mu"), join(path, "mu"));
    double const sigma = number(field(j, path, "sigma"), join(path, "sigma"));
    return with_path(path, [&] { return Strategy::gaussian(mu, sigma); });
  }
  if (type == "dirac")
  {
    double const q0 = number(field(j, path, "q0"), join(path, "q0"));
    return Strategy::dirac(q0);
  }
  if (type == "mixture")
  {
    auto weights = numbers(field(j, path, "weights"), join(path, "weights"));
    auto const &comps_json = field(j, path, "components");
    if (!comps_json.is_array())
    {
      fail(join(path, "components"), "expected an array of strategies");
    }
    std::vector<Strategy> comps;
    for (std::size_t i = 0; i < comps_json.size(); ++i)
    {
      comps.push_back(
          strategy_from_json(comps_json[i], join(path, "components") + "[" + std::to_string(i) + "]"));
    }
    return with_path(path, [&] { return Strategy::mixture(std::move(weights), std::move(comps)); });
  }
  if (type == "tabulated")
  {
    auto grid   = numbers(field(j, path, "grid"), join(path, "grid"));
    auto values = numbers(field(j, path, "values"), join(path, "values"));
    return with_path(path, [&] { return Strategy::tabulated(std::move(grid), std::move(values)); });
  }
  fail(join(path, "type"), "unknown strategy type '" + type + "'");
}

Json to_json(Strategy const &s)
{
  if (auto const *g = s.get_if<Gaussian>())
  {
    return Json{{"type", "gaussian"}, {"mu", g->mu}, {"sigma", g->sigma}};
  }
  if (auto const *d = s.get_if<Dirac>())
  {
    return Json{{"type", "dirac"}, {"q0", d->q0}};
  }
  if (auto const *t = s.get_if<Tabulated>())
  {
    return Json{{"type", "tabulated"}, {"grid", t->grid()}, {"values", t->values()}};
  }
  auto const &m     = *s.get_if<Mixture>();
  Json        comps = Json::array();
  for (auto const &c : m.components)
  {
    comps.push_back(to_json(c));
  }
  return Json{{"type", "mixture"}, {"weights", m.weights}, {"components", comps}};
}

AuctionConfig config_from_json(Json const &j)
{
  auto seller = strategy_from_json(field(j, "", "seller"), "seller");
  auto const &bidders_json = field(j, "", "bidders");
  if (!bidders_json.is_array() || bidders_json.empty())
  {
    fail("bidders", "expected a non-empty array of strategies");
  }
  std::vector<Strategy> bidders;
  for (std::size_t i = 0; i < bidders_json.size(); ++i)
  {
    bidders.push_back(strategy_from_json(bidders_json[i], "bidders[" + std::to_string(i) + "]"));
  }
  return AuctionConfig{std::move(seller), std::move(bidders)};
}

JointStrategy2D joint_from_json(Json const &j, std::string const &path)
{
  auto p_grid = numbers(field(j, path, "p_grid"), join(path, "p_grid"));
  auto q_grid = numbers(field(j, path, "q_grid"), join(path, "q_grid"));
  auto const &rows_json = field(j, path, "values");
  if (!rows_json.is_array())
  {
    fail(join(path, "values"), "expected an array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < rows_json.size(); ++i)
  {
    rows.push_back(numbers(rows_json[i], join(path, "values") + "[" + std::to_string(i) + "]"));
  }
  return with_path(path, [&] {
    return JointStrategy2D{std::move(p_grid), std::move(q_grid), std::move(rows)};
  });
}

AnyConfig any_config_from_json(Json const &j)
{
  if (!j.is_object())
  {
    fail("", "expected an object");
  }
  if (!j.contains("bidders_2d"))
  {
    return config_from_json(j);
  }

  auto const &seller_json = field(j, "", "seller");
  JointConfig cfg{Strategy::dirac(0.0), {}};
  if (seller_json.is_object() && seller_json.contains("p_grid"))
  {
    cfg.seller = joint_from_json(seller_json, "seller");
  }
  else
  {
    cfg.seller = strategy_from_json(seller_json, "seller");
  }

  auto const &bidders_json = field(j, "", "bidders_2d");
  if (!bidders_json.is_array() || bidders_json.empty())
  {
    fail("bidders_2d", "expected a non-empty array of joint strategies");
  }
  for (std::size_t i = 0; i < bidders_json.size(); ++i)
  {
    cfg.bidders.push_back(joint_from_json(bidders_json[i], "bidders_2d[" + std::to_string(i) + "]"));
  }
  return cfg;
}

Json to_json(SimulationReport const &r)
{
  return Json{{"n_trials", r.n_trials},
              {"deal_rate", r.deal_rate},
              {"mean_conditional_profit", r.mean_conditional_profit},
              {"rho_estimate", r.rho_estimate},
              {"std_error", r.std_error},
              {"seed", r.seed}};
}

Json to_json(JointSimulationReport const &r)
{
  Json bidders = Json::array();
  for (auto const &b : r.bidders)
  {
    bidders.push_back(Json{{"win_rate", b.win_rate},
                           {"deal_rate", b.deal_rate},
                           {"mean_margin", b.mean_margin},
                           {"margin_std_error", b.margin_std_error}});
  }
  Json out = to_json(r.report);
  out["bidders"]                     = bidders;
  out["mean_winner_resale"]          = r.mean_winner_resale;
  out["mean_winner_resale_std_error"] = r.mean_winner_resale_std_error;
  return out;
}

}  // namespace qauction::json_io
