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
#include "qauction/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qauction;
using qauction::cli::ExitCode;

namespace {

struct Shared
{
  double        sigma   = 1.0;
  std::uint64_t seed    = 42;
  std::uint64_t trials  = 1'000'000;
  unsigned      threads = 1;
  std::string   out     = "-";
  std::string   format  = "csv";
  bool          prices  = false;
};

std::string read_file(std::string const &path)
{
  std::ifstream in{path, std::ios::binary};
  if (!in)
  {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(std::string const &path, std::string const &content)
{
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out || !(out << content))
  {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

// Writes the payload and its manifest. With --out the manifest goes to a
// sidecar "<out>.manifest.json"; on stdout it is a leading comment (CSV) or
// an enclosing object (JSON).
void emit(cli::RunManifest manifest, Shared const &shared, cli::Table const *table,
          json_io::Json const *document)
{
  manifest.output_path = shared.out;
  auto const meta      = cli::to_json(manifest);
  bool const as_json   = document != nullptr || shared.format == "json";

  std::string body;
  if (as_json)
  {
    json_io::Json const data = document ? *document : cli::render_json(*table);
    if (shared.out == "-")
    {
      body = json_io::Json{{"manifest", meta}, {"data", data}}.dump(2) + "\n";
    }
    else
    {
      body = data.dump(2) + "\n";
    }
  }
  else
  {
    body = cli::render_csv(*table);
    if (shared.out == "-")
    {
      body = "# " + meta.dump() + "\n" + body;
    }
  }

  if (shared.out == "-")
  {
    std::cout << body;
    return;
  }
  write_file(shared.out, body);
  write_file(shared.out + ".manifest.json", meta.dump(2) + "\n");
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Quantum English auction profit intensities, asymptotics and Monte Carlo checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);

  Shared shared;
  app.add_option("--sigma", shared.sigma, "Dispersion of the Gaussian bidder strategy")
      ->capture_default_str();
  app.add_option("--seed", shared.seed, "Random seed for simulation commands")->capture_default_str();
  app.add_option("--trials", shared.trials, "Monte Carlo trials")->capture_default_str();
  app.add_option("--threads", shared.threads, "Worker threads (outputs do not depend on it)")
      ->capture_default_str()
      ->check(CLI::Range(1U, 1024U));
  app.add_option("--out", shared.out, "Output file, '-' for stdout")->capture_default_str();
  app.add_option("--format", shared.format, "Table format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--prices", shared.prices, "Report multiplicative prices instead of log-prices");

  auto *t1         = app.add_subcommand("table1", "Maximal and limiting profit intensities for N = 1..N_max");
  std::size_t n_max = 10;
  t1->add_option("--n-max", n_max, "Largest N")->capture_default_str();
  t1->fallthrough();

  auto *curve       = app.add_subcommand("rho-curve", "Seller profit intensity as a function of p'");
  std::size_t curve_n = 3;
  double      p_min   = -3.0;
  double      p_max   = 3.0;
  std::size_t steps   = 121;
  curve->add_option("--n", curve_n, "Number of bidders")->capture_default_str();
  curve->add_option("--p-min", p_min)->capture_default_str();
  curve->add_option("--p-max", p_max)->capture_default_str();
  curve->add_option("--steps", steps)->capture_default_str();
  curve->fallthrough();

  auto *asym                = app.add_subcommand("asym", "Large-N maximal profit intensity against its asymptotics");
  std::vector<std::size_t> asym_ns{3, 10, 30, 100, 300, 1000, 3000, 10000};
  std::size_t              cutoff = 100000;
  asym->add_option("--n", asym_ns, "List of N (each >= 3)")->capture_default_str();
  asym->add_option("--quadrature-cutoff", cutoff, "Skip quadrature max_rho above this N")
      ->capture_default_str();
  asym->fallthrough();

  auto *bid                = app.add_subcommand("bidder", "Bidder profit intensity against a fixed bid q'");
  std::vector<std::size_t> bid_ns{1, 2, 3};
  double                   q_min       = -3.0;
  double                   q_max       = 3.0;
  std::size_t              bid_steps   = 121;
  std::string              bid_p_prime = "-inf";
  bid->add_option("--n", bid_ns, "List of N")->capture_default_str();
  bid->add_option("--q-min", q_min)->capture_default_str();
  bid->add_option("--q-max", q_max)->capture_default_str();
  bid->add_option("--steps", bid_steps)->capture_default_str();
  bid->add_option("--p-prime", bid_p_prime, "Seller log withdrawal price or -inf")
      ->capture_default_str();
  bid->fallthrough();

  auto *sim = app.add_subcommand("simulate", "Monte Carlo simulation of a JSON auction configuration");
  std::string config_path;
  sim->add_option("config", config_path, "Configuration file")->required();
  sim->fallthrough();

  auto *gum                = app.add_subcommand("gumbel", "Distance of the rescaled winning log-price to Gumbel");
  std::vector<std::size_t> gum_ns{100, 10000};
  gum->add_option("--n", gum_ns, "List of N (each >= 2)")->capture_default_str();
  gum->fallthrough();

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e);
    return code == 0 ? ExitCode::kOk : ExitCode::kUsage;
  }

  SimulationOptions const sim_options{shared.trials, shared.seed, shared.threads};

  try
  {
    cli::RunManifest manifest;
    manifest.parameters["sigma"]  = shared.sigma;
    manifest.parameters["format"] = shared.format;
    manifest.parameters["prices"] = shared.prices;

    if (*t1)
    {
      manifest.command              = "table1";
      manifest.parameters["n_max"] = n_max;
      auto const table              = cli::table1(n_max, shared.sigma, shared.threads);
      emit(manifest, shared, &table, nullptr);
    }
    else if (*curve)
    {
      manifest.command              = "rho-curve";
      manifest.parameters["n"]      = curve_n;
      manifest.parameters["p_min"]  = p_min;
      manifest.parameters["p_max"]  = p_max;
      manifest.parameters["steps"]  = steps;
      auto const table = cli::rho_curve(curve_n, p_min, p_max, steps, shared.sigma, shared.prices);
      emit(manifest, shared, &table, nullptr);
    }
    else if (*asym)
    {
      manifest.command                         = "asym";
      manifest.parameters["n"]                 = asym_ns;
      manifest.parameters["quadrature_cutoff"] = cutoff;
      auto const table = cli::asym(asym_ns, shared.sigma, cutoff, shared.threads);
      emit(manifest, shared, &table, nullptr);
    }
    else if (*bid)
    {
      auto const p_prime                = cli::parse_withdrawal_price(bid_p_prime);
      manifest.command                  = "bidder";
      manifest.parameters["n"]          = bid_ns;
      manifest.parameters["q_min"]      = q_min;
      manifest.parameters["q_max"]      = q_max;
      manifest.parameters["steps"]      = bid_steps;
      manifest.parameters["p_prime"]    = bid_p_prime;
      auto const table =
          cli::bidder(bid_ns, q_min, q_max, bid_steps, p_prime, shared.sigma, shared.prices);
      emit(manifest, shared, &table, nullptr);
    }
    else if (*sim)
    {
      std::string text;
      try
      {
        text = read_file(config_path);
      }
      catch (std::runtime_error const &e)
      {
        std::cerr << "error: " << e.what() << '\n';
        return ExitCode::kIoError;
      }
      auto const config                = json_io::any_config_from_json(json_io::parse(text));
      manifest.command                 = "simulate";
      manifest.parameters              = json_io::Json::object();
      manifest.parameters["config"]    = json_io::parse(text);
      manifest.parameters["trials"]    = shared.trials;
      manifest.seed                    = shared.seed;
      auto const report                = cli::simulate(config, sim_options);
      emit(manifest, shared, nullptr, &report);
    }
    else if (*gum)
    {
      manifest.command              = "gumbel";
      manifest.parameters           = json_io::Json::object();
      manifest.parameters["n"]      = gum_ns;
      manifest.parameters["trials"] = shared.trials;
      manifest.parameters["format"] = shared.format;
      manifest.seed                 = shared.seed;
      auto const table              = cli::gumbel(gum_ns, sim_options);
      emit(manifest, shared, &table, nullptr);
    }
  }
  catch (NumericalFailure const &e)
  {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return ExitCode::kNumericalFail;
  }
  catch (qauction::Error const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode::kInputError;
  }
  catch (std::runtime_error const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode::kIoError;
  }
  return ExitCode::kOk;
}
