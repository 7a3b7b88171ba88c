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

// JSON schemas shared by the CLI and test fixtures.
//
//   Strategy:        {"type":"gaussian","mu":0,"sigma":1}
//                    {"type":"dirac","q0":0.5}
//                    {"type":"mixture","weights":[...],"components":[<Strategy>...]}
//                    {"type":"tabulated","grid":[...],"values":[...]}
//   AuctionConfig:   {"seller":<Strategy>,"bidders":[<Strategy>...]}
//   JointStrategy2D: {"p_grid":[...],"q_grid":[...],"values":[[...],...]}
//   Joint config:    {"seller":<Strategy or JointStrategy2D>,"bidders_2d":[<JointStrategy2D>...]}
//
// Parse errors are InvalidArgument with a message that starts with the JSON
// path of the offending field, e.g. "bidders[1].sigma: must be finite and > 0".

#include "qauction/auction_measure.hpp"
#include "qauction/joint_strategy.hpp"
#include "qauction/montecarlo.hpp"
#include "qauction/strategy.hpp"

#include "json.hpp"

#include <string>
#include <variant>
#include <vector>

namespace qauction::json_io {

using Json = nlohmann::ordered_json;

Strategy        strategy_from_json(Json const &j, std::string const &path = "");
Json            to_json(Strategy const &s);
AuctionConfig   config_from_json(Json const &j);
JointStrategy2D joint_from_json(Json const &j, std::string const &path = "");

struct JointConfig
{
  SellerStrategy               seller;
  std::vector<JointStrategy2D> bidders;
};

/// Either configuration kind, chosen by the presence of "bidders_2d".
using AnyConfig = std::variant<AuctionConfig, JointConfig>;

AnyConfig any_config_from_json(Json const &j);

/// Parses text; syntax errors become InvalidArgument.
Json parse(std::string const &text);

Json to_json(SimulationReport const &r);
Json to_json(JointSimulationReport const &r);

}  // namespace qauction::json_io
