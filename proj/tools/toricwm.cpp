// Copyright 2026 The toricwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: toricwm [options] COMMAND FILE [command options]

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "toricwm/arrangement_file.hpp"
#include "toricwm/report.hpp"

namespace {

struct Options {
  std::string file;
  bool no_normalize = false;
  bool json = false;
  toricwm::SweepOptions sweep;
  std::string point;
  bool maximal = false;
  bool verify = false;
  std::string set;
  std::string jets;
};

toricwm::Report run(const std::string& command, const Options& o) {
  using namespace toricwm;
  const ArrangementFile file = read_arrangement_file(o.file);
  const LayerPoset poset(to_arrangement(file, !o.no_normalize));
  const std::string& name = file.name;
  if (command == "layers") return report_layers(name, poset);
  if (command == "points") return report_points(name, poset);
  if (command == "irreducible") return report_irreducible(name, poset);
  if (command == "nested") {
    std::optional<LayerId> p;
    if (!o.point.empty()) p = parse_layer_id(o.point, poset);
    return report_nested(name, poset, p, o.maximal);
  }
  if (command == "charts") return report_charts(name, poset, o.verify, o.sweep);
  if (command == "divisor") return report_divisor(name, poset, parse_layer_list(o.set, poset));
  if (command == "curve") {
    const CurveGerm germ{parse_layer_id(o.point, poset), parse_jets(o.jets, poset.rank())};
    return report_curve(name, poset, germ, o.sweep.tolerance);
  }
  throw Error(ErrorCode::kUnknownCommand, command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wonderful-model data for toric arrangements"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_flag("--no-normalize", o.no_normalize, "Reject non-primitive characters");
  app.add_flag("--json", o.json, "Emit one JSON document");
  app.add_option("--seed", o.sweep.seed, "Seed for the verification sweeps");
  app.add_option("--samples", o.sweep.samples, "Sample points per chart");
  app.add_option("--tolerance", o.sweep.tolerance, "Numeric tolerance")
      ->check(CLI::PositiveNumber);

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", o.file, "Arrangement file")->required();
    return sub;
  };
  add("layers", "Layer poset with Hasse edges");
  add("points", "Point layers with their localized characters");
  add("irreducible", "Irreducible layers");
  CLI::App* nested = add("nested", "Nested sets");
  nested->add_option("--point", o.point, "Restrict to sets centered at this point");
  nested->add_flag("--max", o.maximal, "Only maximal nested sets");
  CLI::App* charts = add("charts", "Chart atlas");
  charts->add_flag("--verify", o.verify, "Run the numeric sweeps");
  CLI::App* divisor = add("divisor", "Dimension of a divisor intersection");
  divisor->add_option("--set", o.set, "Comma-separated layer ids")->required();
  CLI::App* curve = add("curve", "Limit of a curve germ in the model");
  curve->add_option("--point", o.point, "Base point")->required();
  curve->add_option("--jets", o.jets, "Jet vectors v1;v2;...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty() && !app.remaining().empty()) {
      std::cerr << "UnknownCommand: " << app.remaining().front() << "\n";
      return 1;
    }
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  try {
    const toricwm::Report r = run(app.get_subcommands().front()->get_name(), o);
    if (o.json) {
      std::cout << r.data.dump(2) << "\n";
    } else {
      std::cout << r.text;
    }
    return r.exit_code;
  } catch (const toricwm::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
