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

#ifndef TORICWM_REPORT_HPP
#define TORICWM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricwm/verify.hpp"

namespace toricwm {

/// Output of one command: a structured document and its text rendering.
struct Report {
  nlohmann::ordered_json data;
  std::string text;
  int exit_code = 0;
};

/// "L3" or "3"; throws InvalidIndex.
LayerId parse_layer_id(const std::string& text, const LayerPoset& poset);
/// Comma-separated layer ids.
std::vector<LayerId> parse_layer_list(const std::string& text, const LayerPoset& poset);
/// "v1;v2;..." with comma-separated rational entries; throws InvalidGerm.
std::vector<std::vector<Rational>> parse_jets(const std::string& text, std::size_t rank);

/// Fixed 12-digit rendering with tiny parts flushed to zero.
std::string format_complex(const Complex& z);

Report report_layers(const std::string& name, const LayerPoset& poset);
Report report_points(const std::string& name, const LayerPoset& poset);
Report report_irreducible(const std::string& name, const LayerPoset& poset);
/// Nested sets of the irreducible building set; all of them, or only the
/// maximal ones, optionally restricted to those through a point.
Report report_nested(const std::string& name, const LayerPoset& poset,
                     std::optional<LayerId> point, bool maximal_only);
/// Atlas with adapted bases; with `verify`, the seeded sweeps as well
/// (exit code 2 when a check fails).
Report report_charts(const std::string& name, const LayerPoset& poset, bool verify,
                     const SweepOptions& options);
Report report_divisor(const std::string& name, const LayerPoset& poset,
                      const std::vector<LayerId>& set);
Report report_curve(const std::string& name, const LayerPoset& poset, const CurveGerm& germ,
                    double tolerance);

}  // namespace toricwm

#endif  // TORICWM_REPORT_HPP
