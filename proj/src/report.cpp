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

#include "toricwm/report.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

namespace toricwm {

using nlohmann::ordered_json;

namespace {

std::string id(LayerId l) { return "L" + std::to_string(l); }

std::string ids(const std::vector<LayerId>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + id(v[i]);
  return out + "}";
}

ordered_json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json to_json(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

ordered_json to_json(const TorsionVector& v) {
  ordered_json out = ordered_json::array();
  for (const TorsionValue& x : v) out.push_back(x.to_string());
  return out;
}

ordered_json to_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json to_json(const ComplexVector& v) {
  ordered_json out = ordered_json::array();
  for (const Complex& z : v) out.push_back(to_json(z));
  return out;
}

ordered_json layer_json(const LayerPoset& poset, LayerId l) {
  const Layer& layer = poset.layer(l);
  ordered_json rows = ordered_json::array();
  for (const IntVector& r : layer.lattice().basis().row_vectors()) rows.push_back(to_json(r));
  return ordered_json{{"id", id(l)},
                      {"rows", rows},
                      {"values", to_json(layer.values())},
                      {"dimension", layer.dimension()},
                      {"support", layer.support()}};
}

std::string format_double(double x) {
  if (std::abs(x) < 1e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Common header and skeleton of every report.
Report start(const std::string& command, const std::string& name, const LayerPoset& poset) {
  Report r;
  const Arrangement& arr = poset.arrangement();
  std::ostringstream text;
  text << "# toricwm " << command << "\n";
  text << "# arrangement: " << (name.empty() ? "(unnamed)" : name) << "\n";
  text << "# rank " << arr.rank() << ", " << arr.size() << " characters, " << poset.size()
       << " layers\n";
  text << "# layer ids L0, L1, ... follow canonical order: dimension descending, then Hermite\n"
          "# rows (0 < 1 < -1 < 2 < ...), then torsion values\n";
  text << "# layers print as (Hermite rows ; torsion values ; dimension ; support)\n";
  ordered_json chars = ordered_json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    text << "X" << i << " = " << to_string(arr[i]) << "\n";
    chars.push_back({{"lambda", to_json(arr[i].lambda)}, {"constant", arr[i].constant.to_string()}});
  }
  r.text = text.str();
  r.data = ordered_json{
      {"command", command},
      {"arrangement", {{"name", name}, {"rank", arr.rank()}, {"characters", chars}}},
      {"layer_ids", "L0, L1, ... in canonical order: dimension descending, then Hermite rows "
                    "(0 < 1 < -1 < 2 < ...), then torsion values"}};
  return r;
}

std::string flag_text(const std::optional<Flag>& flag) {
  if (!flag) return "-";
  std::string out;
  for (std::size_t i = 0; i < flag->chain.size(); ++i) out += (i ? " < " : "") + id(flag->chain[i]);
  return out;
}

ordered_json nested_json(const NestedSet& s) {
  ordered_json out{{"members", ordered_json::array()}};
  for (LayerId l : s.members) out["members"].push_back(id(l));
  out["center"] = s.center ? ordered_json(id(*s.center)) : ordered_json(nullptr);
  ordered_json flag = ordered_json::array();
  if (s.witness)
    for (LayerId l : s.witness->chain) flag.push_back(id(l));
  out["flag"] = flag;
  return out;
}

ordered_json basis_json(const AdaptedBasis& b) {
  ordered_json out = ordered_json::array();
  for (std::size_t k = 0; k < b.members.size(); ++k)
    out.push_back({{"layer", id(b.members[k])},
                   {"lambda", to_json(b.lambdas[k])},
                   {"constant", b.constants[k].to_string()}});
  return out;
}

std::string basis_text(const AdaptedBasis& b) {
  std::string out;
  for (std::size_t k = 0; k < b.members.size(); ++k)
    out += "  z" + std::to_string(k) + " " + id(b.members[k]) + " : lambda = " +
           to_string(b.lambdas[k]) + ", a = " + b.constants[k].to_string() + "\n";
  return out;
}

std::string strip_plus(const std::string& s) { return !s.empty() && s.front() == '+' ? s.substr(1) : s; }

}  // namespace

std::string format_complex(const Complex& z) {
  const std::string im = format_double(z.imag());
  return format_double(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

LayerId parse_layer_id(const std::string& text, const LayerPoset& poset) {
  static const std::regex kId(R"(\s*[Ll]?(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kId)) throw Error(ErrorCode::kInvalidIndex, "bad layer id '" + text + "'");
  const std::string digits = m[1].str();
  if (digits.size() > 9 || std::stoul(digits) >= poset.size()) {
    throw Error(ErrorCode::kInvalidIndex, "no layer " + text + " (ids run from L0 to L" +
                                              std::to_string(poset.size() - 1) + ")");
  }
  return std::stoul(digits);
}

std::vector<LayerId> parse_layer_list(const std::string& text, const LayerPoset& poset) {
  std::vector<LayerId> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_layer_id(item, poset));
  if (out.empty()) throw Error(ErrorCode::kInvalidIndex, "empty layer list");
  return out;
}

std::vector<std::vector<Rational>> parse_jets(const std::string& text, std::size_t rank) {
  static const std::regex kEntry(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::vector<std::vector<Rational>> out;
  std::stringstream in(text);
  std::string vec;
  while (std::getline(in, vec, ';')) {
    std::vector<Rational> v;
    std::stringstream entries(vec);
    std::string item;
    while (std::getline(entries, item, ',')) {
      std::smatch m;
      if (!std::regex_match(item, m, kEntry)) {
        throw Error(ErrorCode::kInvalidGerm, "bad jet entry '" + item + "'");
      }
      Integer num(strip_plus(m[1].str()));
      Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
      if (den == 0) throw Error(ErrorCode::kInvalidGerm, "zero denominator in '" + item + "'");
      Rational q(num, den);
      q.canonicalize();
      v.push_back(q);
    }
    if (v.size() != rank) {
      throw Error(ErrorCode::kInvalidGerm, "jet '" + vec + "' has " + std::to_string(v.size()) +
                                               " entries, rank is " + std::to_string(rank));
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidGerm, "no jet vectors");
  return out;
}

Report report_layers(const std::string& name, const LayerPoset& poset) {
  Report r = start("layers", name, poset);
  std::ostringstream text;
  ordered_json layers = ordered_json::array();
  for (LayerId l = 0; l < poset.size(); ++l) {
    text << id(l) << " " << describe(poset.layer(l)) << "\n";
    layers.push_back(layer_json(poset, l));
  }
  text << "hasse:";
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : poset.hasse_edges()) {
    text << " " << id(a) << "<" << id(b);
    edges.push_back({id(a), id(b)});
  }
  text << "\n";
  r.text += text.str();
  r.data["layers"] = layers;
  r.data["hasse"] = edges;
  return r;
}

Report report_points(const std::string& name, const LayerPoset& poset) {
  Report r = start("points", name, poset);
  std::ostringstream text;
  ordered_json pts = ordered_json::array();
  for (LayerId p : poset.points()) {
    const Layer& layer = poset.layer(p);
    const IndexSet loc = localized(poset.arrangement(), layer);
    text << id(p) << " " << to_string(layer.point()) << " localized " << to_string(loc) << "\n";
    pts.push_back({{"id", id(p)}, {"coordinates", to_json(layer.point())}, {"localized", loc}});
  }
  r.text += text.str();
  r.data["points"] = pts;
  return r;
}

Report report_irreducible(const std::string& name, const LayerPoset& poset) {
  Report r = start("irreducible", name, poset);
  const BuildingSet g = irreducible_layers(poset);
  std::ostringstream text;
  ordered_json layers = ordered_json::array();
  for (LayerId l = 0; l < poset.size(); ++l) {
    const auto chars = layer_characters(poset, l);
    const bool z = is_z_irreducible(chars);
    const bool c = is_c_irreducible(chars);
    text << id(l) << " " << describe(poset.layer(l)) << " Z-irreducible " << (z ? "yes" : "no")
         << " C-irreducible " << (c ? "yes" : "no") << "\n";
    ordered_json entry = layer_json(poset, l);
    entry["z_irreducible"] = z;
    entry["c_irreducible"] = c;
    layers.push_back(entry);
  }
  text << "I = " << ids(g.members()) << " (" << g.size() << " layers)\n";
  r.text += text.str();
  r.data["layers"] = layers;
  ordered_json members = ordered_json::array();
  for (LayerId l : g.members()) members.push_back(id(l));
  r.data["building_set"] = members;
  return r;
}

Report report_nested(const std::string& name, const LayerPoset& poset,
                     std::optional<LayerId> point, bool maximal_only) {
  Report r = start("nested", name, poset);
  const NestedSetComplex complex(poset, irreducible_layers(poset));
  if (point && !poset.layer(*point).is_point()) {
    throw Error(ErrorCode::kNotAPoint, id(*point) + " has positive dimension");
  }
  std::vector<NestedSet> sets;
  if (maximal_only) {
    sets = point ? complex.maximal_at(*point) : complex.maximal();
  } else {
    sets = complex.all_nested(point);
  }
  std::ostringstream text;
  text << (maximal_only ? "maximal nested sets" : "nested sets");
  if (point) text << " through " << id(*point);
  text << ": " << sets.size() << "\n";
  ordered_json list = ordered_json::array();
  for (const NestedSet& s : sets) {
    text << ids(s.members) << " center " << (s.center ? id(*s.center) : "-") << " flag "
         << flag_text(s.witness) << "\n";
    list.push_back(nested_json(s));
  }
  r.text += text.str();
  r.data["maximal_only"] = maximal_only;
  r.data["point"] = point ? ordered_json(id(*point)) : ordered_json(nullptr);
  r.data["nested_sets"] = list;
  return r;
}

Report report_charts(const std::string& name, const LayerPoset& poset, bool verify,
                     const SweepOptions& options) {
  Report r = start("charts", name, poset);
  const NestedSetComplex complex(poset, irreducible_layers(poset));
  const std::vector<Chart> atlas = build_atlas(complex, options.tolerance);
  std::ostringstream text;
  text << "charts: " << atlas.size() << "\n";
  ordered_json charts = ordered_json::array();
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const Chart& c = atlas[i];
    text << "chart " << i << " center " << id(c.center()) << " nested " << ids(c.nested_set().members)
         << "\n"
         << basis_text(c.basis());
    charts.push_back({{"index", i}, {"center", id(c.center())}, {"basis", basis_json(c.basis())}});
  }
  r.data["charts"] = charts;
  if (verify) {
    const AtlasSweep sweep = verify_atlas(complex, options);
    const bool ok = sweep.passed(options.tolerance);
    std::size_t overlap = 0, on_divisor = 0;
    for (const auto& o : sweep.overlaps) {
      overlap += o.samples;
      on_divisor += o.on_divisor;
    }
    bool zero = true;
    for (const auto& c : sweep.charts) zero = zero && c.zero_in_chart;
    text << "verify seed " << options.seed << " samples " << options.samples << "\n";
    for (std::size_t i = 0; i < sweep.charts.size(); ++i)
      text << "  chart " << i << " origin " << (sweep.charts[i].zero_in_chart ? "inside" : "OUTSIDE")
           << " residual " << format_double(sweep.charts[i].max_residual) << " roundtrip "
           << format_double(sweep.charts[i].max_roundtrip) << "\n";
    text << "max residual " << format_double(sweep.max_residual()) << "\n";
    text << "max roundtrip " << format_double(sweep.max_roundtrip()) << "\n";
    text << "overlap magnitudes [" << format_double(sweep.min_magnitude()) << ", "
         << format_double(sweep.max_magnitude()) << "] over " << overlap << " points and "
         << on_divisor << " divisor points\n";
    text << "cover " << sweep.cover_samples - sweep.cover_failures << "/" << sweep.cover_samples << "\n";
    text << "curve limits " << sweep.germs - sweep.germ_failures << "/" << sweep.germs << "\n";
    text << "verdict " << (ok ? "PASS" : "FAIL") << "\n";
    r.data["verify"] = {{"seed", options.seed},
                        {"samples", options.samples},
                        {"tolerance", options.tolerance},
                        {"origin_inside_all", zero},
                        {"max_residual", sweep.max_residual()},
                        {"max_roundtrip", sweep.max_roundtrip()},
                        {"min_magnitude", sweep.min_magnitude()},
                        {"max_magnitude", sweep.max_magnitude()},
                        {"overlap_points", overlap},
                        {"divisor_points", on_divisor},
                        {"cover_samples", sweep.cover_samples},
                        {"cover_failures", sweep.cover_failures},
                        {"germs", sweep.germs},
                        {"germ_failures", sweep.germ_failures},
                        {"passed", ok}};
    if (!ok) r.exit_code = 2;
  }
  r.text += text.str();
  return r;
}

Report report_divisor(const std::string& name, const LayerPoset& poset,
                      const std::vector<LayerId>& set) {
  Report r = start("divisor", name, poset);
  const NestedSetComplex complex(poset, irreducible_layers(poset));
  const std::optional<std::size_t> dim = divisor_dim(complex, set);
  std::ostringstream text;
  text << "N = " << ids(set) << "\n";
  if (dim) {
    text << "dimension " << *dim << "\n";
  } else {
    text << "EMPTY (not nested)\n";
  }
  r.text += text.str();
  ordered_json members = ordered_json::array();
  for (LayerId l : set) members.push_back(id(l));
  r.data["set"] = members;
  r.data["nested"] = dim.has_value();
  r.data["dimension"] = dim ? ordered_json(*dim) : ordered_json(nullptr);
  return r;
}

Report report_curve(const std::string& name, const LayerPoset& poset, const CurveGerm& germ,
                    double tolerance) {
  Report r = start("curve", name, poset);
  const CurveLift lift = chart_for_curve(poset, irreducible_layers(poset), germ, tolerance);
  const bool inside = lift.chart.contains(lift.z_limit);
  std::ostringstream text;
  text << "base " << id(germ.point) << "\n";
  ordered_json jets = ordered_json::array();
  for (const auto& v : germ.jets) {
    ordered_json row = ordered_json::array();
    std::string t;
    for (std::size_t i = 0; i < v.size(); ++i) {
      row.push_back(v[i].get_str());
      t += (i ? "," : "") + v[i].get_str();
    }
    text << "jet [" << t << "]\n";
    jets.push_back(row);
  }
  const IndexSet& loc = lift.chart.localized_characters();
  ordered_json orders = ordered_json::array();
  text << "orders";
  for (std::size_t k = 0; k < loc.size(); ++k) {
    text << " X" << loc[k] << ":" << lift.orders[k];
    orders.push_back({{"character", loc[k]}, {"order", lift.orders[k]}});
  }
  text << "\n";
  text << "nested " << ids(lift.nested.members) << "\n" << basis_text(lift.chart.basis());
  text << "limit";
  for (const Complex& z : lift.z_limit) text << " " << format_complex(z);
  text << "\nin chart " << (inside ? "yes" : "no") << "\n";
  r.text += text.str();
  r.data["base"] = id(germ.point);
  r.data["jets"] = jets;
  r.data["orders"] = orders;
  r.data["nested"] = nested_json(lift.nested);
  r.data["basis"] = basis_json(lift.chart.basis());
  r.data["z_limit"] = to_json(lift.z_limit);
  r.data["in_chart"] = inside;
  if (!inside) r.exit_code = 2;
  return r;
}

}  // namespace toricwm
