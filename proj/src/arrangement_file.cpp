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

#include "toricwm/arrangement_file.hpp"

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

namespace toricwm {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& text, std::size_t line) {
  static const std::regex kRational(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kRational)) fail(line, "malformed constant '" + text + "'");
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) fail(line, "zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

WeightedCharacter parse_character(const std::string& text, std::size_t line) {
  static const std::regex kChar(R"(\s*\[([^\]]*)\]\s*;(.*))");
  std::smatch m;
  if (!std::regex_match(text, m, kChar)) fail(line, "expected '[c1,...,cn] ; p/q'");
  IntVector lambda;
  std::stringstream entries(m[1].str());
  std::string item;
  static const std::regex kInt(R"(\s*([+-]?\d+)\s*)");
  while (std::getline(entries, item, ',')) {
    std::smatch im;
    if (!std::regex_match(item, im, kInt)) fail(line, "malformed entry '" + trim(item) + "'");
    const std::string digits = im[1].str().front() == '+' ? im[1].str().substr(1) : im[1].str();
    lambda.emplace_back(digits);
  }
  if (lambda.empty()) fail(line, "empty character");
  return WeightedCharacter{std::move(lambda), TorsionValue(parse_rational(m[2].str(), line))};
}

}  // namespace

ArrangementFile parse_arrangement(const std::string& text) {
  ArrangementFile out;
  std::optional<std::size_t> rank;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "name") {
      out.name = value;
    } else if (key == "rank") {
      if (rank) fail(line, "rank declared twice");
      static const std::regex kRank(R"(\d+)");
      if (!std::regex_match(value, kRank)) fail(line, "malformed rank '" + value + "'");
      rank = std::stoul(value);
      if (*rank == 0) fail(line, "rank must be positive");
    } else if (key == "char") {
      out.characters.push_back(parse_character(value, line));
      out.lines.push_back(line);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (!rank) fail(line, "missing rank declaration");
  if (out.characters.empty()) fail(line, "no characters declared");
  out.rank = *rank;
  for (std::size_t i = 0; i < out.characters.size(); ++i) {
    const IntVector& v = out.characters[i].lambda;
    if (v.size() != out.rank) {
      fail(out.lines[i], "character has " + std::to_string(v.size()) + " entries, rank is " +
                             std::to_string(out.rank));
    }
    if (is_zero(v)) fail(out.lines[i], "zero character");
  }
  return out;
}

ArrangementFile read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_arrangement(buffer.str());
}

Arrangement to_arrangement(const ArrangementFile& file, bool normalize_input) {
  if (normalize_input) return normalize(file.rank, file.characters);
  for (std::size_t i = 0; i < file.characters.size(); ++i)
    if (!is_primitive(file.characters[i].lambda)) {
      throw Error(ErrorCode::kNotPrimitive,
                  "line " + std::to_string(file.lines[i]) + ": " + to_string(file.characters[i]));
    }
  return Arrangement(file.rank, file.characters);
}

std::string serialize(const ArrangementFile& file) {
  std::string out;
  if (!file.name.empty()) out += "name = " + file.name + "\n";
  out += "rank = " + std::to_string(file.rank) + "\n";
  for (const auto& c : file.characters) {
    out += "char = " + to_string(c.lambda) + " ; " + c.constant.value().get_str() + "\n";
  }
  return out;
}

ArrangementFile to_file(const Arrangement& arr, const std::string& name) {
  ArrangementFile out;
  out.name = name;
  out.rank = arr.rank();
  out.characters = arr.characters();
  const std::size_t first = name.empty() ? 2 : 3;  // line numbers in serialize(out)
  for (std::size_t i = 0; i < arr.size(); ++i) out.lines.push_back(first + i);
  return out;
}

}  // namespace toricwm
