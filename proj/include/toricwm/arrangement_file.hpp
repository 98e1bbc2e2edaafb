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

#ifndef TORICWM_ARRANGEMENT_FILE_HPP
#define TORICWM_ARRANGEMENT_FILE_HPP

#include <string>
#include <vector>

#include "toricwm/arrangement.hpp"

namespace toricwm {

// Text format, one declaration per line, '#' starts a comment:
//
//   name = two lines through the origin
//   rank = 2
//   char = [1,1] ; 0
//   char = [1,-1] ; 1/2
//
// A character line "char = [c1,...,cn] ; p/q" is the hypersurface
// {c(t) = exp(2 pi i p/q)}.

struct ArrangementFile {
  std::string name;
  std::size_t rank = 0;
  std::vector<WeightedCharacter> characters;  // as written, constants reduced
  std::vector<std::size_t> lines;             // source line of each character
};

/// Throws ParseError with the offending line number.
ArrangementFile parse_arrangement(const std::string& text);
/// Throws ParseError when the file cannot be read.
ArrangementFile read_arrangement_file(const std::string& path);

/// With `normalize`, non-primitive characters are split; otherwise they are
/// rejected with NotPrimitive citing the character and its line.
Arrangement to_arrangement(const ArrangementFile& file, bool normalize = true);

std::string serialize(const ArrangementFile& file);
ArrangementFile to_file(const Arrangement& arr, const std::string& name = "");

}  // namespace toricwm

#endif  // TORICWM_ARRANGEMENT_FILE_HPP
