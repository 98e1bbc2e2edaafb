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

// Shared fixtures for the test binaries.

#ifndef TORICWM_TESTS_SUPPORT_HPP
#define TORICWM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "toricwm/arrangement.hpp"
#include "toricwm/decomposition.hpp"
#include "toricwm/nested.hpp"

namespace toricwm::testing {

inline WeightedCharacter wc(std::initializer_list<long> v, long num = 0, long den = 1) {
  return WeightedCharacter{make_vector(v), TorsionValue(num, den)};
}

inline IntVector iv(std::initializer_list<long> v) { return make_vector(v); }

inline TorsionVector tv(std::initializer_list<std::pair<long, long>> v) {
  TorsionVector out;
  for (const auto& [n, d] : v) out.emplace_back(n, d);
  return out;
}

/// (t^2,1), (s^2,1), (ts,1), (ts^-1,1) before splitting.
inline std::vector<WeightedCharacter> squares_raw() {
  return {wc({2, 0}), wc({0, 2}), wc({1, 1}), wc({1, -1})};
}
inline Arrangement squares() { return normalize(2, squares_raw()); }

/// (ts,1), (ts^-1,1).
inline Arrangement diagonals() { return Arrangement(2, {wc({1, 1}), wc({1, -1})}); }

/// Layer id by lattice rows and values; aborts the test when missing.
inline LayerId find_layer(const LayerPoset& poset, const std::vector<IntVector>& rows,
                          const TorsionVector& values) {
  const Sublattice l = Sublattice::span(rows, poset.rank());
  for (LayerId i = 0; i < poset.size(); ++i)
    if (poset.layer(i).lattice() == l && poset.layer(i).values() == values) return i;
  throw std::logic_error("layer not found");
}

/// Point layer id by torsion coordinates.
inline LayerId find_point(const LayerPoset& poset, const TorsionVector& phi) {
  for (LayerId p : poset.points())
    if (poset.layer(p).point() == phi) return p;
  throw std::logic_error("point not found");
}

/// Random arrangement of primitive characters with entries in [-bound,
/// bound] and constants with denominators up to `max_den`, spanning a
/// finite-index sublattice.
inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t rank,
                                      std::size_t max_chars, long bound = 2, long max_den = 4) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  std::uniform_int_distribution<std::size_t> count(rank, std::max(rank, max_chars));
  while (true) {
    const std::size_t k = count(rng);
    std::vector<WeightedCharacter> chars;
    std::size_t attempts = 0;
    while (chars.size() < k && ++attempts < 1000) {
      IntVector v(rank);
      for (auto& x : v) x = entry(rng);
      if (is_zero(v) || !is_primitive(v)) continue;
      const long d = den(rng);
      const long n = std::uniform_int_distribution<long>(0, d - 1)(rng);
      WeightedCharacter c{v, TorsionValue(n, d)};
      if (std::find(chars.begin(), chars.end(), c) != chars.end()) continue;
      chars.push_back(std::move(c));
    }
    std::vector<IntVector> rows;
    for (const auto& c : chars) rows.push_back(c.lambda);
    if (Sublattice::span(rows, rank).rank() < rank) continue;
    return Arrangement(rank, chars);
  }
}

/// Random integer vectors with entries in [-bound, bound], none zero.
inline std::vector<IntVector> random_vectors(std::mt19937_64& rng, std::size_t rank,
                                             std::size_t count, long bound = 2) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<IntVector> out;
  while (out.size() < count) {
    IntVector v(rank);
    for (auto& x : v) x = entry(rng);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace toricwm::testing

#endif  // TORICWM_TESTS_SUPPORT_HPP
