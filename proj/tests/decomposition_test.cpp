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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "support.hpp"

using namespace toricwm;
using namespace toricwm::testing;

namespace {

Partition singletons(std::size_t n) {
  std::vector<IndexSet> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back({i});
  return make_partition(b, n);
}

}  // namespace

TEST_CASE("partitions") {
  const Partition p = make_partition({{2, 0}, {1}}, 3);
  CHECK(p.blocks == std::vector<IndexSet>{{0, 2}, {1}});
  CHECK(to_string(p) == "{{0,2},{1}}");
  CHECK(trivial_partition(3).blocks == std::vector<IndexSet>{{0, 1, 2}});
  CHECK_THROWS_AS(make_partition({{0}, {0, 1}}, 2), Error);
  CHECK_THROWS_AS(make_partition({{0}}, 2), Error);
  CHECK_THROWS_AS(make_partition({{0}, {}}, 1), Error);
  CHECK_THROWS_AS(is_integral_decomposition({iv({1, 0})}, make_partition({{0}, {1}}, 2)), Error);
}

TEST_CASE("integral decompositions") {
  const std::vector<IntVector> diag{iv({1, 1}), iv({1, -1})};
  CHECK_FALSE(is_integral_decomposition(diag, singletons(2)));
  CHECK(is_integral_decomposition({iv({1, 0}), iv({0, 1})}, singletons(2)));
  CHECK(is_integral_decomposition(diag, trivial_partition(2)));
}

TEST_CASE("complex decompositions") {
  const std::vector<IntVector> diag{iv({1, 1}), iv({1, -1})};
  CHECK(is_complex_decomposition(diag, singletons(2)));
  const std::vector<IntVector> tri{iv({1, 0}), iv({0, 1}), iv({1, 1})};
  for (const Partition& p : oracle::all_partitions(3))
    if (p.blocks.size() > 1) CHECK_FALSE(is_complex_decomposition(tri, p));
  CHECK(is_complex_decomposition(tri, trivial_partition(3)));
}

TEST_CASE("finest decompositions") {
  CHECK(finest_integral_decomposition({iv({1, 1}), iv({1, -1})}) == trivial_partition(2));
  CHECK(finest_integral_decomposition({iv({1, 0}), iv({0, 1})}) == singletons(2));
  CHECK(finest_integral_decomposition({iv({1, 0}), iv({0, 1}), iv({1, 1})}) ==
        trivial_partition(3));
  CHECK(finest_complex_decomposition({iv({1, 1}), iv({1, -1})}) == singletons(2));
  // Parallel vectors form one block.
  CHECK(finest_complex_decomposition({iv({1, 0}), iv({2, 0}), iv({0, 1})}) ==
        make_partition({{0, 1}, {2}}, 3));
}

TEST_CASE("irreducibility") {
  const std::vector<IntVector> diag{iv({1, 1}), iv({1, -1})};
  CHECK(is_z_irreducible(diag));
  CHECK_FALSE(is_c_irreducible(diag));
  CHECK(is_z_irreducible({iv({1, 2})}));
  CHECK(is_c_irreducible({iv({1, 2})}));
  CHECK_FALSE(is_z_irreducible({iv({1, 0}), iv({0, 1})}));
  CHECK_FALSE(is_c_irreducible({iv({1, 0}), iv({0, 1})}));
}

TEST_CASE("irreducible layers of the examples") {
  const LayerPoset d(diagonals());
  const BuildingSet g = irreducible_layers(d);
  CHECK(g.members() == std::vector<LayerId>{0, 1, 2, 3});
  CHECK(g.flavor() == BuildingSet::Flavor::kIrreducible);

  const LayerPoset s(squares());
  const BuildingSet i = irreducible_layers(s);
  CHECK(i.size() == 8);
  const LayerId p1 = find_point(s, tv({{0, 1}, {0, 1}}));
  const LayerId p2 = find_point(s, tv({{1, 2}, {1, 2}}));
  const LayerId p3 = find_point(s, tv({{0, 1}, {1, 2}}));
  const LayerId p4 = find_point(s, tv({{1, 2}, {0, 1}}));
  CHECK(i.contains(p1));
  CHECK(i.contains(p2));
  CHECK_FALSE(i.contains(p3));
  CHECK_FALSE(i.contains(p4));
  for (LayerId c = 0; c < s.size(); ++c)
    if (s.layer(c).dimension() == 1) CHECK(i.contains(c));
}

TEST_CASE("factors") {
  const LayerPoset s(squares());
  const BuildingSet i = irreducible_layers(s);
  const LayerId p3 = find_point(s, tv({{0, 1}, {1, 2}}));
  const LayerId h10 = find_layer(s, {iv({1, 0})}, tv({{0, 1}}));
  const LayerId h01 = find_layer(s, {iv({0, 1})}, tv({{1, 2}}));
  CHECK(factors(s, p3, i) == std::vector<LayerId>{std::min(h10, h01), std::max(h10, h01)});
  for (LayerId c : i.members()) CHECK(factors(s, c, i) == std::vector<LayerId>{c});
  const LayerPoset d(diagonals());
  CHECK(factors(d, 2, irreducible_layers(d)) == std::vector<LayerId>{2});
  CHECK_THROWS_AS(factors(d, 9, irreducible_layers(d)), Error);
}

TEST_CASE("custom building sets") {
  const LayerPoset s(squares());
  const BuildingSet all = BuildingSet::custom(s, [&] {
    std::vector<LayerId> v;
    for (LayerId c = 0; c < s.size(); ++c) v.push_back(c);
    return v;
  }());
  CHECK(all.size() == s.size());
  CHECK(all.flavor() == BuildingSet::Flavor::kCustom);
  // Without p1 the four hypersurfaces through it cannot decompose it.
  std::vector<LayerId> missing = irreducible_layers(s).members();
  missing.erase(std::find(missing.begin(), missing.end(), find_point(s, tv({{0, 1}, {0, 1}}))));
  try {
    BuildingSet::custom(s, missing);
    FAIL("expected InvalidBuildingSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidBuildingSet);
  }
}

TEST_CASE("finest integral decomposition against all partitions") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::size_t> rank(1, 3), count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = random_vectors(rng, rank(rng), count(rng));
    const auto ref = oracle::finest_integral(v);
    CHECK(ref.minima == 1);
    CHECK(finest_integral_decomposition(v) == ref.finest);
    CHECK(finest_complex_decomposition(v) ==
          [&] {
            Partition best = trivial_partition(v.size());
            for (const Partition& p : oracle::all_partitions(v.size()))
              if (oracle::complex_decomposition(v, p) && p.blocks.size() > best.blocks.size())
                best = p;
            return best;
          }());
    CHECK(is_z_irreducible(v) == oracle::z_irreducible(v));
    CHECK(is_c_irreducible(v) == oracle::c_irreducible(v));
  }
}

TEST_CASE("decomposition laws on random sets") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> rank(1, 3), count(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = random_vectors(rng, rank(rng), count(rng));
    const auto parts = oracle::all_partitions(v.size());
    for (const Partition& p : parts) {
      const bool integral = is_integral_decomposition(v, p);
      CHECK(integral == oracle::integral_decomposition(v, p));
      CHECK(is_complex_decomposition(v, p) == oracle::complex_decomposition(v, p));
      if (integral) CHECK(is_complex_decomposition(v, p));
      if (!integral) continue;
      // Irreducible subsets stay inside one block.
      for (std::size_t mask = 1; mask < (1u << v.size()); ++mask) {
        std::vector<IntVector> sub;
        IndexSet idx;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (mask >> i & 1) {
            sub.push_back(v[i]);
            idx.push_back(i);
          }
        if (!oracle::z_irreducible(sub)) continue;
        bool inside = false;
        for (const auto& b : p.blocks)
          inside = inside || std::includes(b.begin(), b.end(), idx.begin(), idx.end());
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("irreducible layers and factors on random arrangements") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const LayerPoset poset(random_arrangement(rng, 1 + trial % 3, 5));
    const BuildingSet g = irreducible_layers(poset);
    CHECK(g.members() == oracle::irreducible_members(poset));
    for (LayerId c = 0; c < poset.size(); ++c) {
      const auto f = factors(poset, c, g);
      CHECK(f == oracle::factors(poset, g.members(), c));
      // The factor lattices form a direct sum whose saturation is that of c.
      Sublattice sum(poset.rank());
      std::size_t ranks = 0;
      for (LayerId x : f) {
        sum = sum + poset.layer(x).lattice();
        ranks += poset.layer(x).lattice().rank();
      }
      CHECK(ranks == sum.rank());
      CHECK(sum == poset.layer(c).lattice());
    }
  }
}
