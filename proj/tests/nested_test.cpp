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
#include <functional>
#include <random>
#include <set>

#include "oracle.hpp"
#include "support.hpp"

using namespace toricwm;
using namespace toricwm::testing;

namespace {

std::vector<std::vector<LayerId>> subsets_up_to(const std::vector<LayerId>& g, std::size_t k) {
  std::vector<std::vector<LayerId>> out;
  std::vector<LayerId> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < g.size(); ++i) {
      cur.push_back(g[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<LayerId> minimal_members(const LayerPoset& poset, const std::vector<LayerId>& s) {
  std::vector<LayerId> out;
  for (LayerId c : s)
    if (std::none_of(s.begin(), s.end(), [&](LayerId d) { return poset.less(d, c); }))
      out.push_back(c);
  return out;
}

// Witness flags are strictly increasing and their factors cover the set.
void check_witness(const NestedSetComplex& complex, const NestedSet& s) {
  REQUIRE(s.witness);
  const auto& chain = s.witness->chain;
  REQUIRE_FALSE(chain.empty());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(complex.poset().less(chain[i], chain[i + 1]));
  std::set<LayerId> covered;
  for (LayerId c : chain)
    for (LayerId f : complex.factors_of(c)) covered.insert(f);
  for (LayerId m : s.members) CHECK(covered.count(m) == 1);
}

struct Diagonals {
  LayerPoset poset{diagonals()};
  NestedSetComplex complex{poset, irreducible_layers(poset)};
  LayerId h = 0, hbar = 1;
  LayerId p1 = find_point(poset, tv({{0, 1}, {0, 1}}));
  LayerId p2 = find_point(poset, tv({{1, 2}, {1, 2}}));
};

}  // namespace

TEST_CASE("nestedness in the two-diagonal arrangement") {
  Diagonals d;
  CHECK_FALSE(d.complex.check({d.h, d.hbar}));
  const auto s = d.complex.check({d.p1, d.h});
  REQUIRE(s);
  CHECK(s->witness->chain == std::vector<LayerId>{d.p1, d.h});
  CHECK(*s->center == d.p1);
  for (LayerId c = 0; c < 4; ++c) {
    const auto one = d.complex.check({c});
    REQUIRE(one);
    CHECK(*one->center == c);
  }
  CHECK_FALSE(d.complex.check({d.p1, d.p2}));
  CHECK(is_nested(d.poset, irreducible_layers(d.poset), {d.p2, d.hbar}));
}

TEST_CASE("nestedness errors") {
  const LayerPoset s(squares());
  const NestedSetComplex complex(s, irreducible_layers(s));
  const LayerId p3 = find_point(s, tv({{0, 1}, {1, 2}}));
  try {
    complex.check({p3});
    FAIL("expected NotInBuildingSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInBuildingSet);
  }
  CHECK_THROWS_AS(enumerate_maximal(s, 0, irreducible_layers(s)), Error);
  Diagonals d;
  try {
    center(d.complex, NestedSet{{d.h, d.hbar}, std::nullopt, std::nullopt});
    FAIL("expected NotNested");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotNested);
  }
}

TEST_CASE("centers") {
  Diagonals d;
  CHECK(center(d.complex, *d.complex.check({d.p1, d.h})) == d.p1);
  CHECK(center(d.complex, *d.complex.check({d.hbar})) == d.hbar);
  const LayerPoset s(squares());
  const NestedSetComplex complex(s, irreducible_layers(s));
  const LayerId h10 = find_layer(s, {iv({1, 0})}, tv({{0, 1}}));
  const LayerId h01 = find_layer(s, {iv({0, 1})}, tv({{1, 2}}));
  const auto pair = complex.check({h10, h01});
  REQUIRE(pair);
  CHECK(*pair->center == find_point(s, tv({{0, 1}, {1, 2}})));
}

TEST_CASE("maximal nested sets of the examples") {
  Diagonals d;
  const auto m1 = enumerate_maximal(d.poset, d.p1, irreducible_layers(d.poset));
  REQUIRE(m1.size() == 2);
  CHECK(m1[0].members == std::vector<LayerId>{d.h, d.p1});
  CHECK(m1[1].members == std::vector<LayerId>{d.hbar, d.p1});
  CHECK(d.complex.maximal().size() == 4);

  const LayerPoset s(squares());
  const BuildingSet g = irreducible_layers(s);
  const LayerId p1 = find_point(s, tv({{0, 1}, {0, 1}}));
  const LayerId p3 = find_point(s, tv({{0, 1}, {1, 2}}));
  const auto at_p3 = enumerate_maximal(s, p3, g);
  REQUIRE(at_p3.size() == 1);
  const LayerId h10 = find_layer(s, {iv({1, 0})}, tv({{0, 1}}));
  const LayerId h01 = find_layer(s, {iv({0, 1})}, tv({{1, 2}}));
  CHECK(at_p3[0].members == std::vector<LayerId>{std::min(h10, h01), std::max(h10, h01)});
  const auto at_p1 = enumerate_maximal(s, p1, g);
  REQUIRE(at_p1.size() == 4);
  for (const NestedSet& n : at_p1) {
    CHECK(n.contains(p1));
    CHECK(s.layer(n.members[0]).dimension() == 1);
  }
}

TEST_CASE("cores and successors") {
  Diagonals d;
  const NestedSet s = *d.complex.check({d.p1, d.h});
  CHECK(s_core(d.poset, s, d.hbar) == d.p1);
  CHECK(s_core(d.poset, s, d.h) == d.h);
  CHECK(s_core(d.poset, s, d.p1) == d.p1);
  CHECK(successor(d.poset, s, d.h) == d.p1);
  try {
    successor(d.poset, s, d.p1);
    FAIL("expected IsMinimal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIsMinimal);
  }
  CHECK_THROWS_AS(s_core(d.poset, s, d.p2), Error);

  // A three-step chain needs a building set with lines in it.
  const LayerPoset c(Arrangement(3, {wc({1, 0, 0}), wc({0, 1, 0}), wc({0, 0, 1})}));
  std::vector<LayerId> all(c.size());
  for (LayerId i = 0; i < c.size(); ++i) all[i] = i;
  const NestedSetComplex complex(c, BuildingSet::custom(c, all));
  const LayerId plane = find_layer(c, {iv({1, 0, 0})}, tv({{0, 1}}));
  const LayerId line = find_layer(c, {iv({1, 0, 0}), iv({0, 1, 0})}, tv({{0, 1}, {0, 1}}));
  const LayerId point = c.points()[0];
  const auto chain = complex.check({plane, line, point});
  REQUIRE(chain);
  CHECK(successor(c, *chain, plane) == line);
  CHECK(successor(c, *chain, line) == point);
  // With the irreducible building set only the planes remain.
  CHECK(irreducible_layers(c).size() == 3);
  CHECK(NestedSetComplex(c, irreducible_layers(c)).maximal().size() == 1);
}

TEST_CASE("nestedness against flag search") {
  std::mt19937_64 rng(47);
  std::vector<Arrangement> cases{squares(), diagonals()};
  for (int i = 0; i < 20; ++i) cases.push_back(random_arrangement(rng, 1 + i % 3, 5));
  for (const Arrangement& a : cases) {
    const LayerPoset poset(a);
    const BuildingSet g = irreducible_layers(poset);
    const NestedSetComplex complex(poset, g);
    const auto flags = oracle::flag_factor_sets(poset, g.members());
    for (const auto& s : subsets_up_to(g.members(), 4)) {
      const auto got = complex.check(s);
      CHECK(got.has_value() == oracle::nested_by_flags(flags, s));
      if (got) check_witness(complex, *got);
    }
  }
}

TEST_CASE("laws of maximal nested sets") {
  std::mt19937_64 rng(53);
  std::vector<Arrangement> cases{squares(), diagonals()};
  for (int i = 0; i < 20; ++i) cases.push_back(random_arrangement(rng, 1 + i % 3, 5));
  for (const Arrangement& a : cases) {
    const LayerPoset poset(a);
    const NestedSetComplex complex(poset, irreducible_layers(poset));
    std::set<std::vector<LayerId>> seen;
    std::size_t total = 0;
    for (LayerId p : poset.points()) {
      const auto mp = complex.maximal_at(p);
      CHECK_FALSE(mp.empty());
      for (const NestedSet& s : mp) {
        ++total;
        CHECK(seen.insert(s.members).second);
        CHECK(s.members.size() == a.rank());
        CHECK(*s.center == p);
        CHECK(center(complex, s) == p);
        check_witness(complex, s);
        // Rank additivity over the minimal members, with a saturated sum.
        Sublattice sum(a.rank());
        std::size_t ranks = 0;
        for (LayerId c : minimal_members(poset, s.members)) {
          sum = sum + poset.layer(c).lattice();
          ranks += poset.layer(c).lattice().rank();
        }
        CHECK(ranks == poset.layer(p).lattice().rank());
        CHECK(sum == poset.layer(p).lattice());
      }
    }
    CHECK(complex.maximal().size() == total);
    // Maximal means no member of G can be added.
    for (const NestedSet& s : complex.maximal())
      for (LayerId c : complex.building_set().members()) {
        if (s.contains(c)) continue;
        auto bigger = s.members;
        bigger.push_back(c);
        CHECK_FALSE(complex.check(bigger));
      }
  }
}

TEST_CASE("all nested sets") {
  Diagonals d;
  const auto all = d.complex.all_nested();
  // Four singletons and the four point-hypersurface pairs.
  CHECK(all.size() == 8);
  CHECK(d.complex.all_nested(d.p1).size() == 5);
}
