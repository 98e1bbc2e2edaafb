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
#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "support.hpp"

using namespace toricwm;
using namespace toricwm::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_CASE("normalize splits non-primitive characters") {
  const Arrangement a = squares();
  const std::vector<WeightedCharacter> expect{wc({1, 0}, 0, 1), wc({1, 0}, 1, 2),
                                              wc({0, 1}, 0, 1), wc({0, 1}, 1, 2),
                                              wc({1, 1}),       wc({1, -1})};
  CHECK(a.characters() == expect);

  const Arrangement d = diagonals();
  CHECK(normalize(2, d.characters()).characters() == d.characters());

  const Arrangement t = normalize(2, {wc({3, 0}), wc({0, 1})});
  REQUIRE(t.size() == 4);
  CHECK(t[0] == wc({1, 0}, 0, 1));
  CHECK(t[1] == wc({1, 0}, 1, 3));
  CHECK(t[2] == wc({1, 0}, 2, 3));

  // (2,0);0 contains (1,0);0, which is merged.
  CHECK(normalize(2, {wc({1, 0}), wc({2, 0}), wc({0, 1})}).size() == 3);
  // A constant r splits into (r + i) / d.
  const Arrangement h = normalize(1, {wc({2}, 1, 3)});
  REQUIRE(h.size() == 2);
  CHECK(h[0].constant == TorsionValue(1, 6));
  CHECK(h[1].constant == TorsionValue(4, 6));
}

TEST_CASE("normalize and construction errors") {
  CHECK(code_of([] { normalize(2, {wc({0, 0}), wc({1, 0})}); }) == ErrorCode::kZeroVector);
  CHECK(code_of([] { normalize(2, {wc({1, 1}), wc({2, 2}, 1, 2)}); }) ==
        ErrorCode::kInfiniteIndex);
  try {
    normalize(2, {wc({1, 1})});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("restrict") != std::string::npos);
  }
  CHECK(code_of([] { Arrangement(2, {wc({2, 0}), wc({0, 1})}); }) == ErrorCode::kNotPrimitive);
  CHECK(code_of([] { Arrangement(2, {wc({1, 0}), wc({1, 0}), wc({0, 1})}); }) ==
        ErrorCode::kDuplicateCharacter);
  CHECK(code_of([] { Arrangement(2, {wc({1, 0, 0}), wc({0, 1})}); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("layer components") {
  const Arrangement d = diagonals();
  const auto both = layer_components(d, {0, 1});
  REQUIRE(both.size() == 2);
  CHECK(both[0].is_point());
  CHECK(both[0].point() == tv({{0, 1}, {0, 1}}));
  CHECK(both[1].point() == tv({{1, 2}, {1, 2}}));

  const auto one = layer_components(d, {0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].dimension() == 1);

  const Arrangement s = squares();
  const auto p3 = layer_components(s, {0, 3});
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].point() == tv({{0, 1}, {1, 2}}));
  CHECK(p3[0].support() == IndexSet{0, 3});

  CHECK(code_of([&] { layer_components(d, {}); }) == ErrorCode::kEmptySubset);
  // t = 1 and t = -1 do not meet.
  CHECK(layer_components(s, {0, 1}).empty());
}

TEST_CASE("layer poset of the examples") {
  const LayerPoset d(diagonals());
  CHECK(d.size() == 4);
  CHECK(d.points().size() == 2);
  CHECK(d.layer(0).dimension() == 1);
  CHECK(d.layer(1).dimension() == 1);

  const LayerPoset s(squares());
  CHECK(s.size() == 10);
  std::size_t hyper = 0;
  for (const Layer& l : s.layers()) hyper += l.dimension() == 1;
  CHECK(hyper == 6);
  CHECK(s.points().size() == 4);

  const LayerPoset one(Arrangement(1, {wc({1})}));
  CHECK(one.size() == 1);
  CHECK(one.points().size() == 1);
  CHECK(one.hasse_edges().empty());
}

TEST_CASE("canonical order and describe") {
  const LayerPoset d(diagonals());
  // (1,1) precedes (1,-1) because 1 sorts before -1.
  CHECK(d.layer(0).lattice().basis().row(0) == iv({1, 1}));
  CHECK(d.layer(1).lattice().basis().row(0) == iv({1, -1}));
  CHECK(describe(d.layer(0)) == "([1,1] ; [0] ; 1 ; {0})");
  for (LayerId a = 0; a + 1 < d.size(); ++a) CHECK(canonical_less(d.layer(a), d.layer(a + 1)));
  CHECK(d.id_of(d.layer(2)) == 2);
  const Layer foreign(Sublattice::span({iv({1, 0})}, 2), tv({{0, 1}}), {});
  CHECK_FALSE(d.find(foreign));
  CHECK(code_of([&] { d.id_of(foreign); }) == ErrorCode::kNotInPoset);
}

TEST_CASE("points") {
  const auto pts = points(squares());
  REQUIRE(pts.size() == 4);
  std::vector<TorsionVector> coords;
  for (const Layer& p : pts) coords.push_back(p.point());
  CHECK(coords == std::vector<TorsionVector>{tv({{0, 1}, {0, 1}}), tv({{0, 1}, {1, 2}}),
                                             tv({{1, 2}, {0, 1}}), tv({{1, 2}, {1, 2}})});
  CHECK(points(diagonals()).size() == 2);
  CHECK(points(Arrangement(1, {wc({1})})).size() == 1);
}

TEST_CASE("localized characters") {
  const Arrangement s = squares();
  const LayerPoset poset(s);
  const Layer& p1 = poset.layer(find_point(poset, tv({{0, 1}, {0, 1}})));
  const Layer& p3 = poset.layer(find_point(poset, tv({{0, 1}, {1, 2}})));
  CHECK(localized(s, p1) == IndexSet{0, 2, 4, 5});
  CHECK(localized(s, p3) == IndexSet{0, 3});
  const Arrangement d = diagonals();
  CHECK(localized(d, points(d)[0]) == IndexSet{0, 1});
  CHECK(code_of([&] { localized(s, poset.layer(0)); }) == ErrorCode::kNotAPoint);
}

TEST_CASE("complete subsets") {
  const Arrangement d = diagonals();
  const auto p1 = points(d)[0];
  CHECK(complete_subsets(d, p1) == std::vector<IndexSet>{{}, {0}, {1}, {0, 1}});
  const Arrangement one(1, {wc({1})});
  CHECK(complete_subsets(one, points(one)[0]) == std::vector<IndexSet>{{}, {0}});
  const Arrangement s = squares();
  const LayerPoset poset(s);
  CHECK(complete_subsets(s, poset.layer(find_point(poset, tv({{0, 1}, {0, 1}})))).size() == 6);
}

TEST_CASE("layer from complete set") {
  const Arrangement d = diagonals();
  const LayerPoset poset(d);
  const Layer p1 = points(d)[0];
  CHECK(layer_from_complete_set(d, p1, {0}) == poset.layer(0));
  CHECK(layer_from_complete_set(d, p1, {0, 1}) == p1);
  CHECK(code_of([&] { layer_from_complete_set(d, p1, {}); }) == ErrorCode::kNotComplete);
  const Arrangement s = squares();
  const LayerPoset sp(s);
  const Layer q1 = sp.layer(find_point(sp, tv({{0, 1}, {0, 1}})));
  // {(1,0), (0,1)} spans everything, so it is not closed at p1.
  CHECK(code_of([&] { layer_from_complete_set(s, q1, {0, 2}); }) == ErrorCode::kNotComplete);
}

TEST_CASE("flats and layers through a point correspond") {
  std::mt19937_64 rng(17);
  std::vector<Arrangement> cases{squares(), diagonals()};
  for (int i = 0; i < 25; ++i) cases.push_back(random_arrangement(rng, 1 + i % 3, 5));
  for (const Arrangement& a : cases) {
    const LayerPoset poset(a);
    for (LayerId p : poset.points()) {
      const Layer& pt = poset.layer(p);
      const IndexSet xp = localized(a, pt);
      std::set<LayerId> reached;
      for (const IndexSet& f : complete_subsets(a, pt)) {
        if (f.empty()) continue;
        const Layer c = layer_from_complete_set(a, pt, f);
        IndexSet restricted;
        std::set_intersection(c.support().begin(), c.support().end(), xp.begin(), xp.end(),
                              std::back_inserter(restricted));
        CHECK(restricted == f);
        const auto id = poset.find(c);
        REQUIRE(id);
        reached.insert(*id);
      }
      std::set<LayerId> through;
      for (LayerId c = 0; c < poset.size(); ++c)
        if (poset.leq(p, c)) through.insert(c);
      CHECK(reached == through);
    }
    // Supports are closed: the layer appears among the components of its support.
    for (const Layer& l : poset.layers()) {
      const auto comps = layer_components(a, l.support());
      CHECK(std::find(comps.begin(), comps.end(), l) != comps.end());
    }
  }
}

TEST_CASE("poset against torsion point enumeration") {
  std::mt19937_64 rng(23);
  std::vector<Arrangement> cases{squares(), diagonals()};
  for (int i = 0; i < 30; ++i) cases.push_back(random_arrangement(rng, 1 + i % 2, 5));
  for (int i = 0; i < 10; ++i) cases.push_back(random_arrangement(rng, 3, 4, 1, 2));
  std::size_t checked = 0;
  for (const Arrangement& a : cases) {
    const auto ref = oracle::point_set_poset(a, 400000);
    if (!ref) continue;
    ++checked;
    const LayerPoset poset(a);
    std::vector<std::vector<std::uint32_t>> sets;
    for (const Layer& l : poset.layers()) sets.push_back(oracle::layer_points(*ref, l, a.rank()));
    CHECK(std::set<std::vector<std::uint32_t>>(sets.begin(), sets.end()) == ref->layers);
    CHECK(sets.size() == ref->layers.size());
    for (LayerId x = 0; x < poset.size(); ++x) {
      CHECK(poset.layer(x).support() == oracle::support_of(*ref, a, sets[x]));
      for (LayerId y = 0; y < poset.size(); ++y)
        CHECK(poset.leq(x, y) ==
              std::includes(sets[y].begin(), sets[y].end(), sets[x].begin(), sets[x].end()));
    }
    // Minimal layers are points.
    for (LayerId x = 0; x < poset.size(); ++x) {
      bool minimal = true;
      for (LayerId y = 0; y < poset.size(); ++y) minimal = minimal && !poset.less(y, x);
      if (minimal) CHECK(poset.layer(x).is_point());
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("component counts against torsion point enumeration") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Arrangement a = random_arrangement(rng, 1 + trial % 3, 4);
    for (std::size_t mask = 1; mask < (1u << a.size()); ++mask) {
      IndexSet subset;
      std::vector<IntVector> rows;
      TorsionVector values;
      long N = 1;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (mask >> i & 1) {
          subset.push_back(i);
          rows.push_back(a[i].lambda);
          values.push_back(a[i].constant);
          N = std::lcm(N, a[i].constant.denominator().get_si());
        }
      N *= oracle::minor_gcd(rows).get_si();
      const std::size_t free = a.rank() - oracle::rank(rows);
      long per = 1, total = 1;
      for (std::size_t i = 0; i < free; ++i) per *= N;
      for (std::size_t i = 0; i < a.rank(); ++i) total *= N;
      if (total > 200000) continue;
      const auto pts = oracle::torsion_points(rows, values, a.rank(), N);
      CHECK(layer_components(a, subset).size() * per == pts.size());
    }
  }
}

TEST_CASE("poset does not depend on character order") {
  std::mt19937_64 rng(31);
  std::vector<Arrangement> cases{squares()};
  for (int i = 0; i < 15; ++i) cases.push_back(random_arrangement(rng, 1 + i % 3, 5));
  for (const Arrangement& a : cases) {
    auto chars = a.characters();
    std::shuffle(chars.begin(), chars.end(), rng);
    const LayerPoset p(a), q(Arrangement(a.rank(), chars));
    REQUIRE(p.size() == q.size());
    for (LayerId i = 0; i < p.size(); ++i) CHECK(p.layer(i) == q.layer(i));
    for (LayerId i = 0; i < p.size(); ++i)
      for (LayerId j = 0; j < p.size(); ++j) CHECK(p.leq(i, j) == q.leq(i, j));
    CHECK(p.points() == q.points());
  }
}
