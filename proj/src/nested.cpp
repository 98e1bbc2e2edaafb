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

#include "toricwm/nested.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricwm {

bool NestedSet::contains(LayerId id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

NestedSetComplex::NestedSetComplex(const LayerPoset& poset, BuildingSet g)
    : poset_(&poset), g_(std::move(g)) {
  factors_.reserve(poset.size());
  for (LayerId c = 0; c < poset.size(); ++c) factors_.push_back(factors(poset, c, g_));
  for (LayerId p : poset.points()) {
    auto& table = flats_[p];
    for (LayerId c = 0; c < poset.size(); ++c)
      if (poset.leq(p, c)) table.emplace(poset.layer(c).support(), c);
  }
}

std::optional<LayerId> NestedSetComplex::layer_of_flat(LayerId p, const IndexSet& flat) const {
  auto it = flats_.find(p);
  if (it == flats_.end()) {
    throw Error(ErrorCode::kNotAPoint, "layer id " + std::to_string(p));
  }
  auto jt = it->second.find(flat);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::vector<LayerId> NestedSetComplex::members_through(LayerId p) const {
  std::vector<LayerId> out;
  for (LayerId c : g_.members())
    if (poset_->leq(p, c)) out.push_back(c);
  return out;
}

void NestedSetComplex::check_members(const std::vector<LayerId>& members) const {
  for (LayerId c : members)
    if (!g_.contains(c)) {
      throw Error(ErrorCode::kNotInBuildingSet,
                  "layer id " + std::to_string(c) + " is not in the building set");
    }
}

bool NestedSetComplex::nested_at(LayerId p, const std::vector<LayerId>& members) const {
  for (LayerId c : members)
    if (!poset_->leq(p, c)) return false;
  const std::size_t k = members.size();
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    std::vector<LayerId> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) chosen.push_back(members[i]);
    if (chosen.size() < 2) continue;
    bool antichain = true;
    for (std::size_t a = 0; a < chosen.size() && antichain; ++a)
      for (std::size_t b = 0; b < chosen.size() && antichain; ++b)
        if (a != b && poset_->leq(chosen[a], chosen[b])) antichain = false;
    if (!antichain) continue;
    // The union must be a flat whose G-decomposition is exactly `chosen`.
    IndexSet flat;
    for (LayerId c : chosen) {
      const IndexSet& s = poset_->layer(c).support();
      flat.insert(flat.end(), s.begin(), s.end());
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    auto e = layer_of_flat(p, flat);
    if (!e) return false;
    std::vector<LayerId> f = factors_of(*e);
    std::sort(chosen.begin(), chosen.end());
    if (f != chosen) return false;
  }
  return true;
}

std::optional<NestedSet> NestedSetComplex::check(std::vector<LayerId> members) const {
  check_members(members);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) return NestedSet{};
  for (LayerId p : poset_->points()) {
    if (!nested_at(p, members)) continue;
    NestedSet s{members, std::nullopt, std::nullopt};
    // Prefix intersections in order of decreasing dimension give a flag
    // whose G-factors include every member.
    std::vector<LayerId> order = members;
    std::stable_sort(order.begin(), order.end(), [&](LayerId a, LayerId b) {
      return poset_->layer(a).dimension() > poset_->layer(b).dimension();
    });
    std::vector<LayerId> descending;
    IndexSet flat;
    for (LayerId c : order) {
      const IndexSet& sup = poset_->layer(c).support();
      flat.insert(flat.end(), sup.begin(), sup.end());
      std::sort(flat.begin(), flat.end());
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      auto d = layer_of_flat(p, flat);
      if (!d) throw std::logic_error("prefix union of a nested set is not a flat");
      if (descending.empty() || descending.back() != *d) descending.push_back(*d);
    }
    s.witness = Flag{std::vector<LayerId>(descending.rbegin(), descending.rend())};
    s.center = center(*this, s);
    return s;
  }
  return std::nullopt;
}

std::vector<NestedSet> NestedSetComplex::maximal_at(LayerId p) const {
  if (!poset_->layer(p).is_point()) {
    throw Error(ErrorCode::kNotAPoint, describe(poset_->layer(p)));
  }
  const std::vector<LayerId> cand = members_through(p);
  std::vector<NestedSet> out;
  std::vector<LayerId> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    bool extendable = false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (std::find(current.begin(), current.end(), cand[i]) != current.end()) continue;
      current.push_back(cand[i]);
      const bool ok = nested_at(p, current);
      if (ok) {
        extendable = true;
        if (i >= start) self(self, i + 1);
      }
      current.pop_back();
    }
    if (!extendable && !current.empty()) {
      NestedSet s{current, std::nullopt, p};
      std::sort(s.members.begin(), s.members.end());
      out.push_back(std::move(s));
    }
  };
  rec(rec, 0);
  for (auto& s : out) {
    auto full = check(s.members);
    s.witness = full->witness;
  }
  std::sort(out.begin(), out.end(),
            [](const NestedSet& a, const NestedSet& b) { return a.members < b.members; });
  return out;
}

std::vector<NestedSet> NestedSetComplex::maximal() const {
  std::vector<NestedSet> out;
  for (LayerId p : poset_->points())
    for (auto& s : maximal_at(p)) out.push_back(std::move(s));
  return out;
}

std::vector<NestedSet> NestedSetComplex::all_nested(std::optional<LayerId> p) const {
  const std::vector<LayerId> cand = p ? members_through(*p) : g_.members();
  std::vector<NestedSet> out;
  std::vector<LayerId> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < cand.size(); ++i) {
      current.push_back(cand[i]);
      if (auto s = check(current)) {
        out.push_back(std::move(*s));
        self(self, i + 1);
      }
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const NestedSet& a, const NestedSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::optional<NestedSet> is_nested(const LayerPoset& poset, const BuildingSet& g,
                                   const std::vector<LayerId>& members) {
  return NestedSetComplex(poset, g).check(members);
}

LayerId center(const NestedSetComplex& complex, const NestedSet& s) {
  const LayerPoset& poset = complex.poset();
  if (s.members.empty()) throw Error(ErrorCode::kNotNested, "empty nested set has no center");
  std::optional<LayerId> through;
  for (LayerId p : poset.points())
    if (complex.nested_at(p, s.members)) {
      through = p;
      break;
    }
  if (!through) throw Error(ErrorCode::kNotNested, "members do not form a nested set");
  Sublattice sum(poset.rank());
  for (LayerId c : s.members) sum = sum + poset.layer(c).lattice();
  Layer meet = layer_through(poset.arrangement(), saturate(sum), poset.layer(*through).point());
  return poset.id_of(meet);
}

std::vector<NestedSet> enumerate_maximal(const LayerPoset& poset, LayerId p,
                                         const BuildingSet& g) {
  if (p >= poset.size() || !poset.layer(p).is_point()) {
    throw Error(ErrorCode::kNotAPoint, "layer id " + std::to_string(p));
  }
  return NestedSetComplex(poset, g).maximal_at(p);
}

LayerId s_core(const LayerPoset& poset, const NestedSet& s, LayerId c) {
  if (s.center && !poset.leq(*s.center, c)) {
    throw Error(ErrorCode::kNoElementContained, "layer does not contain the center");
  }
  std::vector<LayerId> inside;
  for (LayerId d : s.members)
    if (poset.leq(d, c)) inside.push_back(d);
  if (inside.empty()) throw Error(ErrorCode::kNoElementContained, "no member inside the layer");
  for (LayerId d : inside)
    if (std::all_of(inside.begin(), inside.end(), [&](LayerId e) { return poset.leq(e, d); }))
      return d;
  throw std::logic_error("members inside a layer have no maximum");
}

LayerId successor(const LayerPoset& poset, const NestedSet& s, LayerId c) {
  if (!s.contains(c)) {
    throw Error(ErrorCode::kInvalidIndex, "layer id " + std::to_string(c) + " is not a member");
  }
  std::vector<LayerId> inside;
  for (LayerId d : s.members)
    if (poset.less(d, c)) inside.push_back(d);
  if (inside.empty()) throw Error(ErrorCode::kIsMinimal, "layer id " + std::to_string(c));
  for (LayerId d : inside)
    if (std::all_of(inside.begin(), inside.end(), [&](LayerId e) { return poset.leq(e, d); }))
      return d;
  throw std::logic_error("members below a member have no maximum");
}

}  // namespace toricwm
