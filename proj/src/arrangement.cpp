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

#include "toricwm/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace toricwm {

std::string to_string(const WeightedCharacter& c) {
  return to_string(c.lambda) + " ; " + c.constant.to_string();
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Arrangement

Arrangement::Arrangement(std::size_t rank, std::vector<WeightedCharacter> characters)
    : rank_(rank), characters_(std::move(characters)) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < characters_.size(); ++i) {
    const auto& c = characters_[i];
    if (c.lambda.size() != rank_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "character " + to_string(c.lambda) + " has length " +
                      std::to_string(c.lambda.size()) + ", rank is " +
                      std::to_string(rank_));
    }
    if (!is_primitive(c.lambda)) {
      throw Error(ErrorCode::kNotPrimitive,
                  "character " + to_string(c) + " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (characters_[j] == c) {
        throw Error(ErrorCode::kDuplicateCharacter, to_string(c));
      }
    rows.push_back(c.lambda);
  }
  if (Sublattice::span(rows, rank_).rank() < rank_) {
    throw Error(ErrorCode::kInfiniteIndex,
                "the characters span a sublattice of rank " +
                    std::to_string(Sublattice::span(rows, rank_).rank()) +
                    " < " + std::to_string(rank_) +
                    "; restrict the ambient lattice to the rational span of "
                    "the characters and re-submit in those coordinates");
  }
}

Arrangement normalize(std::size_t rank, const std::vector<WeightedCharacter>& raw) {
  std::vector<WeightedCharacter> out;
  auto add = [&out](WeightedCharacter c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  for (const auto& c : raw) {
    if (c.lambda.size() != rank) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "character " + to_string(c.lambda) + " in rank " + std::to_string(rank));
    }
    if (is_zero(c.lambda)) throw Error(ErrorCode::kZeroVector, to_string(c));
    const Integer d = content(c.lambda);
    if (d == 1) {
      add(c);
      continue;
    }
    IntVector prim = c.lambda;
    for (auto& x : prim) x /= d;
    for (Integer i = 0; i < d; ++i) {
      add({prim, TorsionValue(Rational(c.constant.value() + Rational(i)) / Rational(d))});
    }
  }
  return Arrangement(rank, std::move(out));
}

// ---------------------------------------------------------------------------
// Layer

Layer::Layer(Sublattice lattice, TorsionVector values, IndexSet support)
    : lattice_(std::move(lattice)),
      values_(std::move(values)),
      support_(std::move(support)),
      point_(canonical_point(lattice_, values_)) {}

std::optional<TorsionValue> Layer::value_of(const IntVector& lambda) const {
  auto coords = lattice_.coordinates(lambda);
  if (!coords) return std::nullopt;
  Rational s = 0;
  for (std::size_t i = 0; i < coords->size(); ++i)
    s += Rational((*coords)[i]) * values_[i].value();
  return TorsionValue(s);
}

bool Layer::contains_point(const TorsionVector& phi) const {
  for (std::size_t i = 0; i < lattice_.rank(); ++i)
    if (!(pair(lattice_.basis().row(i), phi) == values_[i])) return false;
  return true;
}

bool Layer::contains(const Layer& other) const {
  return other.lattice_.contains(lattice_) && contains_point(other.point_);
}

namespace {

// Orders integers 0, 1, -1, 2, -2, ...
int compare_small_first(const Integer& a, const Integer& b) {
  int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  c = (c > 0) - (c < 0);
  if (c != 0) return c;
  if (a == b) return 0;
  return a > 0 ? -1 : 1;
}

}  // namespace

bool canonical_less(const Layer& a, const Layer& b) {
  if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
  const IntegerMatrix& ba = a.lattice().basis();
  const IntegerMatrix& bb = b.lattice().basis();
  for (std::size_t i = 0; i < ba.rows(); ++i)
    for (std::size_t j = 0; j < ba.cols(); ++j) {
      int c = compare_small_first(ba(i, j), bb(i, j));
      if (c != 0) return c < 0;
    }
  return a.values() < b.values();
}

std::string describe(const Layer& layer) {
  std::ostringstream out;
  out << '(';
  const IntegerMatrix& h = layer.lattice().basis();
  for (std::size_t i = 0; i < h.rows(); ++i) out << (i ? "," : "") << to_string(h.row(i));
  out << " ; [";
  for (std::size_t i = 0; i < layer.values().size(); ++i)
    out << (i ? "," : "") << layer.values()[i].to_string();
  out << "] ; " << layer.dimension() << " ; " << to_string(layer.support()) << ')';
  return out.str();
}

Layer layer_through(const Arrangement& arr, const Sublattice& saturated,
                    const TorsionVector& phi) {
  TorsionVector values;
  for (std::size_t i = 0; i < saturated.rank(); ++i)
    values.push_back(pair(saturated.basis().row(i), phi));
  IndexSet support;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (saturated.contains(arr[i].lambda) && pair(arr[i].lambda, phi) == arr[i].constant)
      support.push_back(i);
  }
  return Layer(saturated, std::move(values), std::move(support));
}

std::vector<Layer> layer_components(const Arrangement& arr, const IndexSet& subset) {
  if (subset.empty()) throw Error(ErrorCode::kEmptySubset, "layer_components");
  std::vector<IntVector> rows;
  TorsionVector constants;
  for (std::size_t i : subset) {
    if (i >= arr.size()) {
      throw Error(ErrorCode::kInvalidIndex, "character index " + std::to_string(i));
    }
    rows.push_back(arr[i].lambda);
    constants.push_back(arr[i].constant);
  }
  const IntegerMatrix m = IntegerMatrix::from_rows(rows, arr.rank());
  auto sol = solve_torsion_system(m, constants);
  std::vector<Layer> out;
  if (!sol) return out;
  const Sublattice sat = saturate(Sublattice::span(m));
  for (const auto& rep : sol->representatives) out.push_back(layer_through(arr, sat, rep));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// ---------------------------------------------------------------------------
// LayerPoset

LayerPoset::LayerPoset(Arrangement arr) : arr_(std::move(arr)) {
  // Every layer is a component of (layer) cap (hypersurface) for some
  // strictly larger layer, so a closure from the hypersurfaces reaches all.
  std::set<Layer, CanonicalLess> found;
  std::deque<Layer> queue;
  for (std::size_t i = 0; i < arr_.size(); ++i)
    for (auto& l : layer_components(arr_, {i}))
      if (found.insert(l).second) queue.push_back(std::move(l));
  while (!queue.empty()) {
    Layer current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < arr_.size(); ++i) {
      const IndexSet& sup = current.support();
      if (std::binary_search(sup.begin(), sup.end(), i)) continue;
      IndexSet extended = sup;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), i), i);
      for (auto& l : layer_components(arr_, extended))
        if (current.contains(l) && found.insert(l).second) queue.push_back(std::move(l));
    }
  }
  layers_.assign(found.begin(), found.end());
  const std::size_t n = layers_.size();
  leq_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq_[a * n + b] = layers_[b].contains(layers_[a]);
  for (std::size_t a = 0; a < n; ++a)
    if (layers_[a].is_point()) points_.push_back(a);
}

std::vector<std::pair<LayerId, LayerId>> LayerPoset::hasse_edges() const {
  std::vector<std::pair<LayerId, LayerId>> edges;
  for (LayerId a = 0; a < size(); ++a)
    for (LayerId b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (LayerId c = 0; c < size() && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

std::optional<LayerId> LayerPoset::find(const Layer& layer) const {
  auto it = std::lower_bound(layers_.begin(), layers_.end(), layer, canonical_less);
  if (it != layers_.end() && *it == layer) return static_cast<LayerId>(it - layers_.begin());
  return std::nullopt;
}

LayerId LayerPoset::id_of(const Layer& layer) const {
  auto id = find(layer);
  if (!id) throw Error(ErrorCode::kNotInPoset, describe(layer));
  return *id;
}

LayerPoset build_poset(const Arrangement& arr) { return LayerPoset(arr); }

std::vector<Layer> points(const Arrangement& arr) {
  LayerPoset poset(arr);
  std::vector<Layer> out;
  for (LayerId id : poset.points()) out.push_back(poset.layer(id));
  return out;
}

// ---------------------------------------------------------------------------
// Localization at a point

IndexSet localized(const Arrangement& arr, const Layer& p) {
  if (!p.is_point()) {
    throw Error(ErrorCode::kNotAPoint, describe(p) + " has positive dimension");
  }
  IndexSet out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (pair(arr[i].lambda, p.point()) == arr[i].constant) out.push_back(i);
  return out;
}

IndexSet closure(const Arrangement& arr, const Layer& p, const IndexSet& subset) {
  const IndexSet xp = localized(arr, p);
  std::vector<IntVector> rows;
  for (std::size_t i : subset) rows.push_back(arr[i].lambda);
  const Sublattice sat = saturate(Sublattice::span(rows, arr.rank()));
  IndexSet out;
  for (std::size_t i : xp)
    if (sat.contains(arr[i].lambda)) out.push_back(i);
  return out;
}

std::vector<IndexSet> complete_subsets(const Arrangement& arr, const Layer& p) {
  const IndexSet xp = localized(arr, p);
  std::set<IndexSet> flats{IndexSet{}};
  std::deque<IndexSet> queue{IndexSet{}};
  while (!queue.empty()) {
    IndexSet f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t e : xp) {
      if (std::binary_search(f.begin(), f.end(), e)) continue;
      IndexSet g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), e), e);
      IndexSet c = closure(arr, p, g);
      if (flats.insert(c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<IndexSet> out(flats.begin(), flats.end());
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() < b.size();
  });
  return out;
}

Layer layer_from_complete_set(const Arrangement& arr, const Layer& p, const IndexSet& a) {
  if (a.empty()) {
    throw Error(ErrorCode::kNotComplete, "the empty set corresponds to the ambient "
                                         "torus, which is not a layer");
  }
  const IndexSet xp = localized(arr, p);
  for (std::size_t i : a)
    if (!std::binary_search(xp.begin(), xp.end(), i)) {
      throw Error(ErrorCode::kNotComplete,
                  "character " + std::to_string(i) + " does not vanish at the point");
    }
  IndexSet sorted = a;
  std::sort(sorted.begin(), sorted.end());
  if (closure(arr, p, sorted) != sorted) {
    throw Error(ErrorCode::kNotComplete, to_string(sorted) + " is not a flat");
  }
  std::vector<IntVector> rows;
  for (std::size_t i : sorted) rows.push_back(arr[i].lambda);
  return layer_through(arr, saturate(Sublattice::span(rows, arr.rank())), p.point());
}

}  // namespace toricwm
