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

#ifndef TORICWM_ARRANGEMENT_HPP
#define TORICWM_ARRANGEMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricwm/lattice.hpp"

namespace toricwm {

/// The hypersurface {t : lambda(t) = exp(2 pi i r)} of the torus.
struct WeightedCharacter {
  IntVector lambda;
  TorsionValue constant;

  friend bool operator==(const WeightedCharacter& a,
                         const WeightedCharacter& b) {
    return a.lambda == b.lambda && a.constant == b.constant;
  }
};

std::string to_string(const WeightedCharacter& c);

/// A toric arrangement in (C^*)^n. Every character is primitive and the
/// characters span a finite-index sublattice of Z^n.
class Arrangement {
 public:
  Arrangement(std::size_t rank, std::vector<WeightedCharacter> characters);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return characters_.size(); }
  const std::vector<WeightedCharacter>& characters() const { return characters_; }
  const WeightedCharacter& operator[](std::size_t i) const { return characters_[i]; }

 private:
  std::size_t rank_;
  std::vector<WeightedCharacter> characters_;
};

/// Splits every non-primitive (d * lambda, r) into the d pairs
/// (lambda, (r + i) / d), i = 0..d-1, keeping input order and dropping
/// repeats.
Arrangement normalize(std::size_t rank, const std::vector<WeightedCharacter>& raw);

using IndexSet = std::vector<std::size_t>;

std::string to_string(const IndexSet& s);

/// A connected component of an intersection of hypersurfaces: the saturated
/// lattice of characters constant on it, together with their values.
class Layer {
 public:
  /// `lattice` must be saturated; `values` are taken on its Hermite rows.
  Layer(Sublattice lattice, TorsionVector values, IndexSet support);

  const Sublattice& lattice() const { return lattice_; }
  const TorsionVector& values() const { return values_; }
  /// Indices of arrangement characters whose hypersurface contains the layer.
  const IndexSet& support() const { return support_; }
  std::size_t dimension() const { return lattice_.ambient_rank() - lattice_.rank(); }
  bool is_point() const { return dimension() == 0; }

  /// Canonical torsion point lying on the layer; for a point layer these are
  /// its coordinates.
  const TorsionVector& point() const { return point_; }

  /// Constant value of lambda on the layer, if lambda is constant there.
  std::optional<TorsionValue> value_of(const IntVector& lambda) const;
  /// `other` is a subset of this layer.
  bool contains(const Layer& other) const;
  bool contains_point(const TorsionVector& phi) const;

  friend bool operator==(const Layer& a, const Layer& b) {
    return a.lattice_ == b.lattice_ && a.values_ == b.values_;
  }

 private:
  Sublattice lattice_;
  TorsionVector values_;
  IndexSet support_;
  TorsionVector point_;
};

/// Report order: dimension descending, then Hermite rows (integers ordered
/// 0, 1, -1, 2, -2, ...), then values ascending.
bool canonical_less(const Layer& a, const Layer& b);

struct CanonicalLess {
  bool operator()(const Layer& a, const Layer& b) const { return canonical_less(a, b); }
};

/// "(rows ; values ; dimension ; support)".
std::string describe(const Layer& layer);

/// Component of {t : mu(t) = mu(phi) for mu in `saturated`} through phi,
/// with support computed against `arr`.
Layer layer_through(const Arrangement& arr, const Sublattice& saturated,
                    const TorsionVector& phi);

/// Connected components of the intersection of the selected hypersurfaces,
/// in canonical order. Empty when the intersection is empty.
std::vector<Layer> layer_components(const Arrangement& arr, const IndexSet& subset);

using LayerId = std::size_t;

/// All layers of an arrangement ordered by inclusion. Layer ids are indices
/// in canonical order. The ambient torus is not a layer.
class LayerPoset {
 public:
  explicit LayerPoset(Arrangement arr);

  const Arrangement& arrangement() const { return arr_; }
  std::size_t rank() const { return arr_.rank(); }
  std::size_t size() const { return layers_.size(); }
  const std::vector<Layer>& layers() const { return layers_; }
  const Layer& layer(LayerId id) const { return layers_.at(id); }

  /// Layer a is contained in layer b.
  bool leq(LayerId a, LayerId b) const { return leq_[a * layers_.size() + b]; }
  bool less(LayerId a, LayerId b) const { return a != b && leq(a, b); }

  /// 0-dimensional layers, sorted by torsion coordinates.
  const std::vector<LayerId>& points() const { return points_; }
  /// Cover relations (a, b): a is a maximal layer strictly inside b.
  std::vector<std::pair<LayerId, LayerId>> hasse_edges() const;

  std::optional<LayerId> find(const Layer& layer) const;
  /// Throws NotInPoset.
  LayerId id_of(const Layer& layer) const;

 private:
  Arrangement arr_;
  std::vector<Layer> layers_;
  std::vector<bool> leq_;
  std::vector<LayerId> points_;
};

LayerPoset build_poset(const Arrangement& arr);
std::vector<Layer> points(const Arrangement& arr);

/// Indices of characters whose hypersurface passes through the point p.
IndexSet localized(const Arrangement& arr, const Layer& p);
/// Closure of `subset` inside the localized set of p: every localized
/// character in the rational span of the selection.
IndexSet closure(const Arrangement& arr, const Layer& p, const IndexSet& subset);
/// Flats of the localized set of p, including the empty set; sorted by size,
/// then lexicographically.
std::vector<IndexSet> complete_subsets(const Arrangement& arr, const Layer& p);
/// The unique layer through p whose localized support is `a`.
Layer layer_from_complete_set(const Arrangement& arr, const Layer& p,
                              const IndexSet& a);

}  // namespace toricwm

#endif  // TORICWM_ARRANGEMENT_HPP
