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

#ifndef TORICWM_NESTED_HPP
#define TORICWM_NESTED_HPP

#include <map>
#include <optional>
#include <vector>

#include "toricwm/decomposition.hpp"

namespace toricwm {

/// Strictly increasing chain of layers, smallest first.
struct Flag {
  std::vector<LayerId> chain;
};

struct NestedSet {
  std::vector<LayerId> members;  // sorted ids
  std::optional<Flag> witness;
  std::optional<LayerId> center;

  bool contains(LayerId id) const;
};

/// Nested-set queries against a fixed poset and building set. Factors of
/// every layer and the flats through every point are computed once.
class NestedSetComplex {
 public:
  NestedSetComplex(const LayerPoset& poset, BuildingSet g);

  const LayerPoset& poset() const { return *poset_; }
  const BuildingSet& building_set() const { return g_; }
  const std::vector<LayerId>& factors_of(LayerId c) const { return factors_.at(c); }
  /// Layer through p whose support is `flat`, if the flat is complete.
  std::optional<LayerId> layer_of_flat(LayerId p, const IndexSet& flat) const;

  /// Members of G containing the point p.
  std::vector<LayerId> members_through(LayerId p) const;

  /// Incomparable-union criterion localized at p. Members must lie in G.
  bool nested_at(LayerId p, const std::vector<LayerId>& members) const;
  /// Nestedness with a witnessing flag and the center when nested; throws
  /// NotInBuildingSet.
  std::optional<NestedSet> check(std::vector<LayerId> members) const;

  /// All maximal nested sets with center p, sorted.
  std::vector<NestedSet> maximal_at(LayerId p) const;
  /// Every maximal nested set, grouped by center in point order.
  std::vector<NestedSet> maximal() const;
  /// All nonempty nested sets (optionally only those through p), sorted.
  std::vector<NestedSet> all_nested(std::optional<LayerId> p = std::nullopt) const;

 private:
  void check_members(const std::vector<LayerId>& members) const;

  const LayerPoset* poset_;
  BuildingSet g_;
  std::vector<std::vector<LayerId>> factors_;
  std::map<LayerId, std::map<IndexSet, LayerId>> flats_;  // point -> support -> layer
};

/// Free-function forms; each builds a NestedSetComplex.
std::optional<NestedSet> is_nested(const LayerPoset& poset, const BuildingSet& g,
                                   const std::vector<LayerId>& members);
/// Intersection of the members; throws NotNested.
LayerId center(const NestedSetComplex& complex, const NestedSet& s);
std::vector<NestedSet> enumerate_maximal(const LayerPoset& poset, LayerId p,
                                         const BuildingSet& g);

/// Largest member of s contained in c (c must contain the center of s).
LayerId s_core(const LayerPoset& poset, const NestedSet& s, LayerId c);
/// Largest member of s strictly inside the member c; throws IsMinimal.
LayerId successor(const LayerPoset& poset, const NestedSet& s, LayerId c);

}  // namespace toricwm

#endif  // TORICWM_NESTED_HPP
