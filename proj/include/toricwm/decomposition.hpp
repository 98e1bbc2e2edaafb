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

#ifndef TORICWM_DECOMPOSITION_HPP
#define TORICWM_DECOMPOSITION_HPP

#include <vector>

#include "toricwm/arrangement.hpp"

namespace toricwm {

/// A set partition of {0, ..., size-1}. Blocks are sorted internally and
/// ordered by their smallest element.
struct Partition {
  std::vector<IndexSet> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Validates and normalizes; throws InvalidPartition.
Partition make_partition(std::vector<IndexSet> blocks, std::size_t ground_size);
Partition trivial_partition(std::size_t ground_size);
std::string to_string(const Partition& p);

/// Block saturations form a direct sum equal to the saturation of the whole.
bool is_integral_decomposition(const std::vector<IntVector>& vectors, const Partition& p);
/// Block ranks add up to the rank of the whole.
bool is_complex_decomposition(const std::vector<IntVector>& vectors, const Partition& p);

/// Connected components of the linear matroid of `vectors` over Q.
Partition finest_complex_decomposition(const std::vector<IntVector>& vectors);
/// The unique decomposition into Z-irreducible blocks.
Partition finest_integral_decomposition(const std::vector<IntVector>& vectors);

bool is_z_irreducible(const std::vector<IntVector>& vectors);
bool is_c_irreducible(const std::vector<IntVector>& vectors);

/// Characters of the support of a layer, in support order.
std::vector<IntVector> layer_characters(const LayerPoset& poset, LayerId id);

/// A family of layers in which every layer is the transversal intersection
/// of its minimal members containing it.
class BuildingSet {
 public:
  enum class Flavor { kIrreducible, kCustom };

  /// Checks the defining decomposition property on every layer of the
  /// poset; throws InvalidBuildingSet.
  static BuildingSet custom(const LayerPoset& poset, std::vector<LayerId> members);

  const std::vector<LayerId>& members() const { return members_; }
  Flavor flavor() const { return flavor_; }
  bool contains(LayerId id) const;
  std::size_t size() const { return members_.size(); }

 private:
  friend BuildingSet irreducible_layers(const LayerPoset& poset);
  BuildingSet(std::vector<LayerId> members, Flavor flavor);

  std::vector<LayerId> members_;
  Flavor flavor_;
};

/// The building set of Z-irreducible layers.
BuildingSet irreducible_layers(const LayerPoset& poset);

/// G-factors of a layer: the minimal members of G containing it. Throws
/// NotInPoset, or InvalidBuildingSet when they fail to decompose it.
std::vector<LayerId> factors(const LayerPoset& poset, LayerId c, const BuildingSet& g);

}  // namespace toricwm

#endif  // TORICWM_DECOMPOSITION_HPP
