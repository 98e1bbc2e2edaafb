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

#include "toricwm/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toricwm {

Partition make_partition(std::vector<IndexSet> blocks, std::size_t ground_size) {
  std::vector<bool> seen(ground_size, false);
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::kInvalidPartition, "empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t i : b) {
      if (i >= ground_size || seen[i]) {
        throw Error(ErrorCode::kInvalidPartition,
                    "index " + std::to_string(i) + " out of range or repeated");
      }
      seen[i] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::kInvalidPartition, "blocks do not cover the ground set");
  }
  std::sort(blocks.begin(), blocks.end());
  return Partition{std::move(blocks)};
}

Partition trivial_partition(std::size_t ground_size) {
  if (ground_size == 0) return {};
  IndexSet all(ground_size);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Partition{{all}};
}

std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.blocks[i]);
  }
  return out + "}";
}

namespace {

std::size_t ambient_of(const std::vector<IntVector>& vectors) {
  return vectors.empty() ? 0 : vectors.front().size();
}

std::vector<IntVector> pick(const std::vector<IntVector>& vectors, const IndexSet& idx) {
  std::vector<IntVector> out;
  for (std::size_t i : idx) out.push_back(vectors[i]);
  return out;
}

std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t ambient) {
  return Sublattice::span(vectors, ambient).rank();
}

void check_partition(const std::vector<IntVector>& vectors, const Partition& p) {
  std::vector<IndexSet> blocks = p.blocks;
  make_partition(std::move(blocks), vectors.size());
}

// Saturation of the whole versus the lattice generated by block saturations.
bool saturations_split(const std::vector<Sublattice>& block_sats, const Sublattice& whole) {
  std::size_t rank_sum = 0;
  std::vector<IntVector> rows;
  for (const auto& s : block_sats) {
    rank_sum += s.rank();
    for (auto& r : s.basis().row_vectors()) rows.push_back(std::move(r));
  }
  if (rank_sum != whole.rank()) return false;
  return Sublattice::span(rows, whole.ambient_rank()) == whole;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Calls visit(labels) for every set partition of {0..m-1}, encoded as a
// restricted growth string.
template <typename Visit>
void for_each_set_partition(std::size_t m, Visit&& visit) {
  std::vector<std::size_t> labels(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == m) {
      visit(labels);
      return;
    }
    for (std::size_t l = 0; l <= used; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(used, l + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

bool is_integral_decomposition(const std::vector<IntVector>& vectors, const Partition& p) {
  check_partition(vectors, p);
  const std::size_t n = ambient_of(vectors);
  std::vector<Sublattice> sats;
  for (const auto& b : p.blocks) sats.push_back(saturate(Sublattice::span(pick(vectors, b), n)));
  return saturations_split(sats, saturate(Sublattice::span(vectors, n)));
}

bool is_complex_decomposition(const std::vector<IntVector>& vectors, const Partition& p) {
  check_partition(vectors, p);
  const std::size_t n = ambient_of(vectors);
  std::size_t sum = 0;
  for (const auto& b : p.blocks) sum += rank_of(pick(vectors, b), n);
  return sum == rank_of(vectors, n);
}

Partition finest_complex_decomposition(const std::vector<IntVector>& vectors) {
  const std::size_t n = ambient_of(vectors);
  const std::size_t m = vectors.size();
  // Greedy basis; the fundamental circuits with respect to any basis
  // generate the connectivity relation of the matroid.
  IndexSet basis;
  std::vector<IntVector> basis_vectors;
  for (std::size_t i = 0; i < m; ++i) {
    basis_vectors.push_back(vectors[i]);
    if (rank_of(basis_vectors, n) == basis_vectors.size()) {
      basis.push_back(i);
    } else {
      basis_vectors.pop_back();
    }
  }
  const std::size_t r = basis.size();
  UnionFind uf(m);
  for (std::size_t e = 0; e < m; ++e) {
    if (std::binary_search(basis.begin(), basis.end(), e)) continue;
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<IntVector> swapped = basis_vectors;
      swapped[k] = vectors[e];
      if (rank_of(swapped, n) == r) uf.unite(e, basis[k]);
    }
  }
  std::map<std::size_t, IndexSet> groups;
  for (std::size_t i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);
  std::vector<IndexSet> blocks;
  for (auto& [root, block] : groups) blocks.push_back(std::move(block));
  return make_partition(std::move(blocks), m);
}

Partition finest_integral_decomposition(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw Error(ErrorCode::kEmptySubset, "finest_integral_decomposition");
  const std::size_t n = ambient_of(vectors);
  // Integral blocks are unions of complex blocks; search coarsenings.
  const Partition complex = finest_complex_decomposition(vectors);
  const std::size_t m = complex.blocks.size();
  if (m == 1) return complex;

  const Sublattice whole = saturate(Sublattice::span(vectors, n));
  std::map<std::vector<std::size_t>, Sublattice> memo;
  auto union_saturation = [&](const std::vector<std::size_t>& parts) -> const Sublattice& {
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
    IndexSet idx;
    for (std::size_t k : parts) idx.insert(idx.end(), complex.blocks[k].begin(), complex.blocks[k].end());
    return memo.emplace(parts, saturate(Sublattice::span(pick(vectors, idx), n))).first->second;
  };

  std::size_t best_count = 0;
  std::size_t ties = 0;
  std::vector<std::size_t> best;
  for_each_set_partition(m, [&](const std::vector<std::size_t>& labels) {
    const std::size_t count = *std::max_element(labels.begin(), labels.end()) + 1;
    if (count < best_count) return;
    std::vector<std::vector<std::size_t>> groups(count);
    for (std::size_t k = 0; k < m; ++k) groups[labels[k]].push_back(k);
    std::vector<Sublattice> sats;
    for (const auto& g : groups) sats.push_back(union_saturation(g));
    if (!saturations_split(sats, whole)) return;
    if (count > best_count) {
      best_count = count;
      best = labels;
      ties = 1;
    } else {
      ++ties;
    }
  });
  if (ties != 1) {
    throw std::logic_error("finest integral decomposition is not unique");
  }
  std::vector<IndexSet> blocks(best_count);
  for (std::size_t k = 0; k < m; ++k)
    blocks[best[k]].insert(blocks[best[k]].end(), complex.blocks[k].begin(), complex.blocks[k].end());
  return make_partition(std::move(blocks), vectors.size());
}

bool is_z_irreducible(const std::vector<IntVector>& vectors) {
  return finest_integral_decomposition(vectors).blocks.size() == 1;
}

bool is_c_irreducible(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw Error(ErrorCode::kEmptySubset, "is_c_irreducible");
  return finest_complex_decomposition(vectors).blocks.size() == 1;
}

std::vector<IntVector> layer_characters(const LayerPoset& poset, LayerId id) {
  std::vector<IntVector> out;
  for (std::size_t i : poset.layer(id).support()) out.push_back(poset.arrangement()[i].lambda);
  return out;
}

// ---------------------------------------------------------------------------
// Building sets

BuildingSet::BuildingSet(std::vector<LayerId> members, Flavor flavor)
    : members_(std::move(members)), flavor_(flavor) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool BuildingSet::contains(LayerId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

BuildingSet BuildingSet::custom(const LayerPoset& poset, std::vector<LayerId> members) {
  for (LayerId id : members)
    if (id >= poset.size()) {
      throw Error(ErrorCode::kNotInPoset, "layer id " + std::to_string(id));
    }
  BuildingSet g(std::move(members), Flavor::kCustom);
  for (LayerId c = 0; c < poset.size(); ++c) factors(poset, c, g);
  return g;
}

BuildingSet irreducible_layers(const LayerPoset& poset) {
  std::vector<LayerId> members;
  for (LayerId id = 0; id < poset.size(); ++id)
    if (is_z_irreducible(layer_characters(poset, id))) members.push_back(id);
  return BuildingSet(std::move(members), BuildingSet::Flavor::kIrreducible);
}

std::vector<LayerId> factors(const LayerPoset& poset, LayerId c, const BuildingSet& g) {
  if (c >= poset.size()) throw Error(ErrorCode::kNotInPoset, "layer id " + std::to_string(c));
  std::vector<LayerId> containing;
  for (LayerId d : g.members())
    if (poset.leq(c, d)) containing.push_back(d);
  std::vector<LayerId> minimal;
  for (LayerId d : containing) {
    bool is_min = std::none_of(containing.begin(), containing.end(),
                               [&](LayerId e) { return poset.less(e, d); });
    if (is_min) minimal.push_back(d);
  }

  // The supports of the factors must decompose the support of c.
  const IndexSet& support = poset.layer(c).support();
  std::vector<IndexSet> blocks;
  for (LayerId d : minimal) {
    IndexSet block;
    for (std::size_t i : poset.layer(d).support())
      block.push_back(static_cast<std::size_t>(
          std::lower_bound(support.begin(), support.end(), i) - support.begin()));
    blocks.push_back(std::move(block));
  }
  const std::vector<IntVector> chars = layer_characters(poset, c);
  bool ok = !blocks.empty();
  if (ok) {
    try {
      ok = is_integral_decomposition(chars, make_partition(blocks, chars.size()));
    } catch (const Error&) {
      ok = false;
    }
  }
  if (!ok) {
    throw Error(ErrorCode::kInvalidBuildingSet,
                "layer " + describe(poset.layer(c)) +
                    " is not decomposed by the building-set members containing it");
  }
  return minimal;
}

}  // namespace toricwm
