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

#ifndef TORICWM_VERIFY_HPP
#define TORICWM_VERIFY_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "toricwm/charts.hpp"

namespace toricwm {

/// Seeded numeric sweeps over a chart atlas.
struct SweepOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 100;          // residual and roundtrip points per chart
  std::size_t overlap_samples = 20;   // per ordered chart pair
  std::size_t cover_samples = 500;
  std::size_t germs = 50;
  double tolerance = kDefaultTolerance;
};

struct ChartSweep {
  std::vector<LayerId> members;  // coordinate order
  std::vector<IntVector> lambdas;
  bool zero_in_chart = false;
  double max_residual = 0;   // relative defect of the division identity
  double max_roundtrip = 0;  // relative torus -> chart -> torus error
};

struct OverlapSweep {
  std::size_t source = 0;  // indices into the atlas
  std::size_t target = 0;
  std::size_t samples = 0;
  std::size_t on_divisor = 0;
  double min_magnitude = std::numeric_limits<double>::infinity();
  double max_magnitude = 0;
};

struct AtlasSweep {
  std::vector<ChartSweep> charts;
  std::vector<OverlapSweep> overlaps;
  std::size_t cover_samples = 0;
  std::size_t cover_failures = 0;
  std::size_t germs = 0;
  std::size_t germ_failures = 0;

  double max_residual() const;
  double max_roundtrip() const;
  double min_magnitude() const;
  double max_magnitude() const;
  /// Every check within tolerance; overlap magnitudes within [tol, 1/tol].
  bool passed(double tolerance) const;
};

/// One chart per maximal nested set, in point order.
std::vector<Chart> build_atlas(const NestedSetComplex& complex,
                               double tolerance = kDefaultTolerance);

/// Random chart point with every |z_C| in [lo, hi].
ComplexVector random_chart_point(std::mt19937_64& rng, std::size_t n, double lo, double hi);

/// Division-identity defect and roundtrip error over `samples` points.
ChartSweep sweep_chart(const Chart& chart, std::mt19937_64& rng, std::size_t samples);
/// Invertibility magnitudes of transition coordinates over overlap points of s and q,
/// both off the divisor and on shared divisor components.
OverlapSweep sweep_overlap(const Chart& s, const Chart& q, std::mt19937_64& rng,
                           std::size_t samples);
/// Random points of the arrangement complement (generic and close to
/// layers); returns how many lie in no chart.
std::size_t sweep_cover(const LayerPoset& poset, const std::vector<Chart>& atlas,
                        std::mt19937_64& rng, std::size_t samples);
/// Random valid germs; returns how many limits fall outside their chart.
std::size_t sweep_germs(const LayerPoset& poset, const BuildingSet& g, std::mt19937_64& rng,
                        std::size_t germs, double tolerance);

/// Runs all sweeps on the atlas of the building set.
AtlasSweep verify_atlas(const NestedSetComplex& complex, const SweepOptions& options);

}  // namespace toricwm

#endif  // TORICWM_VERIFY_HPP
