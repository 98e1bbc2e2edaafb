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

#include "toricwm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace toricwm {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Complex unit(std::mt19937_64& rng) {
  return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

// exp(2 pi i (phi + delta)).
ComplexVector displaced(const TorsionVector& phi, const ComplexVector& delta) {
  ComplexVector t = torus_point(phi);
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  for (std::size_t j = 0; j < t.size(); ++j) t[j] *= std::exp(two_pi_i * delta[j]);
  return t;
}

bool in_complement(const Arrangement& arr, const ComplexVector& t, double tol) {
  for (const auto& c : arr.characters())
    if (std::abs(evaluate_character(c.lambda, t) - c.constant.to_complex()) <= tol) return false;
  return true;
}

double relative_error(const ComplexVector& a, const ComplexVector& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), 1e-300));
  return worst;
}

void absorb(OverlapSweep& out, const TransitionResult& r) {
  for (const auto& e : r.report) {
    const double m = std::abs(e.value);
    out.min_magnitude = std::min(out.min_magnitude, m);
    out.max_magnitude = std::max(out.max_magnitude, m);
  }
}

}  // namespace

double AtlasSweep::max_residual() const {
  double m = 0;
  for (const auto& c : charts) m = std::max(m, c.max_residual);
  return m;
}

double AtlasSweep::max_roundtrip() const {
  double m = 0;
  for (const auto& c : charts) m = std::max(m, c.max_roundtrip);
  return m;
}

double AtlasSweep::min_magnitude() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& o : overlaps) m = std::min(m, o.min_magnitude);
  return m;
}

double AtlasSweep::max_magnitude() const {
  double m = 0;
  for (const auto& o : overlaps) m = std::max(m, o.max_magnitude);
  return m;
}

bool AtlasSweep::passed(double tolerance) const {
  for (const auto& c : charts)
    if (!c.zero_in_chart || !(c.max_residual < tolerance) || !(c.max_roundtrip < tolerance))
      return false;
  for (const auto& o : overlaps)
    if (o.samples == 0 || !(o.min_magnitude >= tolerance) || !(o.max_magnitude <= 1.0 / tolerance))
      return false;
  return cover_failures == 0 && germ_failures == 0;
}

std::vector<Chart> build_atlas(const NestedSetComplex& complex, double tolerance) {
  std::vector<Chart> atlas;
  for (const NestedSet& s : complex.maximal()) atlas.push_back(make_chart(complex.poset(), s, tolerance));
  return atlas;
}

ComplexVector random_chart_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  ComplexVector z(n);
  for (auto& v : z) v = uniform(rng, lo, hi) * unit(rng);
  return z;
}

ChartSweep sweep_chart(const Chart& chart, std::mt19937_64& rng, std::size_t samples) {
  ChartSweep out;
  out.members = chart.basis().members;
  out.lambdas = chart.basis().lambdas;
  const std::size_t n = chart.dimension();
  out.zero_in_chart = chart.contains(ComplexVector(n, 0.0));
  const Arrangement& arr = chart.poset().arrangement();
  for (std::size_t s = 0; s < samples; ++s) {
    const ComplexVector z = random_chart_point(rng, n, 0.1, 0.5);
    const ComplexVector t = chart.to_torus(z);
    for (std::size_t i : chart.localized_characters()) {
      const WeightedCharacter& c = arr[i];
      const Complex value = evaluate_character(c.lambda, t);
      const Complex lhs = chart.p_lambda(c, z) * chart.product_below(chart.p_s_index(c.lambda), z);
      const double defect = std::abs(lhs - (value - c.constant.to_complex())) / (1.0 + std::abs(value));
      out.max_residual = std::max(out.max_residual, defect);
    }
    out.max_roundtrip = std::max(out.max_roundtrip, relative_error(chart.from_torus(t), z));
  }
  return out;
}

OverlapSweep sweep_overlap(const Chart& s, const Chart& q, std::mt19937_64& rng,
                           std::size_t samples) {
  OverlapSweep out;
  const std::size_t n = s.dimension();
  const TorsionVector& p = s.poset().layer(s.center()).point();
  for (std::size_t attempt = 0; attempt < 50 * samples && out.samples < samples; ++attempt) {
    ComplexVector delta(n);
    for (auto& d : delta) d = Complex(uniform(rng, -0.3, 0.3), uniform(rng, -0.1, 0.1));
    const ComplexVector t = displaced(p, delta);
    if (!in_complement(s.poset().arrangement(), t, s.tolerance())) continue;
    try {
      const ComplexVector z = s.from_torus(t);
      absorb(out, transition(s, q, z));
      ++out.samples;
    } catch (const Error&) {
    }
  }
  std::vector<std::size_t> shared;
  for (std::size_t k = 0; k < n; ++k)
    if (q.nested_set().contains(s.basis().members[k])) shared.push_back(k);
  if (shared.empty()) return out;
  for (std::size_t attempt = 0; attempt < samples; ++attempt) {
    ComplexVector z = random_chart_point(rng, n, 0.1, 0.5);
    z[shared[pick(rng, shared.size())]] = 0.0;
    try {
      absorb(out, transition(s, q, z));
      ++out.on_divisor;
    } catch (const Error&) {
    }
  }
  return out;
}

std::size_t sweep_cover(const LayerPoset& poset, const std::vector<Chart>& atlas,
                        std::mt19937_64& rng, std::size_t samples) {
  const std::size_t n = poset.rank();
  const double tol = atlas.empty() ? kDefaultTolerance : atlas.front().tolerance();
  std::size_t failures = 0;
  std::size_t done = 0;
  while (done < samples) {
    ComplexVector delta(n);
    TorsionVector base(n);
    if (done % 2 == 0) {
      for (auto& d : delta) d = Complex(uniform(rng, 0.0, 1.0), uniform(rng, -0.2, 0.2));
    } else {
      base = poset.layer(pick(rng, poset.size())).point();
      const double scale = std::pow(10.0, -uniform(rng, 1.0, 4.0));
      for (auto& d : delta) d = scale * unit(rng);
    }
    const ComplexVector t = displaced(base, delta);
    if (!in_complement(poset.arrangement(), t, 10 * tol)) continue;
    ++done;
    bool covered = false;
    for (const Chart& chart : atlas) {
      try {
        const ComplexVector z = chart.from_torus(t);
        if (std::any_of(z.begin(), z.end(), [&](const Complex& v) { return std::abs(v) <= tol; }))
          continue;
        if (!chart.contains(z)) continue;
        if (relative_error(chart.to_torus(z), t) > 1e-6) continue;
        covered = true;
        break;
      } catch (const Error&) {
      }
    }
    if (!covered) ++failures;
  }
  return failures;
}

std::size_t sweep_germs(const LayerPoset& poset, const BuildingSet& g, std::mt19937_64& rng,
                        std::size_t germs, double tolerance) {
  const std::size_t n = poset.rank();
  const auto& points = poset.points();
  std::size_t failures = 0;
  std::size_t done = 0;
  std::uniform_int_distribution<long> entry(-2, 2);
  while (done < germs) {
    CurveGerm germ;
    germ.point = points[pick(rng, points.size())];
    const std::size_t k = 1 + pick(rng, 3);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rational> v(n);
      for (auto& x : v) x = Rational(entry(rng));
      germ.jets.push_back(std::move(v));
    }
    try {
      const CurveLift lift = chart_for_curve(poset, g, germ, tolerance);
      ++done;
      if (!lift.chart.contains(lift.z_limit)) ++failures;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidGerm) throw;
    }
  }
  return failures;
}

AtlasSweep verify_atlas(const NestedSetComplex& complex, const SweepOptions& options) {
  std::mt19937_64 rng(options.seed);
  AtlasSweep out;
  const std::vector<Chart> atlas = build_atlas(complex, options.tolerance);
  for (const Chart& c : atlas) out.charts.push_back(sweep_chart(c, rng, options.samples));
  for (std::size_t i = 0; i < atlas.size(); ++i)
    for (std::size_t j = 0; j < atlas.size(); ++j) {
      if (i == j) continue;
      OverlapSweep o = sweep_overlap(atlas[i], atlas[j], rng, options.overlap_samples);
      o.source = i;
      o.target = j;
      out.overlaps.push_back(o);
    }
  out.cover_samples = options.cover_samples;
  out.cover_failures = sweep_cover(complex.poset(), atlas, rng, options.cover_samples);
  out.germs = options.germs;
  out.germ_failures =
      sweep_germs(complex.poset(), complex.building_set(), rng, options.germs, options.tolerance);
  return out;
}

}  // namespace toricwm
