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

#include "toricwm/charts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace toricwm {

namespace {

constexpr std::size_t kInfiniteOrder = std::numeric_limits<std::size_t>::max();

Complex ipow(Complex x, long e) {
  if (e < 0) return 1.0 / ipow(x, -e);
  Complex r = 1.0;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("exponent out of range: " + x.get_str());
  return x.get_si();
}

// Orders integers 0, 1, -1, 2, -2, ...
bool small_first_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = mpz_cmpabs(a[i].get_mpz_t(), b[i].get_mpz_t());
    if (c != 0) return c < 0;
    if (a[i] != b[i]) return a[i] > 0;
  }
  return false;
}

IntVector add_scaled(const IntVector& a, const IntVector& b, long k) {
  IntVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += k * b[i];
  return out;
}

// Among lift +- combinations of `basis` rows with small coefficients that
// stay in `target`, the smallest in small-first order.
IntVector reduce_lift(const IntVector& lift, const IntegerMatrix& basis, const Sublattice& target) {
  IntVector best = lift;
  const std::size_t r = basis.rows();
  if (r > 4) return best;
  std::vector<long> k(r, -2);
  for (;;) {
    IntVector cand = lift;
    for (std::size_t i = 0; i < r; ++i) cand = add_scaled(cand, basis.row(i), k[i]);
    if (target.contains(cand)) {
      IntVector neg = cand;
      for (auto& x : neg) x = -x;
      if (small_first_less(cand, best)) best = cand;
      if (small_first_less(neg, best)) best = neg;
    }
    std::size_t i = 0;
    while (i < r && k[i] == 2) k[i++] = -2;
    if (i == r) break;
    ++k[i];
  }
  return best;
}

void require_maximal_with_center(const LayerPoset& poset, const NestedSet& s) {
  if (!s.center || !poset.layer(*s.center).is_point() || s.members.size() != poset.rank()) {
    throw Error(ErrorCode::kNotNested, "a maximal nested set with a point center is required");
  }
}

bool near_layer(const Layer& layer, const ComplexVector& t, double tol) {
  const IntegerMatrix& rows = layer.lattice().basis();
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const Complex target = layer.values()[i].to_complex();
    if (std::abs(evaluate_character(rows.row(i), t) - target) > tol) return false;
  }
  return true;
}

// g with x^m - a^m = (x - a) g(x, a, m).
Complex cofactor(Complex x, Complex a, long m) {
  const long k = m > 0 ? m : -m;
  Complex prod = 1.0;
  for (long j = 1; j < k; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
    prod *= x - std::polar(1.0, angle) * a;
  }
  if (m > 0) return prod;
  return -prod / ipow(x * a, k);
}

}  // namespace

std::vector<LayerId> coordinate_order(const LayerPoset& poset, const NestedSet& s) {
  std::vector<LayerId> out = s.members;
  std::sort(out.begin(), out.end(), [&](LayerId a, LayerId b) {
    const std::size_t da = poset.layer(a).dimension();
    const std::size_t db = poset.layer(b).dimension();
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

IntegerMatrix AdaptedBasis::matrix(std::size_t rank) const {
  return IntegerMatrix::from_rows(lambdas, rank);
}

AdaptedBasis adapted_basis(const LayerPoset& poset, const NestedSet& s) {
  require_maximal_with_center(poset, s);
  const std::size_t n = poset.rank();

  // Peel off minimal members one at a time; the basis is then built in the
  // reverse order, each step completing the lattice spanned so far by a
  // vector of the lattice of the next member.
  std::vector<LayerId> remaining = s.members;
  std::vector<LayerId> removal;
  while (!remaining.empty()) {
    std::vector<LayerId> minimal;
    for (LayerId c : remaining)
      if (std::none_of(remaining.begin(), remaining.end(),
                       [&](LayerId d) { return poset.less(d, c); }))
        minimal.push_back(c);
    LayerId pick = *std::min_element(minimal.begin(), minimal.end(), [&](LayerId a, LayerId b) {
      const std::size_t da = poset.layer(a).dimension();
      const std::size_t db = poset.layer(b).dimension();
      return da != db ? da < db : a < b;
    });
    removal.push_back(pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }

  std::vector<IntVector> chosen;
  std::map<LayerId, IntVector> assigned;
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
    const Sublattice& target = poset.layer(*it).lattice();
    const Sublattice current = Sublattice::span(chosen, n);
    const IntegerMatrix w = complete_to_basis(current);
    const IntegerMatrix winv = inverse_unimodular(w);
    const IntegerMatrix& g = target.basis();
    const IntegerMatrix coords = g * winv;
    const std::size_t r = current.rank();
    IntegerMatrix projected(g.rows(), n - r);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = r; j < n; ++j) projected(i, j - r) = coords(i, j);
    const HermiteForm hf = hermite_normal_form(projected);
    if (hf.rank != 1) {
      throw std::logic_error("member lattice does not extend the span by exactly one");
    }
    const IntegerMatrix lifts = hf.u * g;
    IntVector lift = reduce_lift(lifts.row(0), current.basis(), target);
    chosen.push_back(lift);
    assigned.emplace(*it, std::move(lift));
  }

  AdaptedBasis b;
  b.members = coordinate_order(poset, s);
  const TorsionVector& p = poset.layer(*s.center).point();
  for (LayerId c : b.members) {
    b.lambdas.push_back(assigned.at(c));
    b.constants.push_back(pair(b.lambdas.back(), p));
  }
  return b;
}

bool is_adapted(const LayerPoset& poset, const NestedSet& s, const AdaptedBasis& b) {
  if (!s.center || !poset.layer(*s.center).is_point()) return false;
  const std::size_t n = poset.rank();
  if (b.members.size() != n || b.lambdas.size() != n || b.constants.size() != n) return false;
  std::vector<LayerId> sorted = b.members;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.members) return false;
  for (const IntVector& v : b.lambdas)
    if (v.size() != n) return false;
  if (!is_unimodular(b.matrix(n))) return false;
  const TorsionVector& p = poset.layer(*s.center).point();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(pair(b.lambdas[k], p) == b.constants[k])) return false;
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j < n; ++j)
      if (poset.leq(b.members[k], b.members[j])) rows.push_back(b.lambdas[j]);
    const Sublattice& lattice = poset.layer(b.members[k]).lattice();
    if (rows.size() != lattice.rank() || !(Sublattice::span(rows, n) == lattice)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chart

Chart::Chart(const LayerPoset& poset, NestedSet s, AdaptedBasis basis, double tolerance)
    : poset_(&poset), s_(std::move(s)), basis_(std::move(basis)), tol_(tolerance) {
  require_maximal_with_center(poset, s_);
  if (!is_adapted(poset, s_, basis_)) {
    throw Error(ErrorCode::kNotAdapted, "basis is not adapted to the nested set");
  }
  const std::size_t n = basis_.members.size();
  below_.resize(n);
  successor_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j)
      if (poset.leq(basis_.members[j], basis_.members[k])) below_[k].push_back(j);
    std::optional<std::size_t> best;
    for (std::size_t j : below_[k]) {
      if (j == k) continue;
      if (!best || poset.leq(basis_.members[*best], basis_.members[j])) best = j;
    }
    successor_[k] = best;
  }
  const IntegerMatrix inv = inverse_unimodular(basis_.matrix(n));
  inverse_.assign(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = to_long(inv(i, j));
  for (const TorsionValue& a : basis_.constants) a_.push_back(a.to_complex());
  localized_ = localized(poset.arrangement(), poset.layer(center()));
  for (std::size_t i : localized_)
    localized_expansions_.push_back(expand(poset.arrangement()[i].lambda));
}

std::size_t Chart::index_of(LayerId c) const {
  auto it = std::find(basis_.members.begin(), basis_.members.end(), c);
  if (it == basis_.members.end()) {
    throw Error(ErrorCode::kInvalidIndex, "layer id " + std::to_string(c) + " is not in the chart");
  }
  return static_cast<std::size_t>(it - basis_.members.begin());
}

std::optional<std::size_t> Chart::successor_index(std::size_t k) const { return successor_.at(k); }

void Chart::check_dimension(const ComplexVector& v) const {
  if (v.size() != dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(dimension()) +
                                                   " coordinates, got " + std::to_string(v.size()));
  }
}

std::size_t Chart::p_s_index(const IntVector& lambda) const {
  if (lambda.size() != poset_->rank()) {
    throw Error(ErrorCode::kDimensionMismatch, to_string(lambda));
  }
  if (is_zero(lambda)) throw Error(ErrorCode::kZeroVector, "p_S of the zero character");
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < dimension(); ++k) {
    if (!poset_->layer(basis_.members[k]).lattice().contains(lambda)) continue;
    if (!best || poset_->leq(basis_.members[*best], basis_.members[k])) best = k;
  }
  if (!best) {
    throw Error(ErrorCode::kNoConstantLayer,
                to_string(lambda) + " is not constant on any member of the nested set");
  }
  return *best;
}

Chart::Expansion Chart::expand(const IntVector& lambda) const {
  Expansion e;
  e.core = p_s_index(lambda);
  const std::size_t n = dimension();
  IntVector m(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[k] += lambda[j] * inverse_[j][k];
  if (m[e.core] == 0) throw std::logic_error("character has no component on its core vector");
  e.terms.emplace_back(e.core, to_long(m[e.core]));
  for (std::size_t k = 0; k < n; ++k)
    if (k != e.core && m[k] != 0) e.terms.emplace_back(k, to_long(m[k]));
  const auto& core_below = below_[e.core];
  for (const auto& [d, exponent] : e.terms) {
    std::vector<std::size_t> extra;
    for (std::size_t j : below_[d])
      if (std::find(core_below.begin(), core_below.end(), j) == core_below.end()) extra.push_back(j);
    e.extra.push_back(std::move(extra));
  }
  return e;
}

Complex Chart::product_below(std::size_t k, const ComplexVector& z) const {
  Complex prod = 1.0;
  for (std::size_t j : below_.at(k)) prod *= z[j];
  return prod;
}

ComplexVector Chart::character_values(const ComplexVector& z) const {
  check_dimension(z);
  ComplexVector x(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) x[k] = product_below(k, z) + a_[k];
  return x;
}

ComplexVector Chart::to_torus(const ComplexVector& z) const {
  const ComplexVector x = character_values(z);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k]) <= tol_) {
      throw Error(ErrorCode::kOutsideDomain,
                  "character of layer L" + std::to_string(basis_.members[k]) + " vanishes");
    }
  const std::size_t n = dimension();
  ComplexVector t(n, 1.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) t[j] *= ipow(x[k], inverse_[j][k]);
  return t;
}

ComplexVector Chart::from_torus(const ComplexVector& t) const {
  check_dimension(t);
  for (const Complex& c : t)
    if (std::abs(c) <= tol_) throw Error(ErrorCode::kOutsideDomain, "torus coordinate is zero");
  const std::size_t n = dimension();
  ComplexVector l(n);
  for (std::size_t k = 0; k < n; ++k) l[k] = evaluate_character(basis_.lambdas[k], t) - a_[k];
  ComplexVector z(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!successor_[k]) {
      z[k] = l[k];
      continue;
    }
    const Complex den = l[*successor_[k]];
    if (std::abs(den) <= tol_) {
      throw Error(ErrorCode::kOnDivisor, "coordinate of layer L" +
                                             std::to_string(basis_.members[k]) +
                                             " is undetermined at this point");
    }
    z[k] = l[k] / den;
  }
  return z;
}

Complex Chart::p_lambda(const WeightedCharacter& c, const ComplexVector& z) const {
  if (c.lambda.size() != poset_->rank()) throw Error(ErrorCode::kDimensionMismatch, to_string(c));
  if (!(pair(c.lambda, poset_->layer(center()).point()) == c.constant)) {
    throw Error(ErrorCode::kNotLocalized, to_string(c) + " does not pass through the center");
  }
  const Expansion* e = nullptr;
  Expansion local;
  for (std::size_t i = 0; i < localized_.size(); ++i)
    if (poset_->arrangement()[localized_[i]].lambda == c.lambda) e = &localized_expansions_[i];
  if (!e) {
    local = expand(c.lambda);
    e = &local;
  }
  const ComplexVector x = character_values(z);
  for (const auto& [k, exponent] : e->terms)
    if (std::abs(x[k]) <= tol_) {
      throw Error(ErrorCode::kOutsideDomain,
                  "character of layer L" + std::to_string(basis_.members[k]) + " vanishes");
    }
  // Telescoping x^m - a^m over the terms: term k keeps a_j for j < k and
  // x_j for j > k.
  Complex total = 0.0;
  for (std::size_t k = 0; k < e->terms.size(); ++k) {
    Complex beta = 1.0;
    for (std::size_t j = 0; j < e->terms.size(); ++j) {
      const auto& [idx, m] = e->terms[j];
      if (j < k) beta *= ipow(a_[idx], m);
      if (j > k) beta *= ipow(x[idx], m);
    }
    const auto& [idx, m] = e->terms[k];
    beta *= cofactor(x[idx], a_[idx], m);
    for (std::size_t j : e->extra[k]) beta *= z[j];
    total += beta;
  }
  return total;
}

bool Chart::contains(const ComplexVector& z) const {
  if (z.size() != dimension()) return false;
  const ComplexVector x = character_values(z);
  for (const Complex& v : x)
    if (std::abs(v) <= tol_) return false;
  const ComplexVector t = to_torus(z);
  for (LayerId id = 0; id < poset_->size(); ++id)
    if (!poset_->leq(center(), id) && near_layer(poset_->layer(id), t, tol_)) return false;
  for (std::size_t i : localized_)
    if (std::abs(p_lambda(poset_->arrangement()[i], z)) <= tol_) return false;
  return true;
}

Chart make_chart(const LayerPoset& poset, const NestedSet& s, double tolerance) {
  return Chart(poset, s, adapted_basis(poset, s), tolerance);
}

LayerId p_s_map(const Chart& chart, const IntVector& lambda) {
  return chart.basis().members[chart.p_s_index(lambda)];
}

ComplexVector chart_to_torus(const Chart& chart, const ComplexVector& z) { return chart.to_torus(z); }

ComplexVector torus_to_chart(const Chart& chart, const ComplexVector& t) {
  return chart.from_torus(t);
}

Complex p_lambda_eval(const Chart& chart, const WeightedCharacter& c, const ComplexVector& z) {
  return chart.p_lambda(c, z);
}

bool in_chart(const Chart& chart, const ComplexVector& z) { return chart.contains(z); }

Complex evaluate_character(const IntVector& lambda, const ComplexVector& t) {
  if (lambda.size() != t.size()) throw Error(ErrorCode::kDimensionMismatch, to_string(lambda));
  Complex r = 1.0;
  for (std::size_t j = 0; j < t.size(); ++j) r *= ipow(t[j], to_long(lambda[j]));
  return r;
}

ComplexVector torus_point(const TorsionVector& phi) {
  ComplexVector t;
  t.reserve(phi.size());
  for (const TorsionValue& v : phi) t.push_back(v.to_complex());
  return t;
}

// ---------------------------------------------------------------------------
// Transitions

TransitionResult transition(const Chart& s, const Chart& q, const ComplexVector& z) {
  if (!s.contains(z)) throw Error(ErrorCode::kNotInOverlap, "point is not in the source chart");
  const std::size_t n = s.dimension();
  const double tol = s.tolerance();

  auto through_torus = [&](const ComplexVector& w) -> ComplexVector {
    try {
      return q.from_torus(s.to_torus(w));
    } catch (const Error&) {
      throw Error(ErrorCode::kNotInOverlap, "point is not in the target chart");
    }
  };

  TransitionResult out;
  std::vector<bool> on(n, false);
  for (std::size_t k = 0; k < n; ++k) on[k] = std::abs(z[k]) <= tol;
  out.on_divisor = std::find(on.begin(), on.end(), true) != on.end();

  std::vector<std::optional<std::size_t>> shared(n);
  for (std::size_t k = 0; k < n; ++k) {
    const LayerId c = s.basis().members[k];
    if (q.nested_set().contains(c)) shared[k] = q.index_of(c);
  }

  ComplexVector ratio(n, 0.0);
  if (!out.on_divisor) {
    out.z = through_torus(z);
    for (std::size_t k = 0; k < n; ++k)
      if (shared[k]) ratio[k] = z[k] / out.z[*shared[k]];
  } else {
    // Mean over a circle moving the vanishing coordinates off the divisor;
    // the transition is regular, so the mean is its value at the center.
    constexpr int kSteps = 64;
    bool done = false;
    for (double radius = 1e-2; radius > 1e-5 && !done; radius /= 4.0) {
      ComplexVector zsum(q.dimension(), 0.0);
      ComplexVector rsum(n, 0.0);
      bool ok = true;
      for (int step = 0; step < kSteps && ok; ++step) {
        const Complex shift = std::polar(radius, 2.0 * std::numbers::pi * step / kSteps);
        ComplexVector w = z;
        for (std::size_t k = 0; k < n; ++k)
          if (on[k]) w[k] += shift;
        if (!s.contains(w)) {
          ok = false;
          break;
        }
        ComplexVector wq;
        try {
          wq = through_torus(w);
        } catch (const Error&) {
          ok = false;
          break;
        }
        for (std::size_t j = 0; j < wq.size(); ++j) zsum[j] += wq[j];
        for (std::size_t k = 0; k < n; ++k)
          if (shared[k]) rsum[k] += w[k] / wq[*shared[k]];
      }
      if (!ok) continue;
      out.z = zsum;
      for (auto& v : out.z) v /= static_cast<double>(kSteps);
      for (std::size_t k = 0; k < n; ++k)
        if (shared[k]) ratio[k] = on[k] ? rsum[k] / static_cast<double>(kSteps) : z[k] / out.z[*shared[k]];
      done = true;
    }
    if (!done) throw Error(ErrorCode::kNotInOverlap, "no transverse circle inside both charts");
  }
  if (!q.contains(out.z)) throw Error(ErrorCode::kNotInOverlap, "point is not in the target chart");

  for (std::size_t k = 0; k < n; ++k) {
    const LayerId c = s.basis().members[k];
    if (shared[k]) {
      out.report.push_back({c, 2, ratio[k]});
    } else {
      out.report.push_back({c, 1, z[k]});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Curves

CurveLift chart_for_curve(const LayerPoset& poset, const BuildingSet& g, const CurveGerm& germ,
                          double tolerance) {
  const std::size_t n = poset.rank();
  if (germ.point >= poset.size() || !poset.layer(germ.point).is_point()) {
    throw Error(ErrorCode::kInvalidGerm, "base layer is not a point");
  }
  if (germ.jets.empty()) throw Error(ErrorCode::kInvalidGerm, "no jet vectors");
  for (const auto& v : germ.jets)
    if (v.size() != n) throw Error(ErrorCode::kInvalidGerm, "jet vector has the wrong length");

  auto pairing = [&](const IntVector& lambda, std::size_t j) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += Rational(lambda[i]) * germ.jets[j][i];
    return s;
  };
  // 1-based order of vanishing of lambda - lambda(p) along the curve.
  auto order = [&](const IntVector& lambda) {
    for (std::size_t j = 0; j < germ.jets.size(); ++j)
      if (pairing(lambda, j) != 0) return j + 1;
    return kInfiniteOrder;
  };

  const Arrangement& arr = poset.arrangement();
  const Layer& p = poset.layer(germ.point);
  const IndexSet xp = localized(arr, p);
  std::vector<std::size_t> orders;
  std::size_t top = 0;
  for (std::size_t i : xp) {
    const std::size_t o = order(arr[i].lambda);
    if (o == kInfiniteOrder) {
      throw Error(ErrorCode::kInvalidGerm,
                  "curve stays on the hypersurface of " + to_string(arr[i]));
    }
    orders.push_back(o);
    top = std::max(top, o);
  }

  // Factors of the flag of sets {lambda : order >= h}.
  NestedSetComplex complex(poset, g);
  std::vector<LayerId> members;
  for (std::size_t h = 1; h <= top; ++h) {
    IndexSet a;
    for (std::size_t k = 0; k < xp.size(); ++k)
      if (orders[k] >= h) a.push_back(xp[k]);
    if (a.empty()) break;
    const LayerId flat = poset.id_of(layer_from_complete_set(arr, p, closure(arr, p, a)));
    for (LayerId f : complex.factors_of(flat)) members.push_back(f);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!complex.nested_at(germ.point, members)) {
    throw std::logic_error("factors of the curve flag are not nested");
  }
  for (LayerId c : complex.members_through(germ.point)) {
    if (std::binary_search(members.begin(), members.end(), c)) continue;
    std::vector<LayerId> trial = members;
    trial.push_back(c);
    std::sort(trial.begin(), trial.end());
    if (complex.nested_at(germ.point, trial)) members = std::move(trial);
  }
  std::optional<NestedSet> s = complex.check(members);
  if (!s || s->members.size() != n || s->center != germ.point) {
    throw std::logic_error("completion of the curve flag is not maximal at the base point");
  }

  // Re-choose the basis so every vector has the smallest order of
  // vanishing among its admissible replacements.
  AdaptedBasis b = adapted_basis(poset, *s);
  for (std::size_t kk = n; kk-- > 0;) {
    IntVector w = b.lambdas[kk];
    for (std::size_t j = n; j-- > 0;) {
      if (j == kk || !poset.less(b.members[kk], b.members[j])) continue;
      if (order(b.lambdas[j]) < order(w)) {
        for (std::size_t i = 0; i < n; ++i) w[i] += b.lambdas[j][i];
      }
    }
    b.lambdas[kk] = w;
    b.constants[kk] = pair(w, p.point());
  }
  Chart chart(poset, *s, std::move(b), tolerance);

  ComplexVector z(n, 0.0);
  const AdaptedBasis& cb = chart.basis();
  for (std::size_t k = 0; k < n; ++k) {
    const auto succ = chart.successor_index(k);
    if (!succ) continue;
    const std::size_t nk = order(cb.lambdas[k]);
    const std::size_t ns = order(cb.lambdas[*succ]);
    if (ns == kInfiniteOrder) {
      throw Error(ErrorCode::kInvalidGerm, "curve stays on the divisor of layer L" +
                                               std::to_string(cb.members[*succ]));
    }
    if (nk < ns) throw std::logic_error("coordinate has a pole along the curve");
    if (nk > ns) continue;
    const Complex ck = cb.constants[k].to_complex() * pairing(cb.lambdas[k], nk - 1).get_d();
    const Complex cs = cb.constants[*succ].to_complex() * pairing(cb.lambdas[*succ], ns - 1).get_d();
    z[k] = ck / cs;
  }
  return CurveLift{std::move(*s), std::move(chart), std::move(z), std::move(orders)};
}

std::optional<std::size_t> divisor_dim(const NestedSetComplex& complex,
                                       const std::vector<LayerId>& n) {
  const std::size_t rank = complex.poset().rank();
  std::optional<NestedSet> s = complex.check(n);
  if (!s) return std::nullopt;
  return rank - s->members.size();
}

}  // namespace toricwm
