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

#ifndef TORICWM_CHARTS_HPP
#define TORICWM_CHARTS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "toricwm/nested.hpp"

namespace toricwm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Members of a nested set in chart-coordinate order: dimension ascending,
/// then layer id.
std::vector<LayerId> coordinate_order(const LayerPoset& poset, const NestedSet& s);

/// One integer vector per member of a maximal nested set, in coordinate
/// order, with its value at the center.
struct AdaptedBasis {
  std::vector<LayerId> members;
  std::vector<IntVector> lambdas;
  std::vector<TorsionValue> constants;

  /// Rows are the lambdas.
  IntegerMatrix matrix(std::size_t rank) const;
};

/// Requires a maximal nested set with a point center.
AdaptedBasis adapted_basis(const LayerPoset& poset, const NestedSet& s);

/// For every member C the vectors of members containing C form a basis of
/// the lattice of C, the whole family is unimodular, and the constants are
/// the values at the center.
bool is_adapted(const LayerPoset& poset, const NestedSet& s, const AdaptedBasis& b);

/// Local coordinates z_C around the center of a maximal nested set, with
/// lambda_C - a_C equal to the product of z_D over members D inside C.
class Chart {
 public:
  /// Throws NotNested when s has no point center, NotAdapted when `basis`
  /// fails is_adapted.
  Chart(const LayerPoset& poset, NestedSet s, AdaptedBasis basis,
        double tolerance = kDefaultTolerance);

  const LayerPoset& poset() const { return *poset_; }
  const NestedSet& nested_set() const { return s_; }
  const AdaptedBasis& basis() const { return basis_; }
  LayerId center() const { return *s_.center; }
  std::size_t dimension() const { return basis_.members.size(); }
  double tolerance() const { return tol_; }

  /// Coordinate index of a member; throws InvalidIndex.
  std::size_t index_of(LayerId c) const;
  /// Coordinate index of the successor of coordinate k, if k is not minimal.
  std::optional<std::size_t> successor_index(std::size_t k) const;
  /// Arrangement characters through the center.
  const IndexSet& localized_characters() const { return localized_; }

  /// Coordinate index of the largest member on which lambda is constant;
  /// throws NoConstantLayer.
  std::size_t p_s_index(const IntVector& lambda) const;

  /// Throws OutsideDomain when some lambda_C(t) would vanish.
  ComplexVector to_torus(const ComplexVector& z) const;
  /// Throws OnDivisor when a denominator vanishes.
  ComplexVector from_torus(const ComplexVector& t) const;
  /// Throws NotLocalized when c is not constant-valued at the center with
  /// the given constant, OutsideDomain off the chart domain.
  Complex p_lambda(const WeightedCharacter& c, const ComplexVector& z) const;
  /// Nonvanishing of x_C, avoidance of the layers not through the center,
  /// and nonvanishing of every p_lambda.
  bool contains(const ComplexVector& z) const;

  /// x_C = lambda_C(f(z)) in coordinate order; does not check the domain.
  ComplexVector character_values(const ComplexVector& z) const;
  /// Product of z_E over members E inside coordinate k.
  Complex product_below(std::size_t k, const ComplexVector& z) const;

 private:
  struct Expansion {
    std::size_t core;  // coordinate index of p_S(lambda)
    std::vector<std::pair<std::size_t, long>> terms;  // (coordinate, exponent), core first
    std::vector<std::vector<std::size_t>> extra;      // per term: E inside D, E not inside core
  };
  Expansion expand(const IntVector& lambda) const;
  void check_dimension(const ComplexVector& v) const;

  const LayerPoset* poset_;
  NestedSet s_;
  AdaptedBasis basis_;
  double tol_;
  std::vector<std::vector<std::size_t>> below_;  // below_[k]: coordinates inside k, incl. k
  std::vector<std::optional<std::size_t>> successor_;
  std::vector<std::vector<long>> inverse_;  // inverse of the basis matrix
  std::vector<Complex> a_;
  IndexSet localized_;
  std::vector<Expansion> localized_expansions_;
};

/// Chart from adapted_basis(s).
Chart make_chart(const LayerPoset& poset, const NestedSet& s,
                 double tolerance = kDefaultTolerance);

LayerId p_s_map(const Chart& chart, const IntVector& lambda);
ComplexVector chart_to_torus(const Chart& chart, const ComplexVector& z);
ComplexVector torus_to_chart(const Chart& chart, const ComplexVector& t);
Complex p_lambda_eval(const Chart& chart, const WeightedCharacter& c, const ComplexVector& z);
bool in_chart(const Chart& chart, const ComplexVector& z);

/// lambda(t) for a complex torus point.
Complex evaluate_character(const IntVector& lambda, const ComplexVector& t);
/// Torus point exp(2 pi i phi).
ComplexVector torus_point(const TorsionVector& phi);

struct TransitionEntry {
  LayerId layer;
  /// 1: member only of the source chart, value is z^S_C. 2: shared member,
  /// value is z^S_C / z^Q_C.
  int clause;
  Complex value;
};

struct TransitionResult {
  ComplexVector z;
  std::vector<TransitionEntry> report;  // source coordinate order
  bool on_divisor = false;
};

/// Coordinates in q of the model point with coordinates z in s. On the
/// divisor the value is the mean over a small circle transverse to it.
/// Throws NotInOverlap.
TransitionResult transition(const Chart& s, const Chart& q, const ComplexVector& z);

/// Curve t(s) = exp(2 pi i (p + sum_j s^j v_j)) through a point layer.
struct CurveGerm {
  LayerId point;
  std::vector<std::vector<Rational>> jets;
};

struct CurveLift {
  NestedSet nested;
  Chart chart;
  ComplexVector z_limit;
  /// Order of vanishing of lambda - a along the curve, per localized character.
  std::vector<std::size_t> orders;
};

/// Maximal nested set whose chart contains the limit of the curve, with an
/// adapted basis re-chosen for the germ. Throws InvalidGerm.
CurveLift chart_for_curve(const LayerPoset& poset, const BuildingSet& g, const CurveGerm& germ,
                          double tolerance = kDefaultTolerance);

/// Dimension of the intersection of the divisor components indexed by N,
/// or nullopt when it is empty. Throws NotInBuildingSet.
std::optional<std::size_t> divisor_dim(const NestedSetComplex& complex,
                                       const std::vector<LayerId>& n);

}  // namespace toricwm

#endif  // TORICWM_CHARTS_HPP
