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

#ifndef TORICWM_LATTICE_HPP
#define TORICWM_LATTICE_HPP

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "toricwm/error.hpp"

namespace toricwm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> entries);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

/// Dense integer matrix with exact entries, stored row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// All rows must have length `cols`; `cols` is needed for the 0-row case.
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_vectors() const;
  IntegerMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
  void combine_rows(std::size_t i, std::size_t j, const Integer& p,
                    const Integer& q, const Integer& r, const Integer& s);
  /// cols (i, j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
  void combine_cols(std::size_t i, std::size_t j, const Integer& p,
                    const Integer& q, const Integer& r, const Integer& s);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntegerMatrix operator*(const IntegerMatrix& a,
                                 const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntegerMatrix& m);

std::string to_string(const IntegerMatrix& m);

/// Exact determinant (Bareiss fraction-free elimination). Square only.
Integer determinant(const IntegerMatrix& m);
bool is_unimodular(const IntegerMatrix& m);
/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntegerMatrix inverse_unimodular(const IntegerMatrix& m);

struct HermiteForm {
  IntegerMatrix h;  // row-echelon, positive pivots, entries above reduced
  IntegerMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntegerMatrix& m);

struct SmithDecomposition {
  IntegerMatrix d;  // diagonal d_1 | d_2 | ... , positive
  IntegerMatrix u;  // unimodular rows
  IntegerMatrix v;  // unimodular cols, u * m * v == d
  std::size_t rank = 0;

  std::vector<Integer> elementary_divisors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// A sublattice of Z^n held by its row Hermite basis, so equality of
/// sublattices is equality of bases.
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank = 0);

  static Sublattice span(const IntegerMatrix& generators);
  static Sublattice span(const std::vector<IntVector>& generators,
                         std::size_t ambient_rank);
  static Sublattice full(std::size_t n);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const Sublattice& other) const;
  /// Integer coordinates of v in the Hermite basis, if v is in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  /// Lattice generated by both.
  Sublattice operator+(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_;
  IntegerMatrix basis_;
};

/// Rational span intersected with Z^n.
Sublattice saturate(const Sublattice& l);
bool is_saturated(const Sublattice& l);

/// [outer : inner]; `finite` is empty when the index is infinite.
struct LatticeIndex {
  std::optional<Integer> finite;
  bool is_infinite() const { return !finite.has_value(); }
};

LatticeIndex lattice_index(const Sublattice& inner, const Sublattice& outer);

/// n x n unimodular matrix whose first rank(L) rows are the Hermite basis of
/// L. L must be saturated.
IntegerMatrix complete_to_basis(const Sublattice& l);

bool is_primitive(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, >= 0

/// An element r of Q/Z with 0 <= r < 1, standing for exp(2 pi i r).
class TorsionValue {
 public:
  TorsionValue() = default;
  explicit TorsionValue(const Rational& r);
  TorsionValue(long num, long den);

  const Rational& value() const { return r_; }
  Integer numerator() const { return r_.get_num(); }
  Integer denominator() const { return r_.get_den(); }
  bool is_zero() const { return r_ == 0; }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  TorsionValue operator+(const TorsionValue& o) const;
  TorsionValue operator-(const TorsionValue& o) const;
  TorsionValue operator-() const;
  TorsionValue operator*(const Integer& k) const;

  friend bool operator==(const TorsionValue& a, const TorsionValue& b) {
    return a.r_ == b.r_;
  }
  friend bool operator<(const TorsionValue& a, const TorsionValue& b) {
    return a.r_ < b.r_;
  }

 private:
  Rational r_ = 0;
};

using TorsionVector = std::vector<TorsionValue>;

std::string to_string(const TorsionVector& v);
/// <lambda, phi> mod 1.
TorsionValue pair(const IntVector& lambda, const TorsionVector& phi);

struct TorsionSolution {
  /// Coset representatives, one per connected component, reduced to [0,1)
  /// and sorted lexicographically.
  std::vector<TorsionVector> representatives;
  /// Integer directions {x : M x = 0} along which every component extends.
  Sublattice kernel;
};

/// Solves M phi = r (mod Z) over phi in (R/Z)^n. Empty optional when
/// inconsistent.
std::optional<TorsionSolution> solve_torsion_system(
    const IntegerMatrix& m, const TorsionVector& r);

/// Canonical point on the component {phi : B phi = values mod Z} where B is
/// the Hermite basis of a saturated lattice.
TorsionVector canonical_point(const Sublattice& saturated,
                              const TorsionVector& values);

}  // namespace toricwm

#endif  // TORICWM_LATTICE_HPP
