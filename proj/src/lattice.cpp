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

#include "toricwm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

namespace toricwm {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotContained: return "NotContained";
    case ErrorCode::kNotSaturated: return "NotSaturated";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInfiniteIndex: return "InfiniteIndex";
    case ErrorCode::kDuplicateCharacter: return "DuplicateCharacter";
    case ErrorCode::kNotPrimitive: return "NotPrimitive";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kNotAPoint: return "NotAPoint";
    case ErrorCode::kNotComplete: return "NotComplete";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kNotInPoset: return "NotInPoset";
    case ErrorCode::kInvalidBuildingSet: return "InvalidBuildingSet";
    case ErrorCode::kNotInBuildingSet: return "NotInBuildingSet";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kNoElementContained: return "NoElementContained";
    case ErrorCode::kIsMinimal: return "IsMinimal";
    case ErrorCode::kNotLocalized: return "NotLocalized";
    case ErrorCode::kNotAdapted: return "NotAdapted";
    case ErrorCode::kNoConstantLayer: return "NoConstantLayer";
    case ErrorCode::kOutsideDomain: return "OutsideDomain";
    case ErrorCode::kOnDivisor: return "OnDivisor";
    case ErrorCode::kNotInOverlap: return "NotInOverlap";
    case ErrorCode::kInvalidGerm: return "InvalidGerm";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// vectors

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product of vectors of "
                                               "different lengths");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    for (long e : r) data_.emplace_back(e);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i) + " has length " +
                      std::to_string(rows[i].size()) + ", expected " +
                      std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntegerMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntegerMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntegerMatrix::combine_rows(std::size_t i, std::size_t j, const Integer& p,
                                 const Integer& q, const Integer& r,
                                 const Integer& s) {
  for (std::size_t k = 0; k < cols_; ++k) {
    Integer a = (*this)(i, k);
    Integer b = (*this)(j, k);
    (*this)(i, k) = p * a + q * b;
    (*this)(j, k) = r * a + s * b;
  }
}

void IntegerMatrix::combine_cols(std::size_t i, std::size_t j, const Integer& p,
                                 const Integer& q, const Integer& r,
                                 const Integer& s) {
  for (std::size_t k = 0; k < rows_; ++k) {
    Integer a = (*this)(k, i);
    Integer b = (*this)(k, j);
    (*this)(k, i) = p * a + q * b;
    (*this)(k, j) = r * a + s * b;
  }
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  }
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntVector operator*(const IntVector& v, const IntegerMatrix& m) {
  if (v.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector-matrix shape mismatch");
  }
  IntVector out(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << to_string(m.row(i));
  }
  out << ']';
  return out.str();
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Hermite and Smith forms

namespace {

struct Bezout {
  Integer g, x, y;  // g = x*a + y*b
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Zeroes `m(j, col)` against pivot row i using a determinant-one 2x2 move;
// the same move is mirrored on `track`.
void eliminate_rows(IntegerMatrix& m, IntegerMatrix& track, std::size_t i,
                    std::size_t j, std::size_t col) {
  const Integer a = m(i, col);
  const Integer b = m(j, col);
  if (b == 0) return;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q = b / a;
    m.combine_rows(i, j, 1, 0, -q, 1);
    track.combine_rows(i, j, 1, 0, -q, 1);
    return;
  }
  Bezout bz = bezout(a, b);
  Integer r = -b / bz.g;
  Integer s = a / bz.g;
  m.combine_rows(i, j, bz.x, bz.y, r, s);
  track.combine_rows(i, j, bz.x, bz.y, r, s);
}

void eliminate_cols(IntegerMatrix& m, IntegerMatrix& track, std::size_t i,
                    std::size_t j, std::size_t row) {
  const Integer a = m(row, i);
  const Integer b = m(row, j);
  if (b == 0) return;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q = b / a;
    m.combine_cols(i, j, 1, 0, -q, 1);
    track.combine_cols(i, j, 1, 0, -q, 1);
    return;
  }
  Bezout bz = bezout(a, b);
  Integer r = -b / bz.g;
  Integer s = a / bz.g;
  m.combine_cols(i, j, bz.x, bz.y, r, s);
  track.combine_cols(i, j, bz.x, bz.y, r, s);
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  HermiteForm out{m, IntegerMatrix::identity(m.rows()), 0};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) eliminate_rows(h, u, r, i, c);
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      h.combine_rows(i, r, 1, -q, 0, 1);
      u.combine_rows(i, r, 1, -q, 0, 1);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> SmithDecomposition::elementary_divisors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition out{m, IntegerMatrix::identity(m.rows()),
                         IntegerMatrix::identity(m.cols()), 0};
  IntegerMatrix& d = out.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 &&
            (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    d.swap_rows(t, pi);
    out.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    out.v.swap_cols(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) eliminate_rows(d, out.u, t, i, t);
      for (std::size_t j = t + 1; j < cols; ++j) eliminate_cols(d, out.v, t, j, t);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d(i, t) != 0) column_clear = false;
      if (!column_clear) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.combine_rows(t, i, 1, 1, 0, 1);
            out.u.combine_rows(t, i, 1, 1, 0, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kNotUnimodular, "non-square matrix");
  }
  HermiteForm hf = hermite_normal_form(m);
  if (!(hf.h == IntegerMatrix::identity(m.rows()))) {
    throw Error(ErrorCode::kNotUnimodular, to_string(m));
  }
  return hf.u;
}

// ---------------------------------------------------------------------------
// Sublattice

Sublattice::Sublattice(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

Sublattice Sublattice::span(const IntegerMatrix& generators) {
  HermiteForm hf = hermite_normal_form(generators);
  Sublattice l(generators.cols());
  l.basis_ = IntegerMatrix(hf.rank, generators.cols());
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) l.basis_(i, j) = hf.h(i, j);
  return l;
}

Sublattice Sublattice::span(const std::vector<IntVector>& generators,
                            std::size_t ambient_rank) {
  return span(IntegerMatrix::from_rows(generators, ambient_rank));
}

Sublattice Sublattice::full(std::size_t n) {
  Sublattice l(n);
  l.basis_ = IntegerMatrix::identity(n);
  return l;
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector " + to_string(v) +
                                                   " not in ambient rank " +
                                                   std::to_string(ambient_rank_));
  }
  IntVector rest = v;
  IntVector coords(rank(), Integer(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    const Integer& pivot = basis_(i, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) {
      return std::nullopt;
    }
    Integer q = rest[col] / pivot;
    coords[i] = q;
    for (std::size_t j = col; j < ambient_rank_; ++j) rest[j] -= q * basis_(i, j);
    ++col;
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const IntVector& v) const {
  return coordinates(v).has_value();
}

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Sublattice Sublattice::operator+(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) {
    throw Error(ErrorCode::kDimensionMismatch, "sum of sublattices of different "
                                               "ambient rank");
  }
  std::vector<IntVector> rows = basis_.row_vectors();
  for (auto& r : other.basis_.row_vectors()) rows.push_back(std::move(r));
  return span(rows, ambient_rank_);
}

Sublattice saturate(const Sublattice& l) {
  if (l.rank() == 0) return l;
  SmithDecomposition snf = smith_normal_form(l.basis());
  IntegerMatrix vinv = inverse_unimodular(snf.v);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < snf.rank; ++i) rows.push_back(vinv.row(i));
  return Sublattice::span(rows, l.ambient_rank());
}

bool is_saturated(const Sublattice& l) { return saturate(l) == l; }

LatticeIndex lattice_index(const Sublattice& inner, const Sublattice& outer) {
  if (!outer.contains(inner)) {
    throw Error(ErrorCode::kNotContained,
                to_string(inner.basis()) + " is not contained in " +
                    to_string(outer.basis()));
  }
  if (inner.rank() < outer.rank()) return LatticeIndex{};
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < inner.rank(); ++i)
    coords.push_back(*outer.coordinates(inner.basis().row(i)));
  SmithDecomposition snf =
      smith_normal_form(IntegerMatrix::from_rows(coords, outer.rank()));
  Integer index = 1;
  for (const Integer& e : snf.elementary_divisors()) index *= e;
  return LatticeIndex{index};
}

IntegerMatrix complete_to_basis(const Sublattice& l) {
  if (!is_saturated(l)) {
    throw Error(ErrorCode::kNotSaturated, to_string(l.basis()));
  }
  const std::size_t n = l.ambient_rank();
  if (l.rank() == 0) return IntegerMatrix::identity(n);
  SmithDecomposition snf = smith_normal_form(l.basis());
  IntegerMatrix vinv = inverse_unimodular(snf.v);
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = l.basis()(i, j);
  for (std::size_t i = l.rank(); i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = vinv(i, j);
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_primitive(const IntVector& v) {
  if (is_zero(v)) throw Error(ErrorCode::kZeroVector, to_string(v));
  return content(v) == 1;
}

// ---------------------------------------------------------------------------
// Torsion values

namespace {

Rational reduce_mod_one(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(fl);
  out.canonicalize();
  return out;
}

}  // namespace

TorsionValue::TorsionValue(const Rational& r) : r_(reduce_mod_one(r)) {}

TorsionValue::TorsionValue(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  r_ = reduce_mod_one(r);
}

std::complex<double> TorsionValue::to_complex() const {
  Rational quarter = r_ * 4;
  quarter.canonicalize();
  if (quarter.get_den() == 1) {
    switch (quarter.get_num().get_si()) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  const long double angle =
      2.0L * std::numbers::pi_v<long double> *
      static_cast<long double>(r_.get_d());
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

std::string TorsionValue::to_string() const { return r_.get_str(); }

TorsionValue TorsionValue::operator+(const TorsionValue& o) const {
  return TorsionValue(Rational(r_ + o.r_));
}
TorsionValue TorsionValue::operator-(const TorsionValue& o) const {
  return TorsionValue(Rational(r_ - o.r_));
}
TorsionValue TorsionValue::operator-() const { return TorsionValue(Rational(-r_)); }
TorsionValue TorsionValue::operator*(const Integer& k) const {
  return TorsionValue(Rational(r_ * Rational(k)));
}

std::string to_string(const TorsionVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out + ")";
}

TorsionValue pair(const IntVector& lambda, const TorsionVector& phi) {
  if (lambda.size() != phi.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "character/point length mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    s += Rational(lambda[i]) * phi[i].value();
  return TorsionValue(s);
}

TorsionVector canonical_point(const Sublattice& saturated,
                              const TorsionVector& values) {
  const std::size_t n = saturated.ambient_rank();
  if (values.size() != saturated.rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "one value per basis row expected");
  }
  IntegerMatrix w = complete_to_basis(saturated);
  IntegerMatrix winv = inverse_unimodular(w);
  TorsionVector phi(n);
  for (std::size_t a = 0; a < n; ++a) {
    Rational s = 0;
    for (std::size_t b = 0; b < values.size(); ++b)
      s += Rational(winv(a, b)) * values[b].value();
    phi[a] = TorsionValue(s);
  }
  return phi;
}

std::optional<TorsionSolution> solve_torsion_system(const IntegerMatrix& m,
                                                    const TorsionVector& r) {
  if (r.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "one constant per equation expected");
  }
  const std::size_t n = m.cols();
  SmithDecomposition snf = smith_normal_form(m);

  TorsionVector rhs(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.rows(); ++j) s += Rational(snf.u(i, j)) * r[j].value();
    rhs[i] = TorsionValue(s);
  }
  for (std::size_t i = snf.rank; i < m.rows(); ++i)
    if (!rhs[i].is_zero()) return std::nullopt;

  TorsionSolution sol;
  std::vector<IntVector> kernel_rows;
  for (std::size_t j = snf.rank; j < n; ++j) {
    IntVector col(n);
    for (std::size_t a = 0; a < n; ++a) col[a] = snf.v(a, j);
    kernel_rows.push_back(std::move(col));
  }
  sol.kernel = Sublattice::span(kernel_rows, n);

  const Sublattice sat = saturate(Sublattice::span(m));
  std::vector<IntVector> sat_rows = sat.basis().row_vectors();

  std::set<std::vector<Rational>> seen;
  std::vector<unsigned long> digit(snf.rank, 0);
  for (;;) {
    std::vector<Rational> psi(n, Rational(0));
    for (std::size_t i = 0; i < snf.rank; ++i) {
      psi[i] = (rhs[i].value() + Rational(Integer(digit[i]))) / Rational(snf.d(i, i));
    }
    TorsionVector phi(n);
    for (std::size_t a = 0; a < n; ++a) {
      Rational s = 0;
      for (std::size_t b = 0; b < snf.rank; ++b) s += Rational(snf.v(a, b)) * psi[b];
      phi[a] = TorsionValue(s);
    }
    TorsionVector values;
    for (const auto& row : sat_rows) values.push_back(pair(row, phi));
    TorsionVector rep = canonical_point(sat, values);
    std::vector<Rational> key;
    for (const auto& x : rep) key.push_back(x.value());
    if (seen.insert(key).second) sol.representatives.push_back(std::move(rep));

    std::size_t pos = 0;
    while (pos < snf.rank) {
      if (++digit[pos] < snf.d(pos, pos).get_ui()) break;
      digit[pos] = 0;
      ++pos;
    }
    if (pos == snf.rank) break;
  }
  std::sort(sol.representatives.begin(), sol.representatives.end());
  return sol;
}

}  // namespace toricwm
