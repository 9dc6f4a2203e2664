/*
 *   Copyright 2026 The tiltlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Exact dense linear algebra on Eigen matrices over Fp or Rational.
 *
 * Functions that have to materialize constants (identity blocks, unit
 * vectors) take the FieldSpec explicitly; everything else is inferred from
 * the matrix entries.
 */

#ifndef TILTLAB_EXACTLIN_LINALG_HPP
#define TILTLAB_EXACTLIN_LINALG_HPP

#include <optional>
#include <vector>

#include "tiltlab/exactlin/field.hpp"

namespace tiltlab {

using Index = Eigen::Index;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
Mat<Scalar> zeros(Index rows, Index cols) {
  return Mat<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Mat<Scalar> identity(const FieldSpec& f, Index n) {
  Mat<Scalar> m = zeros<Scalar>(n, n);
  const Scalar one = scalar<Scalar>(f, 1);
  for (Index i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <class Scalar>
bool is_zero(const Mat<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// Reduced row echelon form with the pivot columns in increasing order.
template <class Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<Index> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
template <class Scalar>
Echelon<Scalar> rref(Mat<Scalar> m);

template <class Scalar>
Index rank(const Mat<Scalar>& m);

/// Columns form a basis of {x : m x = 0}, one per free column of rref(m).
template <class Scalar>
Mat<Scalar> kernel_basis(const FieldSpec& f, const Mat<Scalar>& m);

/// Some x with a x = b, or nullopt. Throws DimensionMismatch on row mismatch.
template <class Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b);

/// The pivot columns of m: a basis of its column space.
template <class Scalar>
Mat<Scalar> column_basis(const Mat<Scalar>& m);

/// Projection onto a coordinate complement of a subspace and a section of it.
template <class Scalar>
struct Quotient {
  /// (ambient - rank) x ambient, annihilates the subspace.
  Mat<Scalar> projection;
  /// ambient x (ambient - rank), projection * section = identity.
  Mat<Scalar> section;
};

template <class Scalar>
Quotient<Scalar> quotient_basis(const FieldSpec& f, Index ambient_dim, const Mat<Scalar>& subspace);

/// L with L m = I for m of full column rank; throws DimensionMismatch otherwise.
template <class Scalar>
Mat<Scalar> left_inverse(const FieldSpec& f, const Mat<Scalar>& m);

/// Inverse of a square invertible matrix; throws DimensionMismatch otherwise.
template <class Scalar>
Mat<Scalar> inverse(const FieldSpec& f, const Mat<Scalar>& m);

template <class Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b);

/// Column-major vectorization and its inverse.
template <class Scalar>
Vec<Scalar> vectorize(const Mat<Scalar>& m);

template <class Scalar>
Mat<Scalar> unvectorize(const Vec<Scalar>& v, Index rows, Index cols);

template <class Scalar>
Mat<Scalar> hstack(const std::vector<Mat<Scalar>>& blocks, Index rows);

template <class Scalar>
Mat<Scalar> vstack(const std::vector<Mat<Scalar>>& blocks, Index cols);

template <class Scalar>
Mat<Scalar> block_diagonal(const std::vector<Mat<Scalar>>& blocks);

/**
 * A subspace of k^n grown one vector at a time, kept in row echelon form.
 * reduce() returns the normal form of a vector: zero on every leading column.
 */
template <class Scalar>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(Index n) : n_(n), row_of_lead_(static_cast<std::size_t>(n), -1) {}

  Index ambient() const { return n_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool is_lead(Index c) const { return row_of_lead_[c] >= 0; }
  Vec<Scalar> reduce(Vec<Scalar> v) const;
  bool contains(const Vec<Scalar>& v) const { return is_zero<Scalar>(reduce(v)); }
  /// Adds v; returns the reduced vector if it was independent.
  std::optional<Vec<Scalar>> insert(const Vec<Scalar>& v);

 private:
  Index n_;
  std::vector<Vec<Scalar>> rows_;
  std::vector<int> row_of_lead_;
};

}  // namespace tiltlab

#endif  // TILTLAB_EXACTLIN_LINALG_HPP
