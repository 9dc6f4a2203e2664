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

#include "tiltlab/exactlin/linalg.hpp"

#include <string>

namespace tiltlab {

template <class Scalar>
Echelon<Scalar> rref(Mat<Scalar> m) {
  Echelon<Scalar> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = inverse(m(r, c));
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Scalar>
Index rank(const Mat<Scalar>& m) {
  if (m.rows() > m.cols()) return static_cast<Index>(rref<Scalar>(m.transpose()).pivots.size());
  return static_cast<Index>(rref<Scalar>(m).pivots.size());
}

template <class Scalar>
Mat<Scalar> kernel_basis(const FieldSpec& f, const Mat<Scalar>& m) {
  const Echelon<Scalar> e = rref<Scalar>(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Mat<Scalar> k = zeros<Scalar>(cols, static_cast<Index>(free.size()));
  const Scalar one = scalar<Scalar>(f, 1);
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      k(e.pivots[r], j) = -e.reduced(r, free[j]);
    }
  }
  return k;
}

template <class Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("solve: a has " + std::to_string(a.rows()) + " rows, b has " +
                            std::to_string(b.rows()));
  }
  const Echelon<Scalar> e = rref<Scalar>(hstack<Scalar>({a, b}, a.rows()));
  if (!e.pivots.empty() && e.pivots.back() >= a.cols()) return std::nullopt;
  Mat<Scalar> x = zeros<Scalar>(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    x.row(e.pivots[r]) = e.reduced.row(r).tail(b.cols());
  }
  return x;
}

template <class Scalar>
Mat<Scalar> column_basis(const Mat<Scalar>& m) {
  const Echelon<Scalar> e = rref<Scalar>(m);
  Mat<Scalar> out(m.rows(), static_cast<Index>(e.pivots.size()));
  for (std::size_t j = 0; j < e.pivots.size(); ++j) out.col(j) = m.col(e.pivots[j]);
  return out;
}

template <class Scalar>
Quotient<Scalar> quotient_basis(const FieldSpec& f, Index ambient_dim, const Mat<Scalar>& subspace) {
  if (subspace.rows() != ambient_dim) {
    throw DimensionMismatch("quotient_basis: subspace vectors have length " +
                            std::to_string(subspace.rows()) + ", ambient is " +
                            std::to_string(ambient_dim));
  }
  const Echelon<Scalar> e = rref<Scalar>(subspace.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  std::vector<Index> rest;
  for (Index c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) rest.push_back(c);
  }
  const Index q = static_cast<Index>(rest.size());
  const Scalar one = scalar<Scalar>(f, 1);
  Quotient<Scalar> out{zeros<Scalar>(q, ambient_dim), zeros<Scalar>(ambient_dim, q)};
  for (Index j = 0; j < q; ++j) {
    out.projection(j, rest[j]) = one;
    out.section(rest[j], j) = one;
  }
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    for (Index j = 0; j < q; ++j) out.projection(j, e.pivots[r]) = -e.reduced(r, rest[j]);
  }
  return out;
}

template <class Scalar>
Mat<Scalar> left_inverse(const FieldSpec& f, const Mat<Scalar>& m) {
  // Solve m^T L^T = I: any solution gives L m = I.
  const auto x = solve<Scalar>(m.transpose(), identity<Scalar>(f, m.cols()));
  if (!x) throw DimensionMismatch("left_inverse: matrix does not have full column rank");
  return x->transpose();
}

template <class Scalar>
Mat<Scalar> inverse(const FieldSpec& f, const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const auto x = solve<Scalar>(m, identity<Scalar>(f, m.rows()));
  if (!x) throw DimensionMismatch("inverse: matrix is singular");
  return *x;
}

template <class Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = zeros<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <class Scalar>
Vec<Scalar> vectorize(const Mat<Scalar>& m) {
  Vec<Scalar> v(m.size());
  for (Index j = 0; j < m.cols(); ++j) v.segment(j * m.rows(), m.rows()) = m.col(j);
  return v;
}

template <class Scalar>
Mat<Scalar> unvectorize(const Vec<Scalar>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unvectorize: wrong length");
  Mat<Scalar> m(rows, cols);
  for (Index j = 0; j < cols; ++j) m.col(j) = v.segment(j * rows, rows);
  return m;
}

template <class Scalar>
Mat<Scalar> hstack(const std::vector<Mat<Scalar>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack: row mismatch");
    cols += b.cols();
  }
  Mat<Scalar> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

template <class Scalar>
Mat<Scalar> vstack(const std::vector<Mat<Scalar>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack: column mismatch");
    rows += b.rows();
  }
  Mat<Scalar> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

template <class Scalar>
Mat<Scalar> block_diagonal(const std::vector<Mat<Scalar>>& blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat<Scalar> out = zeros<Scalar>(rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

template <class Scalar>
Vec<Scalar> IncrementalSpan<Scalar>::reduce(Vec<Scalar> v) const {
  for (Index c = 0; c < n_; ++c) {
    const int r = row_of_lead_[c];
    if (r < 0 || is_zero(v(c))) continue;
    const Scalar factor = v(c);
    const Vec<Scalar>& row = rows_[r];
    for (Index j = c; j < n_; ++j) {
      if (!is_zero(row(j))) v(j) -= factor * row(j);
    }
  }
  return v;
}

template <class Scalar>
std::optional<Vec<Scalar>> IncrementalSpan<Scalar>::insert(const Vec<Scalar>& v) {
  Vec<Scalar> w = reduce(v);
  Index lead = 0;
  while (lead < n_ && is_zero(w(lead))) ++lead;
  if (lead == n_) return std::nullopt;
  const Scalar inv = inverse(w(lead));
  for (Index j = lead; j < n_; ++j) w(j) *= inv;
  row_of_lead_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(w);
  return w;
}

#define TILTLAB_INSTANTIATE(S)                                                          \
  template class IncrementalSpan<S>;                                                    \
  template Echelon<S> rref<S>(Mat<S>);                                                  \
  template Index rank<S>(const Mat<S>&);                                                \
  template Mat<S> kernel_basis<S>(const FieldSpec&, const Mat<S>&);                     \
  template std::optional<Mat<S>> solve<S>(const Mat<S>&, const Mat<S>&);                \
  template Mat<S> column_basis<S>(const Mat<S>&);                                       \
  template Quotient<S> quotient_basis<S>(const FieldSpec&, Index, const Mat<S>&);       \
  template Mat<S> left_inverse<S>(const FieldSpec&, const Mat<S>&);                     \
  template Mat<S> inverse<S>(const FieldSpec&, const Mat<S>&);                          \
  template Mat<S> kron<S>(const Mat<S>&, const Mat<S>&);                                \
  template Vec<S> vectorize<S>(const Mat<S>&);                                          \
  template Mat<S> unvectorize<S>(const Vec<S>&, Index, Index);                          \
  template Mat<S> hstack<S>(const std::vector<Mat<S>>&, Index);                         \
  template Mat<S> vstack<S>(const std::vector<Mat<S>>&, Index);                         \
  template Mat<S> block_diagonal<S>(const std::vector<Mat<S>>&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab
