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

#include "tiltlab/algebra/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace tiltlab {

template <class Scalar>
Algebra<Scalar>::Algebra(AlgebraData<Scalar> data) : d_(std::move(data)) {
  derive();
}

template <class Scalar>
void Algebra<Scalar>::derive() {
  const Index n = dim();
  if (static_cast<Index>(d_.target.size()) != n || static_cast<Index>(d_.radical.size()) != n ||
      static_cast<Index>(d_.product.size()) != n * n) {
    throw DimensionMismatch("algebra tables have inconsistent sizes");
  }
  if (static_cast<int>(d_.idempotent.size()) != d_.num_vertices) {
    throw DimensionMismatch("one idempotent per vertex is required");
  }
  if (d_.vertex_class.empty()) {
    d_.vertex_class.resize(d_.num_vertices);
    std::iota(d_.vertex_class.begin(), d_.vertex_class.end(), 0);
  }
  if (d_.labels.size() != static_cast<std::size_t>(n)) {
    d_.labels.resize(n);
    for (Index b = 0; b < n; ++b) d_.labels[b] = "b" + std::to_string(b);
  }
  if (d_.vertex_names.size() != static_cast<std::size_t>(d_.num_vertices)) {
    d_.vertex_names.resize(d_.num_vertices);
    for (int v = 0; v < d_.num_vertices; ++v) d_.vertex_names[v] = std::to_string(v + 1);
  }
  std::vector<bool> class_seen(d_.num_vertices, false);
  for (int v = 0; v < d_.num_vertices; ++v) {
    if (!class_seen[d_.vertex_class[v]]) {
      class_seen[d_.vertex_class[v]] = true;
      class_reps_.push_back(v);
    }
  }

  // Non-radical non-idempotent basis elements, then radical elements
  // complementing rad^2.
  for (Index b = 0; b < n; ++b) {
    if (!d_.radical[b] && !is_idempotent_basis(b)) generators_.push_back(b);
  }
  IncrementalSpan<Scalar> span(n);
  for (Index x = 0; x < n; ++x) {
    if (!d_.radical[x]) continue;
    for (Index y = 0; y < n; ++y) {
      if (!d_.radical[y] || product(x, y).empty()) continue;
      Vec<Scalar> v = Vec<Scalar>::Constant(n, Scalar(0));
      for (const auto& t : product(x, y)) v(t.basis) += t.coeff;
      span.insert(v);
    }
  }
  for (Index b = 0; b < n; ++b) {
    if (d_.radical[b] && span.insert(basis_vector(b))) generators_.push_back(b);
  }
}

template <class Scalar>
bool Algebra<Scalar>::is_idempotent_basis(Index b) const {
  for (Index e : d_.idempotent) {
    if (e == b) return true;
  }
  return false;
}

template <class Scalar>
Vec<Scalar> Algebra<Scalar>::basis_vector(Index b) const {
  Vec<Scalar> v = Vec<Scalar>::Constant(dim(), Scalar(0));
  v(b) = scalar<Scalar>(field(), 1);
  return v;
}

template <class Scalar>
Vec<Scalar> Algebra<Scalar>::multiply(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
  Vec<Scalar> out = Vec<Scalar>::Constant(dim(), Scalar(0));
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (is_zero(y(j))) continue;
      const Scalar c = x(i) * y(j);
      for (const auto& t : product(i, j)) out(t.basis) += c * t.coeff;
    }
  }
  return out;
}

template <class Scalar>
Mat<Scalar> Algebra<Scalar>::left_mult(Index b) const {
  Mat<Scalar> m = zeros<Scalar>(dim(), dim());
  for (Index y = 0; y < dim(); ++y) {
    for (const auto& t : product(b, y)) m(t.basis, y) += t.coeff;
  }
  return m;
}

template <class Scalar>
Mat<Scalar> Algebra<Scalar>::right_mult(Index b) const {
  Mat<Scalar> m = zeros<Scalar>(dim(), dim());
  for (Index x = 0; x < dim(); ++x) {
    for (const auto& t : product(x, b)) m(t.basis, x) += t.coeff;
  }
  return m;
}

template <class Scalar>
typename Algebra<Scalar>::Ptr Algebra<Scalar>::opposite() const {
  std::lock_guard<std::mutex> lock(opposite_mutex_);
  if (opposite_strong_) return opposite_strong_;
  if (auto back = opposite_weak_.lock()) return back;
  AlgebraData<Scalar> op = d_;
  std::swap(op.source, op.target);
  const Index n = dim();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) op.product[x * n + y] = d_.product[y * n + x];
  }
  if (op.quiver) {
    for (auto& a : op.quiver->arrows) std::swap(a.source, a.target);
  }
  for (auto& p : op.basis_paths) {
    std::swap(p.source, p.target);
    std::reverse(p.arrows.begin(), p.arrows.end());
  }
  for (auto& r : op.relations) {
    for (auto& [c, p] : r.terms) {
      std::swap(p.source, p.target);
      std::reverse(p.arrows.begin(), p.arrows.end());
    }
  }
  auto result = std::make_shared<Algebra<Scalar>>(std::move(op));
  result->opposite_weak_ = this->shared_from_this();
  opposite_strong_ = result;
  return result;
}

template <class Scalar>
bool Algebra<Scalar>::is_associative() const {
  const Index n = dim();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (product(x, y).empty() && source(x) != target(y)) continue;
      const Vec<Scalar> xy = multiply(basis_vector(x), basis_vector(y));
      for (Index z = 0; z < n; ++z) {
        const Vec<Scalar> yz = multiply(basis_vector(y), basis_vector(z));
        if (multiply(xy, basis_vector(z)) != multiply(basis_vector(x), yz)) return false;
      }
    }
  }
  return true;
}

template <class Scalar>
bool Algebra<Scalar>::idempotents_ok() const {
  for (int i = 0; i < num_vertices(); ++i) {
    for (int j = 0; j < num_vertices(); ++j) {
      const Vec<Scalar> p = multiply(basis_vector(idempotent(i)), basis_vector(idempotent(j)));
      const Vec<Scalar> want = i == j ? basis_vector(idempotent(i)) : Vec<Scalar>::Constant(dim(), Scalar(0));
      if (p != want) return false;
    }
  }
  Vec<Scalar> one = Vec<Scalar>::Constant(dim(), Scalar(0));
  for (int i = 0; i < num_vertices(); ++i) one += basis_vector(idempotent(i));
  for (Index b = 0; b < dim(); ++b) {
    if (multiply(one, basis_vector(b)) != basis_vector(b)) return false;
    if (multiply(basis_vector(b), one) != basis_vector(b)) return false;
    // Each basis element must sit in e_target A e_source.
    if (multiply(basis_vector(idempotent(target(b))), basis_vector(b)) != basis_vector(b)) return false;
    if (multiply(basis_vector(b), basis_vector(idempotent(source(b)))) != basis_vector(b)) return false;
  }
  return true;
}

template <class Scalar>
bool Algebra<Scalar>::is_commutative() const {
  for (Index x = 0; x < dim(); ++x) {
    for (Index y = x + 1; y < dim(); ++y) {
      if (multiply(basis_vector(x), basis_vector(y)) != multiply(basis_vector(y), basis_vector(x))) return false;
    }
  }
  return true;
}

template <class Scalar>
bool same_algebra(const Algebra<Scalar>& a, const Algebra<Scalar>& b) {
  if (&a == &b) return true;
  if (a.field() != b.field() || a.dim() != b.dim() || a.num_vertices() != b.num_vertices()) return false;
  const auto& x = a.data();
  const auto& y = b.data();
  if (x.source != y.source || x.target != y.target || x.idempotent != y.idempotent) return false;
  for (std::size_t i = 0; i < x.product.size(); ++i) {
    if (x.product[i].size() != y.product[i].size()) return false;
    for (std::size_t k = 0; k < x.product[i].size(); ++k) {
      if (x.product[i][k].basis != y.product[i][k].basis || x.product[i][k].coeff != y.product[i][k].coeff) {
        return false;
      }
    }
  }
  return true;
}

template <class Scalar>
void require_same_algebra(const Algebra<Scalar>& a, const Algebra<Scalar>& b, const char* where) {
  if (!same_algebra(a, b)) throw AlgebraMismatch(std::string(where) + ": operands live over different algebras");
}

template class Algebra<Fp>;
template class Algebra<Rational>;
template bool same_algebra<Fp>(const Algebra<Fp>&, const Algebra<Fp>&);
template bool same_algebra<Rational>(const Algebra<Rational>&, const Algebra<Rational>&);
template void require_same_algebra<Fp>(const Algebra<Fp>&, const Algebra<Fp>&, const char*);
template void require_same_algebra<Rational>(const Algebra<Rational>&, const Algebra<Rational>&, const char*);

}  // namespace tiltlab
