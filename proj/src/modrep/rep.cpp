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

#include "tiltlab/modrep/rep.hpp"

#include <numeric>

namespace tiltlab {

namespace {

template <class Scalar>
std::string relation_text(const Algebra<Scalar>& a, const Relation<Scalar>& r) {
  std::string out;
  for (const auto& [c, p] : r.terms) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*(" + path_label(*a.quiver(), p) + ")";
  }
  return out;
}

template <class Scalar>
Mat<Scalar> path_action(const Rep<Scalar>& m, const std::vector<Mat<Scalar>>& arrow_actions, const Path& p) {
  if (p.arrows.empty()) return identity<Scalar>(m.field(), m.dims[p.source]);
  Mat<Scalar> out = arrow_actions[p.arrows.front()];
  for (std::size_t i = 1; i < p.arrows.size(); ++i) out = Mat<Scalar>(out * arrow_actions[p.arrows[i]]);
  return out;
}

}  // namespace

std::string dims_string(const std::vector<Index>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

template <class Scalar>
Index Rep<Scalar>::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), Index{0});
}

template <class Scalar>
Index Rep<Scalar>::offset(int vertex) const {
  return std::accumulate(dims.begin(), dims.begin() + vertex, Index{0});
}

template <class Scalar>
Mat<Scalar> Rep<Scalar>::homogeneous_action(const Vec<Scalar>& element, int s, int t) const {
  Mat<Scalar> out = zeros<Scalar>(dims[s], dims[t]);
  for (Index b = 0; b < alg().dim(); ++b) {
    if (tiltlab::is_zero(element(b))) continue;
    if (alg().source(b) != s || alg().target(b) != t) {
      throw DimensionMismatch("element is not homogeneous for the requested vertices");
    }
    out += element(b) * act[b];
  }
  return out;
}

template <class Scalar>
Mat<Scalar> Rep<Scalar>::total_action(const Vec<Scalar>& element) const {
  const Index n = total_dim();
  Mat<Scalar> out = zeros<Scalar>(n, n);
  for (Index b = 0; b < alg().dim(); ++b) {
    if (tiltlab::is_zero(element(b))) continue;
    const int s = alg().source(b), t = alg().target(b);
    out.block(offset(s), offset(t), dims[s], dims[t]) += element(b) * act[b];
  }
  return out;
}

template <class Scalar>
Mat<Scalar> Rep<Scalar>::total_action(Index b) const {
  const Index n = total_dim();
  Mat<Scalar> out = zeros<Scalar>(n, n);
  const int s = alg().source(b), t = alg().target(b);
  out.block(offset(s), offset(t), dims[s], dims[t]) = act[b];
  return out;
}

template <class Scalar>
Hom<Scalar> operator+(const Hom<Scalar>& f, const Hom<Scalar>& g) {
  Hom<Scalar> h = f;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] += g.blocks[v];
  return h;
}

template <class Scalar>
Hom<Scalar> operator-(const Hom<Scalar>& f, const Hom<Scalar>& g) {
  Hom<Scalar> h = f;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] -= g.blocks[v];
  return h;
}

template <class Scalar>
Hom<Scalar> operator*(const Scalar& c, const Hom<Scalar>& f) {
  Hom<Scalar> h = f;
  for (auto& b : h.blocks) b *= c;
  return h;
}

template <class Scalar>
void validate_rep(const Rep<Scalar>& m) {
  const Algebra<Scalar>& a = m.alg();
  if (static_cast<int>(m.dims.size()) != a.num_vertices()) {
    throw ShapeMismatch("expected " + std::to_string(a.num_vertices()) + " dimensions, got " +
                        std::to_string(m.dims.size()));
  }
  if (static_cast<Index>(m.act.size()) != a.dim()) throw ShapeMismatch("one action matrix per basis element is required");
  for (Index b = 0; b < a.dim(); ++b) {
    if (m.act[b].rows() != m.dims[a.source(b)] || m.act[b].cols() != m.dims[a.target(b)]) {
      throw ShapeMismatch("action of '" + a.label(b) + "' has shape " + std::to_string(m.act[b].rows()) + "x" +
                          std::to_string(m.act[b].cols()) + ", expected " + std::to_string(m.dims[a.source(b)]) +
                          "x" + std::to_string(m.dims[a.target(b)]));
    }
  }
  for (int v = 0; v < a.num_vertices(); ++v) {
    if (m.act[a.idempotent(v)] != identity<Scalar>(m.field(), m.dims[v])) {
      throw RelationViolated("idempotent at vertex " + a.vertex_name(v) + " does not act as the identity");
    }
  }
  for (Index x = 0; x < a.dim(); ++x) {
    for (Index y = 0; y < a.dim(); ++y) {
      if (a.source(x) != a.target(y)) continue;
      Mat<Scalar> lhs = zeros<Scalar>(m.dims[a.source(y)], m.dims[a.target(x)]);
      for (const auto& t : a.product(x, y)) lhs += t.coeff * m.act[t.basis];
      if (lhs != Mat<Scalar>(m.act[y] * m.act[x])) {
        throw RelationViolated("action is not compatible with the product " + a.label(x) + " * " + a.label(y));
      }
    }
  }
}

template <class Scalar>
Rep<Scalar> rep_from_actions(const AlgebraPtr<Scalar>& algebra, const std::vector<Index>& dims,
                             std::vector<Mat<Scalar>> act) {
  Rep<Scalar> m{algebra, dims, std::move(act)};
  validate_rep(m);
  return m;
}

template <class Scalar>
Rep<Scalar> make_rep(const AlgebraPtr<Scalar>& algebra, const std::vector<Index>& dims,
                     const std::vector<Mat<Scalar>>& arrow_actions) {
  const Algebra<Scalar>& a = *algebra;
  if (!a.quiver() || a.basis_paths().empty()) throw ShapeMismatch("make_rep needs an algebra given by a quiver");
  const Quiver& q = *a.quiver();
  if (static_cast<int>(dims.size()) != q.num_vertices()) {
    throw ShapeMismatch("expected " + std::to_string(q.num_vertices()) + " dimensions, got " +
                        std::to_string(dims.size()));
  }
  if (static_cast<int>(arrow_actions.size()) != q.num_arrows()) {
    throw ShapeMismatch("expected " + std::to_string(q.num_arrows()) + " arrow matrices, got " +
                        std::to_string(arrow_actions.size()));
  }
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& arr = q.arrows[i];
    if (arrow_actions[i].rows() != dims[arr.source] || arrow_actions[i].cols() != dims[arr.target]) {
      throw ShapeMismatch("arrow '" + arr.name + "' needs a " + std::to_string(dims[arr.source]) + "x" +
                          std::to_string(dims[arr.target]) + " matrix, got " +
                          std::to_string(arrow_actions[i].rows()) + "x" + std::to_string(arrow_actions[i].cols()));
    }
  }
  Rep<Scalar> m{algebra, dims, {}};
  for (const auto& r : a.relations()) {
    const Path& p0 = r.terms.front().second;
    Mat<Scalar> sum = zeros<Scalar>(dims[p0.source], dims[p0.target]);
    for (const auto& [c, p] : r.terms) sum += c * path_action(m, arrow_actions, p);
    if (!is_zero<Scalar>(sum)) throw RelationViolated("relation " + relation_text(a, r) + " does not hold");
  }
  for (Index b = 0; b < a.dim(); ++b) m.act.push_back(path_action(m, arrow_actions, a.basis_paths()[b]));
  validate_rep(m);
  return m;
}

template <class Scalar>
Rep<Scalar> zero_rep(const AlgebraPtr<Scalar>& algebra) {
  Rep<Scalar> m{algebra, std::vector<Index>(algebra->num_vertices(), 0), {}};
  for (Index b = 0; b < algebra->dim(); ++b) m.act.push_back(zeros<Scalar>(0, 0));
  return m;
}

template <class Scalar>
bool is_hom(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f) {
  const Algebra<Scalar>& a = m.alg();
  if (f.blocks.size() != m.dims.size()) return false;
  for (int v = 0; v < a.num_vertices(); ++v) {
    if (f.blocks[v].rows() != n.dims[v] || f.blocks[v].cols() != m.dims[v]) return false;
  }
  for (Index b = 0; b < a.dim(); ++b) {
    const int s = a.source(b), t = a.target(b);
    if (Mat<Scalar>(f.blocks[s] * m.act[b]) != Mat<Scalar>(n.act[b] * f.blocks[t])) return false;
  }
  return true;
}

template <class Scalar>
Hom<Scalar> compose(const Hom<Scalar>& g, const Hom<Scalar>& f) {
  Hom<Scalar> h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

template <class Scalar>
Hom<Scalar> identity_hom(const Rep<Scalar>& m) {
  Hom<Scalar> h;
  for (Index d : m.dims) h.blocks.push_back(identity<Scalar>(m.field(), d));
  return h;
}

template <class Scalar>
Hom<Scalar> zero_hom(const Rep<Scalar>& m, const Rep<Scalar>& n) {
  Hom<Scalar> h;
  for (std::size_t v = 0; v < m.dims.size(); ++v) h.blocks.push_back(zeros<Scalar>(n.dims[v], m.dims[v]));
  return h;
}

template <class Scalar>
bool is_zero(const Hom<Scalar>& f) {
  for (const auto& b : f.blocks) {
    if (!is_zero<Scalar>(b)) return false;
  }
  return true;
}

template <class Scalar>
Mat<Scalar> total_matrix(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f) {
  Mat<Scalar> out = zeros<Scalar>(n.total_dim(), m.total_dim());
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    out.block(n.offset(static_cast<int>(v)), m.offset(static_cast<int>(v)), n.dims[v], m.dims[v]) = f.blocks[v];
  }
  return out;
}

template <class Scalar>
Hom<Scalar> hom_from_total(const Rep<Scalar>& m, const Rep<Scalar>& n, const Mat<Scalar>& total) {
  Hom<Scalar> h;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    h.blocks.push_back(total.block(n.offset(static_cast<int>(v)), m.offset(static_cast<int>(v)), n.dims[v], m.dims[v]));
  }
  return h;
}

template <class Scalar>
Index rank(const Hom<Scalar>& f) {
  Index r = 0;
  for (const auto& b : f.blocks) r += rank<Scalar>(b);
  return r;
}

template <class Scalar>
bool is_injective(const Rep<Scalar>& m, const Hom<Scalar>& f) {
  return rank(f) == m.total_dim();
}

template <class Scalar>
bool is_surjective(const Rep<Scalar>& n, const Hom<Scalar>& f) {
  return rank(f) == n.total_dim();
}

template <class Scalar>
bool is_isomorphism(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f) {
  return m.dims == n.dims && rank(f) == m.total_dim();
}

template <class Scalar>
Vec<Scalar> vectorize(const Hom<Scalar>& f) {
  Index len = 0;
  for (const auto& b : f.blocks) len += b.size();
  Vec<Scalar> v(len);
  Index at = 0;
  for (const auto& b : f.blocks) {
    v.segment(at, b.size()) = vectorize<Scalar>(b);
    at += b.size();
  }
  return v;
}

template <class Scalar>
Hom<Scalar> unvectorize_hom(const Rep<Scalar>& m, const Rep<Scalar>& n, const Vec<Scalar>& v) {
  Hom<Scalar> h;
  Index at = 0;
  for (std::size_t k = 0; k < m.dims.size(); ++k) {
    const Index len = n.dims[k] * m.dims[k];
    h.blocks.push_back(unvectorize<Scalar>(v.segment(at, len), n.dims[k], m.dims[k]));
    at += len;
  }
  return h;
}

template <class Scalar>
Sub<Scalar> submodule(const Rep<Scalar>& m, const std::vector<Mat<Scalar>>& spanning) {
  const Algebra<Scalar>& a = m.alg();
  Sub<Scalar> out{Rep<Scalar>{m.algebra, {}, {}}, {}};
  std::vector<Mat<Scalar>> left_inv;
  for (int v = 0; v < a.num_vertices(); ++v) {
    Mat<Scalar> basis = column_basis<Scalar>(spanning[v]);
    out.module.dims.push_back(basis.cols());
    left_inv.push_back(left_inverse<Scalar>(m.field(), basis));
    out.inclusion.blocks.push_back(std::move(basis));
  }
  for (Index b = 0; b < a.dim(); ++b) {
    out.module.act.push_back(left_inv[a.source(b)] * m.act[b] * out.inclusion.blocks[a.target(b)]);
  }
  return out;
}

template <class Scalar>
Quot<Scalar> quotient(const Rep<Scalar>& m, const std::vector<Mat<Scalar>>& spanning) {
  const Algebra<Scalar>& a = m.alg();
  Quot<Scalar> out{Rep<Scalar>{m.algebra, {}, {}}, {}, {}};
  for (int v = 0; v < a.num_vertices(); ++v) {
    Quotient<Scalar> q = quotient_basis<Scalar>(m.field(), m.dims[v], spanning[v]);
    out.module.dims.push_back(q.projection.rows());
    out.projection.blocks.push_back(std::move(q.projection));
    out.section.push_back(std::move(q.section));
  }
  for (Index b = 0; b < a.dim(); ++b) {
    out.module.act.push_back(out.projection.blocks[a.source(b)] * m.act[b] * out.section[a.target(b)]);
  }
  return out;
}

template <class Scalar>
Sub<Scalar> kernel(const Rep<Scalar>& m, const Rep<Scalar>&, const Hom<Scalar>& f) {
  std::vector<Mat<Scalar>> spanning;
  for (const auto& b : f.blocks) spanning.push_back(kernel_basis<Scalar>(m.field(), b));
  return submodule(m, spanning);
}

template <class Scalar>
Quot<Scalar> cokernel(const Rep<Scalar>&, const Rep<Scalar>& n, const Hom<Scalar>& f) {
  return quotient(n, f.blocks);
}

template <class Scalar>
Image<Scalar> image(const Rep<Scalar>&, const Rep<Scalar>& n, const Hom<Scalar>& f) {
  Sub<Scalar> s = submodule(n, f.blocks);
  Image<Scalar> out{std::move(s.module), std::move(s.inclusion), {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    out.corestriction.blocks.push_back(left_inverse<Scalar>(n.field(), out.inclusion.blocks[v]) * f.blocks[v]);
  }
  return out;
}

template <class Scalar>
std::vector<Mat<Scalar>> generated_span(const Rep<Scalar>& m, const std::vector<Element<Scalar>>& elements) {
  const Algebra<Scalar>& a = m.alg();
  std::vector<std::vector<Mat<Scalar>>> parts(a.num_vertices());
  for (const auto& e : elements) {
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.target(b) == e.vertex) parts[a.source(b)].push_back(m.act[b] * e.vector);
    }
  }
  std::vector<Mat<Scalar>> out;
  for (int v = 0; v < a.num_vertices(); ++v) out.push_back(hstack<Scalar>(parts[v], m.dims[v]));
  return out;
}

template <class Scalar>
DirectSum<Scalar> direct_sum(const std::vector<Rep<Scalar>>& parts) {
  if (parts.empty()) throw DimensionMismatch("direct_sum of no modules");
  const AlgebraPtr<Scalar>& alg = parts.front().algebra;
  const int nv = alg->num_vertices();
  DirectSum<Scalar> out{Rep<Scalar>{alg, std::vector<Index>(nv, 0), {}}, {}, {}};
  for (const auto& p : parts) {
    for (int v = 0; v < nv; ++v) out.module.dims[v] += p.dims[v];
  }
  for (Index b = 0; b < alg->dim(); ++b) {
    std::vector<Mat<Scalar>> blocks;
    for (const auto& p : parts) blocks.push_back(p.act[b]);
    out.module.act.push_back(block_diagonal<Scalar>(blocks));
  }
  std::vector<Index> at(nv, 0);
  for (const auto& p : parts) {
    Hom<Scalar> inj, proj;
    for (int v = 0; v < nv; ++v) {
      Mat<Scalar> e = zeros<Scalar>(out.module.dims[v], p.dims[v]);
      e.block(at[v], 0, p.dims[v], p.dims[v]) = identity<Scalar>(alg->field(), p.dims[v]);
      proj.blocks.push_back(e.transpose());
      inj.blocks.push_back(std::move(e));
      at[v] += p.dims[v];
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

template <class Scalar>
Rep<Scalar> power(const Rep<Scalar>& m, int copies) {
  if (copies == 0) return zero_rep<Scalar>(m.algebra);
  return direct_sum(std::vector<Rep<Scalar>>(static_cast<std::size_t>(copies), m)).module;
}

template <class Scalar>
std::vector<Mat<Scalar>> radical_span(const Rep<Scalar>& m) {
  const Algebra<Scalar>& a = m.alg();
  std::vector<std::vector<Mat<Scalar>>> parts(a.num_vertices());
  for (Index b = 0; b < a.dim(); ++b) {
    if (a.in_radical(b)) parts[a.source(b)].push_back(m.act[b]);
  }
  std::vector<Mat<Scalar>> out;
  for (int v = 0; v < a.num_vertices(); ++v) out.push_back(hstack<Scalar>(parts[v], m.dims[v]));
  return out;
}

template <class Scalar>
Quot<Scalar> top(const Rep<Scalar>& m) {
  return quotient(m, radical_span(m));
}

template <class Scalar>
Rep<Scalar> dual(const Rep<Scalar>& m) {
  Rep<Scalar> out{m.algebra->opposite(), m.dims, {}};
  for (const auto& x : m.act) out.act.push_back(x.transpose());
  return out;
}

template <class Scalar>
Hom<Scalar> dual(const Hom<Scalar>& f) {
  Hom<Scalar> out;
  for (const auto& b : f.blocks) out.blocks.push_back(b.transpose());
  return out;
}

template <class Scalar>
Mat<Scalar> Graded<Scalar>::change_of_basis() const {
  Index rows = basis.empty() ? 0 : basis.front().rows();
  return hstack<Scalar>(basis, rows);
}

template <class Scalar>
Graded<Scalar> graded_from_total(const AlgebraPtr<Scalar>& algebra, const std::vector<Mat<Scalar>>& rho, Index n) {
  const Algebra<Scalar>& a = *algebra;
  Graded<Scalar> out{Rep<Scalar>{algebra, {}, {}}, {}};
  std::vector<Mat<Scalar>> left_inv;
  Index total = 0;
  for (int v = 0; v < a.num_vertices(); ++v) {
    Mat<Scalar> basis = column_basis<Scalar>(rho[a.idempotent(v)]);
    if (basis.cols() == 0) basis = zeros<Scalar>(n, 0);
    out.module.dims.push_back(basis.cols());
    total += basis.cols();
    left_inv.push_back(left_inverse<Scalar>(a.field(), basis));
    out.basis.push_back(std::move(basis));
  }
  if (total != n) throw DimensionMismatch("vertex idempotents do not decompose the space");
  for (Index b = 0; b < a.dim(); ++b) {
    out.module.act.push_back(left_inv[a.source(b)] * rho[b] * out.basis[a.target(b)]);
  }
  return out;
}

#define TILTLAB_INSTANTIATE(S)                                                                    \
  template struct Rep<S>;                                                                         \
  template Hom<S> operator+ <S>(const Hom<S>&, const Hom<S>&);                                   \
  template Hom<S> operator- <S>(const Hom<S>&, const Hom<S>&);                                   \
  template Hom<S> operator* <S>(const S&, const Hom<S>&);                                        \
  template Rep<S> make_rep<S>(const AlgebraPtr<S>&, const std::vector<Index>&, const std::vector<Mat<S>>&); \
  template Rep<S> rep_from_actions<S>(const AlgebraPtr<S>&, const std::vector<Index>&, std::vector<Mat<S>>); \
  template void validate_rep<S>(const Rep<S>&);                                                   \
  template Rep<S> zero_rep<S>(const AlgebraPtr<S>&);                                              \
  template bool is_hom<S>(const Rep<S>&, const Rep<S>&, const Hom<S>&);                           \
  template Hom<S> compose<S>(const Hom<S>&, const Hom<S>&);                                       \
  template Hom<S> identity_hom<S>(const Rep<S>&);                                                 \
  template Hom<S> zero_hom<S>(const Rep<S>&, const Rep<S>&);                                      \
  template bool is_zero<S>(const Hom<S>&);                                                        \
  template Mat<S> total_matrix<S>(const Rep<S>&, const Rep<S>&, const Hom<S>&);                   \
  template Hom<S> hom_from_total<S>(const Rep<S>&, const Rep<S>&, const Mat<S>&);                 \
  template Index rank<S>(const Hom<S>&);                                                          \
  template bool is_injective<S>(const Rep<S>&, const Hom<S>&);                                    \
  template bool is_surjective<S>(const Rep<S>&, const Hom<S>&);                                   \
  template bool is_isomorphism<S>(const Rep<S>&, const Rep<S>&, const Hom<S>&);                   \
  template Vec<S> vectorize<S>(const Hom<S>&);                                                    \
  template Hom<S> unvectorize_hom<S>(const Rep<S>&, const Rep<S>&, const Vec<S>&);                \
  template Sub<S> submodule<S>(const Rep<S>&, const std::vector<Mat<S>>&);                        \
  template Quot<S> quotient<S>(const Rep<S>&, const std::vector<Mat<S>>&);                        \
  template Sub<S> kernel<S>(const Rep<S>&, const Rep<S>&, const Hom<S>&);                         \
  template Quot<S> cokernel<S>(const Rep<S>&, const Rep<S>&, const Hom<S>&);                      \
  template Image<S> image<S>(const Rep<S>&, const Rep<S>&, const Hom<S>&);                        \
  template std::vector<Mat<S>> generated_span<S>(const Rep<S>&, const std::vector<Element<S>>&);      \
  template DirectSum<S> direct_sum<S>(const std::vector<Rep<S>>&);                                \
  template Rep<S> power<S>(const Rep<S>&, int);                                                   \
  template std::vector<Mat<S>> radical_span<S>(const Rep<S>&);                                    \
  template Quot<S> top<S>(const Rep<S>&);                                                         \
  template Rep<S> dual<S>(const Rep<S>&);                                                         \
  template Hom<S> dual<S>(const Hom<S>&);                                                         \
  template struct Graded<S>;                                                                      \
  template Graded<S> graded_from_total<S>(const AlgebraPtr<S>&, const std::vector<Mat<S>>&, Index);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab
