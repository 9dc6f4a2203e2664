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

#include "tiltlab/modrep/bimodule.hpp"

#include "tiltlab/algebra/path_algebra.hpp"
#include "tiltlab/modrep/standard.hpp"

namespace tiltlab {

template <class Scalar>
void validate_bimodule(const Bimodule<Scalar>& t) {
  const Algebra<Scalar>& s = *t.left;
  const Rep<Scalar>& m = t.right;
  const FieldSpec& f = m.field();
  const Index n = m.total_dim();
  if (static_cast<Index>(t.left_total.size()) != s.dim()) throw ShapeMismatch("one left action per basis element");
  Mat<Scalar> unit = zeros<Scalar>(n, n);
  for (int v = 0; v < s.num_vertices(); ++v) unit += t.left_total[s.idempotent(v)];
  if (unit != identity<Scalar>(f, n)) throw RelationViolated("left action is not unital");
  for (Index x = 0; x < s.dim(); ++x) {
    for (Index y = 0; y < s.dim(); ++y) {
      Mat<Scalar> xy = zeros<Scalar>(n, n);
      for (const auto& term : s.product(x, y)) xy += term.coeff * t.left_total[term.basis];
      if (xy != Mat<Scalar>(t.left_total[x] * t.left_total[y])) {
        throw RelationViolated("left action is not multiplicative on " + s.label(x) + " * " + s.label(y));
      }
    }
    for (Index b = 0; b < m.alg().dim(); ++b) {
      const Mat<Scalar> r = m.total_action(b);
      if (Mat<Scalar>(t.left_total[x] * r) != Mat<Scalar>(r * t.left_total[x])) {
        throw RelationViolated("left and right actions do not commute");
      }
    }
  }
}

template <class Scalar>
EndoAlgebra<Scalar> endo_algebra(const Rep<Scalar>& m, std::uint64_t seed) {
  if (m.is_zero()) throw ZeroModule("endomorphism algebra of the zero module");
  const FieldSpec& f = m.field();
  EndoAlgebra<Scalar> out;
  out.decomposition = decompose(m, seed);
  const auto& summands = out.decomposition.summands;

  // Vertices: one per indecomposable summand, grouped by class.
  struct Vertex {
    int cls;
    int copy;
  };
  std::vector<Vertex> vertices;
  for (int k = 0; k < static_cast<int>(summands.size()); ++k) {
    for (int c = 0; c < summands[k].multiplicity; ++c) vertices.push_back(Vertex{k, c});
  }
  const int nv = static_cast<int>(vertices.size());

  AlgebraData<Scalar> d;
  d.field = f;
  d.num_vertices = nv;
  d.idempotent.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    d.vertex_class.push_back(vertices[v].cls);
    d.vertex_names.push_back(std::to_string(v + 1));
  }
  std::vector<std::vector<Hom<Scalar>>> pair_maps(summands.size() * summands.size());
  for (std::size_t k = 0; k < summands.size(); ++k) {
    for (std::size_t l = 0; l < summands.size(); ++l) {
      auto& maps = pair_maps[k * summands.size() + l];
      if (k == l) {
        maps.push_back(identity_hom(summands[k].module));
        maps.insert(maps.end(), summands[k].radical.begin(), summands[k].radical.end());
      } else {
        maps = hom_space(summands[k].module, summands[l].module).basis;
      }
    }
  }
  for (int src = 0; src < nv; ++src) {
    for (int tgt = 0; tgt < nv; ++tgt) {
      const Vertex a = vertices[src], b = vertices[tgt];
      const auto& maps = pair_maps[a.cls * summands.size() + b.cls];
      for (std::size_t i = 0; i < maps.size(); ++i) {
        const Hom<Scalar> s =
            compose(summands[b.cls].inclusions[b.copy], compose(maps[i], summands[a.cls].projections[a.copy]));
        const bool unit = a.cls == b.cls && i == 0;
        if (unit && src == tgt) d.idempotent[src] = static_cast<Index>(d.source.size());
        d.source.push_back(src);
        d.target.push_back(tgt);
        d.radical.push_back(!unit);
        d.labels.push_back(unit && src == tgt ? "e" + std::to_string(src + 1)
                                              : "s" + std::to_string(out.endomorphisms.size()));
        out.endomorphisms.push_back(s);
      }
    }
  }
  const Index dim = static_cast<Index>(out.endomorphisms.size());
  if (dim != hom_dim(m, m)) {
    throw NonSplitEndomorphismRing("summand maps do not span the endomorphism ring");
  }
  Index len = 0;
  for (Index dv : m.dims) len += dv * dv;
  const Mat<Scalar> basis = hom_columns(out.endomorphisms, len);
  const Mat<Scalar> coords = left_inverse<Scalar>(f, basis);
  d.product.resize(static_cast<std::size_t>(dim * dim));
  for (Index x = 0; x < dim; ++x) {
    for (Index y = 0; y < dim; ++y) {
      if (d.source[x] != d.target[y]) continue;
      const Vec<Scalar> xy = vectorize(compose(out.endomorphisms[x], out.endomorphisms[y]));
      const Vec<Scalar> c = coords * xy;
      if (Vec<Scalar>(basis * c) != xy) throw NonSplitEndomorphismRing("product leaves the span of the basis");
      for (Index z = 0; z < dim; ++z) {
        if (!tiltlab::is_zero(c(z))) d.product[x * dim + y].push_back(BasisTerm<Scalar>{z, c(z)});
      }
    }
  }
  out.algebra = make_algebra(std::move(d));
  out.bimodule.left = out.algebra;
  out.bimodule.right = m;
  for (const auto& s : out.endomorphisms) out.bimodule.left_total.push_back(total_matrix(m, m, s));
  return out;
}

template <class Scalar>
Bimodule<Scalar> regular_bimodule(const AlgebraPtr<Scalar>& alg) {
  const Algebra<Scalar>& a = *alg;
  Bimodule<Scalar> out{alg, regular_module(alg), {}};
  // Total coordinate of each basis element inside the regular module.
  std::vector<Index> pos(a.dim());
  std::vector<Index> count(a.num_vertices(), 0);
  for (Index b = 0; b < a.dim(); ++b) pos[b] = count[a.source(b)]++;
  for (Index b = 0; b < a.dim(); ++b) pos[b] += out.right.offset(a.source(b));
  for (Index x = 0; x < a.dim(); ++x) {
    Mat<Scalar> l = zeros<Scalar>(a.dim(), a.dim());
    for (Index y = 0; y < a.dim(); ++y) {
      for (const auto& t : a.product(x, y)) l(pos[t.basis], pos[y]) += t.coeff;
    }
    out.left_total.push_back(std::move(l));
  }
  return out;
}

template <class Scalar>
Bimodule<Scalar> dual_bimodule(const Rep<Scalar>& n) {
  const FieldSpec& f = n.field();
  AlgebraData<Scalar> d;
  d.field = f;
  d.num_vertices = 1;
  d.source = {0};
  d.target = {0};
  d.idempotent = {0};
  d.product = {{BasisTerm<Scalar>{0, scalar<Scalar>(f, 1)}}};
  d.radical = {false};
  d.labels = {"e1"};
  const AlgebraPtr<Scalar> point = make_algebra(std::move(d));
  const Index size = n.total_dim();
  Bimodule<Scalar> out{n.algebra, rep_from_actions(point, {size}, {identity<Scalar>(f, size)}), {}};
  // (x . phi)(m) = phi(m x).
  for (Index b = 0; b < n.alg().dim(); ++b) out.left_total.push_back(n.total_action(b).transpose());
  return out;
}

template <class Scalar>
Graded<Scalar> left_module_op(const Bimodule<Scalar>& t) {
  return graded_from_total(t.left->opposite(), t.left_total, t.right.total_dim());
}

template <class Scalar>
Bimodule<Scalar> flip(const Bimodule<Scalar>& t) {
  const Graded<Scalar> g = left_module_op(t);
  const Mat<Scalar> b = g.change_of_basis();
  const Mat<Scalar> b_inv = inverse<Scalar>(t.right.field(), b);
  Bimodule<Scalar> out{t.right_algebra()->opposite(), g.module, {}};
  for (Index r = 0; r < t.right_algebra()->dim(); ++r) {
    out.left_total.push_back(b_inv * t.right.total_action(r) * b);
  }
  return out;
}

template <class Scalar>
Rep<Scalar> dual_left(const Bimodule<Scalar>& t) {
  return dual(left_module_op(t).module);
}

template <class Scalar>
TensorProduct<Scalar> tensor_over(const Rep<Scalar>& n, const Bimodule<Scalar>& t) {
  require_same_algebra(n.alg(), *t.left, "tensor_over");
  const Algebra<Scalar>& s = *t.left;
  const Algebra<Scalar>& r = *t.right_algebra();
  const FieldSpec& f = n.field();
  const Index nn = n.total_dim();
  std::vector<Index> relators;
  for (int v = 0; v < s.num_vertices(); ++v) relators.push_back(s.idempotent(v));
  relators.insert(relators.end(), s.generators().begin(), s.generators().end());

  TensorProduct<Scalar> out{Rep<Scalar>{t.right_algebra(), {}, {}}, {}, {}};
  for (int j = 0; j < r.num_vertices(); ++j) {
    const Index tj = t.right.dims[j], oj = t.right.offset(j);
    std::vector<Mat<Scalar>> images;
    for (Index x : relators) {
      const Mat<Scalar> left = t.left_total[x].block(oj, oj, tj, tj);
      images.push_back(kron<Scalar>(n.total_action(x), identity<Scalar>(f, tj)) -
                       kron<Scalar>(identity<Scalar>(f, nn), left));
    }
    Quotient<Scalar> q = quotient_basis<Scalar>(f, nn * tj, hstack<Scalar>(images, nn * tj));
    out.module.dims.push_back(q.projection.rows());
    out.projection.push_back(std::move(q.projection));
    out.section.push_back(std::move(q.section));
  }
  for (Index b = 0; b < r.dim(); ++b) {
    const int src = r.source(b), tgt = r.target(b);
    out.module.act.push_back(out.projection[src] * kron<Scalar>(identity<Scalar>(f, nn), t.right.act[b]) *
                             out.section[tgt]);
  }
  return out;
}

template <class Scalar>
Hom<Scalar> HomModule<Scalar>::element(const Vec<Scalar>& c) const {
  return space.element(Vec<Scalar>(graded.change_of_basis() * c));
}

template <class Scalar>
HomModule<Scalar> hom_module(const Bimodule<Scalar>& t, const Rep<Scalar>& m) {
  require_same_algebra(m.alg(), *t.right_algebra(), "hom_module");
  HomSpace<Scalar> h = hom_space(t.right, m);
  const Algebra<Scalar>& s = *t.left;
  std::vector<Mat<Scalar>> rho;
  for (Index x = 0; x < s.dim(); ++x) {
    const Hom<Scalar> lx = hom_from_total(t.right, t.right, t.left_total[x]);
    Mat<Scalar> col = zeros<Scalar>(h.dim(), h.dim());
    for (Index i = 0; i < h.dim(); ++i) col.col(i) = h.coordinates(compose(h.basis[i], lx));
    rho.push_back(std::move(col));
  }
  Graded<Scalar> g = graded_from_total(t.left, rho, h.dim());
  return HomModule<Scalar>{std::move(g), std::move(h)};
}

namespace {

template <class Scalar>
void finish_report(NaturalMapReport<Scalar>& r) {
  Index rk = 0;
  for (const auto& m : r.matrices) rk += rank<Scalar>(m);
  r.is_injective = rk == r.source.total_dim();
  r.is_surjective = rk == r.target.total_dim();
  r.is_isomorphism = r.is_injective && r.is_surjective;
}

}  // namespace

template <class Scalar>
NaturalMapReport<Scalar> theta_map(const Rep<Scalar>& n, const Bimodule<Scalar>& t) {
  const FieldSpec& f = n.field();
  const TensorProduct<Scalar> tp = tensor_over(n, t);
  const HomModule<Scalar> hm = hom_module(t, tp.module);
  const Algebra<Scalar>& s = n.alg();
  const Algebra<Scalar>& r = *t.right_algebra();
  NaturalMapReport<Scalar> out{n, hm.module(), {}};
  for (int v = 0; v < s.num_vertices(); ++v) {
    const Mat<Scalar> back = left_inverse<Scalar>(f, hm.graded.basis[v]);
    Mat<Scalar> m = zeros<Scalar>(hm.module().dims[v], n.dims[v]);
    for (Index i = 0; i < n.dims[v]; ++i) {
      Mat<Scalar> e = zeros<Scalar>(n.total_dim(), 1);
      e(n.offset(v) + i, 0) = scalar<Scalar>(f, 1);
      Hom<Scalar> image;
      for (int j = 0; j < r.num_vertices(); ++j) {
        image.blocks.push_back(tp.projection[j] * kron<Scalar>(e, identity<Scalar>(f, t.right.dims[j])));
      }
      m.col(i) = back * hm.space.coordinates(image);
    }
    out.matrices.push_back(std::move(m));
  }
  finish_report(out);
  return out;
}

template <class Scalar>
NaturalMapReport<Scalar> nu_map(const Rep<Scalar>& m, const Bimodule<Scalar>& t) {
  const HomModule<Scalar> hm = hom_module(t, m);
  const TensorProduct<Scalar> tp = tensor_over(hm.module(), t);
  const Algebra<Scalar>& r = m.alg();
  const Mat<Scalar> change = hm.graded.change_of_basis();
  std::vector<Hom<Scalar>> homs;
  for (Index i = 0; i < change.cols(); ++i) homs.push_back(hm.space.element(Vec<Scalar>(change.col(i))));
  NaturalMapReport<Scalar> out{tp.module, m, {}};
  for (int j = 0; j < r.num_vertices(); ++j) {
    std::vector<Mat<Scalar>> cols;
    for (const auto& h : homs) cols.push_back(h.blocks[j]);
    out.matrices.push_back(hstack<Scalar>(cols, m.dims[j]) * tp.section[j]);
  }
  finish_report(out);
  return out;
}

template <class Scalar>
Rep<Scalar> lift_to_path_algebra(const AlgebraPtr<Scalar>& tensor, const Rep<Scalar>& c, const Quiver& q) {
  const Algebra<Scalar>& base = c.alg();
  const FieldSpec& f = c.field();
  if (base.num_vertices() != 1 || !base.quiver()) throw BadSetup("base algebra must be presented on one vertex");
  const Quiver& bq = *base.quiver();
  auto arrow_basis = [](const Algebra<Scalar>& a, int arrow) -> Index {
    for (Index b = 0; b < a.dim(); ++b) {
      const Path& p = a.basis_paths()[b];
      if (p.arrows.size() == 1 && p.arrows[0] == arrow) return b;
    }
    throw BadSetup("arrow " + a.quiver()->arrows[arrow].name + " is not a basis element");
  };
  const auto kq = build_path_algebra<Scalar>(q, {}, f);
  const Index dc = c.dims[0];
  std::vector<Rep<Scalar>> parts;
  for (int i = 0; i < q.num_vertices(); ++i) {
    const Rep<Scalar> p = projective(kq, i);
    std::vector<Index> dims;
    for (Index pv : p.dims) dims.push_back(dc * pv);
    std::vector<Mat<Scalar>> arrows;
    for (int a = 0; a < q.num_arrows(); ++a) {
      arrows.push_back(kron<Scalar>(identity<Scalar>(f, dc), p.act[arrow_basis(*kq, a)]));
    }
    for (int l = 0; l < bq.num_arrows(); ++l) {
      const Mat<Scalar>& x = c.act[arrow_basis(base, l)];
      for (int v = 0; v < q.num_vertices(); ++v) arrows.push_back(kron<Scalar>(x, identity<Scalar>(f, p.dims[v])));
    }
    parts.push_back(make_rep(tensor, dims, arrows));
  }
  return direct_sum(parts).module;
}

#define TILTLAB_INSTANTIATE(S)                                                                 \
  template void validate_bimodule<S>(const Bimodule<S>&);                                      \
  template EndoAlgebra<S> endo_algebra<S>(const Rep<S>&, std::uint64_t);                        \
  template Bimodule<S> regular_bimodule<S>(const AlgebraPtr<S>&);                              \
  template Bimodule<S> dual_bimodule<S>(const Rep<S>&);                                        \
  template Graded<S> left_module_op<S>(const Bimodule<S>&);                                    \
  template Bimodule<S> flip<S>(const Bimodule<S>&);                                            \
  template Rep<S> dual_left<S>(const Bimodule<S>&);                                            \
  template TensorProduct<S> tensor_over<S>(const Rep<S>&, const Bimodule<S>&);                 \
  template struct HomModule<S>;                                                                \
  template HomModule<S> hom_module<S>(const Bimodule<S>&, const Rep<S>&);                      \
  template NaturalMapReport<S> theta_map<S>(const Rep<S>&, const Bimodule<S>&);                \
  template NaturalMapReport<S> nu_map<S>(const Rep<S>&, const Bimodule<S>&);                   \
  template Rep<S> lift_to_path_algebra<S>(const AlgebraPtr<S>&, const Rep<S>&, const Quiver&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab
