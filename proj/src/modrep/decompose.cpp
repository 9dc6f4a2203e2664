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

#include "tiltlab/modrep/decompose.hpp"

#include <algorithm>

namespace tiltlab {

namespace {

template <class Scalar>
Mat<Scalar> matrix_power(const FieldSpec& f, const Mat<Scalar>& m, Index e) {
  Mat<Scalar> out = identity<Scalar>(f, m.rows());
  for (Index i = 0; i < e; ++i) out = Mat<Scalar>(out * m);
  return out;
}

template <class Scalar>
bool is_scalar_plus_nilpotent(const Rep<Scalar>& m, const Hom<Scalar>& e, const Scalar& lambda) {
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const Index d = m.dims[v];
    if (d == 0) continue;
    const Mat<Scalar> n = e.blocks[v] - lambda * identity<Scalar>(m.field(), d);
    if (!is_zero<Scalar>(matrix_power(m.field(), n, d))) return false;
  }
  return true;
}

/// The unique lambda with e - lambda nilpotent, if there is one.
template <class Scalar>
std::optional<Scalar> scalar_part(const Rep<Scalar>& m, const Hom<Scalar>& e) {
  const FieldSpec& f = m.field();
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const Index d = m.dims[v];
    if (d == 0) continue;
    if (f.is_prime() && d % static_cast<Index>(f.characteristic()) == 0) continue;
    Scalar tr = scalar<Scalar>(f, 0);
    for (Index i = 0; i < d; ++i) tr += e.blocks[v](i, i);
    const Scalar lambda = tr / scalar<Scalar>(f, d);
    if (is_scalar_plus_nilpotent(m, e, lambda)) return lambda;
    return std::nullopt;
  }
  if (f.is_prime() && f.characteristic() <= 257) {
    for (std::uint32_t k = 0; k < f.characteristic(); ++k) {
      const Scalar lambda = scalar<Scalar>(f, k);
      if (is_scalar_plus_nilpotent(m, e, lambda)) return lambda;
    }
  }
  return std::nullopt;
}

template <class Scalar>
struct Leaf {
  Rep<Scalar> module;
  Hom<Scalar> inclusion;
  Hom<Scalar> projection;
  std::vector<Hom<Scalar>> radical;
};

template <class Scalar>
void split(const Rep<Scalar>& x, const Hom<Scalar>& inclusion, const Hom<Scalar>& projection, Rng& rng,
           std::vector<Leaf<Scalar>>& leaves) {
  if (x.is_zero()) return;
  const FieldSpec& f = x.field();
  const HomSpace<Scalar> end = hom_space(x, x);
  if (auto rad = split_local_radical(end)) {
    leaves.push_back(Leaf<Scalar>{x, inclusion, projection, std::move(*rad)});
    return;
  }
  const Index power = *std::max_element(x.dims.begin(), x.dims.end());
  for (int attempt = 0; attempt < kFittingRetries; ++attempt) {
    Vec<Scalar> c(end.dim());
    for (Index i = 0; i < c.size(); ++i) c(i) = ScalarTraits<Scalar>::random(f, rng);
    const Hom<Scalar> g = end.element(c);
    Hom<Scalar> gn;
    for (const auto& b : g.blocks) gn.blocks.push_back(matrix_power(f, b, power));
    const Index r = rank(gn);
    if (r == 0 || r == x.total_dim()) continue;
    // Fitting: x = ker g^N + im g^N.
    const Sub<Scalar> k = kernel(x, x, gn);
    const Image<Scalar> im = image(x, x, gn);
    Hom<Scalar> pk, pi;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
      const Index dk = k.module.dims[v];
      const Mat<Scalar> basis = hstack<Scalar>({k.inclusion.blocks[v], im.inclusion.blocks[v]}, x.dims[v]);
      const Mat<Scalar> inv = inverse<Scalar>(f, basis);
      pk.blocks.push_back(inv.topRows(dk));
      pi.blocks.push_back(inv.bottomRows(x.dims[v] - dk));
    }
    split(k.module, compose(inclusion, k.inclusion), compose(pk, projection), rng, leaves);
    split(im.module, compose(inclusion, im.inclusion), compose(pi, projection), rng, leaves);
    return;
  }
  throw DecompositionInconclusive("no splitting endomorphism found for a module of dimension " +
                                  dims_string(x.dims) + " after " + std::to_string(kFittingRetries) + " attempts");
}

}  // namespace

template <class Scalar>
int Decomposition<Scalar>::num_indecomposables() const {
  int n = 0;
  for (const auto& s : summands) n += s.multiplicity;
  return n;
}

template <class Scalar>
std::optional<std::vector<Hom<Scalar>>> split_local_radical(const HomSpace<Scalar>& end) {
  const Rep<Scalar>& m = end.source;
  if (m.is_zero()) return std::nullopt;
  const Hom<Scalar> id = identity_hom(m);
  std::vector<Hom<Scalar>> nil;
  for (const auto& e : end.basis) {
    const auto lambda = scalar_part(m, e);
    if (!lambda) return std::nullopt;
    nil.push_back(e - *lambda * id);
  }
  const Index len = end.vectors.rows();
  Mat<Scalar> span = column_basis<Scalar>(hom_columns(nil, len));
  if (span.cols() != end.dim() - 1) return std::nullopt;
  std::vector<Hom<Scalar>> rad;
  for (Index j = 0; j < span.cols(); ++j) rad.push_back(unvectorize_hom(m, m, Vec<Scalar>(span.col(j))));
  // rad must be closed under composition and nilpotent.
  std::vector<Hom<Scalar>> layer = rad;
  Index previous = span.cols();
  while (!layer.empty()) {
    std::vector<Hom<Scalar>> products;
    for (const auto& x : layer) {
      for (const auto& y : rad) products.push_back(compose(x, y));
    }
    const Mat<Scalar> cols = hom_columns(products, len);
    if (!solve<Scalar>(hom_columns(rad, len), cols)) return std::nullopt;
    const Mat<Scalar> next = column_basis<Scalar>(cols);
    if (next.cols() >= previous) return std::nullopt;
    previous = next.cols();
    layer.clear();
    for (Index j = 0; j < next.cols(); ++j) layer.push_back(unvectorize_hom(m, m, Vec<Scalar>(next.col(j))));
  }
  return rad;
}

template <class Scalar>
Hom<Scalar> inverse_hom(const Rep<Scalar>& m, const Hom<Scalar>& f) {
  Hom<Scalar> out;
  for (const auto& b : f.blocks) out.blocks.push_back(inverse<Scalar>(m.field(), b));
  return out;
}

template <class Scalar>
std::optional<Hom<Scalar>> indecomposable_isomorphism(const Rep<Scalar>& m, const Rep<Scalar>& n) {
  if (m.dims != n.dims) return std::nullopt;
  // The non-isomorphisms form a proper subspace, so some basis element is one.
  const HomSpace<Scalar> h = hom_space(m, n);
  for (const auto& f : h.basis) {
    if (is_isomorphism(m, n, f)) return f;
  }
  return std::nullopt;
}

template <class Scalar>
Decomposition<Scalar> decompose(const Rep<Scalar>& m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Leaf<Scalar>> leaves;
  split(m, identity_hom(m), identity_hom(m), rng, leaves);
  Decomposition<Scalar> out{m, {}};
  for (auto& leaf : leaves) {
    bool placed = false;
    for (auto& s : out.summands) {
      const auto phi = indecomposable_isomorphism(s.module, leaf.module);
      if (!phi) continue;
      s.inclusions.push_back(compose(leaf.inclusion, *phi));
      s.projections.push_back(compose(inverse_hom(s.module, *phi), leaf.projection));
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) {
      out.summands.push_back(Summand<Scalar>{leaf.module, 1, {leaf.inclusion}, {leaf.projection}, leaf.radical});
    }
  }
  std::stable_sort(out.summands.begin(), out.summands.end(),
                   [](const Summand<Scalar>& x, const Summand<Scalar>& y) { return x.module.dims < y.module.dims; });
  return out;
}

template <class Scalar>
bool is_indecomposable(const Rep<Scalar>& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  return decompose(m, seed).num_indecomposables() == 1;
}

template <class Scalar>
std::optional<Hom<Scalar>> find_isomorphism(const Rep<Scalar>& m, const Rep<Scalar>& n, std::uint64_t seed) {
  if (m.dims != n.dims) return std::nullopt;
  const Decomposition<Scalar> dm = decompose(m, seed);
  const Decomposition<Scalar> dn = decompose(n, seed);
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  Hom<Scalar> iso = zero_hom(m, n);
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& sm : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size(); ++j) {
      const auto& sn = dn.summands[j];
      if (used[j] || sn.multiplicity != sm.multiplicity) continue;
      const auto phi = indecomposable_isomorphism(sm.module, sn.module);
      if (!phi) continue;
      for (int c = 0; c < sm.multiplicity; ++c) {
        iso = iso + compose(sn.inclusions[c], compose(*phi, sm.projections[c]));
      }
      used[j] = matched = true;
      break;
    }
    if (!matched) return std::nullopt;
  }
  return iso;
}

template <class Scalar>
bool isomorphic(const Rep<Scalar>& m, const Rep<Scalar>& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

template <class Scalar>
AddCategory<Scalar>::AddCategory(const Rep<Scalar>& t, std::uint64_t seed)
    : decomposition_(decompose(t, seed)), seed_(seed) {
  const int n = num_classes();
  radical_.assign(n, std::vector<std::vector<Hom<Scalar>>>(n));
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      radical_[l][k] = l == k ? decomposition_.summands[k].radical
                              : hom_space(indecomposable(l), indecomposable(k)).basis;
    }
  }
}

template <class Scalar>
bool AddCategory<Scalar>::contains(const Rep<Scalar>& x) const {
  if (x.is_zero()) return true;
  for (const auto& s : decompose(x, seed_).summands) {
    bool found = false;
    for (int k = 0; k < num_classes() && !found; ++k) {
      found = indecomposable_isomorphism(indecomposable(k), s.module).has_value();
    }
    if (!found) return false;
  }
  return true;
}

template <class Scalar>
Rep<Scalar> AddCategory<Scalar>::assemble(const std::vector<int>& classes) const {
  std::vector<Rep<Scalar>> parts;
  for (int k : classes) parts.push_back(indecomposable(k));
  return parts.empty() ? zero_rep(generator().algebra) : direct_sum(parts).module;
}

template <class Scalar>
AddMap<Scalar> AddCategory<Scalar>::left_approximation(const Rep<Scalar>& x) const {
  const int n = num_classes();
  std::vector<HomSpace<Scalar>> to;
  for (int k = 0; k < n; ++k) to.push_back(hom_space(x, indecomposable(k)));
  std::vector<int> classes;
  std::vector<Hom<Scalar>> maps;
  for (int k = 0; k < n; ++k) {
    // Maps x -> U_k factoring through a radical map U_l -> U_k.
    std::vector<Hom<Scalar>> through;
    for (int l = 0; l < n; ++l) {
      for (const auto& phi : to[l].basis) {
        for (const auto& psi : radical_maps(l, k)) through.push_back(compose(psi, phi));
      }
    }
    const Mat<Scalar> w = to[k].coordinate_map * hom_columns(through, to[k].vectors.rows());
    const Quotient<Scalar> q = quotient_basis<Scalar>(x.field(), to[k].dim(), w);
    for (Index j = 0; j < q.section.cols(); ++j) {
      classes.push_back(k);
      maps.push_back(to[k].element(Vec<Scalar>(q.section.col(j))));
    }
  }
  AddMap<Scalar> out{assemble(classes), {}, classes};
  out.map = zero_hom(x, out.object);
  if (!classes.empty()) {
    std::vector<Rep<Scalar>> parts;
    for (int k : classes) parts.push_back(indecomposable(k));
    const DirectSum<Scalar> ds = direct_sum(parts);
    for (std::size_t j = 0; j < maps.size(); ++j) out.map = out.map + compose(ds.injections[j], maps[j]);
  }
  return out;
}

template <class Scalar>
AddMap<Scalar> AddCategory<Scalar>::right_approximation(const Rep<Scalar>& x) const {
  const int n = num_classes();
  std::vector<HomSpace<Scalar>> from;
  for (int k = 0; k < n; ++k) from.push_back(hom_space(indecomposable(k), x));
  std::vector<int> classes;
  std::vector<Hom<Scalar>> maps;
  for (int k = 0; k < n; ++k) {
    std::vector<Hom<Scalar>> through;
    for (int l = 0; l < n; ++l) {
      for (const auto& phi : from[l].basis) {
        for (const auto& psi : radical_maps(k, l)) through.push_back(compose(phi, psi));
      }
    }
    const Mat<Scalar> w = from[k].coordinate_map * hom_columns(through, from[k].vectors.rows());
    const Quotient<Scalar> q = quotient_basis<Scalar>(x.field(), from[k].dim(), w);
    for (Index j = 0; j < q.section.cols(); ++j) {
      classes.push_back(k);
      maps.push_back(from[k].element(Vec<Scalar>(q.section.col(j))));
    }
  }
  AddMap<Scalar> out{assemble(classes), {}, classes};
  out.map = zero_hom(out.object, x);
  if (!classes.empty()) {
    std::vector<Rep<Scalar>> parts;
    for (int k : classes) parts.push_back(indecomposable(k));
    const DirectSum<Scalar> ds = direct_sum(parts);
    for (std::size_t j = 0; j < maps.size(); ++j) out.map = out.map + compose(maps[j], ds.projections[j]);
  }
  return out;
}

template <class Scalar>
AddMap<Scalar> evaluation_preenvelope(const Rep<Scalar>& x, const Rep<Scalar>& t) {
  const HomSpace<Scalar> h = hom_space(x, t);
  AddMap<Scalar> out{power(t, static_cast<int>(h.dim())), {}, {}};
  out.map = zero_hom(x, out.object);
  if (h.dim() == 0) return out;
  const DirectSum<Scalar> ds = direct_sum(std::vector<Rep<Scalar>>(static_cast<std::size_t>(h.dim()), t));
  for (Index j = 0; j < h.dim(); ++j) out.map = out.map + compose(ds.injections[j], h.basis[j]);
  return out;
}

template <class Scalar>
AddMap<Scalar> evaluation_precover(const Rep<Scalar>& t, const Rep<Scalar>& x) {
  const HomSpace<Scalar> h = hom_space(t, x);
  AddMap<Scalar> out{power(t, static_cast<int>(h.dim())), {}, {}};
  out.map = zero_hom(out.object, x);
  if (h.dim() == 0) return out;
  const DirectSum<Scalar> ds = direct_sum(std::vector<Rep<Scalar>>(static_cast<std::size_t>(h.dim()), t));
  for (Index j = 0; j < h.dim(); ++j) out.map = out.map + compose(h.basis[j], ds.projections[j]);
  return out;
}

#define TILTLAB_INSTANTIATE(S)                                                                         \
  template struct Decomposition<S>;                                                                    \
  template Decomposition<S> decompose<S>(const Rep<S>&, std::uint64_t);                                \
  template std::optional<std::vector<Hom<S>>> split_local_radical<S>(const HomSpace<S>&);              \
  template bool is_indecomposable<S>(const Rep<S>&, std::uint64_t);                                    \
  template std::optional<Hom<S>> indecomposable_isomorphism<S>(const Rep<S>&, const Rep<S>&);          \
  template std::optional<Hom<S>> find_isomorphism<S>(const Rep<S>&, const Rep<S>&, std::uint64_t);     \
  template bool isomorphic<S>(const Rep<S>&, const Rep<S>&, std::uint64_t);                            \
  template Hom<S> inverse_hom<S>(const Rep<S>&, const Hom<S>&);                                        \
  template class AddCategory<S>;                                                                       \
  template AddMap<S> evaluation_preenvelope<S>(const Rep<S>&, const Rep<S>&);                          \
  template AddMap<S> evaluation_precover<S>(const Rep<S>&, const Rep<S>&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab
