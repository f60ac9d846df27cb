#include "nakayama/repmod.hpp"

#include <algorithm>
#include <numeric>

namespace nakayama {

// ---------------------------------------------------------------- Representation

template <class S>
Representation<S>::Representation(AlgebraPtr alg, std::vector<Index> dims, std::vector<Matrix<S>> maps,
                                  std::string key)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)), key_(std::move(key)) {
  if (!alg_) throw RepresentationError("representation without algebra");
  const auto& q = alg_->quiver();
  if (dims_.size() != q.vertex_count()) throw RepresentationError("dimension vector has wrong size");
  if (maps_.size() != q.arrow_count()) throw RepresentationError("wrong number of arrow maps");
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw RepresentationError("map of arrow " + ar.name + " has shape " + std::to_string(maps_[a].rows()) + "x" +
                                std::to_string(maps_[a].cols()) + ", expected " + std::to_string(dims_[ar.target]) +
                                "x" + std::to_string(dims_[ar.source]));
  }
  for (const auto& r : alg_->relations()) {
    const Matrix<S> l = path_map(r.lhs);
    if (r.kind == Relation::Kind::monomial) {
      if (!is_zero_matrix<S>(l)) throw RepresentationError("relation " + to_string(q, r.lhs) + " does not vanish");
    } else if (l != path_map(r.rhs)) {
      throw RepresentationError("relation " + to_string(q, r.lhs) + " - " + to_string(q, r.rhs) + " does not hold");
    }
  }
}

template <class S>
Representation<S> Representation<S>::zero(AlgebraPtr alg) {
  const auto& q = alg->quiver();
  std::vector<Matrix<S>> maps(q.arrow_count(), Matrix<S>(0, 0));
  return Representation(alg, std::vector<Index>(q.vertex_count(), 0), std::move(maps));
}

template <class S>
Index Representation<S>::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), Index{0});
}

template <class S>
Matrix<S> Representation<S>::path_map(const Path& p) const {
  Matrix<S> acc = Matrix<S>::Identity(dims_.at(p.start), dims_.at(p.start));
  for (ArrowId a : p.arrows) acc = Matrix<S>(maps_.at(a) * acc);
  return acc;
}

template <class S>
std::vector<Index> Representation<S>::offsets() const {
  std::vector<Index> out(dims_.size() + 1, 0);
  for (std::size_t v = 0; v < dims_.size(); ++v) out[v + 1] = out[v] + dims_[v];
  return out;
}

template <class S>
Matrix<S> Representation<S>::total_map(ArrowId a) const {
  const auto off = offsets();
  const auto& ar = alg_->quiver().arrow(a);
  Matrix<S> out = Matrix<S>::Zero(off.back(), off.back());
  out.block(off[ar.target], off[ar.source], dims_[ar.target], dims_[ar.source]) = maps_[a];
  return out;
}

// ---------------------------------------------------------------- homomorphisms

template <class S>
Matrix<S> Homomorphism<S>::total() const {
  Index rows = 0, cols = 0;
  for (const auto& c : components) {
    rows += c.rows();
    cols += c.cols();
  }
  Matrix<S> out = Matrix<S>::Zero(rows, cols);
  Index r = 0, c0 = 0;
  for (const auto& c : components) {
    out.block(r, c0, c.rows(), c.cols()) = c;
    r += c.rows();
    c0 += c.cols();
  }
  return out;
}

template <class S>
bool Homomorphism<S>::is_zero() const {
  for (const auto& c : components)
    if (!is_zero_matrix<S>(c)) return false;
  return true;
}

template <class S>
Homomorphism<S> compose(const Homomorphism<S>& g, const Homomorphism<S>& f) {
  if (g.components.size() != f.components.size()) throw DimensionError("compose: vertex count mismatch");
  Homomorphism<S> out;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    if (g.components[v].cols() != f.components[v].rows()) throw DimensionError("compose: dimension mismatch");
    out.components.push_back(g.components[v] * f.components[v]);
  }
  return out;
}

template <class S>
Homomorphism<S> identity(const Representation<S>& m) {
  Homomorphism<S> out;
  for (Index d : m.dims()) out.components.push_back(Matrix<S>::Identity(d, d));
  return out;
}

template <class S>
Homomorphism<S> zero_hom(const Representation<S>& m, const Representation<S>& n) {
  Homomorphism<S> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) out.components.push_back(Matrix<S>::Zero(n.dims()[v], m.dims()[v]));
  return out;
}

template <class S>
bool is_homomorphism(const Representation<S>& m, const Representation<S>& n, const Homomorphism<S>& f) {
  const auto& q = m.algebra().quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (f.components[v].rows() != n.dim(v) || f.components[v].cols() != m.dim(v)) return false;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (Matrix<S>(n.map(a) * f.components[ar.source]) != Matrix<S>(f.components[ar.target] * m.map(a))) return false;
  }
  return true;
}

template <class S>
Homomorphism<S> linear_combination(const std::vector<Homomorphism<S>>& basis, const std::vector<S>& coeffs) {
  if (basis.empty()) throw DimensionError("linear_combination of an empty basis");
  Homomorphism<S> out = basis.front();
  for (auto& c : out.components) c.setZero();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (is_zero(coeffs[i])) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v) out.components[v] += coeffs[i] * basis[i].components[v];
  }
  return out;
}

// ---------------------------------------------------------------- submodules

template <class S>
bool is_submodule(const Representation<S>& m, const Submodule<S>& x) {
  const auto& q = m.algebra().quiver();
  if (x.size() != q.vertex_count()) return false;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (x[v].ambient() != m.dim(v)) return false;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (!x[ar.target].contains(map_subspace<S>(m.map(a), x[ar.source]))) return false;
  }
  return true;
}

template <class S>
Submodule<S> zero_submodule(const Representation<S>& m) {
  Submodule<S> out;
  for (Index d : m.dims()) out.push_back(Subspace<S>::zero(d));
  return out;
}

template <class S>
Submodule<S> full_submodule(const Representation<S>& m) {
  Submodule<S> out;
  for (Index d : m.dims()) out.push_back(Subspace<S>::full(d));
  return out;
}

template <class S>
Submodule<S> submodule_sum(const Submodule<S>& a, const Submodule<S>& b) {
  Submodule<S> out;
  for (std::size_t v = 0; v < a.size(); ++v) out.push_back(subspace_sum<S>(a[v], b[v]));
  return out;
}

template <class S>
Submodule<S> submodule_intersect(const Submodule<S>& a, const Submodule<S>& b) {
  Submodule<S> out;
  for (std::size_t v = 0; v < a.size(); ++v) out.push_back(subspace_intersect<S>(a[v], b[v]));
  return out;
}

template <class S>
bool submodule_contains(const Submodule<S>& a, const Submodule<S>& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (!a[v].contains(b[v])) return false;
  return true;
}

template <class S>
std::vector<Index> submodule_dims(const Submodule<S>& x) {
  std::vector<Index> out;
  for (const auto& s : x) out.push_back(s.dim());
  return out;
}

template <class S>
Submodule<S> generated_submodule(const Representation<S>& m, const std::vector<std::pair<VertexId, Vector<S>>>& gens) {
  const auto& q = m.algebra().quiver();
  Submodule<S> x = zero_submodule(m);
  for (const auto& [v, vec] : gens) {
    Matrix<S> row = vec.transpose();
    x[v] = subspace_sum<S>(x[v], Subspace<S>::from_rows(row));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrow(a);
      auto img = map_subspace<S>(m.map(a), x[ar.source]);
      if (!x[ar.target].contains(img)) {
        x[ar.target] = subspace_sum<S>(x[ar.target], img);
        changed = true;
      }
    }
  }
  return x;
}

template <class S>
Submodule<S> radical_of(const Representation<S>& m, const Submodule<S>& x) {
  const auto& q = m.algebra().quiver();
  Submodule<S> out = zero_submodule(m);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    out[ar.target] = subspace_sum<S>(out[ar.target], map_subspace<S>(m.map(a), x[ar.source]));
  }
  return out;
}

template <class S>
Submodule<S> radical(const Representation<S>& m) {
  return radical_of(m, full_submodule(m));
}

template <class S>
Submodule<S> radical_power(const Representation<S>& m, std::size_t k) {
  Submodule<S> x = full_submodule(m);
  for (std::size_t i = 0; i < k; ++i) x = radical_of(m, x);
  return x;
}

template <class S>
Submodule<S> socle(const Representation<S>& m) {
  const auto& q = m.algebra().quiver();
  Submodule<S> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix<S>> outs;
    for (ArrowId a : q.out_arrows(v)) outs.push_back(m.map(a));
    if (outs.empty()) {
      out.push_back(Subspace<S>::full(m.dim(v)));
    } else {
      out.push_back(kernel<S>(vstack<S>(outs, m.dim(v))));
    }
  }
  return out;
}

template <class S>
std::vector<Index> top_dims(const Representation<S>& m) {
  auto r = submodule_dims(radical(m));
  for (std::size_t v = 0; v < r.size(); ++v) r[v] = m.dim(v) - r[v];
  return r;
}

template <class S>
Submodule<S> image_of(const Homomorphism<S>& f, const Representation<S>& n) {
  Submodule<S> out;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    if (f.components[v].cols() == 0) out.push_back(Subspace<S>::zero(n.dim(v)));
    else out.push_back(image<S>(f.components[v]));
  }
  return out;
}

template <class S>
Submodule<S> kernel_of(const Homomorphism<S>& f, const Representation<S>& m) {
  Submodule<S> out;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    if (f.components[v].rows() == 0) out.push_back(Subspace<S>::full(m.dim(v)));
    else out.push_back(kernel<S>(f.components[v]));
  }
  return out;
}

template <class S>
Subquotient<S> subquotient(const Representation<S>& m, const Submodule<S>& y, const Submodule<S>& x) {
  const auto& q = m.algebra().quiver();
  Subquotient<S> out;
  out.upper = y;
  out.lower = x;
  std::vector<Index> dims;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (!y[v].contains(x[v])) throw RepresentationError("subquotient: lower submodule not contained in upper");
    const Index n = m.dim(v);
    const Matrix<S> xc = x[v].columns();
    // representatives of Y_v / X_v: pivot-greedy choice among Y's basis
    std::vector<Matrix<S>> picked;
    Subspace<S> span = x[v];
    Matrix<S> yc = y[v].columns();
    for (Index j = 0; j < yc.cols(); ++j) {
      Vector<S> col = yc.col(j);
      if (span.contains(col)) continue;
      picked.push_back(Matrix<S>(col));
      span = subspace_sum<S>(span, Subspace<S>::from_columns(Matrix<S>(col)));
    }
    const Matrix<S> c = hstack<S>(picked, n);
    const Matrix<S> t = extend_to_basis<S>(hstack<S>({xc, c}, n));
    const auto tinv = inverse<S>(t);
    if (!tinv) throw RepresentationError("subquotient: singular change of basis");
    out.lift.push_back(c);
    out.proj.push_back(tinv->middleRows(xc.cols(), c.cols()));
    dims.push_back(c.cols());
  }
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    maps.push_back(out.proj[ar.target] * m.map(a) * out.lift[ar.source]);
  }
  out.module = Representation<S>(m.algebra_ptr(), std::move(dims), std::move(maps));
  return out;
}

template <class S>
Subquotient<S> submodule(const Representation<S>& m, const Submodule<S>& x) {
  return subquotient(m, x, zero_submodule(m));
}

template <class S>
Subquotient<S> quotient(const Representation<S>& m, const Submodule<S>& x) {
  return subquotient(m, full_submodule(m), x);
}

template <class S>
Homomorphism<S> canonical_map(const Subquotient<S>& from, const Subquotient<S>& to) {
  Homomorphism<S> out;
  for (std::size_t v = 0; v < from.lift.size(); ++v) out.components.push_back(to.proj[v] * from.lift[v]);
  return out;
}

template <class S>
Representation<S> direct_sum(const std::vector<Representation<S>>& parts) {
  if (parts.empty()) throw RepresentationError("direct_sum of nothing");
  const auto& alg = parts.front().algebra_ptr();
  const auto& q = alg->quiver();
  std::vector<Index> dims(q.vertex_count(), 0);
  for (const auto& p : parts)
    for (VertexId v = 0; v < q.vertex_count(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    Matrix<S> m = Matrix<S>::Zero(dims[ar.target], dims[ar.source]);
    Index r = 0, c = 0;
    for (const auto& p : parts) {
      m.block(r, c, p.dim(ar.target), p.dim(ar.source)) = p.map(a);
      r += p.dim(ar.target);
      c += p.dim(ar.source);
    }
    maps.push_back(std::move(m));
  }
  std::string key;
  for (const auto& p : parts) key += (key.empty() ? "" : " + ") + (p.key().empty() ? std::string("?") : p.key());
  return Representation<S>(alg, std::move(dims), std::move(maps), key);
}

// ---------------------------------------------------------------- profile

Index factor_serial_index_from_layers(const std::vector<Index>& layer_totals) {
  const Index l = std::accumulate(layer_totals.begin(), layer_totals.end(), Index{0});
  Index k = 0;
  while (k < static_cast<Index>(layer_totals.size()) && layer_totals[static_cast<std::size_t>(k)] <= 1) ++k;
  if (k == static_cast<Index>(layer_totals.size())) return 1;
  return l - k;
}

template <class S>
ModuleProfile profile(const Representation<S>& m) {
  ModuleProfile p;
  const std::size_t nv = m.dims().size();
  Submodule<S> x = full_submodule(m);
  p.radical_series.push_back(submodule_dims(x));
  while (std::accumulate(p.radical_series.back().begin(), p.radical_series.back().end(), Index{0}) > 0) {
    x = radical_of(m, x);
    p.radical_series.push_back(submodule_dims(x));
  }
  p.loewy_length = static_cast<Index>(p.radical_series.size()) - 1;
  p.length = m.total_dim();
  std::vector<Index> totals;
  for (std::size_t k = 0; k + 1 < p.radical_series.size(); ++k) {
    std::vector<Index> layer(nv);
    for (std::size_t v = 0; v < nv; ++v) layer[v] = p.radical_series[k][v] - p.radical_series[k + 1][v];
    totals.push_back(std::accumulate(layer.begin(), layer.end(), Index{0}));
    p.layers.push_back(std::move(layer));
  }
  p.top = p.layers.empty() ? std::vector<Index>(nv, 0) : p.layers.front();
  p.socle = submodule_dims(socle(m));
  const auto total = [](const std::vector<Index>& d) { return std::accumulate(d.begin(), d.end(), Index{0}); };
  p.local = total(p.top) == 1;
  p.colocal = total(p.socle) == 1;
  p.uniserial = std::all_of(totals.begin(), totals.end(), [](Index t) { return t <= 1; });
  p.factor_serial_index = factor_serial_index_from_layers(totals);
  return p;
}

// ---------------------------------------------------------------- Hom and End

template <class S>
std::vector<Homomorphism<S>> hom_space(const Representation<S>& m, const Representation<S>& n) {
  const auto& q = m.algebra().quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<Index> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const Index unknowns = off[nv];
  std::vector<Homomorphism<S>> out;
  if (unknowns == 0) return out;
  Index eqs = 0;
  for (const auto& ar : q.arrows()) eqs += n.dim(ar.target) * m.dim(ar.source);
  Matrix<S> sys = Matrix<S>::Zero(std::max<Index>(eqs, 1), unknowns);
  Index row = 0;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    const Index ns = n.dim(ar.source), nt = n.dim(ar.target), ms = m.dim(ar.source), mt = m.dim(ar.target);
    const Matrix<S>& na = n.map(a);
    const Matrix<S>& ma = m.map(a);
    for (Index i = 0; i < nt; ++i)
      for (Index j = 0; j < ms; ++j, ++row) {
        // (N_a f_s)(i,j) - (f_t M_a)(i,j)
        for (Index k = 0; k < ns; ++k)
          if (!is_zero(na(i, k))) sys(row, off[ar.source] + k * ms + j) += na(i, k);
        for (Index k = 0; k < mt; ++k)
          if (!is_zero(ma(k, j))) sys(row, off[ar.target] + i * mt + k) -= ma(k, j);
      }
  }
  const auto ker = kernel<S>(sys);
  for (Index b = 0; b < ker.dim(); ++b) {
    Homomorphism<S> f;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix<S> c(n.dim(v), m.dim(v));
      for (Index i = 0; i < n.dim(v); ++i)
        for (Index j = 0; j < m.dim(v); ++j) c(i, j) = ker.rows()(b, off[v] + i * m.dim(v) + j);
      f.components.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <class S>
EndRadical<S> end_radical(const Representation<S>& m) {
  if (!ScalarTraits<S>::characteristic_zero &&
      ScalarTraits<S>::characteristic() <= static_cast<std::uint64_t>(m.total_dim()))
    throw UnsupportedField("trace-form radical needs characteristic 0 or larger than dim M = " +
                           std::to_string(m.total_dim()));
  EndRadical<S> out;
  out.basis = hom_space(m, m);
  const Index d = static_cast<Index>(out.basis.size());
  std::vector<Matrix<S>> totals;
  for (const auto& f : out.basis) totals.push_back(f.total());
  Matrix<S> gram(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      S tr = 0;
      const auto& a = totals[static_cast<std::size_t>(i)];
      const auto& b = totals[static_cast<std::size_t>(j)];
      for (Index r = 0; r < a.rows(); ++r)
        for (Index k = 0; k < a.cols(); ++k)
          if (!is_zero(a(r, k)) && !is_zero(b(k, r))) tr += a(r, k) * b(k, r);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  out.radical = d == 0 ? Matrix<S>(0, 0) : kernel<S>(gram).rows();
  return out;
}

template <class S>
bool is_indecomposable(const Representation<S>& m) {
  if (m.total_dim() == 0) return false;
  const auto e = end_radical(m);
  return static_cast<Index>(e.basis.size()) - e.dim_radical() == 1;
}

template <class S>
bool is_isomorphism(const Homomorphism<S>& f) {
  for (const auto& c : f.components)
    if (c.rows() != c.cols() || rank<S>(c) != c.rows()) return false;
  return true;
}

namespace {

template <class S>
bool nilpotent(const Matrix<S>& a) {
  if (a.rows() == 0) return true;
  Matrix<S> p = a;
  for (Index k = 1; k < a.rows(); ++k) p = Matrix<S>(p * a);
  return is_zero_matrix<S>(p);
}

template <class S>
Homomorphism<S> invert(const Homomorphism<S>& f) {
  Homomorphism<S> out;
  for (const auto& c : f.components) out.components.push_back(*inverse<S>(c));
  return out;
}

// With End(m) local: an isomorphism m -> n exists iff some g_j f_i is not
// nilpotent, and then f_i is one.
template <class S>
std::optional<Homomorphism<S>> local_iso(const std::vector<Homomorphism<S>>& f, const std::vector<Homomorphism<S>>& g) {
  for (const auto& fi : f)
    for (const auto& gj : g)
      if (!nilpotent<S>(compose(gj, fi).total())) return fi;
  return std::nullopt;
}

}  // namespace

template <class S>
IsoResult<S> is_isomorphic(const Representation<S>& m, const Representation<S>& n) {
  IsoResult<S> r;
  if (m.dims() != n.dims()) return r;
  if (m.total_dim() == 0) {
    r.verdict = Verdict::yes;
    r.iso = identity(m);
    return r;
  }
  const auto f = hom_space(m, n);
  if (f.empty()) return r;
  const auto g = hom_space(n, m);
  if (g.empty()) return r;
  try {
    if (is_indecomposable(m)) {
      if (auto iso = local_iso(f, g)) {
        r.verdict = Verdict::yes;
        r.iso = *iso;
      }
      return r;
    }
    if (is_indecomposable(n)) {
      if (auto iso = local_iso(g, f)) {
        r.verdict = Verdict::yes;
        r.iso = invert(*iso);
      }
      return r;
    }
  } catch (const UnsupportedField&) {
  }
  // Both sides decomposable (or undecidable locally): an isomorphism exists iff
  // det of the generic combination is a nonzero polynomial of degree dim M; a
  // full grid with more than dim M points per coordinate meets a non-root.
  const Index total = m.total_dim();
  const std::size_t d = f.size();
  for (int radius : {2, 5}) {
    const std::size_t width = static_cast<std::size_t>(2 * radius + 1);
    double combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= static_cast<double>(width);
    const bool exhaustive = combos <= 2e5;
    const std::size_t limit = exhaustive ? static_cast<std::size_t>(combos) : 200000;
    std::vector<int> digits(d, 0);
    for (std::size_t count = 0; count < limit; ++count) {
      std::size_t rest = count;
      std::vector<S> coeffs(d);
      for (std::size_t i = 0; i < d; ++i) {
        coeffs[i] = S(static_cast<long long>(rest % width) - radius);
        rest /= width;
      }
      auto h = linear_combination(f, coeffs);
      if (is_isomorphism(h)) {
        r.verdict = Verdict::yes;
        r.iso = std::move(h);
        return r;
      }
    }
    const bool field_big = ScalarTraits<S>::characteristic_zero ||
                           ScalarTraits<S>::characteristic() > static_cast<std::uint64_t>(2 * radius);
    if (exhaustive && field_big && static_cast<Index>(width) > total) return r;
  }
  r.verdict = Verdict::inconclusive;
  return r;
}

// ---------------------------------------------------------------- constructors

template <class S>
Representation<S> simple_module(const AlgebraPtr& alg, VertexId v) {
  return string_module<S>(alg, Walk{v, 1, {}});
}

template <class S>
Representation<S> string_module(const AlgebraPtr& alg, const Walk& w) {
  const auto& q = alg->quiver();
  if (!is_composable(q, w) || !is_reduced(w)) throw RepresentationError("not a string: " + to_string(q, w));
  const std::size_t nv = q.vertex_count();
  std::vector<Index> dims(nv, 0);
  std::vector<std::pair<VertexId, Index>> pos;  // basis vector z_i -> (vertex, index in block)
  VertexId at = w.vertex;
  pos.emplace_back(at, dims[at]++);
  for (const auto& l : w.letters) {
    at = letter_target(q, l);
    pos.emplace_back(at, dims[at]++);
  }
  std::vector<Matrix<S>> maps;
  for (const auto& ar : q.arrows()) maps.push_back(Matrix<S>::Zero(dims[ar.target], dims[ar.source]));
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    const auto& from = l.dir > 0 ? pos[i] : pos[i + 1];
    const auto& to = l.dir > 0 ? pos[i + 1] : pos[i];
    maps[l.arrow](to.second, from.second) = S(1);
  }
  return Representation<S>(alg, std::move(dims), std::move(maps), to_string(q, canonical_string(q, w)));
}

std::vector<std::pair<VertexId, Index>> projective_positions(const PathBasis& basis, VertexId v) {
  std::vector<std::pair<VertexId, Index>> out;
  std::map<VertexId, Index> count;
  for (std::size_t i : basis.starting_at(v)) {
    const VertexId t = basis.target(i);
    out.emplace_back(t, count[t]++);
  }
  return out;
}

template <class S>
Representation<S> projective_module(const AlgebraPtr& alg, const PathBasis& basis, VertexId v) {
  const auto& q = alg->quiver();
  const auto classes = basis.starting_at(v);
  const auto pos = projective_positions(basis, v);
  std::map<std::size_t, std::size_t> where;
  for (std::size_t k = 0; k < classes.size(); ++k) where[classes[k]] = k;
  std::vector<Index> dims(q.vertex_count(), 0);
  for (const auto& [t, idx] : pos) dims[t] = std::max(dims[t], idx + 1);
  std::vector<Matrix<S>> maps;
  for (const auto& ar : q.arrows()) maps.push_back(Matrix<S>::Zero(dims[ar.target], dims[ar.source]));
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Path& p = basis.path(classes[k]);
    for (ArrowId a : q.out_arrows(p.end(q))) {
      Path ext = p;
      ext.arrows.push_back(a);
      if (auto c = basis.class_of(ext)) {
        const auto& to = pos[where.at(*c)];
        maps[a](to.second, pos[k].second) += S(1);
      }
    }
  }
  return Representation<S>(alg, std::move(dims), std::move(maps), "P(" + q.vertex_name(v) + ")");
}

template <class S>
Representation<S> injective_module(const AlgebraPtr& alg, const PathBasis& basis, VertexId v) {
  const auto& q = alg->quiver();
  const auto classes = basis.ending_at(v);
  std::vector<Index> dims(q.vertex_count(), 0);
  std::vector<std::pair<VertexId, Index>> pos;
  std::map<std::size_t, std::size_t> where;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const VertexId s = basis.source(classes[k]);
    pos.emplace_back(s, dims[s]++);
    where[classes[k]] = k;
  }
  std::vector<Matrix<S>> maps;
  for (const auto& ar : q.arrows()) maps.push_back(Matrix<S>::Zero(dims[ar.target], dims[ar.source]));
  // dual basis: (p^* . a)(x) = p^*(a x), so p^* . a = sum of x^* over classes x with a x = p
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Path& x = basis.path(classes[k]);
    for (ArrowId a : q.in_arrows(x.start)) {
      Path ax{q.arrow(a).source, {a}};
      ax.arrows.insert(ax.arrows.end(), x.arrows.begin(), x.arrows.end());
      if (auto c = basis.class_of(ax)) {
        const auto& from = pos[where.at(*c)];
        maps[a](pos[k].second, from.second) += S(1);
      }
    }
  }
  return Representation<S>(alg, std::move(dims), std::move(maps), "I(" + q.vertex_name(v) + ")");
}

template <class S>
std::vector<Representation<S>> nonuniserial_projective_injectives(const AlgebraPtr& alg, const PathBasis& basis) {
  std::vector<VertexId> sources;
  for (const auto& r : alg->relations())
    if (r.kind == Relation::Kind::commutativity) sources.push_back(r.lhs.start);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::vector<Representation<S>> out;
  for (VertexId v : sources) {
    auto p = projective_module<S>(alg, basis, v);
    p.set_key("PI(" + alg->quiver().vertex_name(v) + ")");
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------- witnesses

namespace {

template <class S>
Matrix<S> mat(Index rows, Index cols, std::initializer_list<int> entries) {
  Matrix<S> m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = S(*it++);
  return m;
}

AlgebraPtr algebra_from(const char* text) { return std::make_shared<const Algebra>(parse_algebra(text)); }

}  // namespace

template <class S>
std::vector<Witness<S>> witness_gallery() {
  std::vector<Witness<S>> out;
  auto add = [&](std::string name, const char* text, std::vector<Index> dims, std::vector<Matrix<S>> maps,
                 Index expected) {
    auto alg = algebra_from(text);
    Representation<S> m(alg, dims, std::move(maps), name);
    out.push_back({std::move(name), alg, std::move(m), std::move(dims), expected});
  };
  // three arrows out of vertex 4
  add("out3", "vertices: 1 2 3 4\narrows: a1: 4 -> 1; a2: 4 -> 2; a3: 4 -> 3\n", {1, 1, 1, 2},
      {mat<S>(1, 2, {1, 0}), mat<S>(1, 2, {0, 1}), mat<S>(1, 2, {1, 1})}, 5);
  // loop at vertex 3 with two further arrows out of it
  add("loop-out3", "vertices: 1 2 3\narrows: alpha: 3 -> 3; beta: 3 -> 1; gamma: 3 -> 2\nrelations: alpha*alpha*alpha\n",
      {1, 1, 3},
      {mat<S>(3, 3, {0, 0, 0, 0, 0, 0, 0, 1, 0}), mat<S>(1, 3, {1, 0, 0}), mat<S>(1, 3, {1, 1, 0})}, 5);
  // three arrows into vertex 1
  add("in3", "vertices: 1 2 3 4\narrows: a2: 2 -> 1; a3: 3 -> 1; a4: 4 -> 1\n", {2, 1, 1, 1},
      {mat<S>(2, 1, {1, 0}), mat<S>(2, 1, {0, 1}), mat<S>(2, 1, {1, 1})}, 5);
  // loop at vertex 1 with two further arrows into it
  add("loop-in3", "vertices: 1 2 3\narrows: alpha: 1 -> 1; beta: 2 -> 1; gamma: 3 -> 1\nrelations: alpha*alpha*alpha\n",
      {3, 1, 1},
      {mat<S>(3, 3, {0, 0, 0, 1, 0, 0, 1, 1, 0}), mat<S>(3, 1, {0, 0, 1}), mat<S>(3, 1, {1, 0, 1})}, 5);
  // an arrow with two nonzero successors
  add("succ2", "vertices: 1 2 3 4\narrows: alpha: 4 -> 3; beta1: 3 -> 1; beta2: 3 -> 2\n", {1, 1, 2, 1},
      {mat<S>(2, 1, {1, 1}), mat<S>(1, 2, {1, 0}), mat<S>(1, 2, {0, 1})}, 5);
  // an arrow with two nonzero predecessors
  add("pred2", "vertices: 1 2 3 4\narrows: gamma1: 3 -> 2; gamma2: 4 -> 2; alpha: 2 -> 1\n", {1, 2, 1, 1},
      {mat<S>(2, 1, {1, 0}), mat<S>(2, 1, {0, 1}), mat<S>(1, 2, {1, 1})}, 5);
  // loop at 2 followed by beta: 2 -> 1
  add("loop-succ", "vertices: 1 2\narrows: alpha: 2 -> 2; beta: 2 -> 1\nrelations: alpha*alpha*alpha; alpha*alpha*beta\n",
      {2, 4},
      {mat<S>(4, 4, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0}), mat<S>(2, 4, {1, 0, 0, 0, 0, 1, 0, 0})}, 6);
  // beta: 2 -> 1 followed by a loop at 1
  add("loop-pred", "vertices: 1 2\narrows: alpha: 1 -> 1; beta: 2 -> 1\nrelations: alpha*alpha*alpha; beta*alpha*alpha\n",
      {4, 2},
      {mat<S>(4, 4, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0}), mat<S>(4, 2, {0, 0, 1, 0, 0, 0, 1, 1})}, 6);
  return out;
}

// ---------------------------------------------------------------- instantiation

#define NAKAYAMA_INSTANTIATE(S)                                                                                    \
  template class Representation<S>;                                                                                \
  template struct Homomorphism<S>;                                                                                 \
  template Homomorphism<S> compose(const Homomorphism<S>&, const Homomorphism<S>&);                                \
  template Homomorphism<S> identity(const Representation<S>&);                                                     \
  template Homomorphism<S> zero_hom(const Representation<S>&, const Representation<S>&);                           \
  template bool is_homomorphism(const Representation<S>&, const Representation<S>&, const Homomorphism<S>&);       \
  template Homomorphism<S> linear_combination(const std::vector<Homomorphism<S>>&, const std::vector<S>&);         \
  template bool is_submodule(const Representation<S>&, const Submodule<S>&);                                       \
  template Submodule<S> zero_submodule(const Representation<S>&);                                                  \
  template Submodule<S> full_submodule(const Representation<S>&);                                                  \
  template Submodule<S> submodule_sum(const Submodule<S>&, const Submodule<S>&);                                   \
  template Submodule<S> submodule_intersect(const Submodule<S>&, const Submodule<S>&);                             \
  template bool submodule_contains(const Submodule<S>&, const Submodule<S>&);                                      \
  template std::vector<Index> submodule_dims(const Submodule<S>&);                                                 \
  template Submodule<S> generated_submodule(const Representation<S>&,                                              \
                                            const std::vector<std::pair<VertexId, Vector<S>>>&);                   \
  template Submodule<S> radical_of(const Representation<S>&, const Submodule<S>&);                                 \
  template Submodule<S> radical(const Representation<S>&);                                                         \
  template Submodule<S> radical_power(const Representation<S>&, std::size_t);                                      \
  template Submodule<S> socle(const Representation<S>&);                                                           \
  template std::vector<Index> top_dims(const Representation<S>&);                                                  \
  template Submodule<S> image_of(const Homomorphism<S>&, const Representation<S>&);                                \
  template Submodule<S> kernel_of(const Homomorphism<S>&, const Representation<S>&);                               \
  template Subquotient<S> subquotient(const Representation<S>&, const Submodule<S>&, const Submodule<S>&);         \
  template Subquotient<S> submodule(const Representation<S>&, const Submodule<S>&);                                \
  template Subquotient<S> quotient(const Representation<S>&, const Submodule<S>&);                                 \
  template Homomorphism<S> canonical_map(const Subquotient<S>&, const Subquotient<S>&);                            \
  template Representation<S> direct_sum(const std::vector<Representation<S>>&);                                    \
  template ModuleProfile profile(const Representation<S>&);                                                        \
  template std::vector<Homomorphism<S>> hom_space(const Representation<S>&, const Representation<S>&);             \
  template EndRadical<S> end_radical(const Representation<S>&);                                                    \
  template bool is_indecomposable(const Representation<S>&);                                                       \
  template bool is_isomorphism(const Homomorphism<S>&);                                                            \
  template IsoResult<S> is_isomorphic(const Representation<S>&, const Representation<S>&);                         \
  template Representation<S> simple_module(const AlgebraPtr&, VertexId);                                           \
  template Representation<S> string_module(const AlgebraPtr&, const Walk&);                                        \
  template Representation<S> projective_module(const AlgebraPtr&, const PathBasis&, VertexId);                     \
  template Representation<S> injective_module(const AlgebraPtr&, const PathBasis&, VertexId);                      \
  template std::vector<Representation<S>> nonuniserial_projective_injectives(const AlgebraPtr&, const PathBasis&); \
  template std::vector<Witness<S>> witness_gallery();

NAKAYAMA_INSTANTIATE(Rational)
NAKAYAMA_INSTANTIATE(ModP)

}  // namespace nakayama
