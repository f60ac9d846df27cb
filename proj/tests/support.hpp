#pragma once

// Shared helpers for the test binaries: fixture loading and the independent
// oracles (path-space dimension, brute-force uniseriality over F_3).

#include "nakayama/ars.hpp"
#include "nakayama/classifier.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

using namespace nakayama;

inline std::string source_path(const std::string& rel) { return std::string(NAKAYAMA_SOURCE_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline AlgebraPtr load(const std::string& rel) {
  return std::make_shared<const Algebra>(parse_algebra(read_file(source_path(rel))));
}

inline AlgebraPtr from_text(const std::string& text) { return std::make_shared<const Algebra>(parse_algebra(text)); }

inline AlgebraPtr qmns(std::size_t m, std::size_t n, std::size_t s) {
  return std::make_shared<const Algebra>(generate_qmns(m, n, s));
}

// Fixtures that are special biserial of finite type.
inline const std::vector<std::string>& finite_fixtures() {
  static const std::vector<std::string> v{"fixtures/a2.quiver", "fixtures/alg_sq.quiver", "fixtures/case_b.quiver",
                                          "fixtures/case_d.quiver", "fixtures/qmns_2_2_1.quiver"};
  return v;
}

// Right 3-Nakayama fixtures.
inline const std::vector<std::string>& three_nakayama_fixtures() {
  static const std::vector<std::string> v{"fixtures/alg_sq.quiver", "fixtures/case_b.quiver", "fixtures/case_d.quiver",
                                          "fixtures/qmns_2_2_1.quiver"};
  return v;
}

template <class S>
const CatalogEntry<S>& member(const Catalog<S>& cat, const std::string& key) {
  for (const auto& m : cat.members)
    if (m.key == key) return m;
  throw std::runtime_error("no member " + key);
}

// ---------------------------------------------------------------------------
// dim KQ/I straight from the definition.  Work in the span V of all paths of
// length <= l, with paths longer than l dropped; the ideal's image is spanned
// by u*r*v for every relation r and paths u, v.  When every path of length l
// lies in that image, all longer paths lie in I too and dim V/image = dim KQ/I.

struct PathSpaceOracle {
  std::size_t dimension = 0;
  bool paths_of_length_l_vanish = false;
};

inline PathSpaceOracle path_space_dimension(const Algebra& alg, std::size_t l) {
  const auto& q = alg.quiver();
  using Seq = std::pair<VertexId, std::vector<ArrowId>>;
  auto end_of = [&](const Seq& p) { return p.second.empty() ? p.first : q.arrow(p.second.back()).target; };
  std::vector<Seq> paths, frontier;
  for (VertexId v = 0; v < q.vertex_count(); ++v) frontier.push_back({v, {}});
  for (std::size_t len = 0; len <= l; ++len) {
    std::vector<Seq> next;
    for (const auto& p : frontier) {
      paths.push_back(p);
      for (ArrowId a : q.out_arrows(end_of(p))) {
        auto ext = p;
        ext.second.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  std::map<Seq, Index> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<Index>(i);
  const Index n = static_cast<Index>(paths.size());

  auto concat = [](const Seq& u, const std::vector<ArrowId>& mid, const Seq& v) {
    Seq s = u;
    s.second.insert(s.second.end(), mid.begin(), mid.end());
    s.second.insert(s.second.end(), v.second.begin(), v.second.end());
    return s;
  };
  std::vector<Vector<Rational>> gens;
  for (const auto& r : alg.relations()) {
    for (const auto& u : paths) {
      if (end_of(u) != r.lhs.start) continue;
      for (const auto& v : paths) {
        if (v.first != r.lhs.end(q)) continue;
        Vector<Rational> g = Vector<Rational>::Zero(n);
        bool any = false;
        if (const auto it = index.find(concat(u, r.lhs.arrows, v)); it != index.end()) {
          g(it->second) += 1;
          any = true;
        }
        if (r.kind == Relation::Kind::commutativity)
          if (const auto it = index.find(concat(u, r.rhs.arrows, v)); it != index.end()) {
            g(it->second) -= 1;
            any = true;
          }
        if (any) gens.push_back(std::move(g));
      }
    }
  }
  Matrix<Rational> ideal(n, static_cast<Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) ideal.col(static_cast<Index>(j)) = gens[j];
  const Index r = gens.empty() ? 0 : rank(ideal);

  std::vector<Index> longest;
  for (const auto& p : paths)
    if (p.second.size() == l) longest.push_back(index.at(p));
  Matrix<Rational> with(n, ideal.cols() + static_cast<Index>(longest.size()));
  with.leftCols(ideal.cols()) = ideal;
  for (std::size_t k = 0; k < longest.size(); ++k) {
    with.col(ideal.cols() + static_cast<Index>(k)).setZero();
    with(longest[k], ideal.cols() + static_cast<Index>(k)) = 1;
  }
  PathSpaceOracle out;
  out.dimension = static_cast<std::size_t>(n - r);
  out.paths_of_length_l_vanish = with.cols() == 0 || rank(with) == r;
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force uniseriality over F_3: M/X is uniserial iff its submodule
// lattice is a chain, iff the cyclic submodules Mv + X (v ranging over every
// vector of M) form a chain.  Entries must be integers with denominators
// prime to 3.

struct F3Module {
  Index dim = 0;
  std::vector<Matrix<ModP>> arrows;  // total-space operators
};

inline ModP to_f3(const Rational& x) {
  const auto num = numerator(x), den = denominator(x);
  const long long n = static_cast<long long>(num % 3), d = static_cast<long long>(den % 3);
  if (d == 0) throw std::runtime_error("denominator divisible by 3");
  return ModP(n) / ModP(d);
}

inline F3Module to_f3(const Representation<Rational>& m) {
  F3Module out;
  out.dim = m.total_dim();
  const auto& q = m.algebra().quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto t = m.total_map(a);
    Matrix<ModP> f(t.rows(), t.cols());
    for (Index i = 0; i < t.rows(); ++i)
      for (Index j = 0; j < t.cols(); ++j) f(i, j) = to_f3(t(i, j));
    out.arrows.push_back(f);
  }
  return out;
}

inline Index span_rank(const Matrix<ModP>& m) { return m.cols() == 0 ? 0 : rank(m); }

// Column basis of the span.
inline Matrix<ModP> column_basis(const Matrix<ModP>& m) {
  if (m.cols() == 0) return m;
  const auto e = rref(Matrix<ModP>(m.transpose()));
  return e.form.topRows(e.rank).transpose();
}

// Smallest subspace containing the columns and closed under the arrows.
inline Matrix<ModP> close_under_arrows(const F3Module& m, const Matrix<ModP>& gens) {
  Matrix<ModP> span = column_basis(gens);
  for (;;) {
    Matrix<ModP> grown(m.dim, span.cols() * static_cast<Index>(1 + m.arrows.size()));
    grown.leftCols(span.cols()) = span;
    for (std::size_t i = 0; i < m.arrows.size(); ++i)
      grown.middleCols(span.cols() * static_cast<Index>(i + 1), span.cols()) = m.arrows[i] * span;
    auto next = column_basis(grown);
    if (next.cols() == span.cols()) return next;
    span = std::move(next);
  }
}

inline bool contains(const Matrix<ModP>& big, const Matrix<ModP>& small) {
  if (small.cols() == 0) return true;
  Matrix<ModP> both(big.rows(), big.cols() + small.cols());
  both << big, small;
  return span_rank(both) == span_rank(big);
}

// rad^k as the span of images of all arrow words of length k.
inline Matrix<ModP> radical_power_f3(const F3Module& m, std::size_t k) {
  Matrix<ModP> span = Matrix<ModP>::Identity(m.dim, m.dim);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Matrix<ModP>> parts;
    Index cols = 0;
    for (const auto& a : m.arrows) {
      parts.push_back(a * span);
      cols += span.cols();
    }
    Matrix<ModP> next(m.dim, cols);
    Index at = 0;
    for (const auto& p : parts) {
      next.middleCols(at, p.cols()) = p;
      at += p.cols();
    }
    span = next;
  }
  return span;
}

inline bool uniserial_modulo(const F3Module& m, const Matrix<ModP>& x) {
  std::vector<Matrix<ModP>> subs;
  std::vector<ModP> v(static_cast<std::size_t>(m.dim));
  Index total = 1;
  for (Index i = 0; i < m.dim; ++i) total *= 3;
  for (Index code = 1; code < total; ++code) {
    Matrix<ModP> vec(m.dim, 1);
    Index c = code;
    for (Index i = 0; i < m.dim; ++i) {
      vec(i, 0) = ModP(c % 3);
      c /= 3;
    }
    Matrix<ModP> gen(m.dim, x.cols() + 1);
    gen << x, vec;
    subs.push_back(close_under_arrows(m, gen));
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (!contains(subs[i], subs[j]) && !contains(subs[j], subs[i])) return false;
  return true;
}

// Factor-serial index from the definition: 1 when M is uniserial, otherwise
// l - k for the largest k with M/rad^k uniserial.
inline Index brute_force_index(const Representation<Rational>& rep) {
  const ModulusGuard guard(3);
  const auto m = to_f3(rep);
  const Index l = m.dim;
  if (uniserial_modulo(m, Matrix<ModP>::Zero(m.dim, 0))) return 1;
  Index best = 0;
  for (Index k = 0; k <= l; ++k)
    if (uniserial_modulo(m, radical_power_f3(m, static_cast<std::size_t>(k)))) best = k;
  return l - best;
}

}  // namespace testing
