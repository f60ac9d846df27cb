#include "nakayama/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace nakayama {

template <class S>
std::optional<std::size_t> Catalog<S>::find(const Representation<S>& m) const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].module.dims() != m.dims()) continue;
    const auto r = is_isomorphic(members[i].module, m);
    if (r.verdict == Verdict::yes) return i;
  }
  return std::nullopt;
}

template <class S>
Catalog<S> build_catalog(const AlgebraPtr& alg, const Caps& caps) {
  using K = ClassificationError::Kind;
  try {
    validate_admissible(*alg, caps.admissibility_cap);
  } catch (const AlgebraError& e) {
    throw ClassificationError(K::not_admissible, std::string("not admissible within cap: ") + e.what());
  }
  const auto sb = is_special_biserial(*alg);
  if (!sb.special_biserial) throw ClassificationError(K::not_special_biserial, "not special biserial: " + sb.witness);

  Catalog<S> cat;
  cat.algebra = alg;
  const std::size_t dflt = default_band_cap(*alg);
  cat.finite = finite_type(*alg, caps.string_cap ? caps.string_cap : dflt, caps.band_cap ? caps.band_cap : dflt);
  if (cat.finite.kind == FiniteTypeReport::Kind::infinite) throw ClassificationError(K::infinite_type, cat.finite.message);
  if (cat.finite.kind == FiniteTypeReport::Kind::inconclusive)
    throw ClassificationError(K::inconclusive, cat.finite.message);
  cat.basis = std::make_shared<const PathBasis>(*alg, caps.admissibility_cap);

  const auto& q = alg->quiver();
  for (const auto& w : cat.finite.strings.strings) {
    CatalogEntry<S> e;
    e.module = string_module<S>(alg, w);
    e.key = e.module.key();
    e.word = w;
    cat.members.push_back(std::move(e));
  }
  for (auto& pi : nonuniserial_projective_injectives<S>(alg, *cat.basis)) {
    CatalogEntry<S> e;
    e.key = pi.key();
    e.provenance = Provenance::projective_injective;
    e.module = std::move(pi);
    cat.members.push_back(std::move(e));
  }
  for (auto& e : cat.members) e.profile = profile(e.module);

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    cat.projectives.push_back(projective_module<S>(alg, *cat.basis, v));
    cat.injectives.push_back(injective_module<S>(alg, *cat.basis, v));
    const auto p = cat.find(cat.projectives.back());
    const auto i = cat.find(cat.injectives.back());
    if (!p || !i)
      throw std::logic_error("catalogue misses " + std::string(!p ? "P(" : "I(") + q.vertex_name(v) +
                             "): string enumeration and projective-injectives are incomplete");
    cat.projective_member.push_back(*p);
    cat.injective_member.push_back(*i);
    cat.members[*p].projective_at = v;
    cat.members[*i].injective_at = v;
  }
  return cat;
}

template <class S>
NakayamaVerdict classify_semantic(const Catalog<S>& catalog) {
  NakayamaVerdict v;
  for (std::size_t i = 0; i < catalog.members.size(); ++i) {
    const Index idx = catalog.members[i].profile.factor_serial_index;
    if (idx > v.n) {
      v.n = idx;
      v.realizing = i;
      v.realizing_key = catalog.members[i].key;
    }
  }
  return v;
}

SyntacticVerdict classify_syntactic_3nakayama(const Algebra& alg, const std::vector<Walk>& strings) {
  const auto& q = alg.quiver();
  SyntacticVerdict v;
  for (const auto& w : strings) {
    bool peak = false, valley = false;
    for (std::size_t i = 1; i < w.letters.size(); ++i) {
      const auto& x = w.letters[i - 1];
      const auto& y = w.letters[i];
      if (x.arrow == y.arrow) continue;
      if (x.dir > 0 && y.dir < 0) peak = true;
      if (x.dir < 0 && y.dir > 0) valley = true;
    }
    if (peak && w.length() != 2 && v.peaks_isolated) {
      v.peaks_isolated = false;
      v.witnesses.push_back("string through a peak: " + to_string(q, w));
    }
    if (valley && w.length() > 3 && v.valleys_short) {
      v.valleys_short = false;
      v.witnesses.push_back("long string through a valley: " + to_string(q, w));
    }
    if (valley && w.length() == 3 && !v.long_valley) {
      v.long_valley = true;
      v.witnesses.push_back("length-3 string through a valley: " + to_string(q, w));
    }
  }
  for (const auto& r : alg.relations()) {
    if (r.kind != Relation::Kind::commutativity) continue;
    const bool square = r.lhs.length() == 2 && r.rhs.length() == 2;
    if (!square && v.square_commutativity) {
      v.square_commutativity = false;
      v.witnesses.push_back("commutativity relation of lengths " + std::to_string(r.lhs.length()) + "/" +
                            std::to_string(r.rhs.length()) + ": " + to_string(q, r.lhs) + " - " + to_string(q, r.rhs));
    }
    if (square && !v.square_relation) {
      v.square_relation = true;
      v.witnesses.push_back("square commutativity relation: " + to_string(q, r.lhs) + " - " + to_string(q, r.rhs));
    }
  }
  for (VertexId a = 0; a < q.vertex_count(); ++a)
    if (q.in_arrows(a).size() == 2 && !v.two_arrows_in) {
      v.two_arrows_in = true;
      v.witnesses.push_back("two arrows end at vertex " + q.vertex_name(a));
    }
  v.exists_clause = v.two_arrows_in || v.long_valley || v.square_relation;
  v.holds = v.peaks_isolated && v.valleys_short && v.square_commutativity && v.exists_clause;
  return v;
}

// ---------------------------------------------------------------- origin

namespace {

// Unit vector of P(v) for the basis class `cls`.
template <class S>
std::pair<VertexId, Vector<S>> class_vector(const Catalog<S>& cat, VertexId v, std::size_t cls) {
  const auto classes = cat.basis->starting_at(v);
  const auto pos = projective_positions(*cat.basis, v);
  const auto k = static_cast<std::size_t>(std::find(classes.begin(), classes.end(), cls) - classes.begin());
  const auto& p = cat.projectives[v];
  Vector<S> e = Vector<S>::Zero(p.dim(pos[k].first));
  e(pos[k].second) = S(1);
  return {pos[k].first, e};
}

template <class S>
std::optional<Homomorphism<S>> find_monomorphism(const Representation<S>& m, const Representation<S>& n) {
  const auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  const auto injective = [](const Homomorphism<S>& f) {
    for (const auto& c : f.components)
      if (rank<S>(c) != c.cols()) return false;
    return true;
  };
  for (const auto& f : homs)
    if (injective(f)) return f;
  // small deterministic combinations
  const std::size_t d = homs.size();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < d && combos < 100000; ++i) combos *= 5;
  for (std::size_t c = 0; c < std::min<std::size_t>(combos, 100000); ++c) {
    std::vector<S> coeffs(d);
    std::size_t rest = c;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs[i] = S(static_cast<long long>(rest % 5) - 2);
      rest /= 5;
    }
    auto f = linear_combination(homs, coeffs);
    if (injective(f)) return f;
  }
  return std::nullopt;
}

}  // namespace

template <class S>
Origin module_origin(const Catalog<S>& cat, const Representation<S>& m) {
  const auto& q = cat.algebra->quiver();
  Origin o;
  const auto top = top_dims(m);
  const Index top_total = std::accumulate(top.begin(), top.end(), Index{0});
  if (top_total == 1) {
    const auto a = static_cast<VertexId>(std::find(top.begin(), top.end(), 1) - top.begin());
    const auto& p = cat.projectives[a];
    std::vector<std::size_t> rad_classes;
    for (std::size_t c : cat.basis->starting_at(a))
      if (!cat.basis->path(c).trivial()) rad_classes.push_back(c);
    const std::size_t k = std::min<std::size_t>(rad_classes.size(), 14);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::pair<VertexId, Vector<S>>> gens;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) {
          gens.push_back(class_vector(cat, a, rad_classes[i]));
          names.push_back(to_string(q, cat.basis->path(rad_classes[i])));
        }
      const auto x = generated_submodule(p, gens);
      const auto xd = submodule_dims(x);
      bool dims_ok = true;
      for (std::size_t v = 0; v < q.vertex_count() && dims_ok; ++v) dims_ok = p.dim(v) - xd[v] == m.dim(v);
      if (!dims_ok) continue;
      if (is_isomorphic(quotient(p, x).module, m).verdict != Verdict::yes) continue;
      o.kind = Origin::Kind::quotient_of_projective;
      o.vertex = a;
      o.generators = names;
      o.description = "P(" + q.vertex_name(a) + ")";
      if (names.empty()) {
        o.description += " itself";
      } else {
        o.description += "/<";
        for (std::size_t i = 0; i < names.size(); ++i) o.description += (i ? ", " : "") + names[i];
        o.description += ">";
      }
      return o;
    }
  }
  const auto soc = submodule_dims(socle(m));
  if (std::accumulate(soc.begin(), soc.end(), Index{0}) == 1) {
    const auto a = static_cast<VertexId>(std::find(soc.begin(), soc.end(), 1) - soc.begin());
    if (find_monomorphism(m, cat.injectives[a])) {
      o.kind = Origin::Kind::submodule_of_injective;
      o.vertex = a;
      o.description = "submodule of I(" + q.vertex_name(a) + ")";
      return o;
    }
  }
  o.description = "neither a quotient of an indecomposable projective nor a submodule of an indecomposable injective";
  return o;
}

// ---------------------------------------------------------------- structure laws

template <class S>
std::vector<ClaimResult> verify_structure_theorems(const Catalog<S>& cat, Index n) {
  std::vector<ClaimResult> out;
  const bool three = n == 3;
  auto claim = [&](std::string name, bool applies, auto&& pred) {
    ClaimResult r;
    r.name = std::move(name);
    if (!applies) {
      r.skipped = true;
      out.push_back(r);
      return;
    }
    for (const auto& e : cat.members)
      if (!pred(e)) {
        r.passed = false;
        r.offender = e.key;
        break;
      }
    out.push_back(r);
  };
  const auto soc_total = [](const ModuleProfile& p) {
    return std::accumulate(p.socle.begin(), p.socle.end(), Index{0});
  };
  claim("index-bounded-by-n", true, [&](const CatalogEntry<S>& e) { return e.profile.factor_serial_index <= n; });
  claim("maximal-index-simple-top-iff-projective", n > 1, [&](const CatalogEntry<S>& e) {
    if (e.profile.factor_serial_index != n) return true;
    return e.profile.local == e.projective_at.has_value();
  });
  claim("2-factor-serial-has-length-3-loewy-2", three, [](const CatalogEntry<S>& e) {
    return e.profile.factor_serial_index != 2 || (e.profile.length == 3 && e.profile.loewy_length == 2);
  });
  claim("nonlocal-3-factor-serial-has-length-3-loewy-2", three, [](const CatalogEntry<S>& e) {
    const auto& p = e.profile;
    return p.factor_serial_index != 3 || p.local || (p.length == 3 && p.loewy_length == 2);
  });
  claim("local-3-factor-serial-has-length-4-loewy-3", three, [](const CatalogEntry<S>& e) {
    const auto& p = e.profile;
    return p.factor_serial_index != 3 || !p.local || (p.length == 4 && p.loewy_length == 3);
  });
  claim("local-or-colocal", three, [](const CatalogEntry<S>& e) { return e.profile.local || e.profile.colocal; });
  claim("3-factor-serial-socle-at-most-2", three, [&](const CatalogEntry<S>& e) {
    return e.profile.factor_serial_index != 3 || soc_total(e.profile) <= 2;
  });
  claim("long-modules-uniserial-length-4-local", three, [](const CatalogEntry<S>& e) {
    const auto& p = e.profile;
    if (p.length > 4) return p.uniserial;
    if (p.length == 4) return p.local;
    return true;
  });
  claim("quotient-of-projective-or-submodule-of-injective", three, [&](const CatalogEntry<S>& e) {
    return module_origin(cat, e.module).kind != Origin::Kind::none;
  });
  return out;
}

template <class S>
SelfInjectivity is_self_injective(const AlgebraPtr& alg) {
  const PathBasis basis(*alg);
  const std::size_t nv = alg->quiver().vertex_count();
  std::vector<Representation<S>> inj;
  for (VertexId v = 0; v < nv; ++v) inj.push_back(injective_module<S>(alg, basis, v));
  SelfInjectivity r;
  std::vector<bool> used(nv, false);
  for (VertexId v = 0; v < nv; ++v) {
    const auto p = projective_module<S>(alg, basis, v);
    bool matched = false;
    for (VertexId w = 0; w < nv && !matched; ++w) {
      if (used[w] || inj[w].dims() != p.dims()) continue;
      if (is_isomorphic(p, inj[w]).verdict == Verdict::yes) {
        used[w] = true;
        r.nakayama_permutation.push_back(w);
        matched = true;
      }
    }
    if (!matched) {
      r.nakayama_permutation.clear();
      return r;
    }
  }
  r.self_injective = true;
  return r;
}

#define NAKAYAMA_INSTANTIATE(S)                                                                   \
  template struct Catalog<S>;                                                                     \
  template Catalog<S> build_catalog(const AlgebraPtr&, const Caps&);                              \
  template NakayamaVerdict classify_semantic(const Catalog<S>&);                                  \
  template std::vector<ClaimResult> verify_structure_theorems(const Catalog<S>&, Index);          \
  template Origin module_origin(const Catalog<S>&, const Representation<S>&);                     \
  template SelfInjectivity is_self_injective<S>(const AlgebraPtr&);

NAKAYAMA_INSTANTIATE(Rational)
NAKAYAMA_INSTANTIATE(ModP)

}  // namespace nakayama
