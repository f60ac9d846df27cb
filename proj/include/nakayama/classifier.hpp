#pragma once

// Indecomposable catalogues of special biserial algebras of finite type and
// the right n-Nakayama index computed from them, both from module profiles
// and from the combinatorics of strings and relations.

#include "nakayama/repmod.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nakayama {

struct Caps {
  std::size_t string_cap = 0;  // 0: default_band_cap(alg)
  std::size_t band_cap = 0;    // 0: default_band_cap(alg)
  std::size_t admissibility_cap = default_admissibility_cap;
};

class ClassificationError : public std::runtime_error {
 public:
  enum class Kind { not_admissible, not_special_biserial, infinite_type, inconclusive };
  ClassificationError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class Provenance { string, projective_injective };

template <class S>
struct CatalogEntry {
  std::string key;
  Provenance provenance = Provenance::string;
  std::optional<Walk> word;
  Representation<S> module;
  ModuleProfile profile;
  std::optional<VertexId> projective_at;  // M = P(v)
  std::optional<VertexId> injective_at;   // M = I(v)
};

template <class S>
struct Catalog {
  AlgebraPtr algebra;
  std::shared_ptr<const PathBasis> basis;
  FiniteTypeReport finite;
  std::vector<CatalogEntry<S>> members;
  std::vector<Representation<S>> projectives, injectives;  // by vertex
  std::vector<std::size_t> projective_member, injective_member;  // catalogue index of P(v), I(v)

  // Catalogue index of the member isomorphic to m.
  std::optional<std::size_t> find(const Representation<S>& m) const;
};

// Throws ClassificationError when the algebra is not admissible, not special
// biserial, or not certified of finite type.
template <class S>
Catalog<S> build_catalog(const AlgebraPtr& alg, const Caps& caps = {});

struct NakayamaVerdict {
  Index n = 0;
  std::size_t realizing = 0;  // catalogue index
  std::string realizing_key;
};

template <class S>
NakayamaVerdict classify_semantic(const Catalog<S>& catalog);

struct SyntacticVerdict {
  bool holds = false;
  bool peaks_isolated = true;       // every string through a peak is the peak
  bool valleys_short = true;        // every string through a valley has length <= 3
  bool square_commutativity = true; // every commutativity relation joins two paths of length 2
  bool exists_clause = false;       // one of the three existence conditions
  bool two_arrows_in = false, long_valley = false, square_relation = false;
  std::vector<std::string> witnesses;
};

// Needs the string transversal of a finite-type special biserial algebra.
SyntacticVerdict classify_syntactic_3nakayama(const Algebra& alg, const std::vector<Walk>& strings);

struct ClaimResult {
  std::string name;
  bool skipped = false;
  bool passed = true;
  std::string offender;  // module key on failure
};

template <class S>
std::vector<ClaimResult> verify_structure_theorems(const Catalog<S>& catalog, Index n);

struct Origin {
  enum class Kind { quotient_of_projective, submodule_of_injective, none };
  Kind kind = Kind::none;
  VertexId vertex = 0;
  std::vector<std::string> generators;  // basis paths of rad P generating the kernel
  std::string description;
};

template <class S>
Origin module_origin(const Catalog<S>& catalog, const Representation<S>& m);

struct SelfInjectivity {
  bool self_injective = false;
  std::vector<VertexId> nakayama_permutation;  // P(v) = I(perm[v]) when self-injective
};

template <class S>
SelfInjectivity is_self_injective(const AlgebraPtr& alg);

}  // namespace nakayama
