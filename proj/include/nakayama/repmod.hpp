#pragma once

// Right modules over KQ/I as representations: a space per vertex and, for an
// arrow a: i -> j, a matrix of shape dim_j x dim_i.  A path p = a*b acts by
// map(b) * map(a).
//
// Everything is templated on the scalar and instantiated for Rational and
// ModP.  ModP computations need a ModulusGuard in scope.

#include "nakayama/linalg.hpp"
#include "nakayama/quiver.hpp"
#include "nakayama/strings.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nakayama {

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
class Representation {
 public:
  Representation() = default;
  // Checks shapes and that every relation holds.
  Representation(AlgebraPtr alg, std::vector<Index> dims, std::vector<Matrix<S>> maps, std::string key = {});

  static Representation zero(AlgebraPtr alg);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const std::vector<Index>& dims() const { return dims_; }
  Index dim(VertexId v) const { return dims_.at(v); }
  Index total_dim() const;
  const Matrix<S>& map(ArrowId a) const { return maps_.at(a); }
  const std::vector<Matrix<S>>& maps() const { return maps_; }

  // Canonical name: a string word, "P(v)", "PI(v)", "I(v)" or a witness name.
  const std::string& key() const { return key_; }
  void set_key(std::string k) { key_ = std::move(k); }

  Matrix<S> path_map(const Path& p) const;
  // Offsets of the vertex blocks in the total space.
  std::vector<Index> offsets() const;
  // Arrow action as an operator on the total space.
  Matrix<S> total_map(ArrowId a) const;

 private:
  AlgebraPtr alg_;
  std::vector<Index> dims_;
  std::vector<Matrix<S>> maps_;
  std::string key_;
};

// Vertexwise linear maps M_v -> N_v commuting with the arrows.
template <class S>
struct Homomorphism {
  std::vector<Matrix<S>> components;

  // Block diagonal matrix on the total spaces.
  Matrix<S> total() const;
  bool is_zero() const;
};

template <class S>
Homomorphism<S> compose(const Homomorphism<S>& g, const Homomorphism<S>& f);  // g after f
template <class S>
Homomorphism<S> identity(const Representation<S>& m);
template <class S>
Homomorphism<S> zero_hom(const Representation<S>& m, const Representation<S>& n);
template <class S>
bool is_homomorphism(const Representation<S>& m, const Representation<S>& n, const Homomorphism<S>& f);
template <class S>
Homomorphism<S> linear_combination(const std::vector<Homomorphism<S>>& basis, const std::vector<S>& coeffs);

// Per-vertex subspaces; a submodule when closed under the arrows.
template <class S>
using Submodule = std::vector<Subspace<S>>;

template <class S>
bool is_submodule(const Representation<S>& m, const Submodule<S>& x);
template <class S>
Submodule<S> zero_submodule(const Representation<S>& m);
template <class S>
Submodule<S> full_submodule(const Representation<S>& m);
template <class S>
Submodule<S> submodule_sum(const Submodule<S>& a, const Submodule<S>& b);
template <class S>
Submodule<S> submodule_intersect(const Submodule<S>& a, const Submodule<S>& b);
template <class S>
bool submodule_contains(const Submodule<S>& a, const Submodule<S>& b);
template <class S>
std::vector<Index> submodule_dims(const Submodule<S>& x);

// Smallest submodule containing the given vertex-homogeneous vectors.
template <class S>
Submodule<S> generated_submodule(const Representation<S>& m, const std::vector<std::pair<VertexId, Vector<S>>>& gens);
// Sum of arrow images of x (x = whole module gives rad M).
template <class S>
Submodule<S> radical_of(const Representation<S>& m, const Submodule<S>& x);
template <class S>
Submodule<S> radical(const Representation<S>& m);
template <class S>
Submodule<S> radical_power(const Representation<S>& m, std::size_t k);
template <class S>
Submodule<S> socle(const Representation<S>& m);
template <class S>
std::vector<Index> top_dims(const Representation<S>& m);

template <class S>
Submodule<S> image_of(const Homomorphism<S>& f, const Representation<S>& n);
template <class S>
Submodule<S> kernel_of(const Homomorphism<S>& f, const Representation<S>& m);

// Y/X for submodules X <= Y of an ambient module.  lift[v] has the chosen
// representatives of a basis of Y_v/X_v as columns; proj[v] sends a vector of
// Y_v to its coordinates modulo X_v.
template <class S>
struct Subquotient {
  Representation<S> module;
  Submodule<S> upper, lower;
  std::vector<Matrix<S>> lift, proj;
};

template <class S>
Subquotient<S> subquotient(const Representation<S>& m, const Submodule<S>& y, const Submodule<S>& x);
template <class S>
Subquotient<S> submodule(const Representation<S>& m, const Submodule<S>& x);
template <class S>
Subquotient<S> quotient(const Representation<S>& m, const Submodule<S>& x);
// Map Y1/X1 -> Y2/X2 induced by the identity, for Y1 <= Y2 and X1 <= X2.
template <class S>
Homomorphism<S> canonical_map(const Subquotient<S>& from, const Subquotient<S>& to);

template <class S>
Representation<S> direct_sum(const std::vector<Representation<S>>& parts);

struct ModuleProfile {
  Index length = 0;
  Index loewy_length = 0;
  std::vector<std::vector<Index>> radical_series;  // dim vectors of rad^k M, k = 0..ll
  std::vector<std::vector<Index>> layers;          // rad^k / rad^(k+1), k = 0..ll-1
  std::vector<Index> top, socle;
  bool local = false, colocal = false, uniserial = false;
  Index factor_serial_index = 0;  // meaningful for indecomposable modules
};

template <class S>
ModuleProfile profile(const Representation<S>& m);

// Index from radical layer dimensions: 1 when uniserial, else l - k* with k*
// the number of leading layers of dimension <= 1.
Index factor_serial_index_from_layers(const std::vector<Index>& layer_totals);

template <class S>
std::vector<Homomorphism<S>> hom_space(const Representation<S>& m, const Representation<S>& n);

template <class S>
struct EndRadical {
  std::vector<Homomorphism<S>> basis;  // of End(M)
  Matrix<S> radical;                   // rows: coordinates of a basis of rad End(M)
  Index dim_radical() const { return radical.rows(); }
};

// Radical of End(M) as the radical of the trace form; needs characteristic 0
// or characteristic > dim M (throws UnsupportedField otherwise).
template <class S>
EndRadical<S> end_radical(const Representation<S>& m);

// dim End(M)/rad End(M) == 1.
template <class S>
bool is_indecomposable(const Representation<S>& m);

enum class Verdict { no, yes, inconclusive };

template <class S>
struct IsoResult {
  Verdict verdict = Verdict::no;
  std::optional<Homomorphism<S>> iso;
  explicit operator bool() const { return verdict == Verdict::yes; }
};

template <class S>
bool is_isomorphism(const Homomorphism<S>& f);

// Exact when either side is indecomposable (End local); otherwise a bounded
// deterministic search over small integer combinations of a Hom basis.
template <class S>
IsoResult<S> is_isomorphic(const Representation<S>& m, const Representation<S>& n);

// Constructors.
template <class S>
Representation<S> simple_module(const AlgebraPtr& alg, VertexId v);
template <class S>
Representation<S> string_module(const AlgebraPtr& alg, const Walk& w);
template <class S>
Representation<S> projective_module(const AlgebraPtr& alg, const PathBasis& basis, VertexId v);
template <class S>
Representation<S> injective_module(const AlgebraPtr& alg, const PathBasis& basis, VertexId v);
// One projective P(v) per source vertex v of a commutativity relation.
template <class S>
std::vector<Representation<S>> nonuniserial_projective_injectives(const AlgebraPtr& alg, const PathBasis& basis);

// Basis vectors of P(v) are the path classes starting at v; this is the
// index of each class inside its vertex block.
std::vector<std::pair<VertexId, Index>> projective_positions(const PathBasis& basis, VertexId v);

template <class S>
struct Witness {
  std::string name;
  AlgebraPtr algebra;
  Representation<S> module;
  std::vector<Index> dims;  // expected dimension vector
  Index expected_index = 0;
};

// Indecomposable modules over the small obstruction algebras (a vertex with
// three outgoing or incoming arrows, or an arrow with two nonzero successors
// or predecessors) with large factor-serial index.
template <class S>
std::vector<Witness<S>> witness_gallery();

}  // namespace nakayama
