#pragma once

// Almost split sequences over right 3-Nakayama algebras, built from quotients
// and inclusions of one ambient module, an independent verifier that checks
// the factorization properties against the whole catalogue, the AR translate
// via the Nakayama functor, and the AR quiver.

#include "nakayama/classifier.hpp"

#include <string>
#include <vector>

namespace nakayama {

enum class ArCase { A_i, A_ii, B_i, B_ii, C_i, C_ii, C_iii, D_i, D_ii, D_iii, D_iv, D_v, E };

std::string to_string(ArCase c);  // "A(i)", ..., "E"
std::vector<ArCase> all_ar_cases();

template <class S>
struct ArSequence {
  ArCase tag = ArCase::E;
  Representation<S> left, middle, right;
  std::vector<Representation<S>> summands;  // middle = direct_sum(summands), sorted by key
  Homomorphism<S> f;                        // left -> middle
  Homomorphism<S> g;                        // middle -> right
  std::string left_key, right_key;          // catalogue keys
  std::vector<std::string> middle_keys;     // indecomposable summands of the middle, sorted
};

// Assembles 0 -> A -> (+) B_k -> C -> 0 from componentwise maps
// f_k: A -> B_k and g_k: B_k -> C.
template <class S>
ArSequence<S> assemble_sequence(ArCase tag, const Representation<S>& left, const std::vector<Representation<S>>& summands,
                                const std::vector<Homomorphism<S>>& f_parts, const Representation<S>& right,
                                const std::vector<Homomorphism<S>>& g_parts);

// C must be a non-projective catalogue member; throws std::logic_error when
// no case of the classification applies.
template <class S>
ArSequence<S> construct_ar_sequence(const Catalog<S>& catalog, std::size_t c);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct Certificate {
  std::vector<CheckResult> checks;  // exact, ends-indecomposable, non-split, right-almost-split, left-almost-split
  bool certified() const;
  // Name and witness of the first failing check, or empty.
  std::string failure() const;
};

template <class S>
Certificate verify_almost_split(const Catalog<S>& catalog, const ArSequence<S>& seq);

// tau M = D Tr M, computed as the kernel of nu(p1) for a minimal projective
// presentation P1 -> P0 -> M.  Zero for projective M.
template <class S>
Representation<S> ar_translate(const PathBasis& basis, const Representation<S>& m);

// Multiplicities of the catalogue members as direct summands of m, from the
// linear system dim Hom(X_i, m) = sum_j mult_j dim Hom(X_i, X_j).
template <class S>
class Decomposer {
 public:
  explicit Decomposer(const Catalog<S>& catalog);
  std::vector<Index> multiplicities(const Representation<S>& m) const;

 private:
  const Catalog<S>* catalog_;
  Matrix<Rational> gram_;
};

struct ArEdge {
  std::size_t from = 0, to = 0;
  Index multiplicity = 1;
};

struct ArQuiver {
  std::vector<std::string> nodes;                    // catalogue keys
  std::vector<ArEdge> edges;                         // irreducible maps
  std::vector<std::pair<std::size_t, std::size_t>> tau;  // (C, tau C)
  std::vector<std::string> cases;                    // case tag per tau arc
};

template <class S>
struct ArReport {
  std::vector<ArSequence<S>> sequences;
  std::vector<Certificate> certificates;
  std::vector<bool> translate_agrees;  // ar_translate(C) = left term
  ArQuiver quiver;
};

// Builds and verifies one sequence per non-projective member; `jobs` workers.
template <class S>
ArReport<S> ar_report(const Catalog<S>& catalog, unsigned jobs = 1);

std::string to_dot(const ArQuiver& q);

}  // namespace nakayama
