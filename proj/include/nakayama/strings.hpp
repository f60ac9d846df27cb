#pragma once

// Letters, walks, strings and bands of a special biserial algebra.
//
// String combinatorics happen in the string algebra obtained by turning every
// commutativity relation p - q into the two zero relations p and q; the
// modules lost that way are the non-uniserial projective-injectives.

#include "nakayama/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nakayama {

struct Letter {
  ArrowId arrow = 0;
  int dir = 1;  // +1 the arrow, -1 its formal inverse

  Letter inverse() const { return {arrow, -dir}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

VertexId letter_source(const Quiver& q, const Letter& l);
VertexId letter_target(const Quiver& q, const Letter& l);

// A trivial walk 1_(v,sign) when `letters` is empty, otherwise c_1 ... c_n.
struct Walk {
  VertexId vertex = 0;  // start vertex
  int sign = 1;         // only meaningful for trivial walks
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool trivial() const { return letters.empty(); }
  VertexId start(const Quiver&) const { return vertex; }
  VertexId end(const Quiver& q) const { return letters.empty() ? vertex : letter_target(q, letters.back()); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

Walk inverse(const Quiver& q, const Walk& w);
bool is_reduced(const Walk& w);
bool is_composable(const Quiver& q, const Walk& w);

// Trivial walks first (by vertex), then shorter walks, then lexicographic on
// letters ordered by (arrow name, direction with +1 < -1).
bool walk_less(const Quiver& q, const Walk& a, const Walk& b);
// Smaller of w and w^-1 (trivial walks normalise to sign +1).
Walk canonical_string(const Quiver& q, const Walk& w);
// Smallest rotation of w or of w^-1.
Walk canonical_band(const Quiver& q, const Walk& w);

// "a^-1 b", or "1_v" for trivial walks.
std::string to_string(const Quiver& q, const Walk& w);
// Inverse of to_string; throws AlgebraError.
Walk parse_walk(const Quiver& q, const std::string& text);

// Forbidden direct subpaths: monomials, and for each commutativity p - q both
// p and q.
struct StringAlgebra {
  Algebra algebra;  // monomial relations only
  std::vector<std::pair<Path, Path>> commutativity_pairs;
};

StringAlgebra reduce_to_string_algebra(const Algebra& alg);

// Whether w is a string of the monomial algebra `alg` (commutativity relations
// are treated as both paths zero).
bool is_string(const Algebra& alg, const Walk& w);

struct SpecialBiserialVerdict {
  bool special_biserial = true;
  std::string witness;  // empty when special biserial
};

SpecialBiserialVerdict is_special_biserial(const Algebra& alg);

struct StringEnumeration {
  std::vector<Walk> strings;  // canonical, sorted by (length, walk_less)
  bool complete = true;       // false when strings of length cap + 1 exist
  std::size_t longest = 0;
};

StringEnumeration enumerate_strings(const Algebra& alg, std::size_t cap);

struct BandSearch {
  std::vector<Walk> bands;  // canonical representatives
  bool conclusive = true;   // false when the cap or budget stopped the search
};

constexpr std::size_t default_string_budget = 200000;

// Default band cap: 4 |Q_1| times the nilpotency bound.
std::size_t default_band_cap(const Algebra& alg);

// Bands of length <= cap.  With stop_at_first the search ends at the first
// band found, which is all that finite-type detection needs.
BandSearch enumerate_bands(const Algebra& alg, std::size_t cap, bool stop_at_first = false,
                           std::size_t budget = default_string_budget);

struct FiniteTypeReport {
  enum class Kind { finite, infinite, inconclusive };
  Kind kind = Kind::inconclusive;
  std::optional<Walk> band;    // witness when infinite
  StringEnumeration strings;   // transversal when finite
  std::string message;
};

// Special biserial input expected.  Finite type is certified by a string
// enumeration that stops below the cap with no band.
FiniteTypeReport finite_type(const Algebra& alg, std::size_t string_cap, std::size_t band_cap);

}  // namespace nakayama
