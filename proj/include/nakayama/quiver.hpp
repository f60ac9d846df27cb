#pragma once

// Quivers, paths, monomial and commutativity relations, and the bound quiver
// algebra KQ/I they present.  Paths compose left to right: in a*b the arrow
// a is traversed first.

#include "nakayama/field.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nakayama {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
};

class Quiver {
 public:
  VertexId add_vertex(const std::string& name);
  ArrowId add_arrow(const std::string& name, VertexId source, VertexId target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  // Arrows starting (resp. ending) at v, in declaration order.
  const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, ArrowId, std::less<>> arrow_index_;
  std::vector<std::vector<ArrowId>> out_, in_;
};

// A path with an explicit start vertex; an empty arrow list is the trivial
// path at `start`.
struct Path {
  VertexId start = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }
  VertexId end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }

  friend bool operator==(const Path&, const Path&) = default;
};

bool is_composable(const Quiver& q, const Path& p);
// Arrow names joined by '*', or "e_<vertex>" for a trivial path.
std::string to_string(const Quiver& q, const Path& p);
// Order used for representatives: lexicographic on arrow names, trivial paths
// first by vertex index.
bool path_less(const Quiver& q, const Path& a, const Path& b);

struct Relation {
  enum class Kind { monomial, commutativity };
  Kind kind = Kind::monomial;
  Path lhs;
  Path rhs;  // only for commutativity: lhs - rhs lies in the ideal

  static Relation monomial(Path p) { return {Kind::monomial, std::move(p), {}}; }
  static Relation commutativity(Path p, Path q) { return {Kind::commutativity, std::move(p), std::move(q)}; }
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public AlgebraError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// KQ/I with I generated by monomial and commutativity relations.
class Algebra {
 public:
  Algebra() = default;
  // Validates relation shapes; throws AlgebraError.
  Algebra(Quiver quiver, std::vector<Relation> relations, FieldSpec field = {});

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const FieldSpec& field() const { return field_; }

  std::vector<Path> monomials() const;
  std::vector<std::pair<Path, Path>> commutativities() const;

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  FieldSpec field_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Algebra parse_algebra(std::string_view text);
// Inverse of parse_algebra up to whitespace.
std::string write_algebra(const Algebra& alg);

constexpr std::size_t default_admissibility_cap = 64;

struct AdmissibilityReport {
  // Least n such that every path of length n lies in I.
  std::size_t nilpotency = 0;
  // Number of nonzero path classes of each length 0..n-1.
  std::vector<std::size_t> nonzero_by_length;
};

AdmissibilityReport validate_admissible(const Algebra& alg, std::size_t cap = default_admissibility_cap);

// Basis of KQ/I by path classes.  Paths identified by commutativity relations
// share one class; its representative is the path_less-smallest member.
class PathBasis {
 public:
  explicit PathBasis(const Algebra& alg, std::size_t cap = default_admissibility_cap);

  std::size_t size() const { return reps_.size(); }
  std::size_t nilpotency() const { return nilpotency_; }
  const Path& path(std::size_t i) const { return reps_.at(i); }
  const std::vector<Path>& paths() const { return reps_; }

  // Class of an arbitrary composable path, or nullopt if it is zero in KQ/I.
  std::optional<std::size_t> class_of(const Path& p) const;
  // Class of path(i) followed by path(j), if nonzero (requires end(i) == start(j)).
  std::optional<std::size_t> multiply(std::size_t i, std::size_t j) const;

  // Classes of paths from `from` to `to`, in basis order.
  std::vector<std::size_t> between(VertexId from, VertexId to) const;
  std::vector<std::size_t> starting_at(VertexId v) const;
  std::vector<std::size_t> ending_at(VertexId v) const;

  VertexId source(std::size_t i) const { return reps_.at(i).start; }
  VertexId target(std::size_t i) const;

 private:
  const Algebra* alg_;
  std::size_t nilpotency_ = 0;
  std::size_t search_cap_ = 0;
  std::vector<Path> reps_;
  std::map<std::pair<VertexId, std::vector<ArrowId>>, std::optional<std::size_t>> lookup_;

  std::optional<Path> representative(const Path& p) const;
  friend AdmissibilityReport validate_admissible(const Algebra&, std::size_t);
};

// Whether p is zero in KQ/I, deciding by the closure of p under the
// commutativity rewrites (bounded by `max_length`).
std::optional<Path> class_representative(const Algebra& alg, const Path& p, std::size_t max_length);

// The cyclic chain of s commutative diamonds with arm lengths m and n.
struct QmnsParams {
  std::size_t m = 0, n = 0, s = 0;
  friend bool operator==(const QmnsParams&, const QmnsParams&) = default;
};

Algebra generate_qmns(std::size_t m, std::size_t n, std::size_t s);
// Parameters with m >= n when alg is isomorphic, as a bound quiver, to some
// Q_{m,n,s} with its relations.
std::optional<QmnsParams> recognize_qmns(const Algebra& alg);

// Vertex and arrow bijection A -> B under which the ideals coincide.
struct BoundQuiverIso {
  std::vector<VertexId> vertex_map;
  std::vector<ArrowId> arrow_map;
};
std::optional<BoundQuiverIso> bound_quiver_isomorphism(const Algebra& a, const Algebra& b);

}  // namespace nakayama
