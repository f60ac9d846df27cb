#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nakayama;
using namespace testing;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const AlgebraError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parsing") {
  const auto a2 = parse_algebra("vertices: 1 2\narrows: a: 1 -> 2\n");
  CHECK(a2.quiver().vertex_count() == 2);
  CHECK(a2.quiver().arrow_count() == 1);
  CHECK(a2.relations().empty());

  const auto sq = load("fixtures/alg_sq.quiver");
  CHECK(sq->quiver().arrow_count() == 4);
  REQUIRE(sq->relations().size() == 1);
  CHECK(sq->relations()[0].kind == Relation::Kind::commutativity);

  const auto q221 = load("fixtures/qmns_2_2_1.quiver");
  CHECK(q221->quiver().vertex_count() == 3);
  CHECK(q221->quiver().arrow_count() == 4);
}

TEST_CASE("parse errors") {
  CHECK(parse_error("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a\n").find("relation path length must be ≥ 2") !=
        std::string::npos);
  CHECK(parse_error("vertices: 1 2\narrows: a: 1 -> 3\n").find("undeclared vertex '3'") != std::string::npos);
  CHECK(parse_error("vertices: 1 1\n").find("duplicate vertex") != std::string::npos);
  CHECK(parse_error("vertices: 1 2\narrows: a: 1 -> 2 ; a: 2 -> 1\n").find("duplicate") != std::string::npos);
  CHECK(parse_error("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a*b\n").find("undeclared arrow 'b'") !=
        std::string::npos);
  CHECK(parse_error("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 1 -> 3 ; d: 3 -> 3\nrelations: a*b - c*d*d\n")
            .find("commutativity") == std::string::npos);  // parallel, accepted
  CHECK(!parse_error("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 1 -> 2 ; d: 2 -> 2\nrelations: a*b - c*d\n")
             .empty());  // not parallel
  try {
    parse_algebra("vertices: 1\narrows: x 1 -> 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("write_algebra round trips") {
  for (const auto& f : finite_fixtures()) {
    const auto alg = load(f);
    const auto again = parse_algebra(write_algebra(*alg));
    CHECK(write_algebra(again) == write_algebra(*alg));
  }
}

TEST_CASE("admissibility") {
  CHECK(validate_admissible(*load("fixtures/a2.quiver")).nilpotency == 2);
  CHECK(validate_admissible(*load("fixtures/qmns_2_2_1.quiver")).nilpotency == 3);
  CHECK_THROWS_AS(validate_admissible(*load("fixtures/loop_free.quiver"), 10), AlgebraError);
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t s = 1; s <= 3; ++s) CHECK(validate_admissible(generate_qmns(m, n, s)).nilpotency == std::max(m, n) + 1);
}

TEST_CASE("path bases") {
  CHECK(PathBasis(*load("fixtures/a2.quiver")).size() == 3);
  CHECK(PathBasis(*load("fixtures/alg_sq.quiver")).size() == 9);
  // P(v0) has e, a1, b1, a1*a2; the two other projectives are uniserial of length 3
  CHECK(PathBasis(*load("fixtures/qmns_2_2_1.quiver")).size() == 10);
}

TEST_CASE("path basis dimension matches the path-space oracle") {
  std::vector<AlgebraPtr> algebras;
  for (const auto& f : finite_fixtures()) algebras.push_back(load(f));
  algebras.push_back(load("findings/twisted_q221.quiver"));
  for (std::size_t m = 2; m <= 3; ++m)
    for (std::size_t n = 2; n <= 3; ++n)
      for (std::size_t s = 1; s <= 2; ++s) algebras.push_back(qmns(m, n, s));
  for (const auto& alg : algebras) {
    CAPTURE(write_algebra(*alg));
    const PathBasis basis(*alg);
    const auto oracle = path_space_dimension(*alg, basis.nilpotency());
    CHECK(oracle.paths_of_length_l_vanish);
    CHECK(oracle.dimension == basis.size());
    // the path just below the nilpotency bound is not forced to vanish
    if (basis.nilpotency() > 1) CHECK_FALSE(path_space_dimension(*alg, basis.nilpotency() - 1).paths_of_length_l_vanish);
  }
}

TEST_CASE("path bases are closed under prefixes and contain the trivial paths") {
  for (const auto& f : finite_fixtures()) {
    const auto alg = load(f);
    const PathBasis basis(*alg);
    for (VertexId v = 0; v < alg->quiver().vertex_count(); ++v) CHECK(basis.class_of(Path{v, {}}));
    for (const auto& p : basis.paths())
      for (std::size_t k = 0; k < p.length(); ++k) {
        const Path prefix{p.start, std::vector<ArrowId>(p.arrows.begin(), p.arrows.begin() + static_cast<long>(k))};
        CHECK(basis.class_of(prefix));
      }
  }
}

TEST_CASE("commutativity classes share a representative") {
  const auto sq = load("fixtures/alg_sq.quiver");
  const auto& q = sq->quiver();
  const PathBasis basis(*sq);
  const Path ac{0, {*q.find_arrow("a"), *q.find_arrow("c")}}, bd{0, {*q.find_arrow("b"), *q.find_arrow("d")}};
  REQUIRE(basis.class_of(ac));
  CHECK(basis.class_of(ac) == basis.class_of(bd));
  CHECK(to_string(q, basis.path(*basis.class_of(bd))) == "a*c");
}

TEST_CASE("Q_{m,n,s} generator shapes") {
  const auto q221 = generate_qmns(2, 2, 1);
  CHECK(q221.quiver().vertex_count() == 3);
  CHECK(q221.quiver().arrow_count() == 4);
  CHECK(q221.commutativities().size() == 1);
  const auto q231 = generate_qmns(2, 3, 1);
  CHECK(q231.quiver().vertex_count() == 4);
  CHECK(q231.quiver().arrow_count() == 5);
  const auto q222 = generate_qmns(2, 2, 2);
  CHECK(q222.quiver().vertex_count() == 6);
  CHECK(q222.quiver().arrow_count() == 8);
  CHECK(q222.commutativities().size() == 2);
  CHECK_THROWS_AS(generate_qmns(1, 2, 1), AlgebraError);
  CHECK_THROWS_AS(generate_qmns(2, 2, 0), AlgebraError);
}

TEST_CASE("recognize_qmns inverts generate_qmns") {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t s = 1; s <= 3; ++s) {
        const auto got = recognize_qmns(generate_qmns(m, n, s));
        REQUIRE(got);
        CHECK(*got == QmnsParams{std::max(m, n), std::min(m, n), s});
      }
  CHECK_FALSE(recognize_qmns(*load("fixtures/a2.quiver")));
  CHECK_FALSE(recognize_qmns(*load("fixtures/alg_sq.quiver")));
  CHECK_FALSE(recognize_qmns(*load("findings/twisted_q221.quiver")));
}

TEST_CASE("recognition survives renaming and reordering") {
  // Q_{2,2,1} with vertices and arrows renamed and listed in another order
  const auto renamed = parse_algebra(
      "vertices: z y x\n"
      "arrows: q: x -> z ; p: z -> x ; s: y -> z ; r: z -> y\n"
      "relations: r*s - p*q ; q*r ; s*p ; p*q*p ; q*p*q ; r*s*r ; s*r*s\n");
  const auto got = recognize_qmns(renamed);
  REQUIRE(got);
  CHECK(*got == QmnsParams{2, 2, 1});
  CHECK(bound_quiver_isomorphism(renamed, generate_qmns(2, 2, 1)));
}
