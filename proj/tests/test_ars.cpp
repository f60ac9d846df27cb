#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <set>

using namespace nakayama;
using namespace testing;

namespace {

using R = Rational;

std::size_t index_of(const Catalog<R>& cat, const std::string& key) {
  for (std::size_t i = 0; i < cat.members.size(); ++i)
    if (cat.members[i].key == key) return i;
  throw std::runtime_error("no member " + key);
}

const CheckResult& check_named(const Certificate& c, const std::string& name) {
  for (const auto& r : c.checks)
    if (r.name == name) return r;
  throw std::runtime_error("no check " + name);
}

std::string describe(const ArSequence<R>& s) {
  std::string mid;
  for (const auto& k : s.middle_keys) mid += (mid.empty() ? "" : " + ") + k;
  return to_string(s.tag) + ": " + s.left_key + " -> " + mid + " -> " + s.right_key;
}

}  // namespace

TEST_CASE("sequences over the commutative square") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  auto seq = [&](const std::string& key) { return construct_ar_sequence(cat, index_of(cat, key)); };
  CHECK(describe(seq("1_1")) == "C(i): a^-1 b -> a + b -> 1_1");
  CHECK(describe(seq("c d^-1")) == "E: 1_4 -> c + d -> c d^-1");
  CHECK(describe(seq("b")) == "C(ii): 1_2 -> a^-1 b -> b");
  CHECK(describe(seq("a")) == "C(ii): 1_3 -> a^-1 b -> a");
  CHECK(describe(seq("1_2")) == "A(i): d -> c d^-1 -> 1_2");
  CHECK(describe(seq("a^-1 b")) == "C(iii): c d^-1 -> 1_2 + 1_3 + PI(1) -> a^-1 b");
  CHECK_THROWS_AS(seq("PI(1)"), std::invalid_argument);
}

TEST_CASE("every sequence over the 3-Nakayama fixtures is certified") {
  std::set<std::string> tags;
  for (const auto& f : three_nakayama_fixtures()) {
    const auto cat = build_catalog<R>(load(f));
    const auto rep = ar_report(cat, 2);
    std::size_t non_projective = 0;
    for (const auto& m : cat.members) non_projective += !m.projective_at;
    CHECK(rep.sequences.size() == non_projective);
    for (std::size_t k = 0; k < rep.sequences.size(); ++k) {
      const auto& s = rep.sequences[k];
      CAPTURE(f);
      CAPTURE(describe(s));
      CHECK(rep.certificates[k].certified());
      CHECK(rep.certificates[k].checks.size() == 5);
      CHECK(rep.translate_agrees[k]);
      for (VertexId v = 0; v < s.left.dims().size(); ++v) CHECK(s.middle.dim(v) == s.left.dim(v) + s.right.dim(v));
      tags.insert(to_string(s.tag));
    }
  }
  for (auto c : all_ar_cases()) CHECK(tags.count(to_string(c)));
}

TEST_CASE("sequence counts") {
  CHECK(ar_report(build_catalog<R>(load("fixtures/alg_sq.quiver"))).sequences.size() == 7);
  const auto q = ar_report(build_catalog<R>(load("fixtures/qmns_2_2_1.quiver")));
  std::set<std::string> tags;
  for (const auto& s : q.sequences) tags.insert(to_string(s.tag));
  for (const auto* t : {"A(i)", "A(ii)", "C(i)", "C(ii)", "C(iii)", "E"}) CHECK(tags.count(t));
}

TEST_CASE("AR translate") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  auto tau_is = [&](const std::string& c, const std::string& expected) {
    const auto t = ar_translate(*cat.basis, member(cat, c).module);
    CHECK(is_isomorphic(t, member(cat, expected).module).verdict == Verdict::yes);
  };
  tau_is("1_1", "a^-1 b");
  tau_is("c d^-1", "1_4");
  tau_is("b", "1_2");
  CHECK(ar_translate(*cat.basis, member(cat, "PI(1)").module).total_dim() == 0);
  CHECK(ar_translate(*cat.basis, member(cat, "1_4").module).total_dim() == 0);  // P(4) = S_4
}

TEST_CASE("the split sequence is rejected as split") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  const auto& s4 = member(cat, "1_4").module;
  const auto& s1 = member(cat, "1_1").module;
  const auto seq = assemble_sequence<R>(ArCase::E, s4, {s4, s1}, {identity(s4), zero_hom(s4, s1)}, s1,
                                        {zero_hom(s4, s1), identity(s1)});
  const auto cert = verify_almost_split(cat, seq);
  CHECK_FALSE(cert.certified());
  CHECK(check_named(cert, "exact").passed);
  CHECK(check_named(cert, "ends-indecomposable").passed);
  CHECK_FALSE(check_named(cert, "non-split").passed);
  CHECK(cert.failure().rfind("non-split", 0) == 0);
}

TEST_CASE("dropping a middle summand breaks right almost split") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  const auto& s4 = member(cat, "1_4").module;
  const auto& mc = member(cat, "c").module;
  const auto& cd = member(cat, "c d^-1").module;
  const auto f = hom_space(s4, mc), g = hom_space(mc, cd);
  REQUIRE(f.size() == 1);
  REQUIRE(g.size() == 1);
  const auto seq = assemble_sequence<R>(ArCase::E, s4, {mc}, {f[0]}, cd, {g[0]});
  const auto cert = verify_almost_split(cat, seq);
  CHECK_FALSE(cert.certified());
  // dimensions no longer add up, so exactness fails as well
  CHECK_FALSE(check_named(cert, "exact").passed);
  const auto& right = check_named(cert, "right-almost-split");
  CHECK_FALSE(right.passed);
  CHECK(right.witness.find("from d ") != std::string::npos);
}

TEST_CASE("sequences whose maps are not homomorphisms fail exactness") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  auto seq = construct_ar_sequence(cat, index_of(cat, "c d^-1"));
  seq.g.components[3] *= 2;  // breaks g*f = 0 at vertex 4
  CHECK_FALSE(check_named(verify_almost_split(cat, seq), "exact").passed);
}

TEST_CASE("AR quiver of A2") {
  const auto a2 = build_catalog<R>(load("fixtures/a2.quiver"));
  // A2 is right 1-Nakayama, but its unique sequence is still of shape A(ii)
  const auto rep = ar_report(a2);
  REQUIRE(rep.sequences.size() == 1);
  CHECK(rep.certificates[0].certified());
  const auto& q = rep.quiver;
  CHECK(q.nodes.size() == 3);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : q.edges) edges.insert({q.nodes[e.from], q.nodes[e.to]});
  CHECK(edges == std::set<std::pair<std::string, std::string>>{{"1_2", "a"}, {"a", "1_1"}});
  REQUIRE(q.tau.size() == 1);
  CHECK(q.nodes[q.tau[0].first] == "1_1");
  CHECK(q.nodes[q.tau[0].second] == "1_2");
  const auto dot = to_dot(q);
  CHECK(dot.find("digraph AR") == 0);
  CHECK(dot.find("\"1_1\" -> \"1_2\" [style=dashed") != std::string::npos);
}

TEST_CASE("AR quiver of the square") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  const auto rep = ar_report(cat);
  CHECK(rep.quiver.nodes.size() == 11);
  std::map<std::size_t, int> incoming;
  for (const auto& [c, t] : rep.quiver.tau) ++incoming[c];
  for (std::size_t i = 0; i < cat.members.size(); ++i) CHECK(incoming[i] == (cat.members[i].projective_at ? 0 : 1));
}

TEST_CASE("tau permutes the non-projectives of a self-injective algebra") {
  for (std::size_t s = 1; s <= 2; ++s) {
    const auto cat = build_catalog<R>(qmns(2, 2, s));
    const auto rep = ar_report(cat);
    std::set<std::size_t> from, to;
    for (const auto& [c, t] : rep.quiver.tau) {
      from.insert(c);
      to.insert(t);
    }
    CHECK(from == to);
    CHECK(from.size() == rep.sequences.size());
    for (auto i : from) CHECK_FALSE(cat.members[i].projective_at);
  }
}

TEST_CASE("decomposition by Hom dimensions") {
  const auto cat = build_catalog<R>(load("fixtures/alg_sq.quiver"));
  const Decomposer<R> dec(cat);
  const auto m = direct_sum<R>({member(cat, "a").module, member(cat, "1_2").module, member(cat, "a").module});
  const auto mult = dec.multiplicities(m);
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    const auto& k = cat.members[i].key;
    CHECK(mult[i] == (k == "a" ? 2 : k == "1_2" ? 1 : 0));
  }
}

TEST_CASE("the crossed gluing of Q_{2,2,1} is also certified") {
  const auto cat = build_catalog<R>(load("findings/twisted_q221.quiver"));
  const auto rep = ar_report(cat);
  for (std::size_t k = 0; k < rep.sequences.size(); ++k) {
    CHECK(rep.certificates[k].certified());
    CHECK(rep.translate_agrees[k]);
  }
}

TEST_CASE("sequences over F_101 match the rational ones") {
  for (const auto& f : three_nakayama_fixtures()) {
    const auto alg = load(f);
    const auto q = ar_report(build_catalog<R>(alg));
    const ModulusGuard guard(101);
    const auto p = ar_report(build_catalog<ModP>(alg));
    REQUIRE(q.sequences.size() == p.sequences.size());
    for (std::size_t k = 0; k < q.sequences.size(); ++k) {
      CHECK(q.sequences[k].tag == p.sequences[k].tag);
      CHECK(q.sequences[k].left_key == p.sequences[k].left_key);
      CHECK(q.sequences[k].middle_keys == p.sequences[k].middle_keys);
      CHECK(p.certificates[k].certified());
    }
  }
}
