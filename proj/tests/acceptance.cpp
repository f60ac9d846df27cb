// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is the
// number of failing criteria.

#include "support.hpp"

#include "nakayama/cli.hpp"
#include "nakayama/corpus.hpp"

#include "nakayama/parallel.hpp"

#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <set>

using namespace nakayama;
using namespace testing;

namespace {

using R = Rational;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (detail.size() < 2000) detail += (detail.empty() ? "" : "; ") + why;
  }
};

const CorpusReport& seeded_corpus() {
  static const CorpusReport rep = [] {
    CorpusConfig c;
    c.seed = 42;
    c.samples = 200;
    c.jobs = default_jobs();
    return run_corpus(c);
  }();
  return rep;
}

Outcome index_law() {
  Outcome o;
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}})
    for (std::size_t s = 1; s <= 2; ++s) {
      const auto alg = from_text(write_algebra(generate_qmns(m, n, s)));
      const auto got = classify_semantic(build_catalog<R>(alg)).n;
      const auto want = static_cast<Index>(m + n - 1);
      if (got != want)
        o.fail("Q_{" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(s) + "} has index " +
               std::to_string(got) + ", expected " + std::to_string(want));
    }
  o.detail = o.pass ? "8/8 parameter triples" : o.detail;
  return o;
}

Outcome self_injective_law() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& f : finite_fixtures()) {
    const auto alg = load(f);
    const auto cat = build_catalog<R>(alg);
    const bool lhs = is_self_injective<R>(alg).self_injective && classify_semantic(cat).n == 3;
    const auto q = recognize_qmns(*alg);
    ++total;
    if (lhs != (q && q->m == 2 && q->n == 2)) o.fail(f);
  }
  const auto& rep = seeded_corpus();
  if (!rep.failures.empty()) o.fail(std::to_string(rep.failures.size()) + " corpus samples broke an invariant");
  for (const auto& s : rep.samples) {
    ++total;
    if (!s.self_injective_law()) o.fail("attempt " + std::to_string(s.attempt) + ":\n" + s.algebra);
  }
  if (o.pass) o.detail = std::to_string(total) + "/" + std::to_string(total) + " algebras";
  return o;
}

Outcome agreement() {
  Outcome o;
  std::size_t total = 0, agree = 0;
  for (const auto& f : finite_fixtures()) {
    const auto alg = load(f);
    const auto cat = build_catalog<R>(alg);
    const bool syn = classify_syntactic_3nakayama(*alg, cat.finite.strings.strings).holds;
    ++total;
    if (syn == (classify_semantic(cat).n == 3))
      ++agree;
    else
      o.fail(f);
  }
  const auto& rep = seeded_corpus();
  for (const auto& s : rep.samples) {
    ++total;
    if (s.agrees())
      ++agree;
    else
      o.fail("attempt " + std::to_string(s.attempt) + " (n = " + std::to_string(s.n) + "):\n" + s.algebra);
  }
  if (rep.samples.size() != 200) o.fail("corpus produced " + std::to_string(rep.samples.size()) + " samples");
  if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(total) + " algebras";
  return o;
}

Outcome certification() {
  Outcome o;
  std::set<std::string> tags;
  std::size_t sequences = 0;
  for (const auto& f : three_nakayama_fixtures()) {
    const auto cat = build_catalog<R>(load(f));
    const auto rep = ar_report(cat, default_jobs());
    std::size_t non_projective = 0;
    for (const auto& m : cat.members) non_projective += !m.projective_at;
    if (rep.sequences.size() != non_projective) o.fail(f + ": missing sequences");
    for (std::size_t k = 0; k < rep.sequences.size(); ++k) {
      ++sequences;
      tags.insert(to_string(rep.sequences[k].tag));
      if (!rep.certificates[k].certified())
        o.fail(f + " " + rep.sequences[k].right_key + ": " + rep.certificates[k].failure());
      if (!rep.translate_agrees[k]) o.fail(f + " " + rep.sequences[k].right_key + ": tau differs from the left term");
    }
  }
  for (auto c : all_ar_cases())
    if (!tags.count(to_string(c))) o.fail("case " + to_string(c) + " not covered");
  if (o.pass) o.detail = std::to_string(sequences) + " sequences certified, " + std::to_string(tags.size()) + "/13 cases";
  return o;
}

Outcome structural_laws() {
  Outcome o;
  std::size_t modules = 0;
  for (const auto& f : three_nakayama_fixtures()) {
    const auto cat = build_catalog<R>(load(f));
    modules += cat.members.size();
    for (const auto& c : verify_structure_theorems(cat, classify_semantic(cat).n)) {
      if (c.skipped) o.fail(f + ": " + c.name + " skipped");
      if (!c.passed) o.fail(f + ": " + c.name + " fails on " + c.offender);
    }
  }
  if (o.pass) o.detail = std::to_string(modules) + " modules on " + std::to_string(three_nakayama_fixtures().size()) + " fixtures";
  return o;
}

Outcome gallery() {
  Outcome o;
  const auto ws = witness_gallery<R>();
  for (const auto& w : ws) {
    if (w.module.dims() != w.dims) o.fail(w.name + ": wrong dimension vector");
    if (!is_indecomposable(w.module)) o.fail(w.name + ": decomposable");
    const auto idx = profile(w.module).factor_serial_index;
    if (idx != w.expected_index)
      o.fail(w.name + ": index " + std::to_string(idx) + ", expected " + std::to_string(w.expected_index));
  }
  if (o.pass) o.detail = std::to_string(ws.size()) + " witnesses";
  return o;
}

Outcome oracles() {
  Outcome o;
  std::size_t brute = 0, compared = 0;
  for (const auto& f : finite_fixtures()) {
    const auto alg = load(f);
    const auto q = build_catalog<R>(alg);
    for (const auto& m : q.members)
      if (m.profile.length <= 5) {
        ++brute;
        if (brute_force_index(m.module) != m.profile.factor_serial_index) o.fail(f + " " + m.key + ": oracle disagrees");
      }
    const auto nq = classify_semantic(q).n;
    const bool siq = is_self_injective<R>(alg).self_injective;
    const ModulusGuard guard(101);
    const auto p = build_catalog<ModP>(alg);
    if (classify_semantic(p).n != nq) o.fail(f + ": index differs over F_101");
    if (is_self_injective<ModP>(alg).self_injective != siq) o.fail(f + ": self-injectivity differs over F_101");
    if (p.members.size() != q.members.size()) {
      o.fail(f + ": catalogue sizes differ over F_101");
      continue;
    }
    for (std::size_t i = 0; i < q.members.size(); ++i) {
      ++compared;
      const auto& a = q.members[i];
      const auto& b = p.members[i];
      if (a.key != b.key || a.profile.radical_series != b.profile.radical_series || a.profile.socle != b.profile.socle ||
          a.profile.factor_serial_index != b.profile.factor_serial_index)
        o.fail(f + " " + a.key + ": profile differs over F_101");
      for (std::size_t j = 0; j < q.members.size(); ++j)
        if (hom_space(a.module, q.members[j].module).size() != hom_space(b.module, p.members[j].module).size())
          o.fail(f + " " + a.key + ": Hom dimension differs over F_101");
    }
  }
  if (o.pass)
    o.detail = std::to_string(brute) + " modules against the oracle, " + std::to_string(compared) + " compared over F_101";
  return o;
}

Outcome determinism() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const std::vector<std::vector<std::string>> commands{
      {"classify", source_path("fixtures/alg_sq.quiver"), "--json"},
      {"modules", source_path("fixtures/qmns_2_2_1.quiver"), "--json"},
      {"ar", source_path("fixtures/case_b.quiver"), "--json", "--jobs", "1"},
      {"ar", source_path("fixtures/case_b.quiver"), "--json", "--jobs", "4"},
      {"corpus", "--seed", "42", "--samples", "200", "--json", "--jobs", "1"},
      {"corpus", "--seed", "42", "--samples", "200", "--json", "--jobs", "4"}};
  std::vector<std::string> first;
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    if (a != b) o.fail("two runs differ: " + c[0]);
    first.push_back(a);
  }
  if (first[2] != first[3]) o.fail("ar output depends on --jobs");
  if (first[4] != first[5]) o.fail("corpus output depends on --jobs");
  if (o.pass) o.detail = std::to_string(commands.size()) + " reports repeated byte-identically";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Q_{m,n,s} index law", index_law},
      {"self-injective 3-Nakayama iff Q_{2,2,s}", self_injective_law},
      {"syntactic/semantic agreement", agreement},
      {"almost split certification and case coverage", certification},
      {"structural laws on 3-Nakayama fixtures", structural_laws},
      {"witness gallery indices", gallery},
      {"oracle equivalence and field independence", oracles},
      {"determinism", determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  return failed;
}
