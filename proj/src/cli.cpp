#include "nakayama/cli.hpp"

#include "nakayama/parallel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nakayama {

Json algebra_json(const Algebra& alg) {
  const auto& q = alg.quiver();
  Json j;
  j["vertices"] = q.vertex_names();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
  j["relations"] = Json::array();
  for (const auto& r : alg.relations()) {
    if (r.kind == Relation::Kind::monomial)
      j["relations"].push_back(to_string(q, r.lhs));
    else
      j["relations"].push_back(to_string(q, r.lhs) + " - " + to_string(q, r.rhs));
  }
  return j;
}

Json walk_json(const Quiver& q, const Walk& w) {
  Json j = Json::array();
  if (w.trivial()) {
    j.push_back(to_string(q, w));
    return j;
  }
  for (const auto& l : w.letters) j.push_back(q.arrow(l.arrow).name + (l.dir < 0 ? "^-1" : ""));
  return j;
}

template <class S>
Json representation_json(const Representation<S>& m) {
  const auto& q = m.algebra().quiver();
  Json j;
  j["key"] = m.key();
  Json dims = Json::object(), maps = Json::object();
  for (VertexId v = 0; v < q.vertex_count(); ++v) dims[q.vertex_name(v)] = m.dim(v);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& mat = m.map(a);
    Json rows = Json::array();
    for (Index r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (Index c = 0; c < mat.cols(); ++c) row.push_back(ScalarTraits<S>::to_string(mat(r, c)));
      rows.push_back(std::move(row));
    }
    maps[q.arrow(a).name] = std::move(rows);
  }
  j["dims"] = std::move(dims);
  j["maps"] = std::move(maps);
  return j;
}

namespace {

Json dims_json(const Quiver& q, const std::vector<Index>& dims) {
  Json j = Json::object();
  for (VertexId v = 0; v < dims.size(); ++v) j[q.vertex_name(v)] = dims[v];
  return j;
}

Json qmns_json(const std::optional<QmnsParams>& p) {
  if (!p) return nullptr;
  return Json::array({p->m, p->n, p->s});
}

std::string dims_text(const std::vector<Index>& dims) {
  std::string s;
  for (auto d : dims) s += std::to_string(d);
  return s;
}

}  // namespace

template <class S>
Json member_json(const Catalog<S>& cat, std::size_t i, bool with_module) {
  const auto& q = cat.algebra->quiver();
  const auto& e = cat.members[i];
  const auto& p = e.profile;
  Json j;
  j["key"] = e.key;
  j["provenance"] = e.provenance == Provenance::string ? "string" : "projective-injective";
  j["dims"] = dims_json(q, e.module.dims());
  j["length"] = p.length;
  j["loewy_length"] = p.loewy_length;
  j["factor_serial_index"] = p.factor_serial_index;
  j["local"] = p.local;
  j["colocal"] = p.colocal;
  j["uniserial"] = p.uniserial;
  j["top"] = dims_json(q, p.top);
  j["socle"] = dims_json(q, p.socle);
  j["projective_at"] = e.projective_at ? Json(q.vertex_name(*e.projective_at)) : Json(nullptr);
  j["injective_at"] = e.injective_at ? Json(q.vertex_name(*e.injective_at)) : Json(nullptr);
  j["origin"] = module_origin(cat, e.module).description;
  if (with_module) j["module"] = representation_json(e.module);
  return j;
}

template <class S>
Json classify_json(const Catalog<S>& cat, const NakayamaVerdict& sem, const SyntacticVerdict& syn,
                   const SelfInjectivity& si, const std::optional<QmnsParams>& qmns) {
  Json j;
  j["schema"] = 1;
  j["n"] = sem.n;
  j["method"] = "semantic";
  j["realizing_module"] = sem.realizing_key;
  j["finite_type"] = true;
  j["special_biserial"] = true;
  j["self_injective"] = si.self_injective;
  j["qmns"] = qmns_json(qmns);
  j["catalog_size"] = cat.members.size();
  j["syntactic"] = {{"holds", syn.holds},
                    {"peaks_isolated", syn.peaks_isolated},
                    {"valleys_short", syn.valleys_short},
                    {"square_commutativity", syn.square_commutativity},
                    {"two_arrows_in", syn.two_arrows_in},
                    {"long_valley", syn.long_valley},
                    {"square_relation", syn.square_relation},
                    {"witnesses", syn.witnesses}};
  return j;
}

template <class S>
Json ar_json(const Catalog<S>& cat, const ArReport<S>& rep) {
  Json j;
  j["schema"] = 1;
  j["sequences"] = Json::array();
  for (std::size_t k = 0; k < rep.sequences.size(); ++k) {
    const auto& seq = rep.sequences[k];
    Json checks = Json::array();
    for (const auto& c : rep.certificates[k].checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    j["sequences"].push_back({{"case", to_string(seq.tag)},
                              {"left", seq.left_key},
                              {"middle", seq.middle_keys},
                              {"right", seq.right_key},
                              {"certified", rep.certificates[k].certified()},
                              {"checks", checks},
                              {"translate_agrees", static_cast<bool>(rep.translate_agrees[k])}});
  }
  Json q;
  q["nodes"] = rep.quiver.nodes;
  q["edges"] = Json::array();
  for (const auto& e : rep.quiver.edges)
    q["edges"].push_back({{"from", rep.quiver.nodes[e.from]}, {"to", rep.quiver.nodes[e.to]}, {"multiplicity", e.multiplicity}});
  q["tau"] = Json::array();
  for (std::size_t i = 0; i < rep.quiver.tau.size(); ++i)
    q["tau"].push_back({{"module", rep.quiver.nodes[rep.quiver.tau[i].first]},
                        {"translate", rep.quiver.nodes[rep.quiver.tau[i].second]},
                        {"case", rep.quiver.cases[i]}});
  j["quiver"] = std::move(q);
  j["catalog_size"] = cat.members.size();
  return j;
}

Json corpus_json(const CorpusReport& rep) {
  Json j;
  j["schema"] = 1;
  j["seed"] = rep.config.seed;
  j["samples_requested"] = rep.config.samples;
  j["max_vertices"] = rep.config.max_vertices;
  j["attempts"] = rep.attempts;
  j["discarded"] = {{"infinite_type", rep.discarded_infinite},
                    {"inconclusive", rep.discarded_inconclusive},
                    {"other", rep.discarded_other}};
  j["agreement"] = {{"syntactic_no_semantic_no", rep.agreement[0][0]},
                    {"syntactic_no_semantic_3", rep.agreement[0][1]},
                    {"syntactic_yes_semantic_no", rep.agreement[1][0]},
                    {"syntactic_yes_semantic_3", rep.agreement[1][1]},
                    {"agreeing", rep.agreeing()},
                    {"total", rep.samples.size()}};
  j["self_injective_law"] = {{"holding", rep.self_injective_law_holds()}, {"total", rep.samples.size()}};
  j["failures"] = rep.failures;
  j["samples"] = Json::array();
  for (const auto& s : rep.samples)
    j["samples"].push_back({{"attempt", s.attempt},
                            {"n", s.n},
                            {"realizing_module", s.realizing},
                            {"syntactic", s.syntactic},
                            {"self_injective", s.self_injective},
                            {"qmns", qmns_json(s.qmns)},
                            {"catalog_size", s.catalog_size},
                            {"algebra", s.algebra}});
  return j;
}

std::vector<std::string> classification_violations(Index n, const SyntacticVerdict& syn, const SelfInjectivity& si,
                                                    const std::optional<QmnsParams>& qmns) {
  std::vector<std::string> out;
  if (syn.holds != (n == 3))
    out.push_back("syntactic criterion " + std::string(syn.holds ? "holds" : "fails") + " but the index is " +
                  std::to_string(n));
  const bool q22s = qmns && qmns->m == 2 && qmns->n == 2;
  if ((si.self_injective && n == 3) != q22s)
    out.push_back(std::string("self-injective with index 3 is ") + (si.self_injective && n == 3 ? "true" : "false") +
                  " but the algebra is " + (q22s ? "" : "not ") + "some Q_{2,2,s}");
  if (qmns && n != static_cast<Index>(qmns->m + qmns->n - 1))
    out.push_back("Q_{" + std::to_string(qmns->m) + "," + std::to_string(qmns->n) + "," + std::to_string(qmns->s) +
                  "} has index " + std::to_string(n) + ", expected " + std::to_string(qmns->m + qmns->n - 1));
  return out;
}

namespace {

struct RunConfig {
  std::string input;
  std::string field = "q";
  std::size_t string_cap = 0, band_cap = 0;
  bool json = false, dot = false, timing = false;
  unsigned jobs = default_jobs();
  std::uint64_t seed = 42;
  std::size_t samples = 200;
  std::size_t max_vertices = 5;
  std::size_t m = 0, n = 0, s = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant was violated on a concrete input; `dump` is the witness.
struct InvariantViolation : std::runtime_error {
  InvariantViolation(const std::string& what, std::string d) : std::runtime_error(what), dump(std::move(d)) {}
  std::string dump;
};

class Runner {
 public:
  Runner(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(cfg), in_(in), out_(out), err_(err) {}

  int dispatch(const std::string& cmd);

 private:
  const RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  AlgebraPtr alg_;

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  AlgebraPtr load() {
    std::string text;
    if (cfg_.input == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(cfg_.input);
      if (!f) throw UsageError("cannot open '" + cfg_.input + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    alg_ = std::make_shared<const Algebra>(parse_algebra(text));
    return alg_;
  }

  Caps caps() const { return {cfg_.string_cap, cfg_.band_cap, default_admissibility_cap}; }

  template <class Fn>
  int with_field(Fn&& fn) {
    const auto spec = FieldSpec::parse(cfg_.field);
    if (spec.kind == FieldSpec::Kind::prime) {
      const ModulusGuard guard(spec.modulus);
      return fn.template operator()<ModP>();
    }
    return fn.template operator()<Rational>();
  }

  int run(const std::string& cmd);
  int parse();
  int validate();
  int strings();
  int gen_qmns();
  int corpus();
  template <class S>
  int modules();
  template <class S>
  int classify();
  template <class S>
  int ar();
  template <class S>
  int selfinj();
  template <class S>
  int verify_theorems();
};

int Runner::dispatch(const std::string& cmd) {
  try {
    return run(cmd);
  } catch (const std::logic_error& e) {
    // a broken internal invariant (e.g. an incomplete catalogue) on this input
    if (!alg_) throw;
    throw InvariantViolation(e.what(), write_algebra(*alg_));
  }
}

int Runner::run(const std::string& cmd) {
  if (cmd == "parse") return parse();
  if (cmd == "validate") return validate();
  if (cmd == "strings") return strings();
  if (cmd == "gen-qmns") return gen_qmns();
  if (cmd == "corpus") return corpus();
  if (cmd == "modules") return with_field([&]<class S>() { return modules<S>(); });
  if (cmd == "classify") return with_field([&]<class S>() { return classify<S>(); });
  if (cmd == "ar") return with_field([&]<class S>() { return ar<S>(); });
  if (cmd == "selfinj") return with_field([&]<class S>() { return selfinj<S>(); });
  if (cmd == "verify-theorems") return with_field([&]<class S>() { return verify_theorems<S>(); });
  throw UsageError("unknown command '" + cmd + "'");
}

int Runner::parse() {
  const auto alg = load();
  if (cfg_.json) {
    Json j = algebra_json(*alg);
    j["schema"] = 1;
    emit(j);
  } else {
    out_ << write_algebra(*alg);
  }
  return exit_ok;
}

int Runner::validate() {
  const auto alg = load();
  AdmissibilityReport adm;
  try {
    adm = validate_admissible(*alg);
  } catch (const AlgebraError& e) {
    err_ << "not admissible within cap: " << e.what() << "\n";
    return exit_unclassifiable;
  }
  std::size_t dim = 0;
  for (auto c : adm.nonzero_by_length) dim += c;
  const auto sb = is_special_biserial(*alg);
  if (cfg_.json) {
    Json j;
    j["schema"] = 1;
    j["admissible"] = true;
    j["nilpotency"] = adm.nilpotency;
    j["dimension"] = dim;
    j["nonzero_by_length"] = adm.nonzero_by_length;
    j["special_biserial"] = sb.special_biserial;
    j["special_biserial_witness"] = sb.witness;
    emit(j);
  } else {
    out_ << "admissible: yes (every path of length " << adm.nilpotency << " is zero)\n";
    out_ << "dimension: " << dim << "\n";
    out_ << "special biserial: " << (sb.special_biserial ? "yes" : "no (" + sb.witness + ")") << "\n";
  }
  return exit_ok;
}

int Runner::strings() {
  const auto alg = load();
  const auto& q = alg->quiver();
  const std::size_t cap = cfg_.string_cap ? cfg_.string_cap : default_band_cap(*alg);
  const auto en = enumerate_strings(*alg, cap);
  if (!en.complete) err_ << "warning: strings extend beyond cap " << cap << "; the list is truncated\n";
  if (cfg_.json) {
    Json j;
    j["schema"] = 1;
    j["complete"] = en.complete;
    j["strings"] = Json::array();
    for (const auto& w : en.strings) j["strings"].push_back(walk_json(q, w));
    emit(j);
  } else {
    for (const auto& w : en.strings) out_ << to_string(q, w) << "\n";
  }
  return exit_ok;
}

int Runner::gen_qmns() {
  const auto alg = generate_qmns(cfg_.m, cfg_.n, cfg_.s);
  if (cfg_.json) {
    Json j = algebra_json(alg);
    j["schema"] = 1;
    emit(j);
  } else {
    out_ << write_algebra(alg);
  }
  return exit_ok;
}

int Runner::corpus() {
  CorpusConfig c;
  c.seed = cfg_.seed;
  c.samples = cfg_.samples;
  c.jobs = cfg_.jobs;
  c.max_vertices = cfg_.max_vertices;
  const auto rep = run_corpus(c);

  std::ostringstream dump;
  for (const auto& f : rep.failures) dump << "failure: " << f << "\n";
  for (const auto& s : rep.samples) {
    const SelfInjectivity si{s.self_injective, {}};
    for (const auto& v : classification_violations(s.n, s.syntactic_detail, si, s.qmns))
      dump << "attempt " << s.attempt << ": " << v << "\n" << s.algebra;
  }

  if (cfg_.json) {
    emit(corpus_json(rep));
  } else {
    out_ << "seed " << c.seed << ", " << rep.samples.size() << " samples from " << rep.attempts << " attempts\n";
    out_ << "discarded: " << rep.discarded_infinite << " infinite type, " << rep.discarded_inconclusive
         << " inconclusive, " << rep.discarded_other << " other\n";
    out_ << "agreement (syntactic vs index 3): " << rep.agreeing() << "/" << rep.samples.size() << "\n";
    out_ << "              index!=3  index=3\n";
    out_ << "  syntactic no  " << rep.agreement[0][0] << "  " << rep.agreement[0][1] << "\n";
    out_ << "  syntactic yes " << rep.agreement[1][0] << "  " << rep.agreement[1][1] << "\n";
    out_ << "self-injective index-3 law: " << rep.self_injective_law_holds() << "/" << rep.samples.size() << "\n";
    out_ << "failures: " << rep.failures.size() << "\n";
  }
  if (!dump.str().empty()) throw InvariantViolation("corpus run falsified an invariant", dump.str());
  return exit_ok;
}

template <class S>
int Runner::modules() {
  const auto cat = build_catalog<S>(load(), caps());
  const auto& q = alg_->quiver();
  if (cfg_.json) {
    Json j;
    j["schema"] = 1;
    j["members"] = Json::array();
    for (std::size_t i = 0; i < cat.members.size(); ++i) j["members"].push_back(member_json(cat, i, true));
    emit(j);
    return exit_ok;
  }
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    const auto& e = cat.members[i];
    const auto& p = e.profile;
    out_ << e.key << "  dim " << dims_text(e.module.dims()) << "  length " << p.length << "  loewy " << p.loewy_length
         << "  index " << p.factor_serial_index;
    if (p.uniserial) out_ << "  uniserial";
    if (p.local) out_ << "  local";
    if (p.colocal) out_ << "  colocal";
    if (e.projective_at) out_ << "  = P(" << q.vertex_name(*e.projective_at) << ")";
    if (e.injective_at) out_ << "  = I(" << q.vertex_name(*e.injective_at) << ")";
    out_ << "  [" << module_origin(cat, e.module).description << "]\n";
  }
  return exit_ok;
}

template <class S>
int Runner::classify() {
  const auto alg = load();
  const auto cat = build_catalog<S>(alg, caps());
  const auto sem = classify_semantic(cat);
  const auto syn = classify_syntactic_3nakayama(*alg, cat.finite.strings.strings);
  const auto si = is_self_injective<S>(alg);
  const auto qmns = recognize_qmns(*alg);
  if (cfg_.json) {
    emit(classify_json(cat, sem, syn, si, qmns));
  } else {
    out_ << "n = " << sem.n << " (semantic; realized by " << sem.realizing_key << ")\n";
    out_ << "finite type: yes (" << cat.members.size() << " indecomposables)\n";
    out_ << "special biserial: yes\n";
    out_ << "syntactic 3-Nakayama criterion: " << (syn.holds ? "holds" : "fails") << "\n";
    for (const auto& w : syn.witnesses) out_ << "  " << w << "\n";
    out_ << "self-injective: " << (si.self_injective ? "yes" : "no") << "\n";
    if (qmns)
      out_ << "Q_{m,n,s}: (" << qmns->m << "," << qmns->n << "," << qmns->s << ")\n";
    else
      out_ << "Q_{m,n,s}: no\n";
  }
  const auto bad = classification_violations(sem.n, syn, si, qmns);
  if (!bad.empty()) {
    std::string what;
    for (const auto& b : bad) what += (what.empty() ? "" : "; ") + b;
    throw InvariantViolation(what, write_algebra(*alg));
  }
  return exit_ok;
}

template <class S>
int Runner::ar() {
  const auto alg = load();
  const auto cat = build_catalog<S>(alg, caps());
  const auto sem = classify_semantic(cat);
  if (sem.n != 3) {
    err_ << "cannot construct almost split sequences: the algebra is right " << sem.n
         << "-Nakayama, not right 3-Nakayama (realized by " << sem.realizing_key << ")\n";
    return exit_unclassifiable;
  }
  const auto rep = ar_report(cat, cfg_.jobs);
  if (cfg_.dot) {
    out_ << to_dot(rep.quiver);
  } else if (cfg_.json) {
    emit(ar_json(cat, rep));
  } else {
    for (std::size_t k = 0; k < rep.sequences.size(); ++k) {
      const auto& seq = rep.sequences[k];
      std::string mid;
      for (const auto& m : seq.middle_keys) mid += (mid.empty() ? "" : " + ") + m;
      out_ << to_string(seq.tag) << ": 0 -> " << seq.left_key << " -> " << mid << " -> " << seq.right_key << " -> 0  "
           << (rep.certificates[k].certified() ? "certified" : "FAILED " + rep.certificates[k].failure())
           << (rep.translate_agrees[k] ? "" : "  (tau disagrees)") << "\n";
    }
  }
  std::ostringstream dump;
  for (std::size_t k = 0; k < rep.sequences.size(); ++k) {
    if (!rep.certificates[k].certified())
      dump << rep.sequences[k].right_key << ": " << rep.certificates[k].failure() << "\n";
    if (!rep.translate_agrees[k]) dump << rep.sequences[k].right_key << ": tau differs from the left term\n";
  }
  if (!dump.str().empty()) {
    dump << write_algebra(*alg);
    throw InvariantViolation("almost split sequence not certified", dump.str());
  }
  return exit_ok;
}

template <class S>
int Runner::selfinj() {
  const auto alg = load();
  const auto si = is_self_injective<S>(alg);
  const auto& q = alg->quiver();
  if (cfg_.json) {
    Json j;
    j["schema"] = 1;
    j["self_injective"] = si.self_injective;
    Json perm = Json::object();
    for (VertexId v = 0; v < si.nakayama_permutation.size(); ++v)
      perm[q.vertex_name(v)] = q.vertex_name(si.nakayama_permutation[v]);
    j["nakayama_permutation"] = si.self_injective ? perm : Json(nullptr);
    emit(j);
  } else {
    out_ << "self-injective: " << (si.self_injective ? "yes" : "no") << "\n";
    if (si.self_injective)
      for (VertexId v = 0; v < si.nakayama_permutation.size(); ++v)
        out_ << "  P(" << q.vertex_name(v) << ") = I(" << q.vertex_name(si.nakayama_permutation[v]) << ")\n";
  }
  return exit_ok;
}

template <class S>
int Runner::verify_theorems() {
  const auto alg = load();
  const auto cat = build_catalog<S>(alg, caps());
  const auto sem = classify_semantic(cat);
  const auto claims = verify_structure_theorems(cat, sem.n);
  const auto syn = classify_syntactic_3nakayama(*alg, cat.finite.strings.strings);
  const auto si = is_self_injective<S>(alg);
  const auto qmns = recognize_qmns(*alg);
  const auto laws = classification_violations(sem.n, syn, si, qmns);
  if (cfg_.json) {
    Json j;
    j["schema"] = 1;
    j["n"] = sem.n;
    j["claims"] = Json::array();
    for (const auto& c : claims)
      j["claims"].push_back({{"name", c.name}, {"skipped", c.skipped}, {"passed", c.passed}, {"offender", c.offender}});
    j["classification_violations"] = laws;
    emit(j);
  } else {
    out_ << "index n = " << sem.n << "\n";
    for (const auto& c : claims)
      out_ << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name
           << (c.passed ? "" : "  (offender " + c.offender + ")") << "\n";
    for (const auto& l : laws) out_ << "FAIL " << l << "\n";
  }
  std::ostringstream dump;
  for (const auto& c : claims)
    if (!c.passed) dump << c.name << " fails on " << c.offender << "\n";
  for (const auto& l : laws) dump << l << "\n";
  if (!dump.str().empty()) {
    dump << write_algebra(*alg);
    throw InvariantViolation("structure theorem falsified", dump.str());
  }
  return exit_ok;
}

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("file", cfg.input, "algebra file, or - for standard input")->required();
}

void add_json(CLI::App* sub, RunConfig& cfg) { sub->add_flag("--json", cfg.json, "JSON report"); }

void add_field_and_caps(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--field", cfg.field, "q (rationals) or fp:P")->check([](const std::string& s) {
    try {
      FieldSpec::parse(s);
      return std::string();
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
  });
  sub->add_option("--string-cap", cfg.string_cap, "string length cap")->check(CLI::PositiveNumber);
  sub->add_option("--band-cap", cfg.band_cap, "band length cap")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right n-Nakayama special biserial algebras: classification and almost split sequences", "nakayama"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* parse = app.add_subcommand("parse", "parse and normalise an algebra file");
  add_input(parse, cfg);
  add_json(parse, cfg);

  auto* validate = app.add_subcommand("validate", "admissibility, dimension and the special biserial test");
  add_input(validate, cfg);
  add_json(validate, cfg);

  auto* strings = app.add_subcommand("strings", "canonical strings, one per line");
  add_input(strings, cfg);
  add_json(strings, cfg);
  strings->add_option("--cap,--string-cap", cfg.string_cap, "string length cap")->check(CLI::PositiveNumber);

  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"modules", "the indecomposable catalogue with profiles"},
           {"classify", "right n-Nakayama index, syntactic criterion, self-injectivity"},
           {"ar", "almost split sequences, certificates and the AR quiver"},
           {"selfinj", "self-injectivity and the Nakayama permutation"},
           {"verify-theorems", "structure laws on every indecomposable"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_input(sub, cfg);
    add_json(sub, cfg);
    add_field_and_caps(sub, cfg);
  }
  app.get_subcommand("ar")->add_flag("--dot", cfg.dot, "AR quiver in dot format");
  app.get_subcommand("ar")->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen-qmns", "print Q_{m,n,s} with its relations");
  gen->add_option("m", cfg.m)->required();
  gen->add_option("n", cfg.n)->required();
  gen->add_option("s", cfg.s)->required();
  add_json(gen, cfg);

  auto* corpus = app.add_subcommand("corpus", "random special biserial algebras through both classifiers");
  corpus->add_option("--seed", cfg.seed, "generator seed");
  corpus->add_option("--samples", cfg.samples, "accepted samples");
  corpus->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--max-vertices", cfg.max_vertices, "vertices per sample")->check(CLI::Range(2, 12));
  add_json(corpus, cfg);

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--timing", cfg.timing, "elapsed time on standard error");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const auto cmd = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Runner runner(cfg, in, out, err);
  int code = exit_ok;
  try {
    code = runner.dispatch(cmd);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    code = exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    code = exit_usage;
  } catch (const ClassificationError& e) {
    err << "cannot classify: " << e.what() << "\n";
    code = exit_unclassifiable;
  } catch (const UnsupportedField& e) {
    err << "cannot classify over " << cfg.field << ": " << e.what() << "\n";
    code = exit_unclassifiable;
  } catch (const InvariantViolation& e) {
    err << "INVARIANT VIOLATED: " << e.what() << "\n" << e.dump;
    code = exit_invariant;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    code = exit_usage;
  } catch (const std::logic_error& e) {
    err << "INVARIANT VIOLATED: " << e.what() << "\n";
    code = exit_invariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = exit_usage;
  }
  if (cfg.timing)
    err << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return code;
}

#define NAKAYAMA_INSTANTIATE(S)                                                                              \
  template Json representation_json(const Representation<S>&);                                               \
  template Json member_json(const Catalog<S>&, std::size_t, bool);                                           \
  template Json classify_json(const Catalog<S>&, const NakayamaVerdict&, const SyntacticVerdict&,            \
                              const SelfInjectivity&, const std::optional<QmnsParams>&);                     \
  template Json ar_json(const Catalog<S>&, const ArReport<S>&);

NAKAYAMA_INSTANTIATE(Rational)
NAKAYAMA_INSTANTIATE(ModP)

}  // namespace nakayama
