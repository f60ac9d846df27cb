#include "nakayama/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace nakayama {

// ---------------------------------------------------------------- Quiver

VertexId Quiver::add_vertex(const std::string& name) {
  if (vertex_index_.count(name)) throw AlgebraError("duplicate vertex '" + name + "'");
  const VertexId id = vertices_.size();
  vertices_.push_back(name);
  vertex_index_.emplace(name, id);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

ArrowId Quiver::add_arrow(const std::string& name, VertexId source, VertexId target) {
  if (arrow_index_.count(name)) throw AlgebraError("duplicate arrow '" + name + "'");
  if (vertex_index_.count(name)) throw AlgebraError("arrow name '" + name + "' clashes with a vertex");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw AlgebraError("arrow '" + name + "' has an undeclared endpoint");
  const ArrowId id = arrows_.size();
  arrows_.push_back({name, source, target});
  arrow_index_.emplace(name, id);
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool is_composable(const Quiver& q, const Path& p) {
  if (p.start >= q.vertex_count()) return false;
  VertexId at = p.start;
  for (ArrowId a : p.arrows) {
    if (a >= q.arrow_count() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return true;
}

std::string to_string(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertex_name(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.trivial() != b.trivial()) return a.trivial();
  if (a.trivial()) return a.start < b.start;
  return std::lexicographical_compare(a.arrows.begin(), a.arrows.end(), b.arrows.begin(), b.arrows.end(),
                                      [&](ArrowId x, ArrowId y) { return q.arrow(x).name < q.arrow(y).name; });
}

// ---------------------------------------------------------------- Algebra

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : AlgebraError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Algebra::Algebra(Quiver quiver, std::vector<Relation> relations, FieldSpec field)
    : quiver_(std::move(quiver)), relations_(std::move(relations)), field_(field) {
  for (const auto& r : relations_) {
    if (!is_composable(quiver_, r.lhs)) throw AlgebraError("relation path is not composable");
    if (r.lhs.length() < 2) throw AlgebraError("relation path length must be ≥ 2");
    if (r.kind == Relation::Kind::commutativity) {
      if (!is_composable(quiver_, r.rhs)) throw AlgebraError("relation path is not composable");
      if (r.rhs.length() < 2) throw AlgebraError("relation path length must be ≥ 2");
      if (r.lhs.start != r.rhs.start || r.lhs.end(quiver_) != r.rhs.end(quiver_))
        throw AlgebraError("commutativity relation " + to_string(quiver_, r.lhs) + " - " +
                           to_string(quiver_, r.rhs) + " joins non-parallel paths");
      if (r.lhs == r.rhs) throw AlgebraError("commutativity relation joins a path to itself");
    }
  }
}

std::vector<Path> Algebra::monomials() const {
  std::vector<Path> out;
  for (const auto& r : relations_)
    if (r.kind == Relation::Kind::monomial) out.push_back(r.lhs);
  return out;
}

std::vector<std::pair<Path, Path>> Algebra::commutativities() const {
  std::vector<std::pair<Path, Path>> out;
  for (const auto& r : relations_)
    if (r.kind == Relation::Kind::commutativity) out.emplace_back(r.lhs, r.rhs);
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

bool is_ident_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '\'' || c == '.' || u >= 0x80;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Statement {
  std::size_t line;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& s, std::size_t line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({"->", offset + i + 1});
      i += 2;
    } else if (c == '-' || c == '*' || c == ':') {
      out.push_back({std::string(1, c), offset + i + 1});
      ++i;
    } else if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && is_ident_char(s[j])) ++j;
      out.push_back({s.substr(i, j - i), offset + i + 1});
      i = j;
    } else {
      throw ParseError(line, offset + i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

bool is_keyword(const std::string& s) { return s == "vertices" || s == "arrows" || s == "relations"; }

}  // namespace

Algebra parse_algebra(std::string_view text) {
  std::vector<Statement> statements;
  {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::size_t start = 0;
      while (start <= line.size()) {
        std::size_t semi = line.find(';', start);
        if (semi == std::string::npos) semi = line.size();
        auto toks = tokenize(line.substr(start, semi - start), line_no, start);
        if (!toks.empty()) statements.push_back({line_no, std::move(toks)});
        start = semi + 1;
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  enum class Section { none, vertices, arrows, relations };
  struct RawArrow {
    Token name, source, target;
    std::size_t line;
  };
  struct RawPath {
    std::vector<Token> names;
    std::size_t line;
  };
  std::vector<std::pair<Token, std::size_t>> raw_vertices;
  std::vector<RawArrow> raw_arrows;
  std::vector<std::pair<RawPath, std::optional<RawPath>>> raw_relations;

  Section section = Section::none;
  for (auto& st : statements) {
    auto toks = st.tokens;
    std::size_t i = 0;
    if (toks.size() >= 2 && is_keyword(toks[0].text) && toks[1].text == ":") {
      section = toks[0].text == "vertices" ? Section::vertices
                : toks[0].text == "arrows" ? Section::arrows
                                           : Section::relations;
      i = 2;
    }
    if (i == toks.size()) continue;
    const auto err = [&](std::size_t k, const std::string& msg) -> ParseError {
      const std::size_t col = k < toks.size() ? toks[k].column : toks.back().column + toks.back().text.size();
      return ParseError(st.line, col, msg);
    };
    const auto ident = [&](std::size_t k) {
      return k < toks.size() && is_ident_char(toks[k].text[0]);
    };
    switch (section) {
      case Section::none:
        throw err(i, "expected 'vertices:', 'arrows:' or 'relations:'");
      case Section::vertices:
        for (; i < toks.size(); ++i) {
          if (!ident(i)) throw err(i, "expected a vertex identifier");
          if (is_keyword(toks[i].text)) throw err(i, "'" + toks[i].text + "' is reserved");
          raw_vertices.emplace_back(toks[i], st.line);
        }
        break;
      case Section::arrows: {
        if (!ident(i)) throw err(i, "expected an arrow name");
        if (is_keyword(toks[i].text)) throw err(i, "'" + toks[i].text + "' is reserved");
        if (i + 1 >= toks.size() || toks[i + 1].text != ":") throw err(i + 1, "expected ':' after arrow name");
        if (!ident(i + 2)) throw err(i + 2, "expected source vertex");
        if (i + 3 >= toks.size() || toks[i + 3].text != "->") throw err(i + 3, "expected '->'");
        if (!ident(i + 4)) throw err(i + 4, "expected target vertex");
        if (i + 5 != toks.size()) throw err(i + 5, "unexpected token after arrow");
        raw_arrows.push_back({toks[i], toks[i + 2], toks[i + 4], st.line});
        break;
      }
      case Section::relations: {
        auto read_path = [&](std::size_t& k) {
          RawPath p{{}, st.line};
          if (!ident(k)) throw err(k, "expected an arrow name");
          p.names.push_back(toks[k++]);
          while (k < toks.size() && toks[k].text == "*") {
            ++k;
            if (!ident(k)) throw err(k, "expected an arrow name after '*'");
            p.names.push_back(toks[k++]);
          }
          return p;
        };
        RawPath lhs = read_path(i);
        std::optional<RawPath> rhs;
        if (i < toks.size() && toks[i].text == "-") {
          ++i;
          rhs = read_path(i);
        }
        if (i != toks.size()) throw err(i, "unexpected token in relation");
        raw_relations.emplace_back(std::move(lhs), std::move(rhs));
        break;
      }
    }
  }

  Quiver q;
  for (const auto& [tok, line] : raw_vertices) {
    if (q.find_vertex(tok.text)) throw ParseError(line, tok.column, "duplicate vertex '" + tok.text + "'");
    q.add_vertex(tok.text);
  }
  for (const auto& ra : raw_arrows) {
    if (q.find_arrow(ra.name.text) || q.find_vertex(ra.name.text))
      throw ParseError(ra.line, ra.name.column, "duplicate name '" + ra.name.text + "'");
    auto s = q.find_vertex(ra.source.text);
    if (!s) throw ParseError(ra.line, ra.source.column, "undeclared vertex '" + ra.source.text + "'");
    auto t = q.find_vertex(ra.target.text);
    if (!t) throw ParseError(ra.line, ra.target.column, "undeclared vertex '" + ra.target.text + "'");
    q.add_arrow(ra.name.text, *s, *t);
  }
  auto resolve = [&](const RawPath& rp) {
    Path p;
    for (std::size_t k = 0; k < rp.names.size(); ++k) {
      auto a = q.find_arrow(rp.names[k].text);
      if (!a) throw ParseError(rp.line, rp.names[k].column, "undeclared arrow '" + rp.names[k].text + "'");
      if (k == 0) p.start = q.arrow(*a).source;
      else if (q.arrow(*a).source != q.arrow(p.arrows.back()).target)
        throw ParseError(rp.line, rp.names[k].column, "arrow '" + rp.names[k].text + "' does not compose");
      p.arrows.push_back(*a);
    }
    if (p.length() < 2) throw ParseError(rp.line, rp.names[0].column, "relation path length must be ≥ 2");
    return p;
  };
  std::vector<Relation> rels;
  for (const auto& [lhs, rhs] : raw_relations) {
    Path p = resolve(lhs);
    if (!rhs) {
      rels.push_back(Relation::monomial(std::move(p)));
      continue;
    }
    Path r = resolve(*rhs);
    if (p.start != r.start || p.end(q) != r.end(q))
      throw ParseError(rhs->line, rhs->names[0].column, "commutativity paths are not parallel");
    if (p == r) throw ParseError(rhs->line, rhs->names[0].column, "commutativity relation joins a path to itself");
    rels.push_back(Relation::commutativity(std::move(p), std::move(r)));
  }
  return Algebra(std::move(q), std::move(rels));
}

std::string write_algebra(const Algebra& alg) {
  const auto& q = alg.quiver();
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : q.vertex_names()) os << ' ' << v;
  os << '\n';
  os << "arrows:";
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    const auto& a = q.arrow(i);
    os << (i ? " ; " : " ") << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target);
  }
  os << '\n';
  os << "relations:";
  for (std::size_t i = 0; i < alg.relations().size(); ++i) {
    const auto& r = alg.relations()[i];
    os << (i ? " ; " : " ") << to_string(q, r.lhs);
    if (r.kind == Relation::Kind::commutativity) os << " - " << to_string(q, r.rhs);
  }
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------- path classes

namespace {

bool contains_subsequence(const std::vector<ArrowId>& hay, const std::vector<ArrowId>& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::size_t max_relation_length(const Algebra& alg) {
  std::size_t m = 0;
  for (const auto& r : alg.relations()) m = std::max({m, r.lhs.length(), r.rhs.length()});
  return m;
}

}  // namespace

std::optional<Path> class_representative(const Algebra& alg, const Path& p, std::size_t max_length) {
  if (p.trivial()) return p;
  const auto monos = alg.monomials();
  const auto comms = alg.commutativities();
  std::set<std::vector<ArrowId>> seen{p.arrows};
  std::deque<std::vector<ArrowId>> todo{p.arrows};
  Path best = p;
  while (!todo.empty()) {
    auto cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& m : monos)
      if (contains_subsequence(cur, m.arrows)) return std::nullopt;
    Path as_path{p.start, cur};
    if (path_less(alg.quiver(), as_path, best)) best = as_path;
    for (const auto& [l, r] : comms) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir ? r.arrows : l.arrows;
        const auto& to = dir ? l.arrows : r.arrows;
        if (cur.size() - from.size() + to.size() > max_length) continue;
        for (auto it = std::search(cur.begin(), cur.end(), from.begin(), from.end()); it != cur.end();
             it = std::search(std::next(it), cur.end(), from.begin(), from.end())) {
          std::vector<ArrowId> next(cur.begin(), it);
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), it + static_cast<std::ptrdiff_t>(from.size()), cur.end());
          if (seen.insert(next).second) todo.push_back(std::move(next));
        }
      }
    }
  }
  return best;
}

namespace {

// Nonzero path sequences by length, until a length with none is reached.
struct PathLevels {
  std::vector<std::vector<Path>> levels;  // levels[k]: nonzero paths of length k
  std::vector<std::vector<Path>> reps;    // class representative of levels[k][i]
};

PathLevels enumerate_nonzero(const Algebra& alg, std::size_t cap) {
  const auto& q = alg.quiver();
  const std::size_t bound = cap + max_relation_length(alg);
  PathLevels out;
  std::vector<Path> level, reps;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    level.push_back(Path{v, {}});
    reps.push_back(Path{v, {}});
  }
  out.levels.push_back(level);
  out.reps.push_back(reps);
  for (std::size_t k = 1;; ++k) {
    std::vector<Path> next, next_reps;
    for (const auto& p : out.levels.back()) {
      for (ArrowId a : q.out_arrows(p.end(q))) {
        Path ext = p;
        ext.arrows.push_back(a);
        if (auto rep = class_representative(alg, ext, bound)) {
          next.push_back(std::move(ext));
          next_reps.push_back(std::move(*rep));
        }
      }
    }
    if (next.empty()) break;
    if (k >= cap)
      throw AlgebraError("not admissible / infinite-dimensional within cap " + std::to_string(cap) +
                         ": nonzero paths of length " + std::to_string(k) + " remain (e.g. " +
                         to_string(q, next.front()) + ")");
    out.levels.push_back(std::move(next));
    out.reps.push_back(std::move(next_reps));
  }
  return out;
}

struct RepLess {
  const Quiver* q;
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return path_less(*q, a, b);
  }
};

}  // namespace

AdmissibilityReport validate_admissible(const Algebra& alg, std::size_t cap) {
  const auto levels = enumerate_nonzero(alg, cap);
  AdmissibilityReport r;
  r.nilpotency = levels.levels.size();
  for (std::size_t k = 0; k < levels.levels.size(); ++k) {
    std::set<Path, RepLess> classes(RepLess{&alg.quiver()});
    for (const auto& rep : levels.reps[k]) classes.insert(rep);
    // classes spanning several lengths are counted at their representative's length
    std::size_t count = 0;
    for (const auto& c : classes)
      if (c.length() == k) ++count;
    r.nonzero_by_length.push_back(count);
  }
  return r;
}

PathBasis::PathBasis(const Algebra& alg, std::size_t cap) : alg_(&alg) {
  const auto levels = enumerate_nonzero(alg, cap);
  nilpotency_ = levels.levels.size();
  search_cap_ = cap + max_relation_length(alg);
  std::set<Path, RepLess> classes(RepLess{&alg.quiver()});
  for (const auto& lv : levels.reps)
    for (const auto& r : lv) classes.insert(r);
  reps_.assign(classes.begin(), classes.end());
  std::map<std::pair<VertexId, std::vector<ArrowId>>, std::size_t> index;
  for (std::size_t i = 0; i < reps_.size(); ++i) index[{reps_[i].start, reps_[i].arrows}] = i;
  for (std::size_t k = 0; k < levels.levels.size(); ++k)
    for (std::size_t i = 0; i < levels.levels[k].size(); ++i) {
      const auto& p = levels.levels[k][i];
      const auto& r = levels.reps[k][i];
      lookup_[{p.start, p.arrows}] = index.at({r.start, r.arrows});
    }
}

std::optional<std::size_t> PathBasis::class_of(const Path& p) const {
  if (p.length() >= nilpotency_) return std::nullopt;
  auto it = lookup_.find({p.start, p.arrows});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PathBasis::multiply(std::size_t i, std::size_t j) const {
  const auto& a = reps_.at(i);
  const auto& b = reps_.at(j);
  if (a.end(alg_->quiver()) != b.start) throw std::invalid_argument("PathBasis::multiply: paths do not compose");
  Path p = a;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return class_of(p);
}

VertexId PathBasis::target(std::size_t i) const { return reps_.at(i).end(alg_->quiver()); }

std::vector<std::size_t> PathBasis::between(VertexId from, VertexId to) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (source(i) == from && target(i) == to) out.push_back(i);
  return out;
}

std::vector<std::size_t> PathBasis::starting_at(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (source(i) == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> PathBasis::ending_at(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (target(i) == v) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- Q_{m,n,s}

Algebra generate_qmns(std::size_t m, std::size_t n, std::size_t s) {
  if (m < 2 || n < 2 || s < 1) throw AlgebraError("generate_qmns requires m >= 2, n >= 2, s >= 1");
  Quiver q;
  std::vector<VertexId> block(s);
  for (std::size_t i = 0; i < s; ++i) block[i] = q.add_vertex("v" + std::to_string(i));
  std::vector<std::vector<ArrowId>> alpha(s), beta(s);
  for (std::size_t i = 0; i < s; ++i) {
    const VertexId end = block[(i + 1) % s];
    auto arm = [&](char vtx, char arr, std::size_t len, std::vector<ArrowId>& out) {
      VertexId prev = block[i];
      for (std::size_t k = 1; k <= len; ++k) {
        const VertexId next = k == len ? end : q.add_vertex(std::string(1, vtx) + std::to_string(i) + "_" + std::to_string(k));
        out.push_back(q.add_arrow(std::string(1, arr) + std::to_string(i) + "_" + std::to_string(k), prev, next));
        prev = next;
      }
    };
    arm('x', 'a', m, alpha[i]);
    arm('y', 'b', n, beta[i]);
  }
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < s; ++i) rels.push_back(Relation::commutativity({block[i], alpha[i]}, {block[i], beta[i]}));
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t j = (i + 1) % s;
    rels.push_back(Relation::monomial({q.arrow(beta[i].back()).source, {beta[i].back(), alpha[j].front()}}));
    rels.push_back(Relation::monomial({q.arrow(alpha[i].back()).source, {alpha[i].back(), beta[j].front()}}));
  }
  auto cyclic_monomials = [&](const std::vector<std::vector<ArrowId>>& arms, std::size_t len) {
    std::vector<ArrowId> cycle;
    for (const auto& a : arms) cycle.insert(cycle.end(), a.begin(), a.end());
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Path p{q.arrow(cycle[j]).source, {}};
      for (std::size_t k = 0; k <= len; ++k) p.arrows.push_back(cycle[(j + k) % cycle.size()]);
      rels.push_back(Relation::monomial(std::move(p)));
    }
  };
  cyclic_monomials(alpha, m);
  cyclic_monomials(beta, n);
  return Algebra(std::move(q), std::move(rels));
}

namespace {

struct IsoSearch {
  const Algebra& a;
  const Algebra& b;
  const PathBasis& ba;
  const PathBasis& bb;
  std::vector<VertexId> order;
  std::vector<std::optional<VertexId>> vmap;
  std::vector<bool> used;
  std::optional<BoundQuiverIso> found;

  std::size_t count(const Quiver& q, VertexId x, VertexId y) const {
    std::size_t c = 0;
    for (ArrowId ar : q.out_arrows(x))
      if (q.arrow(ar).target == y) ++c;
    return c;
  }

  bool ideals_agree(const std::vector<ArrowId>& amap) const {
    const auto& qa = a.quiver();
    std::map<std::size_t, std::size_t> classes;
    std::set<std::size_t> hit;
    std::function<bool(const Path&)> walk = [&](const Path& p) -> bool {
      Path img{*vmap[p.start], {}};
      for (ArrowId x : p.arrows) img.arrows.push_back(amap[x]);
      const auto ca = ba.class_of(p);
      const auto cb = bb.class_of(img);
      if (ca.has_value() != cb.has_value()) return false;
      if (!ca) return true;
      auto [it, fresh] = classes.emplace(*ca, *cb);
      if (!fresh && it->second != *cb) return false;
      if (fresh && !hit.insert(*cb).second) return false;
      for (ArrowId x : qa.out_arrows(p.end(qa))) {
        Path ext = p;
        ext.arrows.push_back(x);
        if (!walk(ext)) return false;
      }
      return true;
    };
    for (VertexId v = 0; v < qa.vertex_count(); ++v)
      if (!walk(Path{v, {}})) return false;
    return true;
  }

  bool arrows_step(std::size_t k, const std::vector<std::pair<std::vector<ArrowId>, std::vector<ArrowId>>>& groups,
                   std::vector<ArrowId>& amap) {
    if (k == groups.size()) {
      if (ideals_agree(amap)) {
        BoundQuiverIso iso;
        for (auto v : vmap) iso.vertex_map.push_back(*v);
        iso.arrow_map = amap;
        found = iso;
        return true;
      }
      return false;
    }
    auto targets = groups[k].second;
    std::sort(targets.begin(), targets.end());
    do {
      for (std::size_t i = 0; i < targets.size(); ++i) amap[groups[k].first[i]] = targets[i];
      if (arrows_step(k + 1, groups, amap)) return true;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return false;
  }

  bool vertex_step(std::size_t k) {
    const auto& qa = a.quiver();
    const auto& qb = b.quiver();
    if (k == order.size()) {
      std::vector<std::pair<std::vector<ArrowId>, std::vector<ArrowId>>> groups;
      std::map<std::pair<VertexId, VertexId>, std::size_t> where;
      for (ArrowId x = 0; x < qa.arrow_count(); ++x) {
        const auto key = std::make_pair(qa.arrow(x).source, qa.arrow(x).target);
        auto [it, fresh] = where.emplace(key, groups.size());
        if (fresh) {
          groups.emplace_back();
          for (ArrowId y : qb.out_arrows(*vmap[key.first]))
            if (qb.arrow(y).target == *vmap[key.second]) groups.back().second.push_back(y);
        }
        groups[it->second].first.push_back(x);
      }
      std::vector<ArrowId> amap(qa.arrow_count());
      return arrows_step(0, groups, amap);
    }
    const VertexId x = order[k];
    for (VertexId y = 0; y < qb.vertex_count(); ++y) {
      if (used[y]) continue;
      if (qa.out_arrows(x).size() != qb.out_arrows(y).size() || qa.in_arrows(x).size() != qb.in_arrows(y).size() ||
          count(qa, x, x) != count(qb, y, y))
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const VertexId u = order[j];
        ok = count(qa, x, u) == count(qb, y, *vmap[u]) && count(qa, u, x) == count(qb, *vmap[u], y);
      }
      if (!ok) continue;
      vmap[x] = y;
      used[y] = true;
      if (vertex_step(k + 1)) return true;
      vmap[x].reset();
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<BoundQuiverIso> bound_quiver_isomorphism(const Algebra& a, const Algebra& b) {
  const auto& qa = a.quiver();
  const auto& qb = b.quiver();
  if (qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count()) return std::nullopt;
  const PathBasis ba(a), bb(b);
  if (ba.size() != bb.size() || ba.nilpotency() != bb.nilpotency()) return std::nullopt;
  IsoSearch search{a, b, ba, bb, {}, std::vector<std::optional<VertexId>>(qa.vertex_count()),
                   std::vector<bool>(qb.vertex_count(), false), std::nullopt};
  // breadth-first order over the underlying graph keeps partial maps connected
  std::vector<bool> seen(qa.vertex_count(), false);
  for (VertexId root = 0; root < qa.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::deque<VertexId> bfs{root};
    seen[root] = true;
    while (!bfs.empty()) {
      const VertexId v = bfs.front();
      bfs.pop_front();
      search.order.push_back(v);
      auto visit = [&](VertexId w) {
        if (!seen[w]) {
          seen[w] = true;
          bfs.push_back(w);
        }
      };
      for (ArrowId x : qa.out_arrows(v)) visit(qa.arrow(x).target);
      for (ArrowId x : qa.in_arrows(v)) visit(qa.arrow(x).source);
    }
  }
  search.vertex_step(0);
  return search.found;
}

std::optional<QmnsParams> recognize_qmns(const Algebra& alg) {
  const std::size_t v = alg.quiver().vertex_count();
  const std::size_t a = alg.quiver().arrow_count();
  if (a <= v) return std::nullopt;
  const std::size_t s = a - v;
  if (a % s != 0) return std::nullopt;
  const std::size_t total = a / s;  // m + n
  for (std::size_t n = 2; 2 * n <= total; ++n) {
    const std::size_t m = total - n;
    const Algebra candidate = generate_qmns(m, n, s);
    if (bound_quiver_isomorphism(alg, candidate)) return QmnsParams{m, n, s};
  }
  return std::nullopt;
}

}  // namespace nakayama
