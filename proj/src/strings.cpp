#include "nakayama/strings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nakayama {

VertexId letter_source(const Quiver& q, const Letter& l) {
  return l.dir > 0 ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

VertexId letter_target(const Quiver& q, const Letter& l) {
  return l.dir > 0 ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

Walk inverse(const Quiver& q, const Walk& w) {
  if (w.trivial()) return {w.vertex, -w.sign, {}};
  Walk out{w.end(q), 1, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

bool is_reduced(const Walk& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] == w.letters[i - 1].inverse()) return false;
  return true;
}

bool is_composable(const Quiver& q, const Walk& w) {
  VertexId at = w.vertex;
  for (const auto& l : w.letters) {
    if (l.arrow >= q.arrow_count() || letter_source(q, l) != at) return false;
    at = letter_target(q, l);
  }
  return true;
}

namespace {

int compare_letters(const Quiver& q, const Letter& a, const Letter& b) {
  if (a.arrow != b.arrow) {
    const int c = q.arrow(a.arrow).name.compare(q.arrow(b.arrow).name);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.dir != b.dir) return a.dir > 0 ? -1 : 1;
  return 0;
}

bool lex_less(const Quiver& q, const std::vector<Letter>& a, const std::vector<Letter>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare_letters(q, a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace

bool walk_less(const Quiver& q, const Walk& a, const Walk& b) {
  if (a.trivial() != b.trivial()) return a.trivial();
  if (a.trivial()) return a.vertex != b.vertex ? a.vertex < b.vertex : a.sign > b.sign;
  if (a.length() != b.length()) return a.length() < b.length();
  return lex_less(q, a.letters, b.letters);
}

Walk canonical_string(const Quiver& q, const Walk& w) {
  if (w.trivial()) return {w.vertex, 1, {}};
  Walk inv = inverse(q, w);
  return lex_less(q, inv.letters, w.letters) ? inv : w;
}

Walk canonical_band(const Quiver& q, const Walk& w) {
  Walk best = w;
  for (const Walk& base : {w, inverse(q, w)}) {
    const std::size_t n = base.length();
    for (std::size_t r = 0; r < n; ++r) {
      Walk rot;
      rot.letters.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rot.letters.push_back(base.letters[(r + i) % n]);
      rot.vertex = letter_source(q, rot.letters.front());
      if (lex_less(q, rot.letters, best.letters)) best = rot;
    }
  }
  return best;
}

std::string to_string(const Quiver& q, const Walk& w) {
  if (w.trivial()) return "1_" + q.vertex_name(w.vertex);
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += q.arrow(w.letters[i].arrow).name;
    if (w.letters[i].dir < 0) out += "^-1";
  }
  return out;
}

Walk parse_walk(const Quiver& q, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<std::string> toks;
  while (is >> tok) toks.push_back(tok);
  if (toks.empty()) throw AlgebraError("empty walk");
  if (toks.size() == 1 && toks[0].rfind("1_", 0) == 0 && !q.find_arrow(toks[0])) {
    auto v = q.find_vertex(toks[0].substr(2));
    if (!v) throw AlgebraError("unknown vertex in '" + toks[0] + "'");
    return {*v, 1, {}};
  }
  Walk w;
  for (const auto& t : toks) {
    Letter l;
    std::string name = t;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      name.resize(name.size() - 3);
      l.dir = -1;
    }
    auto a = q.find_arrow(name);
    if (!a) throw AlgebraError("unknown arrow '" + name + "'");
    l.arrow = *a;
    w.letters.push_back(l);
  }
  w.vertex = letter_source(q, w.letters.front());
  if (!is_composable(q, w)) throw AlgebraError("walk '" + text + "' is not composable");
  return w;
}

// ---------------------------------------------------------------- string algebra

StringAlgebra reduce_to_string_algebra(const Algebra& alg) {
  StringAlgebra out;
  std::vector<Relation> rels;
  for (const auto& r : alg.relations()) {
    if (r.kind == Relation::Kind::monomial) {
      rels.push_back(r);
    } else {
      rels.push_back(Relation::monomial(r.lhs));
      rels.push_back(Relation::monomial(r.rhs));
      out.commutativity_pairs.emplace_back(r.lhs, r.rhs);
    }
  }
  out.algebra = Algebra(alg.quiver(), std::move(rels), alg.field());
  return out;
}

namespace {

// Forbidden direct paths as arrow sequences.
std::vector<std::vector<ArrowId>> forbidden_paths(const Algebra& alg) {
  std::vector<std::vector<ArrowId>> out;
  for (const auto& r : alg.relations()) {
    out.push_back(r.lhs.arrows);
    if (r.kind == Relation::Kind::commutativity) out.push_back(r.rhs.arrows);
  }
  return out;
}

bool contains(const std::vector<ArrowId>& hay, const std::vector<ArrowId>& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

// Whether appending `next` to a valid string w keeps it a string.
bool extends(const std::vector<std::vector<ArrowId>>& forbidden, const Walk& w, const Letter& next) {
  if (!w.letters.empty() && w.letters.back() == next.inverse()) return false;
  // trailing run in the direction of `next`, as a path of the quiver
  std::vector<ArrowId> run{next.arrow};
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && it->dir == next.dir; ++it) run.push_back(it->arrow);
  if (next.dir > 0) std::reverse(run.begin(), run.end());
  for (const auto& f : forbidden)
    if (run.size() >= f.size() && contains(run, f)) return false;
  return true;
}

std::vector<Letter> all_letters(const Quiver& q) {
  std::vector<Letter> out;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    out.push_back({a, 1});
    out.push_back({a, -1});
  }
  return out;
}

std::size_t longest_forbidden(const std::vector<std::vector<ArrowId>>& forbidden) {
  std::size_t m = 0;
  for (const auto& f : forbidden) m = std::max(m, f.size());
  return m;
}

bool is_band(const Quiver& q, const std::vector<std::vector<ArrowId>>& forbidden, const Walk& w) {
  const std::size_t n = w.length();
  if (n == 0 || w.end(q) != w.vertex) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool power = true;
    for (std::size_t i = d; i < n && power; ++i) power = w.letters[i] == w.letters[i % d];
    if (power) return false;
  }
  // w^k contains every run that any power of w can contain
  const std::size_t k = 2 + longest_forbidden(forbidden) / n;
  Walk acc = w;
  for (std::size_t rep = 1; rep < k; ++rep)
    for (const auto& l : w.letters) {
      if (!extends(forbidden, acc, l)) return false;
      acc.letters.push_back(l);
    }
  return true;
}

}  // namespace

bool is_string(const Algebra& alg, const Walk& w) {
  const auto& q = alg.quiver();
  if (w.vertex >= q.vertex_count() || !is_composable(q, w)) return false;
  const auto forbidden = forbidden_paths(alg);
  Walk acc{w.vertex, 1, {}};
  for (const auto& l : w.letters) {
    if (!extends(forbidden, acc, l)) return false;
    acc.letters.push_back(l);
  }
  return true;
}

SpecialBiserialVerdict is_special_biserial(const Algebra& alg) {
  const auto& q = alg.quiver();
  std::size_t bound = 2;
  for (const auto& r : alg.relations()) bound = std::max({bound, r.lhs.length() + 2, r.rhs.length() + 2});
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() > 2)
      return {false, "vertex " + q.vertex_name(v) + " has " + std::to_string(q.out_arrows(v).size()) +
                         " outgoing arrows"};
    if (q.in_arrows(v).size() > 2)
      return {false, "vertex " + q.vertex_name(v) + " has " + std::to_string(q.in_arrows(v).size()) +
                         " incoming arrows"};
  }
  auto nonzero = [&](ArrowId x, ArrowId y) {
    return class_representative(alg, Path{q.arrow(x).source, {x, y}}, bound).has_value();
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    std::vector<ArrowId> after, before;
    for (ArrowId b : q.out_arrows(q.arrow(a).target))
      if (nonzero(a, b)) after.push_back(b);
    for (ArrowId c : q.in_arrows(q.arrow(a).source))
      if (nonzero(c, a)) before.push_back(c);
    if (after.size() > 1)
      return {false, "arrows " + q.arrow(after[0]).name + " and " + q.arrow(after[1]).name + " both follow " +
                         q.arrow(a).name + " nontrivially"};
    if (before.size() > 1)
      return {false, "arrows " + q.arrow(before[0]).name + " and " + q.arrow(before[1]).name + " both precede " +
                         q.arrow(a).name + " nontrivially"};
  }
  return {};
}

StringEnumeration enumerate_strings(const Algebra& alg, std::size_t cap) {
  const auto& q = alg.quiver();
  const auto forbidden = forbidden_paths(alg);
  const auto letters = all_letters(q);
  StringEnumeration out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) out.strings.push_back({v, 1, {}});

  std::vector<Walk> level;
  for (const auto& l : letters) level.push_back({letter_source(q, l), 1, {l}});
  std::size_t processed = 0;
  for (std::size_t len = 1; !level.empty(); ++len) {
    if (len > cap || processed > default_string_budget) {
      out.complete = false;
      break;
    }
    out.longest = len;
    std::vector<Walk> next;
    for (const auto& w : level) {
      ++processed;
      const Walk c = canonical_string(q, w);
      if (c == w) out.strings.push_back(w);
      for (const auto& l : letters) {
        if (letter_source(q, l) != w.end(q) || !extends(forbidden, w, l)) continue;
        Walk e = w;
        e.letters.push_back(l);
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
  }
  std::sort(out.strings.begin(), out.strings.end(), [&](const Walk& a, const Walk& b) { return walk_less(q, a, b); });
  return out;
}

std::size_t default_band_cap(const Algebra& alg) {
  std::size_t n = 2;
  try {
    n = validate_admissible(alg).nilpotency;
  } catch (const AlgebraError&) {
    n = default_admissibility_cap;
  }
  return std::max<std::size_t>(4 * alg.quiver().arrow_count() * n, 4);
}

BandSearch enumerate_bands(const Algebra& alg, std::size_t cap, bool stop_at_first, std::size_t budget) {
  const auto& q = alg.quiver();
  const auto forbidden = forbidden_paths(alg);
  const auto letters = all_letters(q);
  BandSearch out;
  std::set<std::vector<std::pair<ArrowId, int>>> found;
  std::vector<Walk> level;
  for (const auto& l : letters) level.push_back({letter_source(q, l), 1, {l}});
  std::size_t processed = 0;
  for (std::size_t len = 1; !level.empty(); ++len) {
    if (len > cap || processed > budget) {
      out.conclusive = false;
      break;
    }
    std::vector<Walk> next;
    for (const auto& w : level) {
      ++processed;
      if (is_band(q, forbidden, w)) {
        const Walk c = canonical_band(q, w);
        std::vector<std::pair<ArrowId, int>> key;
        for (const auto& l : c.letters) key.emplace_back(l.arrow, l.dir);
        if (found.insert(key).second) out.bands.push_back(c);
        if (stop_at_first) return out;
      }
      for (const auto& l : letters) {
        if (letter_source(q, l) != w.end(q) || !extends(forbidden, w, l)) continue;
        Walk e = w;
        e.letters.push_back(l);
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
  }
  std::sort(out.bands.begin(), out.bands.end(), [&](const Walk& a, const Walk& b) { return walk_less(q, a, b); });
  return out;
}

FiniteTypeReport finite_type(const Algebra& alg, std::size_t string_cap, std::size_t band_cap) {
  FiniteTypeReport r;
  const auto bands = enumerate_bands(alg, band_cap, true);
  if (!bands.bands.empty()) {
    r.kind = FiniteTypeReport::Kind::infinite;
    r.band = bands.bands.front();
    r.message = "band " + to_string(alg.quiver(), *r.band) + " found: infinite representation type";
    return r;
  }
  r.strings = enumerate_strings(alg, string_cap);
  if (r.strings.complete) {
    r.kind = FiniteTypeReport::Kind::finite;
    r.message = "finite type: " + std::to_string(r.strings.strings.size()) + " strings, none longer than " +
                std::to_string(r.strings.longest);
  } else {
    r.kind = FiniteTypeReport::Kind::inconclusive;
    r.message = "band search inconclusive: strings extend beyond cap " + std::to_string(string_cap);
  }
  return r;
}

}  // namespace nakayama
