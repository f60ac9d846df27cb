#include "nakayama/corpus.hpp"

#include "nakayama/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nakayama {

namespace {

// Explicit draws so that a seed means the same algebra on every standard
// library (the std distributions are implementation-defined).
struct Draw {
  std::mt19937_64 rng;
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(rng() % (hi - lo + 1)); }
  bool chance(double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[between(0, i - 1)]);
  }
};

struct Shape {
  std::size_t nv = 0;
  std::vector<std::pair<VertexId, VertexId>> arrows;
  std::vector<int> out, in;
  std::map<ArrowId, ArrowId> next, prev;  // nonzero compositions a*b
  std::vector<ArrowId> p, q;              // sides of the diamond, if any

  bool can_add(VertexId s, VertexId t) const { return out[s] < 2 && in[t] < 2; }
  ArrowId add(VertexId s, VertexId t) {
    arrows.emplace_back(s, t);
    ++out[s];
    ++in[t];
    return arrows.size() - 1;
  }
  void link(ArrowId a, ArrowId b) {
    next[a] = b;
    prev[b] = a;
  }
};

bool contains_subpath(const std::vector<ArrowId>& hay, const std::vector<ArrowId>& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::string arrow_name(std::size_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

}  // namespace

Algebra random_special_biserial(std::uint64_t seed, std::uint64_t attempt, std::size_t max_vertices) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  Draw d{std::mt19937_64(seq)};
  max_vertices = std::max<std::size_t>(max_vertices, 2);

  Shape sh;
  sh.nv = d.between(2, max_vertices);
  sh.out.assign(sh.nv, 0);
  sh.in.assign(sh.nv, 0);
  std::size_t used = 1;

  if (d.chance(0.35)) {
    // (m, n, closed): a closed diamond starts and ends at the same vertex
    std::vector<std::tuple<std::size_t, std::size_t, bool>> options;
    for (std::size_t m = 2; m <= 3; ++m)
      for (std::size_t n = m; n <= 3; ++n)
        for (bool closed : {false, true})
          if (m + n - (closed ? 1 : 0) <= sh.nv) options.emplace_back(m, n, closed);
    if (!options.empty()) {
      const auto [m, n, closed] = options[d.between(0, options.size() - 1)];
      const VertexId s = 0, t = closed ? 0 : 1;
      used = closed ? 1 : 2;
      for (auto [len, side] : {std::pair{m, &sh.p}, std::pair{n, &sh.q}}) {
        VertexId at = s;
        for (std::size_t k = 0; k < len; ++k) {
          const VertexId to = k + 1 == len ? t : used++;
          side->push_back(sh.add(at, to));
          if (k > 0) sh.link((*side)[k - 1], side->back());
          at = to;
        }
      }
    }
  }
  // attach the remaining vertices to a tree, then sprinkle extra arrows
  for (VertexId v = used; v < sh.nv; ++v) {
    bool done = false;
    for (int tries = 0; tries < 32 && !done; ++tries) {
      const VertexId u = d.between(0, v - 1);
      const bool outward = d.chance(0.5);
      const VertexId s = outward ? u : v, t = outward ? v : u;
      if (sh.can_add(s, t)) {
        sh.add(s, t);
        done = true;
      }
    }
    for (VertexId u = 0; u < v && !done; ++u)
      for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}})
        if (!done && sh.can_add(s, t)) {
          sh.add(s, t);
          done = true;
        }
    if (!done) throw AlgebraError("generator could not connect vertex");
  }
  const std::size_t extra = d.between(0, sh.nv);
  for (std::size_t k = 0; k < extra; ++k) {
    const VertexId s = d.between(0, sh.nv - 1), t = d.between(0, sh.nv - 1);
    if (sh.can_add(s, t)) sh.add(s, t);
  }

  // nonzero compositions: a random partial matching at each vertex
  for (VertexId v = 0; v < sh.nv; ++v) {
    std::vector<ArrowId> ins, outs;
    for (ArrowId a = 0; a < sh.arrows.size(); ++a) {
      if (sh.arrows[a].second == v && !sh.next.count(a)) ins.push_back(a);
      if (sh.arrows[a].first == v && !sh.prev.count(a)) outs.push_back(a);
    }
    d.shuffle(ins);
    d.shuffle(outs);
    for (ArrowId a : ins) {
      if (outs.empty() || !d.chance(0.7)) continue;
      sh.link(a, outs.back());
      outs.pop_back();
    }
  }

  // candidate zero relations, shortest first
  std::size_t cutoff = d.between(2, 4);
  if (!sh.p.empty()) cutoff = std::max(cutoff, std::max(sh.p.size(), sh.q.size()) + 1);
  auto thread = [&](ArrowId a, std::size_t len) -> std::optional<std::vector<ArrowId>> {
    std::vector<ArrowId> path{a};
    while (path.size() < len) {
      const auto it = sh.next.find(path.back());
      if (it == sh.next.end()) return std::nullopt;
      path.push_back(it->second);
    }
    return path;
  };
  auto is_protected = [&](const std::vector<ArrowId>& path) {
    return (!sh.p.empty() && contains_subpath(sh.p, path)) || (!sh.q.empty() && contains_subpath(sh.q, path));
  };
  std::vector<std::vector<ArrowId>> candidates;
  for (ArrowId a = 0; a < sh.arrows.size(); ++a)
    for (ArrowId b = 0; b < sh.arrows.size(); ++b)
      if (sh.arrows[a].second == sh.arrows[b].first && !(sh.next.count(a) && sh.next.at(a) == b))
        candidates.push_back({a, b});
  for (const auto* side : {&sh.p, &sh.q}) {
    if (side->empty()) continue;
    if (const auto it = sh.next.find(side->back()); it != sh.next.end()) {
      auto ext = *side;
      ext.push_back(it->second);
      candidates.push_back(ext);
    }
    if (const auto it = sh.prev.find(side->front()); it != sh.prev.end()) {
      std::vector<ArrowId> ext{it->second};
      ext.insert(ext.end(), side->begin(), side->end());
      candidates.push_back(ext);
    }
  }
  for (std::size_t len = 2; len <= cutoff; ++len)
    for (ArrowId a = 0; a < sh.arrows.size(); ++a)
      if (const auto path = thread(a, len); path && !is_protected(*path) && (len == cutoff || d.chance(0.15)))
        candidates.push_back(*path);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<std::vector<ArrowId>> zero;
  for (const auto& c : candidates)
    if (std::none_of(zero.begin(), zero.end(), [&](const auto& z) { return contains_subpath(c, z); }))
      zero.push_back(c);

  Quiver quiver;
  for (VertexId v = 0; v < sh.nv; ++v) quiver.add_vertex(std::to_string(v + 1));
  for (ArrowId a = 0; a < sh.arrows.size(); ++a) quiver.add_arrow(arrow_name(a), sh.arrows[a].first, sh.arrows[a].second);
  auto as_path = [&](const std::vector<ArrowId>& arrows) { return Path{sh.arrows[arrows.front()].first, arrows}; };
  std::vector<Relation> rels;
  for (const auto& z : zero) rels.push_back(Relation::monomial(as_path(z)));
  if (!sh.p.empty()) rels.push_back(Relation::commutativity(as_path(sh.p), as_path(sh.q)));
  return Algebra(std::move(quiver), std::move(rels));
}

CorpusSample classify_sample(const AlgebraPtr& alg) {
  const auto cat = build_catalog<Rational>(alg);
  const auto sem = classify_semantic(cat);
  CorpusSample s;
  s.algebra = write_algebra(*alg);
  s.n = sem.n;
  s.realizing = sem.realizing_key;
  s.syntactic_detail = classify_syntactic_3nakayama(*alg, cat.finite.strings.strings);
  s.syntactic = s.syntactic_detail.holds;
  s.self_injective = is_self_injective<Rational>(alg).self_injective;
  s.qmns = recognize_qmns(*alg);
  s.catalog_size = cat.members.size();
  return s;
}

std::size_t CorpusReport::self_injective_law_holds() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const CorpusSample& s) { return s.self_injective_law(); }));
}

CorpusReport run_corpus(const CorpusConfig& config) {
  enum class Outcome { accepted, infinite, inconclusive, other, failure };
  struct Result {
    Outcome outcome = Outcome::other;
    CorpusSample sample;
    std::string message;
  };
  CorpusReport rep;
  rep.config = config;
  const std::size_t batch = std::max<std::size_t>(16, 4 * static_cast<std::size_t>(std::max(1u, config.jobs)));
  std::uint64_t base = 0;
  while (rep.samples.size() < config.samples && base < config.max_attempts) {
    const std::size_t count = std::min<std::size_t>(batch, config.max_attempts - base);
    std::vector<Result> results(count);
    parallel_for(count, config.jobs, [&](std::size_t i) {
      auto& r = results[i];
      const std::uint64_t attempt = base + i;
      try {
        const auto alg = std::make_shared<const Algebra>(random_special_biserial(config.seed, attempt, config.max_vertices));
        try {
          r.sample = classify_sample(alg);
          r.sample.attempt = attempt;
          r.outcome = Outcome::accepted;
        } catch (const ClassificationError& e) {
          r.outcome = e.kind() == ClassificationError::Kind::infinite_type  ? Outcome::infinite
                      : e.kind() == ClassificationError::Kind::inconclusive ? Outcome::inconclusive
                                                                            : Outcome::other;
          r.message = e.what();
        } catch (const std::exception& e) {
          r.outcome = Outcome::failure;
          r.message = "attempt " + std::to_string(attempt) + ": " + e.what() + "\n" + write_algebra(*alg);
        }
      } catch (const AlgebraError& e) {
        r.outcome = Outcome::other;
        r.message = e.what();
      }
    });
    for (std::size_t i = 0; i < count && rep.samples.size() < config.samples; ++i) {
      ++rep.attempts;
      auto& r = results[i];
      switch (r.outcome) {
        case Outcome::accepted:
          ++rep.agreement[r.sample.syntactic][r.sample.semantic3()];
          rep.samples.push_back(std::move(r.sample));
          break;
        case Outcome::infinite: ++rep.discarded_infinite; break;
        case Outcome::inconclusive: ++rep.discarded_inconclusive; break;
        case Outcome::other: ++rep.discarded_other; break;
        case Outcome::failure: rep.failures.push_back(r.message); break;
      }
    }
    base += count;
  }
  return rep;
}

}  // namespace nakayama
