#pragma once

// Seeded random special biserial algebras and the agreement report between
// the semantic index, the syntactic 3-Nakayama criterion and the
// self-injective/Q_{2,2,s} characterization.

#include "nakayama/classifier.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace nakayama {

struct CorpusConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 200;
  std::size_t max_vertices = 5;
  unsigned jobs = 1;
  std::size_t max_attempts = 100000;
};

// Attempt `attempt` of the generator seeded by `seed`: a connected quiver on
// 2..max_vertices vertices with fans of size <= 2, a random matching of
// incoming to outgoing arrows at each vertex (unmatched pairs become zero
// relations), length cutoffs along the threads and, sometimes, a commutative
// diamond whose two sides are maximal paths.
Algebra random_special_biserial(std::uint64_t seed, std::uint64_t attempt, std::size_t max_vertices);

struct CorpusSample {
  std::uint64_t attempt = 0;
  std::string algebra;  // write_algebra text
  Index n = 0;
  std::string realizing;
  bool syntactic = false;
  SyntacticVerdict syntactic_detail;
  bool self_injective = false;
  std::optional<QmnsParams> qmns;
  std::size_t catalog_size = 0;

  bool semantic3() const { return n == 3; }
  bool agrees() const { return syntactic == semantic3(); }
  bool q22s() const { return qmns && qmns->m == 2 && qmns->n == 2; }
  bool self_injective_law() const { return (self_injective && n == 3) == q22s(); }
};

struct CorpusReport {
  CorpusConfig config;
  std::vector<CorpusSample> samples;
  std::size_t attempts = 0;
  std::size_t discarded_infinite = 0, discarded_inconclusive = 0, discarded_other = 0;
  // samples that broke an internal invariant (e.g. an incomplete catalogue)
  std::vector<std::string> failures;
  // [syntactic][semantic index == 3]
  std::size_t agreement[2][2] = {{0, 0}, {0, 0}};

  std::size_t agreeing() const { return agreement[0][0] + agreement[1][1]; }
  std::size_t self_injective_law_holds() const;
};

// One sample through both classifiers; throws ClassificationError when the
// algebra is out of scope.
CorpusSample classify_sample(const AlgebraPtr& alg);

CorpusReport run_corpus(const CorpusConfig& config);

}  // namespace nakayama
