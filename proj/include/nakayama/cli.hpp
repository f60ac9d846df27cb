#pragma once

// Command-line front end: JSON reports and the subcommand dispatcher.
// The executable in tools/ is a thin wrapper around run_cli, which keeps the
// whole front end testable in-process.

#include "nakayama/ars.hpp"
#include "nakayama/corpus.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace nakayama {

using Json = nlohmann::ordered_json;

// Exit codes.
enum Exit : int { exit_ok = 0, exit_usage = 1, exit_unclassifiable = 2, exit_invariant = 3 };

Json algebra_json(const Algebra& alg);
Json walk_json(const Quiver& q, const Walk& w);  // letters such as "a^-1"

// {key, dims: {vertex: n}, maps: {arrow: [[...]]}} with scalars as "p/q".
template <class S>
Json representation_json(const Representation<S>& m);

template <class S>
Json member_json(const Catalog<S>& cat, std::size_t i, bool with_module);

template <class S>
Json classify_json(const Catalog<S>& cat, const NakayamaVerdict& sem, const SyntacticVerdict& syn,
                   const SelfInjectivity& si, const std::optional<QmnsParams>& qmns);

template <class S>
Json ar_json(const Catalog<S>& cat, const ArReport<S>& rep);

Json corpus_json(const CorpusReport& rep);

// Laws that every classified input must satisfy; each entry is a violation.
std::vector<std::string> classification_violations(Index n, const SyntacticVerdict& syn, const SelfInjectivity& si,
                                                    const std::optional<QmnsParams>& qmns);

// argv without the program name.  Reads "-" inputs from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nakayama
