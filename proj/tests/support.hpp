// helpers shared by the unit tests and the acceptance runner

#ifndef LIFTER_TESTS_SUPPORT_HPP_
#define LIFTER_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "lifter/assertion.hpp"
#include "lifter/corpus.hpp"
#include "lifter/interpreter.hpp"
#include "lifter/stdlib.hpp"
#include "lifter/term.hpp"

namespace lifter::testing {

std::filesystem::path source_dir();
std::filesystem::path corpus_dir();
std::filesystem::path heuristics_dir();
std::filesystem::path cli_path();

const std::vector<CorpusCase>& shipped_corpus();
const HeuristicSet& shipped_heuristics();
const CorpusCase& shipped_case(const std::string& id);

struct CorpusPair {
  const CorpusCase* c;
  std::string args_id;
  const InductArgs* args;
};
std::vector<CorpusPair> corpus_pairs();

bool eval_named(const std::string& heuristic, const CorpusCase& c, const InductArgs& args);

// Reference enumeration of flattened positions, computed straight from the
// curried term by peeling application spines. Does not use flatten().
struct OraclePos {
  std::vector<std::size_t> path;
  Term term;
};
std::vector<OraclePos> oracle_positions(const Term& t);
std::size_t oracle_max_depth(const Term& t);

// First occurrence (in DFS order of subgoal 0) whose term equals t, after
// skipping `skip` earlier matches.
Occurrence find_occurrence(const Goal& g, const Term& t, std::size_t skip = 0);

Term random_term(std::mt19937& rng, int depth, int binders = 0);

// Closed, well-sorted assertion with quantifier nesting at most max_quant.
AssertionPtr random_assertion(std::mt19937& rng, int depth, int max_quant);

// Runs the built lifter binary with `args` (shell syntax) and captures both
// streams.
struct ProcessResult {
  int status;
  std::string out;
  std::string err;
};
ProcessResult run_cli(const std::string& args);

}  // namespace lifter::testing

#endif  // LIFTER_TESTS_SUPPORT_HPP_
