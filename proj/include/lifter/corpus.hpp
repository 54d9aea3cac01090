// lifter :: on-disk corpus cases (goal + context + named induct argument sets)

#ifndef LIFTER_CORPUS_HPP_
#define LIFTER_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lifter/sexp.hpp"
#include "lifter/term.hpp"

namespace lifter {

struct CorpusCase {
  std::string case_id;
  Goal goal;
  Context context;
  std::map<std::string, InductArgs> arg_sets;

  const InductArgs& args(const std::string& args_id) const;  // throws ValidationError

  friend bool operator==(const CorpusCase&, const CorpusCase&) = default;
};

// <term> := (const "s") | (free "s") | (schematic "s") | (bound N)
//         | (abs "s" <term>) | (app <term> <term>)
Term parse_term_sexp(std::string_view text);
Term term_from_sexp(const Sexp& form);

// Parses and validates; see validate_case.
CorpusCase parse_case_file(std::string_view text);

// Throws ValidationError naming the offending entity: empty goal, malformed
// term, clause arity mismatch, dangling rule reference.
void validate_case(const CorpusCase& c);

// Canonical text form; parse_case_file(render_case(c)) == c.
std::string render_case(const CorpusCase& c);

// Reads one file; errors are prefixed with the file name.
CorpusCase load_case_file(const std::filesystem::path& file);

// Every `*.case` file of a directory, sorted by case_id. Duplicate case ids
// are a ValidationError.
std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir);

std::string read_text_file(const std::filesystem::path& file);

}  // namespace lifter

#endif  // LIFTER_CORPUS_HPP_
