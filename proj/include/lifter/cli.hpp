// lifter :: command implementations behind tools/lifter

#ifndef LIFTER_CLI_HPP_
#define LIFTER_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lifter/corpus.hpp"
#include "lifter/stdlib.hpp"

namespace lifter {

inline constexpr int kExitSucceeded = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitError = 2;

inline constexpr const char* kAssertionSucceeded = "Assertion succeeded.";
inline constexpr const char* kAssertionFailed = "Assertion failed.";

struct RunReport {
  std::string case_id;
  std::string args_id;
  std::vector<std::pair<std::string, bool>> results;
  std::size_t succeeded = 0;
  std::size_t total = 0;
};

RunReport run_heuristics(const CorpusCase& c, const std::string& args_id,
                         std::span<const HeuristicEntry* const> heuristics);

// `Out of N assertions, M assertions succeeded.`
std::string summary_line(std::size_t total, std::size_t succeeded);

// One `name: True|False` line per heuristic, then the summary line.
std::string format_report(const RunReport& r);

// CSV with header `case_id,args_id,<names...>` and one 1/0 row per
// (case, args) pair, ordered by case id then args id.
std::string extract_features(const std::vector<CorpusCase>& corpus,
                             std::span<const HeuristicEntry* const> heuristics);

// Writes through a sibling temporary and renames it into place, so a failed
// run never leaves a partial file.
void write_file_atomically(const std::filesystem::path& file, const std::string& content);

struct AssertOptions {
  std::filesystem::path case_file;
  std::string args_id;
  std::filesystem::path heuristic_file;
  bool witness = false;
};

struct TestAllOptions {
  std::filesystem::path case_file;
  std::string args_id;
  std::filesystem::path heuristics_dir;
  bool include_extended = false;
  bool witness = false;
};

struct ExtractOptions {
  std::filesystem::path corpus_dir;
  std::filesystem::path out_file;
  std::filesystem::path heuristics_dir;
  bool include_extended = false;
};

// Exit status: 0 succeeded, 1 failed, 2 input error (diagnostic on err only).
int cmd_assert(const AssertOptions& opt, std::ostream& out, std::ostream& err);
// Exit status: 0 after evaluation, 2 on load failure.
int cmd_test_all(const TestAllOptions& opt, std::ostream& out, std::ostream& err);
int cmd_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace lifter

#endif  // LIFTER_CLI_HPP_
