// lifter :: loader for the shipped heuristic files (heuristics/*.lifter)

#ifndef LIFTER_STDLIB_HPP_
#define LIFTER_STDLIB_HPP_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lifter/assertion.hpp"

namespace lifter {

// Shipped heuristics outside the canonical test-all set; enabled with
// --include-h7.
inline constexpr std::array<std::string_view, 1> kExtendedHeuristics = {"h7_rule_args_generalized"};

struct HeuristicEntry {
  std::string name;  // file stem
  CheckedAssertion assertion;
  std::string source;
  bool extended = false;
};

class HeuristicSet {
 public:
  explicit HeuristicSet(std::vector<HeuristicEntry> entries);

  const std::vector<HeuristicEntry>& entries() const { return entries_; }
  // Canonical entries, plus the extended ones when asked, in stable order.
  std::vector<const HeuristicEntry*> select(bool include_extended) const;
  const HeuristicEntry* find(std::string_view name) const;

 private:
  std::vector<HeuristicEntry> entries_;
};

// Parses and sort-checks one file. Errors carry the file name.
HeuristicEntry load_heuristic(const std::filesystem::path& file);

// All `*.lifter` files in `dir`, ordered by name. Throws Error when the
// directory holds none, and on the first file that fails to load.
HeuristicSet load_stdlib(const std::filesystem::path& dir);

}  // namespace lifter

#endif  // LIFTER_STDLIB_HPP_
