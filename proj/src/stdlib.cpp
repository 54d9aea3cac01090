#include "lifter/stdlib.hpp"

#include <algorithm>
#include <set>

#include "lifter/corpus.hpp"
#include "lifter/error.hpp"

namespace lifter {

HeuristicSet::HeuristicSet(std::vector<HeuristicEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const HeuristicEntry& a, const HeuristicEntry& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].name == entries_[i - 1].name)
      throw ValidationError("duplicate heuristic \"" + entries_[i].name + "\"");
}

std::vector<const HeuristicEntry*> HeuristicSet::select(bool include_extended) const {
  std::vector<const HeuristicEntry*> out;
  for (const HeuristicEntry& e : entries_)
    if (include_extended || !e.extended) out.push_back(&e);
  return out;
}

const HeuristicEntry* HeuristicSet::find(std::string_view name) const {
  for (const HeuristicEntry& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

HeuristicEntry load_heuristic(const std::filesystem::path& file) {
  std::string source = read_text_file(file);
  try {
    CheckedAssertion checked = compile_assertion(source);
    std::string name = file.stem().string();
    bool extended = std::find(kExtendedHeuristics.begin(), kExtendedHeuristics.end(), name) !=
                    kExtendedHeuristics.end();
    return HeuristicEntry{std::move(name), std::move(checked), std::move(source), extended};
  } catch (const Error& e) {
    throw Error(file.string() + ":" + e.what());
  }
}

HeuristicSet load_stdlib(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("heuristics directory not found: " + dir.string());
  std::set<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".lifter") files.insert(entry.path());
  if (files.empty()) throw Error("no .lifter files in " + dir.string());
  std::vector<HeuristicEntry> entries;
  for (const fs::path& f : files) entries.push_back(load_heuristic(f));
  return HeuristicSet(std::move(entries));
}

}  // namespace lifter
