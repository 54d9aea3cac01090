#include "lifter/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "lifter/error.hpp"
#include "lifter/interpreter.hpp"

namespace lifter {

namespace {

void print_witnesses(const Evaluator& ev, const HeuristicEntry& h, std::ostream& err) {
  for (const Witness& w : ev.witnesses(h.assertion))
    err << "witness " << h.name << ": " << w.var << " = " << to_string(w.value) << '\n';
}

std::vector<bool> evaluate_row(const CorpusCase& c, const InductArgs& args,
                               std::span<const HeuristicEntry* const> heuristics) {
  Evaluator ev(c.goal, c.context, args);
  std::vector<bool> row;
  row.reserve(heuristics.size());
  for (const HeuristicEntry* h : heuristics) row.push_back(ev.eval(h->assertion));
  return row;
}

}  // namespace

RunReport run_heuristics(const CorpusCase& c, const std::string& args_id,
                         std::span<const HeuristicEntry* const> heuristics) {
  RunReport r{c.case_id, args_id, {}, 0, 0};
  std::vector<bool> row = evaluate_row(c, c.args(args_id), heuristics);
  for (std::size_t i = 0; i < heuristics.size(); ++i) {
    r.results.emplace_back(heuristics[i]->name, row[i]);
    if (row[i]) ++r.succeeded;
  }
  r.total = r.results.size();
  return r;
}

std::string summary_line(std::size_t total, std::size_t succeeded) {
  return "Out of " + std::to_string(total) + " assertions, " + std::to_string(succeeded) +
         " assertions succeeded.";
}

std::string format_report(const RunReport& r) {
  std::string out;
  for (const auto& [name, ok] : r.results) out += name + ": " + (ok ? "True" : "False") + "\n";
  out += summary_line(r.total, r.succeeded) + "\n";
  return out;
}

std::string extract_features(const std::vector<CorpusCase>& corpus,
                             std::span<const HeuristicEntry* const> heuristics) {
  struct Row {
    const CorpusCase* c;
    const std::string* args_id;
    std::future<std::vector<bool>> values;
  };
  std::vector<const CorpusCase*> cases;
  for (const CorpusCase& c : corpus) cases.push_back(&c);
  std::sort(cases.begin(), cases.end(),
            [](const CorpusCase* a, const CorpusCase* b) { return a->case_id < b->case_id; });

  // Rows are evaluated concurrently; assembly below keeps the fixed order.
  std::vector<Row> rows;
  for (const CorpusCase* c : cases)
    for (const auto& [id, args] : c->arg_sets)
      rows.push_back(Row{c, &id, std::async(std::launch::async, [c, &args, heuristics] {
                           return evaluate_row(*c, args, heuristics);
                         })});

  std::ostringstream os;
  os << "case_id,args_id";
  for (const HeuristicEntry* h : heuristics) os << ',' << h->name;
  os << '\n';
  for (Row& row : rows) {
    os << row.c->case_id << ',' << *row.args_id;
    for (bool v : row.values.get()) os << ',' << (v ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

void write_file_atomically(const std::filesystem::path& file, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw Error("error writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move output into place at " + file.string() + ": " + ec.message());
  }
}

int cmd_assert(const AssertOptions& opt, std::ostream& out, std::ostream& err) {
  bool result = false;
  try {
    CorpusCase c = load_case_file(opt.case_file);
    const InductArgs& args = c.args(opt.args_id);
    HeuristicEntry h = load_heuristic(opt.heuristic_file);
    Evaluator ev(c.goal, c.context, args);
    result = ev.eval(h.assertion);
    if (opt.witness) print_witnesses(ev, h, err);
  } catch (const std::exception& e) {
    err << "lifter: " << e.what() << '\n';
    return kExitError;
  }
  out << (result ? kAssertionSucceeded : kAssertionFailed) << '\n';
  return result ? kExitSucceeded : kExitFailed;
}

int cmd_test_all(const TestAllOptions& opt, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    CorpusCase c = load_case_file(opt.case_file);
    const InductArgs& args = c.args(opt.args_id);
    HeuristicSet set = load_stdlib(opt.heuristics_dir);
    std::vector<const HeuristicEntry*> selected = set.select(opt.include_extended);
    RunReport report = run_heuristics(c, opt.args_id, selected);
    text = format_report(report);
    if (opt.witness) {
      Evaluator ev(c.goal, c.context, args);
      for (const HeuristicEntry* h : selected) print_witnesses(ev, *h, err);
    }
  } catch (const std::exception& e) {
    err << "lifter: " << e.what() << '\n';
    return kExitError;
  }
  out << text;
  return kExitSucceeded;
}

int cmd_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::vector<CorpusCase> corpus = load_corpus(opt.corpus_dir);
    HeuristicSet set = load_stdlib(opt.heuristics_dir);
    std::vector<const HeuristicEntry*> selected = set.select(opt.include_extended);
    std::string csv = extract_features(corpus, selected);
    write_file_atomically(opt.out_file, csv);
    std::size_t rows = 0;
    for (const CorpusCase& c : corpus) rows += c.arg_sets.size();
    out << "wrote " << rows << " rows x " << selected.size() << " heuristics to "
        << opt.out_file.string() << '\n';
  } catch (const std::exception& e) {
    err << "lifter: " << e.what() << '\n';
    return kExitError;
  }
  return kExitSucceeded;
}

}  // namespace lifter
