#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <deque>
#include <stdexcept>

namespace lifter::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return LIFTER_SOURCE_DIR; }
fs::path corpus_dir() { return source_dir() / "corpus"; }
fs::path heuristics_dir() { return source_dir() / "heuristics"; }
fs::path cli_path() { return LIFTER_CLI_PATH; }

const std::vector<CorpusCase>& shipped_corpus() {
  static const std::vector<CorpusCase> corpus = load_corpus(corpus_dir());
  return corpus;
}

const HeuristicSet& shipped_heuristics() {
  static const HeuristicSet set = load_stdlib(heuristics_dir());
  return set;
}

const CorpusCase& shipped_case(const std::string& id) {
  for (const CorpusCase& c : shipped_corpus())
    if (c.case_id == id) return c;
  throw std::runtime_error("no shipped case " + id);
}

std::vector<CorpusPair> corpus_pairs() {
  std::vector<CorpusPair> out;
  for (const CorpusCase& c : shipped_corpus())
    for (const auto& [id, a] : c.arg_sets) out.push_back({&c, id, &a});
  return out;
}

bool eval_named(const std::string& heuristic, const CorpusCase& c, const InductArgs& args) {
  const HeuristicEntry* h = shipped_heuristics().find(heuristic);
  if (!h) throw std::runtime_error("no shipped heuristic " + heuristic);
  return eval(h->assertion, c.goal, c.context, args);
}

namespace {

void walk(const Term& t, std::vector<std::size_t>& path, std::vector<OraclePos>& out) {
  out.push_back({path, t});
  if (t.kind() == TermKind::Lambda) {
    path.push_back(0);
    walk(t.body(), path, out);
    path.pop_back();
    return;
  }
  if (t.kind() != TermKind::App) return;
  std::deque<Term> args;
  Term head = t;
  while (head.kind() == TermKind::App) {
    args.push_front(head.arg());
    head = head.fun();
  }
  path.push_back(0);
  walk(head, path, out);
  path.pop_back();
  for (std::size_t i = 0; i < args.size(); ++i) {
    path.push_back(i + 1);
    walk(args[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<OraclePos> oracle_positions(const Term& t) {
  std::vector<OraclePos> out;
  std::vector<std::size_t> path;
  walk(t, path, out);
  return out;
}

std::size_t oracle_max_depth(const Term& t) {
  std::size_t d = 0;
  for (const OraclePos& p : oracle_positions(t)) d = std::max(d, p.path.size());
  return d;
}

Occurrence find_occurrence(const Goal& g, const Term& t, std::size_t skip) {
  for (const OraclePos& p : oracle_positions(g.subgoals.at(0)))
    if (p.term == t && skip-- == 0) return Occurrence{0, p.path};
  throw std::runtime_error("term not found in goal: " + to_sexp(t));
}

Term random_term(std::mt19937& rng, int depth, int binders) {
  static const char* names[] = {"f", "g", "x", "y", "xs", "Cons", "Nil"};
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 3);
  std::uniform_int_distribution<int> name(0, 6);
  switch (pick(rng)) {
    case 0: return Term::constant(names[name(rng)]);
    case 1: return Term::free(names[name(rng)]);
    case 2: return Term::schematic(names[name(rng)]);
    case 3:
      if (binders > 0) return Term::bound(std::uniform_int_distribution<int>(0, binders - 1)(rng));
      return Term::free(names[name(rng)]);
    case 4: return Term::lambda(names[name(rng)], random_term(rng, depth - 1, binders + 1));
    default: return Term::app(random_term(rng, depth - 1, binders), random_term(rng, depth - 1, binders));
  }
}

namespace {

struct Scope {
  std::vector<std::pair<std::string, Sort>> vars;

  // Innermost binding of each name that has sort s.
  std::vector<std::string> visible(Sort s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      bool shadowed = false;
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[j].first == vars[i].first) shadowed = true;
      if (!shadowed && vars[i].second == s) out.push_back(vars[i].first);
    }
    return out;
  }
};

template <class T>
const T& choose(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

AssertionPtr gen_atomic(std::mt19937& rng, const Scope& scope) {
  std::span<const AtomicInfo> atomics = all_atomics();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const AtomicInfo& info = atomics[std::uniform_int_distribution<std::size_t>(0, atomics.size() - 1)(rng)];
    std::vector<AtomicArg> args;
    bool ok = true;
    for (const ArgSlot& slot : info.slots) {
      if (slot.pattern) {
        static const std::vector<Pattern> ps = {Pattern::AllOnlyVar, Pattern::AllConstructor,
                                                Pattern::Mixed};
        args.push_back(AtomicArg{choose(rng, ps), {}});
        continue;
      }
      std::vector<std::string> vs = scope.visible(slot.sort);
      if (vs.empty()) {
        ok = false;
        break;
      }
      args.push_back(AtomicArg{choose(rng, vs), {}});
    }
    if (ok) return ast::atomic(info.name, std::move(args));
  }
  return ast::boolean(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
}

AssertionPtr gen(std::mt19937& rng, int depth, int quants, Scope& scope) {
  static const std::vector<std::string> names = {"x", "y", "t1", "to2", "n", "r_1", "a'"};
  // leaves: mostly atomics; inner nodes: weighted towards quantifiers
  int roll = std::uniform_int_distribution<int>(0, depth <= 0 ? 3 : 8)(rng);
  int choice = depth <= 0 ? (roll == 0 ? 0 : 1) : (roll < 1 ? 0 : roll < 3 ? 1 : roll < 4 ? 2 : roll < 6 ? 3 : 5);
  if (scope.vars.empty() && quants > 0 && depth > 0 && roll % 4 != 0) choice = 5;
  switch (choice) {
    case 0: return ast::boolean(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    case 1: return gen_atomic(rng, scope);
    case 2: return ast::negate(gen(rng, depth - 1, quants, scope));
    case 3: {
      static const std::vector<BinOp> ops = {BinOp::And, BinOp::Or, BinOp::Imp};
      BinOp op = choose(rng, ops);
      AssertionPtr lhs = gen(rng, depth - 1, quants, scope);
      return ast::binary(op, lhs, gen(rng, depth - 1, quants, scope));
    }
    default: {
      if (quants <= 0) return gen_atomic(rng, scope);
      std::vector<DomainSpec> doms = {DomainSpec::numbers(), DomainSpec::rules(),
                                      DomainSpec::terms(), DomainSpec::occurrences(),
                                      DomainSpec::terms_in(Modifier::InductionTerm),
                                      DomainSpec::terms_in(Modifier::ArbitraryTerm)};
      for (const std::string& tv : scope.visible(Sort::Term))
        doms.push_back(DomainSpec::occurrences_of(tv));
      DomainSpec d = choose(rng, doms);
      std::string var = choose(rng, names);
      scope.vars.emplace_back(var, d.sort());
      AssertionPtr body = gen(rng, depth - 1, quants - 1, scope);
      scope.vars.pop_back();
      QuantKind k = std::uniform_int_distribution<int>(0, 1)(rng) ? QuantKind::All : QuantKind::Exists;
      return ast::quant(k, var, d, body);
    }
  }
}

}  // namespace

AssertionPtr random_assertion(std::mt19937& rng, int depth, int max_quant) {
  Scope scope;
  return gen(rng, depth, max_quant, scope);
}

ProcessResult run_cli(const std::string& args) {
  static std::atomic<int> counter{0};
  fs::path err_file = fs::temp_directory_path() /
                      ("lifter_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".err");
  std::string cmd = "'" + cli_path().string() + "' " + args + " 2>'" + err_file.string() + "'";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = ::pclose(pipe);
  std::string err = fs::exists(err_file) ? read_text_file(err_file) : "";
  fs::remove(err_file);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err};
}

}  // namespace lifter::testing
