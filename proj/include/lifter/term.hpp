// lifter :: Term, FlatNode, Occurrence, Goal, Context, InductArgs

#ifndef LIFTER_TERM_HPP_
#define LIFTER_TERM_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace lifter {

namespace detail {
struct TermFactory;
}

enum class TermKind { Const, Free, Schematic, Bound, Lambda, App };

// Immutable higher-order term. Cheap to copy; children are shared.
// Equality is structural over node kinds, names and de Bruijn indices.
class Term {
 public:
  static Term constant(std::string name);
  static Term free(std::string name);
  static Term schematic(std::string name);
  static Term bound(std::size_t index);
  static Term lambda(std::string binder, Term body);
  static Term app(Term fun, Term arg);
  // Left-associated curried application `head args[0] ... args[n-1]`.
  static Term apply(Term head, std::span<const Term> args);

  TermKind kind() const;
  // Constant / variable name, or the binder name of a lambda.
  const std::string& name() const;
  std::size_t index() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  bool is_atomic() const { return kind() != TermKind::Lambda && kind() != TermKind::App; }
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend struct detail::TermFactory;
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Names non-empty, and every Bound(i) sits under more than i lambdas.
bool is_well_formed(const Term& t);

// S-expression rendering, e.g. `(app (const "f") (free "x"))`.
std::string to_sexp(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

// Uncurried view of a term: an application spine becomes one App node whose
// child 0 is the head and child k (k >= 1) is argument k-1.
enum class FlatKind { Atom, App, Lambda };

struct FlatNode {
  FlatKind kind;
  Term term;            // the term this node denotes
  std::string binder;   // Lambda only
  std::vector<FlatNode> children;
};

FlatNode flatten(const Term& t);
Term unflatten(const FlatNode& node);

// Length of the longest root-to-node path.
std::size_t height(const FlatNode& node);

// null if the path does not address a node.
const FlatNode* resolve_path(const FlatNode& root, std::span<const std::size_t> path);

struct Occurrence {
  std::size_t subgoal = 0;
  std::vector<std::size_t> path;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

std::ostream& operator<<(std::ostream& os, const Occurrence& o);

inline std::size_t depth_of(const Occurrence& o) { return o.path.size(); }

struct Goal {
  std::vector<Term> subgoals;  // non-empty
  friend bool operator==(const Goal&, const Goal&) = default;
};

struct OccurrenceEntry {
  Occurrence occurrence;
  Term term;
};

// Every node of the flattened subgoal, depth-first, head first.
// Throws std::out_of_range for a bad subgoal index.
std::vector<OccurrenceEntry> enumerate_occurrences(const Goal& g, std::size_t subgoal);

// Distinct terms denoted by all occurrences of all subgoals, in order of first
// occurrence.
std::vector<Term> enumerate_subterms(const Goal& g);

std::optional<Term> resolve(const Goal& g, const Occurrence& o);

enum class ParamPattern { Var, Constructor };

struct ClausePattern {
  std::vector<ParamPattern> params;
  friend bool operator==(const ClausePattern&, const ClausePattern&) = default;
};

struct Definition {
  std::string constant_name;
  bool is_recursive = false;
  std::vector<ClausePattern> clauses;  // empty when only the recursion flag is known

  // Parameter count shared by all clauses; nullopt without clauses.
  std::optional<std::size_t> arity() const;
  friend bool operator==(const Definition&, const Definition&) = default;
};

struct RuleRecord {
  std::string rule_name;
  std::string derived_from;
  friend bool operator==(const RuleRecord&, const RuleRecord&) = default;
};

struct Context {
  std::map<std::string, Definition> definitions;
  std::map<std::string, RuleRecord> rules;

  const Definition* find_definition(const std::string& constant) const;
  const RuleRecord* find_rule(const std::string& rule) const;

  // Throws ValidationError: dangling derived_from, clause arity mismatch, or
  // a map key that disagrees with the record's own name.
  void validate() const;

  friend bool operator==(const Context&, const Context&) = default;
};

// The three fields of an induct invocation.
struct InductArgs {
  std::vector<Term> induction_terms;
  std::vector<Term> arbitrary_terms;
  std::vector<std::string> rules;

  friend bool operator==(const InductArgs&, const InductArgs&) = default;
};

}  // namespace lifter

#endif  // LIFTER_TERM_HPP_
