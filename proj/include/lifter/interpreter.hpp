// lifter :: evaluation of checked assertions against (goal, context, args)

#ifndef LIFTER_INTERPRETER_HPP_
#define LIFTER_INTERPRETER_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lifter/assertion.hpp"
#include "lifter/term.hpp"

namespace lifter {

struct NumberValue {
  std::size_t n;
};
struct RuleValue {
  std::string name;
};
struct TermValue {
  Term term;
};
struct OccurrenceValue {
  Occurrence occ;
};
using Value = std::variant<NumberValue, RuleValue, TermValue, OccurrenceValue>;

std::string to_string(const Value& v);

// Assertions are evaluated against the first subgoal.
inline constexpr std::size_t kEvaluationSubgoal = 0;

// Largest element of the number domain: the larger of the distinct-subterm
// count and the largest argument count any constant head takes in the goal.
std::size_t number_domain_max(const Goal& g);

// Argument count of the widest application headed by a constant.
std::size_t max_constant_arity(const Goal& g);

struct Witness {
  std::string var;
  Value value;
};

// Evaluator bound to one (goal, context, args) triple. Precomputes the finite
// domains once; every query is const and safe to share across threads.
class Evaluator {
 public:
  Evaluator(const Goal& goal, const Context& ctx, const InductArgs& args);

  bool eval(const CheckedAssertion& a) const;

  // One satisfying binding for each EX reachable from the root through
  // connectives only, in source order; EX nodes that evaluate false are skipped.
  std::vector<Witness> witnesses(const CheckedAssertion& a) const;

  std::size_t max_number() const { return max_number_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Occurrence> scope_occurrences() const;
  std::size_t scope_max_depth() const { return scope_max_depth_; }

  // Atomics, exposed for direct testing. Unknown occurrences evaluate false.
  bool node_kind(AtomicName name, const Occurrence& o) const;
  bool occurrence_is_of_term(const Occurrence& o, const Term& t) const;
  static bool are_same_term(const Term& a, const Term& b) { return a == b; }
  bool is_in_term_occurrence(const Occurrence& inner, const Occurrence& outer) const;
  bool is_an_argument_of(const Occurrence& arg, const Occurrence& head) const;
  bool is_nth_argument_of(const Occurrence& arg, std::size_t n, const Occurrence& head) const;
  bool is_nth_induction_term(const Term& t, std::size_t n) const;
  bool is_nth_arbitrary_term(const Term& t, std::size_t n) const;
  bool is_rule_of(const std::string& rule, const Occurrence& o) const;
  bool pattern_is(std::size_t n, const Occurrence& o, Pattern p) const;
  bool is_at_deepest(const Occurrence& o) const;

 private:
  struct OccInfo {
    Occurrence occ;
    Term term;
    FlatKind kind;
  };
  struct Env;
  class Run;

  const OccInfo* find(const Occurrence& o) const;

  Goal goal_;
  Context ctx_;
  InductArgs args_;
  std::vector<OccInfo> occs_;                  // every subgoal
  std::map<Occurrence, std::size_t> index_;    // occurrence -> occs_ slot
  std::vector<std::size_t> scope_;             // occs_ slots of the evaluation subgoal
  std::vector<Term> terms_;
  std::size_t max_number_ = 0;
  std::size_t scope_max_depth_ = 0;
};

bool eval(const CheckedAssertion& a, const Goal& goal, const Context& ctx, const InductArgs& args);

}  // namespace lifter

#endif  // LIFTER_INTERPRETER_HPP_
