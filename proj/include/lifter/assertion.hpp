// lifter :: assertion AST, concrete syntax, and sort checking
//
// Concrete grammar (one assertion per .lifter file, `(* ... *)` comments nest):
//
//   assertion := imp
//   imp   := or ( '->' imp )?
//   or    := and ( '\/' and )*
//   and   := unary ( '/\' unary )*
//   unary := 'Not' unary | 'True' | 'False' | quant | atomic | '(' assertion ')'
//   quant := ('EX'|'ALL') IDENT ':' dom '.' assertion
//   dom   := 'number' | 'rule' | 'term' | 'term_occurrence'
//          | 'term' 'IN' ('induction_term'|'arbitrary_term')
//          | 'induction_term' | 'arbitrary_term'
//          | 'term_occurrence' 'IN' IDENT ':' 'term'
//   atomic := IDENT infix_name IDENT
//           | prefix_name IDENT
//           | ternary_name '(' arg ',' arg ',' arg ')'
//           | 'are_same_term' '(' IDENT ',' IDENT ')'

#ifndef LIFTER_ASSERTION_HPP_
#define LIFTER_ASSERTION_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lifter/error.hpp"

namespace lifter {

enum class Sort { Number, Rule, Term, Occurrence };
std::string_view to_string(Sort s);

enum class Pattern { AllOnlyVar, AllConstructor, Mixed };
std::string_view to_string(Pattern p);

enum class AtomicName {
  IsRuleOf,
  TermOccurrenceIsOfTerm,
  AreSameTerm,
  IsInTermOccurrence,
  IsAtomic,
  IsConstant,
  IsRecursiveConstant,
  IsVariable,
  IsFreeVariable,
  IsBoundVariable,
  IsLambda,
  IsApplication,
  IsAnArgumentOf,
  IsNthArgumentOf,
  IsNthInductionTerm,
  IsNthArbitraryTerm,
  PatternIs,
  IsAtDeepest,
};

enum class Fixity { Prefix, Infix, Call };

// One argument slot of an atomic: either a variable of the given sort or a
// pattern literal.
struct ArgSlot {
  bool pattern = false;
  Sort sort = Sort::Occurrence;
};

struct AtomicInfo {
  AtomicName name;
  std::string_view text;
  Fixity fixity;
  std::vector<ArgSlot> slots;
};

const AtomicInfo& atomic_info(AtomicName name);
const AtomicInfo* find_atomic(std::string_view text);
std::span<const AtomicInfo> all_atomics();

enum class QuantKind { Exists, All };
enum class Modifier { InductionTerm, ArbitraryTerm };

struct DomainSpec {
  enum class Kind { AllNumbers, AllRules, AllTerms, AllOccs, TermsIn, OccsOf };

  Kind kind = Kind::AllTerms;
  Modifier modifier = Modifier::InductionTerm;  // TermsIn
  std::string term_var;                         // OccsOf
  SourcePos term_var_pos;

  static DomainSpec numbers() { return make(Kind::AllNumbers); }
  static DomainSpec rules() { return make(Kind::AllRules); }
  static DomainSpec terms() { return make(Kind::AllTerms); }
  static DomainSpec occurrences() { return make(Kind::AllOccs); }
  static DomainSpec terms_in(Modifier m) {
    DomainSpec d = make(Kind::TermsIn);
    d.modifier = m;
    return d;
  }
  static DomainSpec occurrences_of(std::string term_var) {
    DomainSpec d = make(Kind::OccsOf);
    d.term_var = std::move(term_var);
    return d;
  }

  Sort sort() const;

 private:
  static DomainSpec make(Kind k) {
    DomainSpec d;
    d.kind = k;
    return d;
  }
};

bool operator==(const DomainSpec& a, const DomainSpec& b);

struct AtomicArg {
  std::variant<std::string, Pattern> value;  // variable name or literal
  SourcePos pos;

  const std::string* var() const { return std::get_if<std::string>(&value); }
};

struct Assertion;
using AssertionPtr = std::shared_ptr<const Assertion>;

struct BoolNode {
  bool value;
};
struct NotNode {
  AssertionPtr operand;
};
enum class BinOp { And, Or, Imp };
struct BinaryNode {
  BinOp op;
  AssertionPtr lhs;
  AssertionPtr rhs;
};
struct QuantNode {
  QuantKind kind;
  std::string var;
  DomainSpec domain;
  AssertionPtr body;
  SourcePos pos;
};
struct AtomicNode {
  AtomicName name;
  std::vector<AtomicArg> args;
  SourcePos pos;
};

struct Assertion {
  std::variant<BoolNode, NotNode, BinaryNode, QuantNode, AtomicNode> node;
};

// Structural equality; source positions are ignored.
bool operator==(const Assertion& a, const Assertion& b);

namespace ast {
AssertionPtr boolean(bool value);
AssertionPtr negate(AssertionPtr operand);
AssertionPtr binary(BinOp op, AssertionPtr lhs, AssertionPtr rhs);
AssertionPtr conj(AssertionPtr lhs, AssertionPtr rhs);
AssertionPtr disj(AssertionPtr lhs, AssertionPtr rhs);
AssertionPtr implies(AssertionPtr lhs, AssertionPtr rhs);
AssertionPtr quant(QuantKind kind, std::string var, DomainSpec domain, AssertionPtr body);
AssertionPtr exists(std::string var, DomainSpec domain, AssertionPtr body);
AssertionPtr forall(std::string var, DomainSpec domain, AssertionPtr body);
AssertionPtr atomic(AtomicName name, std::vector<AtomicArg> args);
// Shorthand for atomics whose arguments are all variables.
AssertionPtr atomic(AtomicName name, std::vector<std::string> vars);
}  // namespace ast

// Throws ParseError (lexical, grammar, unknown atomic, arity) with position.
AssertionPtr parse_assertion(std::string_view text);

// Canonical text; parse_assertion(render_assertion(a)) equals a.
std::string render_assertion(const Assertion& a);

struct VarBinding {
  std::string var;
  Sort sort;
  SourcePos pos;
};

// An assertion whose variables are all bound at the sorts their uses require.
// Only sort_check produces one.
class CheckedAssertion {
 public:
  const Assertion& ast() const { return *ast_; }
  const AssertionPtr& ptr() const { return ast_; }
  // Every quantifier binding, in source order.
  const std::vector<VarBinding>& bindings() const { return bindings_; }

 private:
  friend CheckedAssertion sort_check(AssertionPtr a);
  CheckedAssertion(AssertionPtr ast, std::vector<VarBinding> bindings)
      : ast_(std::move(ast)), bindings_(std::move(bindings)) {}

  AssertionPtr ast_;
  std::vector<VarBinding> bindings_;
};

// Throws SortError for unbound variables and sort mismatches.
CheckedAssertion sort_check(AssertionPtr a);

// parse_assertion followed by sort_check.
CheckedAssertion compile_assertion(std::string_view text);

}  // namespace lifter

#endif  // LIFTER_ASSERTION_HPP_
