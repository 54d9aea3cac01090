#include "lifter/interpreter.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lifter {

namespace {

void collect_arities(const FlatNode& node, std::size_t& best) {
  if (node.kind == FlatKind::App && node.children[0].kind == FlatKind::Atom &&
      node.children[0].term.kind() == TermKind::Const)
    best = std::max(best, node.children.size() - 1);
  for (const FlatNode& c : node.children) collect_arities(c, best);
}

bool same_parent(const Occurrence& a, const Occurrence& b) {
  if (a.subgoal != b.subgoal || a.path.empty() || a.path.size() != b.path.size()) return false;
  return std::equal(a.path.begin(), a.path.end() - 1, b.path.begin());
}

}  // namespace

std::string to_string(const Value& v) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NumberValue>) os << x.n;
        else if constexpr (std::is_same_v<T, RuleValue>) os << x.name;
        else if constexpr (std::is_same_v<T, TermValue>) os << x.term;
        else os << x.occ;
      },
      v);
  return os.str();
}

std::size_t max_constant_arity(const Goal& g) {
  std::size_t best = 0;
  for (const Term& sg : g.subgoals) collect_arities(flatten(sg), best);
  return best;
}

std::size_t number_domain_max(const Goal& g) {
  return std::max(enumerate_subterms(g).size(), max_constant_arity(g));
}

Evaluator::Evaluator(const Goal& goal, const Context& ctx, const InductArgs& args)
    : goal_(goal), ctx_(ctx), args_(args) {
  if (goal.subgoals.empty()) throw std::invalid_argument("Evaluator: goal has no subgoals");
  for (std::size_t sg = 0; sg < goal.subgoals.size(); ++sg) {
    FlatNode root = flatten(goal.subgoals[sg]);
    for (OccurrenceEntry& e : enumerate_occurrences(goal, sg)) {
      const FlatNode* node = resolve_path(root, e.occurrence.path);
      index_.emplace(e.occurrence, occs_.size());
      if (sg == kEvaluationSubgoal) {
        scope_.push_back(occs_.size());
        scope_max_depth_ = std::max(scope_max_depth_, depth_of(e.occurrence));
      }
      occs_.push_back(OccInfo{std::move(e.occurrence), std::move(e.term), node->kind});
    }
  }
  terms_ = enumerate_subterms(goal);
  max_number_ = std::max(terms_.size(), max_constant_arity(goal));
}

std::vector<Occurrence> Evaluator::scope_occurrences() const {
  std::vector<Occurrence> out;
  for (std::size_t i : scope_) out.push_back(occs_[i].occ);
  return out;
}

const Evaluator::OccInfo* Evaluator::find(const Occurrence& o) const {
  auto it = index_.find(o);
  return it == index_.end() ? nullptr : &occs_[it->second];
}

bool Evaluator::node_kind(AtomicName name, const Occurrence& o) const {
  const OccInfo* info = find(o);
  if (!info) return false;
  const bool atom = info->kind == FlatKind::Atom;
  const TermKind tk = info->term.kind();
  switch (name) {
    case AtomicName::IsAtomic: return atom;
    case AtomicName::IsConstant: return atom && tk == TermKind::Const;
    case AtomicName::IsVariable:
      return atom && (tk == TermKind::Free || tk == TermKind::Schematic || tk == TermKind::Bound);
    case AtomicName::IsFreeVariable: return atom && tk == TermKind::Free;
    case AtomicName::IsBoundVariable: return atom && tk == TermKind::Bound;
    case AtomicName::IsLambda: return info->kind == FlatKind::Lambda;
    case AtomicName::IsApplication: return info->kind == FlatKind::App;
    case AtomicName::IsRecursiveConstant: {
      if (!atom || tk != TermKind::Const) return false;
      const Definition* def = ctx_.find_definition(info->term.name());
      return def && def->is_recursive;
    }
    default:
      throw std::invalid_argument("node_kind: '" + std::string(atomic_info(name).text) +
                                  "' is not a node-kind atomic");
  }
}

bool Evaluator::occurrence_is_of_term(const Occurrence& o, const Term& t) const {
  const OccInfo* info = find(o);
  return info && info->term == t;
}

bool Evaluator::is_in_term_occurrence(const Occurrence& inner, const Occurrence& outer) const {
  if (inner.subgoal != outer.subgoal || !find(inner) || !find(outer)) return false;
  if (outer.path.size() > inner.path.size()) return false;
  return std::equal(outer.path.begin(), outer.path.end(), inner.path.begin());
}

bool Evaluator::is_an_argument_of(const Occurrence& arg, const Occurrence& head) const {
  if (!same_parent(arg, head) || !find(arg) || !find(head)) return false;
  return head.path.back() == 0 && arg.path.back() >= 1;
}

bool Evaluator::is_nth_argument_of(const Occurrence& arg, std::size_t n, const Occurrence& head) const {
  return is_an_argument_of(arg, head) && arg.path.back() - 1 == n;
}

bool Evaluator::is_nth_induction_term(const Term& t, std::size_t n) const {
  return n < args_.induction_terms.size() && args_.induction_terms[n] == t;
}

bool Evaluator::is_nth_arbitrary_term(const Term& t, std::size_t n) const {
  return n < args_.arbitrary_terms.size() && args_.arbitrary_terms[n] == t;
}

bool Evaluator::is_rule_of(const std::string& rule, const Occurrence& o) const {
  const OccInfo* info = find(o);
  if (!info || info->kind != FlatKind::Atom || info->term.kind() != TermKind::Const) return false;
  const RuleRecord* r = ctx_.find_rule(rule);
  return r && r->derived_from == info->term.name();
}

bool Evaluator::pattern_is(std::size_t n, const Occurrence& o, Pattern p) const {
  const OccInfo* info = find(o);
  if (!info || info->kind != FlatKind::Atom || info->term.kind() != TermKind::Const) return false;
  const Definition* def = ctx_.find_definition(info->term.name());
  if (!def || def->clauses.empty() || n >= *def->arity()) return false;
  bool any_var = false, any_ctor = false;
  for (const ClausePattern& cl : def->clauses) {
    if (cl.params[n] == ParamPattern::Var) any_var = true;
    else any_ctor = true;
  }
  switch (p) {
    case Pattern::AllOnlyVar: return !any_ctor;
    case Pattern::AllConstructor: return !any_var;
    case Pattern::Mixed: return any_var && any_ctor;
  }
  return false;
}

bool Evaluator::is_at_deepest(const Occurrence& o) const {
  return find(o) && depth_of(o) == scope_max_depth_;
}

// ---------------------------------------------------------------------------

struct Evaluator::Env {
  // Innermost binding last; lookup scans backwards so shadowing works.
  std::vector<std::pair<const std::string*, Value>> frames;

  const Value& lookup(const std::string& var) const {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
      if (*it->first == var) return it->second;
    throw std::logic_error("unbound variable '" + var + "' reached the evaluator");
  }
};

class Evaluator::Run {
 public:
  explicit Run(const Evaluator& ev) : ev_(ev) {}

  bool eval(const Assertion& a) {
    return std::visit(
        [&](const auto& n) -> bool {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BoolNode>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, NotNode>) {
            return !eval(*n.operand);
          } else if constexpr (std::is_same_v<T, BinaryNode>) {
            switch (n.op) {
              case BinOp::And: return eval(*n.lhs) && eval(*n.rhs);
              case BinOp::Or: return eval(*n.lhs) || eval(*n.rhs);
              case BinOp::Imp: return !eval(*n.lhs) || eval(*n.rhs);
            }
            return false;
          } else if constexpr (std::is_same_v<T, QuantNode>) {
            return quant(n, nullptr);
          } else {
            return atomic(n);
          }
        },
        a.node);
  }

  // Evaluates the quantifier; when `witness` is given and an EX succeeds, the
  // satisfying value is stored there.
  bool quant(const QuantNode& q, Value* witness) {
    const bool exists = q.kind == QuantKind::Exists;
    bool result = !exists;
    for_each_value(q.domain, [&](Value v) {
      env_.frames.emplace_back(&q.var, std::move(v));
      bool body = eval(*q.body);
      Value bound = std::move(env_.frames.back().second);
      env_.frames.pop_back();
      if (body == exists) {
        result = exists;
        if (witness && exists) *witness = std::move(bound);
        return false;
      }
      return true;
    });
    return result;
  }

 private:
  // Calls f on each domain element until it returns false.
  template <typename F>
  void for_each_value(const DomainSpec& d, F&& f) {
    switch (d.kind) {
      case DomainSpec::Kind::AllNumbers:
        for (std::size_t n = 0; n <= ev_.max_number_; ++n)
          if (!f(Value{NumberValue{n}})) return;
        return;
      case DomainSpec::Kind::AllRules:
        for (const std::string& r : ev_.args_.rules)
          if (!f(Value{RuleValue{r}})) return;
        return;
      case DomainSpec::Kind::AllTerms:
        for (const Term& t : ev_.terms_)
          if (!f(Value{TermValue{t}})) return;
        return;
      case DomainSpec::Kind::TermsIn: {
        const auto& src = d.modifier == Modifier::InductionTerm ? ev_.args_.induction_terms
                                                                : ev_.args_.arbitrary_terms;
        for (const Term& t : src)
          if (!f(Value{TermValue{t}})) return;
        return;
      }
      case DomainSpec::Kind::AllOccs:
        for (std::size_t i : ev_.scope_)
          if (!f(Value{OccurrenceValue{ev_.occs_[i].occ}})) return;
        return;
      case DomainSpec::Kind::OccsOf: {
        const Term t = std::get<TermValue>(env_.lookup(d.term_var)).term;
        for (std::size_t i : ev_.scope_)
          if (ev_.occs_[i].term == t)
            if (!f(Value{OccurrenceValue{ev_.occs_[i].occ}})) return;
        return;
      }
    }
  }

  const Occurrence& occ(const AtomicArg& a) const {
    return std::get<OccurrenceValue>(env_.lookup(*a.var())).occ;
  }
  const Term& term(const AtomicArg& a) const { return std::get<TermValue>(env_.lookup(*a.var())).term; }
  std::size_t number(const AtomicArg& a) const { return std::get<NumberValue>(env_.lookup(*a.var())).n; }
  const std::string& rule(const AtomicArg& a) const {
    return std::get<RuleValue>(env_.lookup(*a.var())).name;
  }

  bool atomic(const AtomicNode& n) const {
    const auto& a = n.args;
    switch (n.name) {
      case AtomicName::IsRuleOf: return ev_.is_rule_of(rule(a[0]), occ(a[1]));
      case AtomicName::TermOccurrenceIsOfTerm: return ev_.occurrence_is_of_term(occ(a[0]), term(a[1]));
      case AtomicName::AreSameTerm: return are_same_term(term(a[0]), term(a[1]));
      case AtomicName::IsInTermOccurrence: return ev_.is_in_term_occurrence(occ(a[0]), occ(a[1]));
      case AtomicName::IsAtomic:
      case AtomicName::IsConstant:
      case AtomicName::IsRecursiveConstant:
      case AtomicName::IsVariable:
      case AtomicName::IsFreeVariable:
      case AtomicName::IsBoundVariable:
      case AtomicName::IsLambda:
      case AtomicName::IsApplication: return ev_.node_kind(n.name, occ(a[0]));
      case AtomicName::IsAnArgumentOf: return ev_.is_an_argument_of(occ(a[0]), occ(a[1]));
      case AtomicName::IsNthArgumentOf: return ev_.is_nth_argument_of(occ(a[0]), number(a[1]), occ(a[2]));
      case AtomicName::IsNthInductionTerm: return ev_.is_nth_induction_term(term(a[0]), number(a[1]));
      case AtomicName::IsNthArbitraryTerm: return ev_.is_nth_arbitrary_term(term(a[0]), number(a[1]));
      case AtomicName::PatternIs:
        return ev_.pattern_is(number(a[0]), occ(a[1]), std::get<Pattern>(a[2].value));
      case AtomicName::IsAtDeepest: return ev_.is_at_deepest(occ(a[0]));
    }
    return false;
  }

  const Evaluator& ev_;
  Env env_;
};

bool Evaluator::eval(const CheckedAssertion& a) const { return Run(*this).eval(a.ast()); }

namespace {

void top_level_exists(const Assertion& a, std::vector<const QuantNode*>& out) {
  if (const auto* q = std::get_if<QuantNode>(&a.node)) {
    if (q->kind == QuantKind::Exists) out.push_back(q);
  } else if (const auto* b = std::get_if<BinaryNode>(&a.node)) {
    top_level_exists(*b->lhs, out);
    top_level_exists(*b->rhs, out);
  }
}

}  // namespace

std::vector<Witness> Evaluator::witnesses(const CheckedAssertion& a) const {
  std::vector<const QuantNode*> roots;
  top_level_exists(a.ast(), roots);
  std::vector<Witness> out;
  for (const QuantNode* q : roots) {
    Value v{NumberValue{0}};
    if (Run(*this).quant(*q, &v)) out.push_back(Witness{q->var, std::move(v)});
  }
  return out;
}

bool eval(const CheckedAssertion& a, const Goal& goal, const Context& ctx, const InductArgs& args) {
  return Evaluator(goal, ctx, args).eval(a);
}

}  // namespace lifter
