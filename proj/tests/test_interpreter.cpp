#include <gtest/gtest.h>

#include "support.hpp"

using namespace lifter;
using namespace lifter::testing;

namespace {

Term C(const char* n) { return Term::constant(n); }
Term F(const char* n) { return Term::free(n); }
Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

Occurrence at(std::vector<std::size_t> path, std::size_t sg = 0) { return Occurrence{sg, std::move(path)}; }

struct Itrev : ::testing::Test {
  const CorpusCase& c = shipped_case("itrev");
  Evaluator model{c.goal, c.context, c.args("model")};
  Evaluator alt{c.goal, c.context, c.args("alt")};
  // root [], = [0], itrev-app [1], itrev [1,0], xs [1,1], ys [1,2],
  // @-app [2], @ [2,0], rev-app [2,1], rev [2,1,0], xs [2,1,1], ys [2,2]
};

struct Exec : ::testing::Test {
  const CorpusCase& c = shipped_case("exec");
  Evaluator model{c.goal, c.context, c.args("model")};
  Evaluator alt{c.goal, c.context, c.args("alt")};
  // inner exec application at [2,3]: exec [2,3,0], is1 [2,3,1], s [2,3,2], stk [2,3,3]
};

bool run(const std::string& text, const CorpusCase& c, const InductArgs& a) {
  return eval(compile_assertion(text), c.goal, c.context, a);
}

}  // namespace

TEST_F(Itrev, PathsResolveAsExpected) {
  EXPECT_EQ(resolve(c.goal, at({1, 0})), C("itrev"));
  EXPECT_EQ(resolve(c.goal, at({1, 1})), F("xs"));
  EXPECT_EQ(resolve(c.goal, at({2, 1, 1})), F("xs"));
  EXPECT_EQ(resolve(c.goal, at({2, 1, 0})), C("rev"));
  EXPECT_EQ(find_occurrence(c.goal, F("xs"), 1), at({2, 1, 1}));
}

TEST_F(Itrev, Domains) {
  EXPECT_EQ(max_constant_arity(c.goal), 2u);
  EXPECT_EQ(number_domain_max(c.goal), 10u);
  EXPECT_EQ(model.max_number(), 10u);
  EXPECT_EQ(model.terms().size(), 10u);
  EXPECT_EQ(model.scope_occurrences().size(), 12u);
  EXPECT_EQ(model.scope_max_depth(), 3u);
}

TEST_F(Itrev, NodeKinds) {
  EXPECT_TRUE(model.node_kind(AtomicName::IsRecursiveConstant, at({1, 0})));
  EXPECT_TRUE(model.node_kind(AtomicName::IsConstant, at({1, 0})));
  EXPECT_FALSE(model.node_kind(AtomicName::IsRecursiveConstant, at({0})));
  EXPECT_FALSE(model.node_kind(AtomicName::IsConstant, at({1, 1})));
  EXPECT_TRUE(model.node_kind(AtomicName::IsFreeVariable, at({1, 1})));
  EXPECT_TRUE(model.node_kind(AtomicName::IsVariable, at({1, 1})));
  EXPECT_TRUE(model.node_kind(AtomicName::IsAtomic, at({1, 1})));
  EXPECT_FALSE(model.node_kind(AtomicName::IsAtomic, at({1})));
  EXPECT_TRUE(model.node_kind(AtomicName::IsApplication, at({1})));
  EXPECT_FALSE(model.node_kind(AtomicName::IsLambda, at({1})));
  EXPECT_FALSE(model.node_kind(AtomicName::IsConstant, at({9, 9})));
}

TEST(NodeKinds, LambdaAndBound) {
  Goal g{{Term::lambda("x", ap(C("f"), Term::bound(0)))}};
  Context ctx;
  ctx.definitions["f"] = Definition{"f", false, {}};
  Evaluator ev(g, ctx, InductArgs{});
  EXPECT_TRUE(ev.node_kind(AtomicName::IsLambda, at({})));
  EXPECT_FALSE(ev.node_kind(AtomicName::IsAtomic, at({})));
  EXPECT_TRUE(ev.node_kind(AtomicName::IsApplication, at({0})));
  EXPECT_TRUE(ev.node_kind(AtomicName::IsBoundVariable, at({0, 1})));
  EXPECT_TRUE(ev.node_kind(AtomicName::IsVariable, at({0, 1})));
  EXPECT_FALSE(ev.node_kind(AtomicName::IsFreeVariable, at({0, 1})));
  EXPECT_TRUE(ev.node_kind(AtomicName::IsConstant, at({0, 0})));
  EXPECT_FALSE(ev.node_kind(AtomicName::IsRecursiveConstant, at({0, 0})));

  Goal s{{Term::schematic("P")}};
  Evaluator ev2(s, ctx, InductArgs{});
  EXPECT_TRUE(ev2.node_kind(AtomicName::IsVariable, at({})));
  EXPECT_FALSE(ev2.node_kind(AtomicName::IsFreeVariable, at({})));
  EXPECT_FALSE(ev2.node_kind(AtomicName::IsBoundVariable, at({})));
}

TEST_F(Itrev, OccurrenceIsOfTerm) {
  EXPECT_TRUE(model.occurrence_is_of_term(at({1, 1}), F("xs")));
  EXPECT_TRUE(model.occurrence_is_of_term(at({2, 1, 1}), F("xs")));
  EXPECT_FALSE(model.occurrence_is_of_term(at({1, 2}), F("xs")));
  EXPECT_FALSE(model.occurrence_is_of_term(at({1, 1}), C("xs")));
  EXPECT_TRUE(Evaluator::are_same_term(F("xs"), F("xs")));
  EXPECT_FALSE(Evaluator::are_same_term(F("xs"), Term::schematic("xs")));
}

TEST(SubtermOf, SmallStepsPair) {
  const CorpusCase& c = shipped_case("small_steps");
  Evaluator ev(c.goal, c.context, c.args("generalized"));
  Term pair = ap(ap(C("Pair"), F("c")), F("s"));
  Occurrence p = find_occurrence(c.goal, pair);
  Occurrence cv = find_occurrence(c.goal, F("c"));
  EXPECT_TRUE(ev.is_in_term_occurrence(cv, p));
  EXPECT_FALSE(ev.is_in_term_occurrence(p, cv));
  EXPECT_TRUE(ev.is_in_term_occurrence(p, p));
  EXPECT_TRUE(ev.is_in_term_occurrence(cv, at({})));
}

TEST(SubtermOf, DifferentSubgoals) {
  Goal g{{ap(C("f"), F("x")), ap(C("f"), F("x"))}};
  Evaluator ev(g, Context{}, InductArgs{});
  EXPECT_TRUE(ev.is_in_term_occurrence(at({1}, 1), at({}, 1)));
  EXPECT_FALSE(ev.is_in_term_occurrence(at({1}, 1), at({}, 0)));
  EXPECT_FALSE(ev.is_in_term_occurrence(at({1}, 0), at({}, 1)));
}

TEST_F(Itrev, ArgumentRelations) {
  EXPECT_TRUE(model.is_nth_argument_of(at({1, 1}), 0, at({1, 0})));
  EXPECT_FALSE(model.is_nth_argument_of(at({1, 2}), 0, at({1, 0})));
  EXPECT_TRUE(model.is_nth_argument_of(at({1, 2}), 1, at({1, 0})));
  EXPECT_FALSE(model.is_nth_argument_of(at({1, 1}), 0, at({1})));
  EXPECT_FALSE(model.is_nth_argument_of(at({2, 1, 1}), 0, at({1, 0})));
  EXPECT_TRUE(model.is_an_argument_of(at({1, 1}), at({1, 0})));
  EXPECT_TRUE(model.is_an_argument_of(at({2, 1, 1}), at({2, 1, 0})));
  EXPECT_FALSE(model.is_an_argument_of(at({1, 0}), at({1, 0})));
  EXPECT_FALSE(model.is_an_argument_of(at({2, 2}), at({1, 0})));
  EXPECT_FALSE(model.is_an_argument_of(at({1}), at({})));
}

TEST_F(Exec, InnerExecArguments) {
  Occurrence head = at({2, 3, 0});
  EXPECT_EQ(resolve(c.goal, head), C("exec"));
  EXPECT_TRUE(alt.is_nth_argument_of(at({2, 3, 1}), 0, head));
  EXPECT_TRUE(alt.is_nth_argument_of(at({2, 3, 2}), 1, head));
  EXPECT_TRUE(alt.is_nth_argument_of(at({2, 3, 3}), 2, head));
  EXPECT_EQ(max_constant_arity(c.goal), 3u);
  EXPECT_EQ(alt.scope_max_depth(), 3u);
}

TEST_F(Itrev, InductionAndArbitraryPositions) {
  EXPECT_TRUE(alt.is_nth_induction_term(F("ys"), 1));
  EXPECT_FALSE(alt.is_nth_induction_term(F("ys"), 0));
  EXPECT_TRUE(alt.is_nth_induction_term(F("xs"), 0));
  EXPECT_FALSE(alt.is_nth_induction_term(F("xs"), 5));
  EXPECT_TRUE(model.is_nth_arbitrary_term(F("ys"), 0));
  EXPECT_FALSE(alt.is_nth_arbitrary_term(F("ys"), 0));
}

TEST_F(Exec, ArbitraryPosition) {
  EXPECT_TRUE(model.is_nth_arbitrary_term(F("stk"), 0));
  EXPECT_FALSE(model.is_nth_arbitrary_term(F("stk"), 1));
}

TEST_F(Itrev, RuleOf) {
  EXPECT_TRUE(alt.is_rule_of("itrev.induct", at({1, 0})));
  EXPECT_FALSE(alt.is_rule_of("itrev.induct", at({2, 1, 0})));
  EXPECT_FALSE(alt.is_rule_of("itrev.induct", at({1, 1})));
  EXPECT_FALSE(alt.is_rule_of("nosuch.induct", at({1, 0})));
}

TEST_F(Exec, RuleOf) {
  EXPECT_TRUE(alt.is_rule_of("exec.induct", at({2, 3, 0})));
  EXPECT_TRUE(alt.is_rule_of("exec.induct", at({1, 0})));
  EXPECT_FALSE(alt.is_rule_of("exec.induct", at({0})));
}

TEST_F(Itrev, PatternIs) {
  EXPECT_TRUE(model.pattern_is(0, at({1, 0}), Pattern::AllConstructor));
  EXPECT_FALSE(model.pattern_is(0, at({1, 0}), Pattern::AllOnlyVar));
  EXPECT_FALSE(model.pattern_is(0, at({1, 0}), Pattern::Mixed));
  EXPECT_TRUE(model.pattern_is(1, at({1, 0}), Pattern::AllOnlyVar));
  EXPECT_FALSE(model.pattern_is(2, at({1, 0}), Pattern::AllOnlyVar));
  for (Pattern p : {Pattern::AllOnlyVar, Pattern::AllConstructor, Pattern::Mixed})
    EXPECT_FALSE(model.pattern_is(0, at({1, 1}), p));
  EXPECT_FALSE(model.pattern_is(0, at({0}), Pattern::AllConstructor));
}

TEST_F(Exec, PatternIsMixedForExec1) {
  Goal g{{Term::apply(C("exec1"), std::vector<Term>{F("i"), F("s"), F("stk")})}};
  Evaluator ev(g, c.context, InductArgs{});
  EXPECT_TRUE(ev.pattern_is(2, at({0}), Pattern::Mixed));
  EXPECT_TRUE(ev.pattern_is(0, at({0}), Pattern::AllConstructor));
  EXPECT_TRUE(ev.pattern_is(1, at({0}), Pattern::AllOnlyVar));
  EXPECT_TRUE(model.pattern_is(0, at({1, 0}), Pattern::AllConstructor));
}

TEST_F(Itrev, Deepest) {
  EXPECT_TRUE(model.is_at_deepest(at({2, 1, 1})));
  EXPECT_TRUE(model.is_at_deepest(at({2, 1, 0})));
  EXPECT_FALSE(model.is_at_deepest(at({1, 1})));
  EXPECT_FALSE(model.is_at_deepest(at({})));
  EXPECT_FALSE(model.is_at_deepest(at({42})));
}

TEST_F(Exec, Deepest) {
  for (std::size_t k : {1, 2, 3}) EXPECT_TRUE(model.is_at_deepest(at({2, 3, k})));
  EXPECT_FALSE(model.is_at_deepest(at({2, 1})));
}

TEST_F(Itrev, NoConstantHeuristic) {
  EXPECT_TRUE(eval_named("h1_no_constant", c, c.args("model")));
  EXPECT_FALSE(eval_named("h1_no_constant", c, c.args("on-itrev")));
  EXPECT_TRUE(eval_named("h1_no_constant_sugar", c, c.args("model")));
  EXPECT_FALSE(eval_named("h1_no_constant_sugar", c, c.args("on-itrev")));
}

TEST_F(Itrev, VacuousUniversal) {
  InductArgs none;
  EXPECT_TRUE(run("ALL t : term IN induction_term . False", c, none));
  EXPECT_FALSE(run("EX t : term IN induction_term . True", c, none));
  EXPECT_TRUE(run("ALL t : term IN arbitrary_term . False", c, none));
  EXPECT_FALSE(run("EX t : arbitrary_term . True", c, none));
  EXPECT_TRUE(run("ALL r : rule . False", c, none));
  EXPECT_FALSE(run("EX r : rule . True", c, none));
}

TEST_F(Itrev, QuantifierDomains) {
  InductArgs none;
  EXPECT_TRUE(run("EX n : number . ALL m : number . Not ( EX o : term_occurrence . is_nth_argument_of ( o , m , o ) )", c, none));
  // 12 occurrences of 10 distinct terms: xs and ys occur twice
  EXPECT_TRUE(run("EX t : term . EX o1 : term_occurrence IN t : term . EX o2 : term_occurrence IN t : term . "
                  "Not ( o1 is_in_term_occurrence o2 )", c, none));
  EXPECT_TRUE(run("ALL t : term . EX o : term_occurrence IN t : term . True", c, none));
  EXPECT_FALSE(run("EX o : term_occurrence . is_lambda o", c, none));
  EXPECT_TRUE(run("EX r : rule . True", c, c.args("alt")));
  EXPECT_TRUE(run("EX t : induction_term . EX n : number . t is_nth_induction_term n /\\ "
                  "Not ( EX m : number . t is_nth_arbitrary_term m )", c, c.args("alt")));
}

TEST_F(Itrev, ShadowedVariablesUseInnermostBinding) {
  InductArgs none;
  EXPECT_TRUE(run("EX x : term . EX x : term_occurrence . is_at_deepest x", c, none));
  EXPECT_TRUE(run("ALL x : term_occurrence . ( EX x : term . True ) /\\ ( is_at_deepest x \\/ Not ( is_at_deepest x ) )", c, none));
  EXPECT_FALSE(run("EX x : term_occurrence . is_lambda x \\/ ( EX x : term_occurrence . is_lambda x )", c, none));
}

TEST_F(Itrev, WitnessesForTopLevelExists) {
  CheckedAssertion a = compile_assertion("EX r1 : rule . EX t : term . True");
  std::vector<Witness> w = alt.witnesses(a);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].var, "r1");
  EXPECT_EQ(to_string(w[0].value), "itrev.induct");
  EXPECT_TRUE(model.witnesses(a).empty());
}

TEST_F(Itrev, EvaluatorIsDeterministic) {
  for (const HeuristicEntry& h : shipped_heuristics().entries()) {
    bool first = alt.eval(h.assertion);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(alt.eval(h.assertion), first) << h.name;
    EXPECT_EQ(eval(h.assertion, c.goal, c.context, c.args("alt")), first) << h.name;
  }
}
