#include "lifter/assertion.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace lifter {

namespace {

constexpr ArgSlot kNum{false, Sort::Number};
constexpr ArgSlot kRule{false, Sort::Rule};
constexpr ArgSlot kTerm{false, Sort::Term};
constexpr ArgSlot kOcc{false, Sort::Occurrence};
constexpr ArgSlot kPat{true, Sort::Number};

const std::vector<AtomicInfo>& atomic_table() {
  static const std::vector<AtomicInfo> table = {
      {AtomicName::IsRuleOf, "is_rule_of", Fixity::Infix, {kRule, kOcc}},
      {AtomicName::TermOccurrenceIsOfTerm, "term_occurrence_is_of_term", Fixity::Infix, {kOcc, kTerm}},
      {AtomicName::AreSameTerm, "are_same_term", Fixity::Call, {kTerm, kTerm}},
      {AtomicName::IsInTermOccurrence, "is_in_term_occurrence", Fixity::Infix, {kOcc, kOcc}},
      {AtomicName::IsAtomic, "is_atomic", Fixity::Prefix, {kOcc}},
      {AtomicName::IsConstant, "is_constant", Fixity::Prefix, {kOcc}},
      {AtomicName::IsRecursiveConstant, "is_recursive_constant", Fixity::Prefix, {kOcc}},
      {AtomicName::IsVariable, "is_variable", Fixity::Prefix, {kOcc}},
      {AtomicName::IsFreeVariable, "is_free_variable", Fixity::Prefix, {kOcc}},
      {AtomicName::IsBoundVariable, "is_bound_variable", Fixity::Prefix, {kOcc}},
      {AtomicName::IsLambda, "is_lambda", Fixity::Prefix, {kOcc}},
      {AtomicName::IsApplication, "is_application", Fixity::Prefix, {kOcc}},
      {AtomicName::IsAnArgumentOf, "is_an_argument_of", Fixity::Infix, {kOcc, kOcc}},
      {AtomicName::IsNthArgumentOf, "is_nth_argument_of", Fixity::Call, {kOcc, kNum, kOcc}},
      {AtomicName::IsNthInductionTerm, "is_nth_induction_term", Fixity::Infix, {kTerm, kNum}},
      {AtomicName::IsNthArbitraryTerm, "is_nth_arbitrary_term", Fixity::Infix, {kTerm, kNum}},
      {AtomicName::PatternIs, "pattern_is", Fixity::Call, {kNum, kOcc, kPat}},
      {AtomicName::IsAtDeepest, "is_at_deepest", Fixity::Prefix, {kOcc}},
  };
  return table;
}

constexpr std::array<std::pair<std::string_view, Pattern>, 3> kPatterns = {{
    {"all_only_var", Pattern::AllOnlyVar},
    {"all_constructor", Pattern::AllConstructor},
    {"mixed", Pattern::Mixed},
}};

std::optional<Pattern> find_pattern(std::string_view text) {
  for (const auto& [name, p] : kPatterns)
    if (name == text) return p;
  return std::nullopt;
}

constexpr std::array<std::string_view, 12> kKeywords = {
    "EX",     "ALL",  "IN",   "Not",  "True",            "False",
    "number", "rule", "term", "term_occurrence", "induction_term", "arbitrary_term",
};

bool is_reserved(std::string_view text) {
  for (std::string_view k : kKeywords)
    if (k == text) return true;
  return find_atomic(text) != nullptr || find_pattern(text).has_value();
}

bool same_children(const AssertionPtr& a, const AssertionPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool same_arg(const AtomicArg& a, const AtomicArg& b) { return a.value == b.value; }

}  // namespace

std::string_view to_string(Sort s) {
  switch (s) {
    case Sort::Number: return "number";
    case Sort::Rule: return "rule";
    case Sort::Term: return "term";
    case Sort::Occurrence: return "term_occurrence";
  }
  return "?";
}

std::string_view to_string(Pattern p) {
  for (const auto& [name, q] : kPatterns)
    if (q == p) return name;
  return "?";
}

const AtomicInfo& atomic_info(AtomicName name) {
  return atomic_table()[static_cast<std::size_t>(name)];
}

const AtomicInfo* find_atomic(std::string_view text) {
  for (const AtomicInfo& info : atomic_table())
    if (info.text == text) return &info;
  return nullptr;
}

std::span<const AtomicInfo> all_atomics() { return atomic_table(); }

Sort DomainSpec::sort() const {
  switch (kind) {
    case Kind::AllNumbers: return Sort::Number;
    case Kind::AllRules: return Sort::Rule;
    case Kind::AllTerms:
    case Kind::TermsIn: return Sort::Term;
    case Kind::AllOccs:
    case Kind::OccsOf: return Sort::Occurrence;
  }
  return Sort::Term;
}

bool operator==(const DomainSpec& a, const DomainSpec& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == DomainSpec::Kind::TermsIn) return a.modifier == b.modifier;
  if (a.kind == DomainSpec::Kind::OccsOf) return a.term_var == b.term_var;
  return true;
}

bool operator==(const Assertion& a, const Assertion& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, BoolNode>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, NotNode>) {
          return same_children(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return x.op == y.op && same_children(x.lhs, y.lhs) && same_children(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, QuantNode>) {
          return x.kind == y.kind && x.var == y.var && x.domain == y.domain &&
                 same_children(x.body, y.body);
        } else {
          if (x.name != y.name || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!same_arg(x.args[i], y.args[i])) return false;
          return true;
        }
      },
      a.node);
}

namespace ast {

AssertionPtr boolean(bool value) { return std::make_shared<Assertion>(Assertion{BoolNode{value}}); }
AssertionPtr negate(AssertionPtr operand) {
  return std::make_shared<Assertion>(Assertion{NotNode{std::move(operand)}});
}
AssertionPtr binary(BinOp op, AssertionPtr lhs, AssertionPtr rhs) {
  return std::make_shared<Assertion>(Assertion{BinaryNode{op, std::move(lhs), std::move(rhs)}});
}
AssertionPtr conj(AssertionPtr lhs, AssertionPtr rhs) { return binary(BinOp::And, std::move(lhs), std::move(rhs)); }
AssertionPtr disj(AssertionPtr lhs, AssertionPtr rhs) { return binary(BinOp::Or, std::move(lhs), std::move(rhs)); }
AssertionPtr implies(AssertionPtr lhs, AssertionPtr rhs) { return binary(BinOp::Imp, std::move(lhs), std::move(rhs)); }
AssertionPtr quant(QuantKind kind, std::string var, DomainSpec domain, AssertionPtr body) {
  return std::make_shared<Assertion>(
      Assertion{QuantNode{kind, std::move(var), std::move(domain), std::move(body), {}}});
}
AssertionPtr exists(std::string var, DomainSpec domain, AssertionPtr body) {
  return quant(QuantKind::Exists, std::move(var), std::move(domain), std::move(body));
}
AssertionPtr forall(std::string var, DomainSpec domain, AssertionPtr body) {
  return quant(QuantKind::All, std::move(var), std::move(domain), std::move(body));
}
AssertionPtr atomic(AtomicName name, std::vector<AtomicArg> args) {
  return std::make_shared<Assertion>(Assertion{AtomicNode{name, std::move(args), {}}});
}
AssertionPtr atomic(AtomicName name, std::vector<std::string> vars) {
  std::vector<AtomicArg> args;
  for (std::string& v : vars) args.push_back(AtomicArg{std::move(v), {}});
  return atomic(name, std::move(args));
}

}  // namespace ast

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Colon, Dot, And, Or, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      SourcePos start = pos_;
      if (eof()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      char c = peek();
      auto single = [&](Tok k) {
        advance();
        out.push_back({k, std::string(1, c), start});
      };
      if (c == '(') single(Tok::LParen);
      else if (c == ')') single(Tok::RParen);
      else if (c == ',') single(Tok::Comma);
      else if (c == ':') single(Tok::Colon);
      else if (c == '.') single(Tok::Dot);
      else if (c == '/' && peek(1) == '\\') two(out, Tok::And, "/\\", start);
      else if (c == '\\' && peek(1) == '/') two(out, Tok::Or, "\\/", start);
      else if (c == '-' && peek(1) == '>') two(out, Tok::Arrow, "->", start);
      else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (!eof() && is_ident_char(peek())) {
          id.push_back(peek());
          advance();
        }
        out.push_back({Tok::Ident, std::move(id), start});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool eof() const { return at_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return at_ + ahead < text_.size() ? text_[at_ + ahead] : '\0';
  }
  void advance() {
    if (text_[at_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++at_;
  }
  void two(std::vector<Token>& out, Tok k, const char* text, SourcePos start) {
    advance();
    advance();
    out.push_back({k, text, start});
  }

  void skip_blank() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '(' && peek(1) == '*') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void skip_comment() {
    SourcePos start = pos_;
    int level = 0;
    do {
      if (eof()) throw ParseError("unterminated comment", start);
      if (peek() == '(' && peek(1) == '*') {
        ++level;
        advance();
        advance();
      } else if (peek() == '*' && peek(1) == ')') {
        --level;
        advance();
        advance();
      } else {
        advance();
      }
    } while (level > 0);
  }

  std::string_view text_;
  std::size_t at_ = 0;
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  AssertionPtr parse() {
    AssertionPtr a = parse_imp();
    if (cur().kind != Tok::End) error("unexpected " + show(cur()) + " after complete assertion");
    return a;
  }

 private:
  const Token& cur() const { return toks_[at_]; }
  const Token& next() const { return toks_[std::min(at_ + 1, toks_.size() - 1)]; }
  Token take() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  static std::string show(const Token& t) {
    if (t.kind == Tok::Ident) return "'" + t.text + "'";
    return std::string(describe(t.kind));
  }

  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, cur().pos); }

  bool at_word(std::string_view w) const { return cur().kind == Tok::Ident && cur().text == w; }

  Token expect(Tok k, std::string_view context) {
    if (cur().kind != k)
      error("expected " + std::string(describe(k)) + " " + std::string(context) + ", found " + show(cur()));
    return take();
  }

  void expect_word(std::string_view w, std::string_view context) {
    if (!at_word(w)) error("expected '" + std::string(w) + "' " + std::string(context) + ", found " + show(cur()));
    take();
  }

  Token expect_var(std::string_view context) {
    if (cur().kind != Tok::Ident)
      error("expected a variable " + std::string(context) + ", found " + show(cur()));
    if (is_reserved(cur().text))
      error("'" + cur().text + "' is a reserved word and cannot be used as a variable");
    return take();
  }

  AssertionPtr parse_imp() {
    AssertionPtr lhs = parse_or();
    if (cur().kind == Tok::Arrow) {
      take();
      return ast::implies(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  AssertionPtr parse_or() {
    AssertionPtr lhs = parse_and();
    while (cur().kind == Tok::Or) {
      take();
      lhs = ast::disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  AssertionPtr parse_and() {
    AssertionPtr lhs = parse_unary();
    while (cur().kind == Tok::And) {
      take();
      lhs = ast::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  AssertionPtr parse_unary() {
    const Token& t = cur();
    if (t.kind == Tok::LParen) {
      take();
      AssertionPtr inner = parse_imp();
      expect(Tok::RParen, "to close '('");
      return inner;
    }
    if (t.kind != Tok::Ident) error("expected an assertion, found " + show(t));
    if (t.text == "Not") {
      take();
      return ast::negate(parse_unary());
    }
    if (t.text == "True" || t.text == "False") {
      bool v = t.text == "True";
      take();
      return ast::boolean(v);
    }
    if (t.text == "EX" || t.text == "ALL") return parse_quant();
    return parse_atomic();
  }

  AssertionPtr parse_quant() {
    Token q = take();
    Token var = expect_var("after " + q.text);
    expect(Tok::Colon, "after quantified variable");
    DomainSpec dom = parse_domain();
    expect(Tok::Dot, "after quantifier domain");
    AssertionPtr body = parse_imp();
    auto node = QuantNode{q.text == "EX" ? QuantKind::Exists : QuantKind::All, var.text, std::move(dom),
                          std::move(body), var.pos};
    return std::make_shared<Assertion>(Assertion{std::move(node)});
  }

  DomainSpec parse_domain() {
    if (cur().kind != Tok::Ident) error("expected a quantifier domain, found " + show(cur()));
    std::string word = cur().text;
    if (word == "number") { take(); return DomainSpec::numbers(); }
    if (word == "rule") { take(); return DomainSpec::rules(); }
    if (word == "induction_term") { take(); return DomainSpec::terms_in(Modifier::InductionTerm); }
    if (word == "arbitrary_term") { take(); return DomainSpec::terms_in(Modifier::ArbitraryTerm); }
    if (word == "term") {
      take();
      if (!at_word("IN")) return DomainSpec::terms();
      take();
      if (at_word("induction_term")) { take(); return DomainSpec::terms_in(Modifier::InductionTerm); }
      if (at_word("arbitrary_term")) { take(); return DomainSpec::terms_in(Modifier::ArbitraryTerm); }
      error("expected induction_term or arbitrary_term after 'term IN', found " + show(cur()));
    }
    if (word == "term_occurrence") {
      take();
      if (!at_word("IN")) return DomainSpec::occurrences();
      take();
      Token tv = expect_var("after 'term_occurrence IN'");
      expect(Tok::Colon, "after term variable");
      expect_word("term", "in 'term_occurrence IN x : term'");
      DomainSpec d = DomainSpec::occurrences_of(tv.text);
      d.term_var_pos = tv.pos;
      return d;
    }
    error("unknown quantifier domain " + show(cur()));
  }

  AtomicArg parse_call_arg() {
    if (cur().kind != Tok::Ident) error("expected an argument, found " + show(cur()));
    Token t = take();
    if (auto p = find_pattern(t.text)) return AtomicArg{*p, t.pos};
    if (is_reserved(t.text)) throw ParseError("'" + t.text + "' cannot be an atomic argument", t.pos);
    return AtomicArg{t.text, t.pos};
  }

  AssertionPtr parse_atomic() {
    Token first = take();
    if (const AtomicInfo* info = find_atomic(first.text)) {
      if (info->fixity == Fixity::Infix)
        throw ParseError("'" + first.text + "' is infix: write 'x " + first.text + " y'", first.pos);
      std::vector<AtomicArg> args;
      if (info->fixity == Fixity::Prefix) {
        if (cur().kind != Tok::Ident || is_reserved(cur().text))
          error("'" + first.text + "' expects 1 argument, found " + show(cur()));
        Token v = take();
        args.push_back(AtomicArg{v.text, v.pos});
      } else {
        expect(Tok::LParen, "after '" + first.text + "'");
        for (std::size_t i = 0; i < info->slots.size(); ++i) {
          if (i > 0) {
            if (cur().kind == Tok::RParen)
              error("'" + first.text + "' expects " + std::to_string(info->slots.size()) +
                    " arguments, got " + std::to_string(i));
            expect(Tok::Comma, "between arguments");
          }
          args.push_back(parse_call_arg());
        }
        if (cur().kind == Tok::Comma)
          error("'" + first.text + "' expects " + std::to_string(info->slots.size()) +
                " arguments, got more");
        expect(Tok::RParen, "to close the argument list of '" + first.text + "'");
      }
      return std::make_shared<Assertion>(Assertion{AtomicNode{info->name, std::move(args), first.pos}});
    }
    if (is_reserved(first.text))
      throw ParseError("unexpected '" + first.text + "'", first.pos);

    // IDENT infix_name IDENT
    if (cur().kind != Tok::Ident)
      error("expected an infix atomic after '" + first.text + "', found " + show(cur()));
    Token op = cur();
    const AtomicInfo* info = find_atomic(op.text);
    if (!info) throw ParseError("unknown atomic '" + op.text + "'", op.pos);
    if (info->fixity != Fixity::Infix)
      throw ParseError("'" + op.text + "' is not an infix atomic", op.pos);
    take();
    if (cur().kind != Tok::Ident || is_reserved(cur().text))
      error("'" + op.text + "' expects a right-hand argument, found " + show(cur()));
    Token rhs = take();
    std::vector<AtomicArg> args{AtomicArg{first.text, first.pos}, AtomicArg{rhs.text, rhs.pos}};
    return std::make_shared<Assertion>(Assertion{AtomicNode{info->name, std::move(args), op.pos}});
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering

enum class Level { Imp = 1, Or = 2, And = 3, Unary = 4 };

Level level_of(const Assertion& a) {
  if (const auto* b = std::get_if<BinaryNode>(&a.node)) {
    switch (b->op) {
      case BinOp::Imp: return Level::Imp;
      case BinOp::Or: return Level::Or;
      case BinOp::And: return Level::And;
    }
  }
  return Level::Unary;
}

bool is_quant(const Assertion& a) { return std::holds_alternative<QuantNode>(a.node); }

void render(std::ostream& os, const Assertion& a);

// Quantifier bodies extend to the right, so a quantifier is only written bare
// where nothing can follow it.
void render_operand(std::ostream& os, const Assertion& a, Level min) {
  if (is_quant(a) || level_of(a) < min) {
    os << "( ";
    render(os, a);
    os << " )";
  } else {
    render(os, a);
  }
}

void render_domain(std::ostream& os, const DomainSpec& d) {
  switch (d.kind) {
    case DomainSpec::Kind::AllNumbers: os << "number"; return;
    case DomainSpec::Kind::AllRules: os << "rule"; return;
    case DomainSpec::Kind::AllTerms: os << "term"; return;
    case DomainSpec::Kind::AllOccs: os << "term_occurrence"; return;
    case DomainSpec::Kind::TermsIn:
      os << "term IN " << (d.modifier == Modifier::InductionTerm ? "induction_term" : "arbitrary_term");
      return;
    case DomainSpec::Kind::OccsOf: os << "term_occurrence IN " << d.term_var << " : term"; return;
  }
}

void render_arg(std::ostream& os, const AtomicArg& arg) {
  if (const std::string* v = arg.var()) os << *v;
  else os << to_string(std::get<Pattern>(arg.value));
}

void render(std::ostream& os, const Assertion& a) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BoolNode>) {
          os << (n.value ? "True" : "False");
        } else if constexpr (std::is_same_v<T, NotNode>) {
          os << "Not ";
          render_operand(os, *n.operand, Level::Unary);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          switch (n.op) {
            case BinOp::And:
              render_operand(os, *n.lhs, Level::And);
              os << " /\\ ";
              render_operand(os, *n.rhs, Level::Unary);
              break;
            case BinOp::Or:
              render_operand(os, *n.lhs, Level::Or);
              os << " \\/ ";
              render_operand(os, *n.rhs, Level::And);
              break;
            case BinOp::Imp:
              render_operand(os, *n.lhs, Level::Or);
              os << " -> ";
              render_operand(os, *n.rhs, Level::Imp);
              break;
          }
        } else if constexpr (std::is_same_v<T, QuantNode>) {
          os << (n.kind == QuantKind::Exists ? "EX " : "ALL ") << n.var << " : ";
          render_domain(os, n.domain);
          os << " . ";
          render(os, *n.body);
        } else {
          const AtomicInfo& info = atomic_info(n.name);
          switch (info.fixity) {
            case Fixity::Prefix:
              os << info.text << ' ';
              render_arg(os, n.args.at(0));
              break;
            case Fixity::Infix:
              render_arg(os, n.args.at(0));
              os << ' ' << info.text << ' ';
              render_arg(os, n.args.at(1));
              break;
            case Fixity::Call:
              os << info.text << " (";
              for (std::size_t i = 0; i < n.args.size(); ++i) {
                os << (i ? ", " : " ");
                render_arg(os, n.args[i]);
              }
              os << " )";
              break;
          }
        }
      },
      a.node);
}

// ---------------------------------------------------------------------------
// Sort checking

class SortChecker {
 public:
  void check(const Assertion& a) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BoolNode>) {
          } else if constexpr (std::is_same_v<T, NotNode>) {
            check(*n.operand);
          } else if constexpr (std::is_same_v<T, BinaryNode>) {
            check(*n.lhs);
            check(*n.rhs);
          } else if constexpr (std::is_same_v<T, QuantNode>) {
            if (n.domain.kind == DomainSpec::Kind::OccsOf)
              require(n.domain.term_var, Sort::Term, n.domain.term_var_pos,
                      "the domain of '" + n.var + "'");
            scope_.push_back({n.var, n.domain.sort(), n.pos});
            bindings.push_back(scope_.back());
            check(*n.body);
            scope_.pop_back();
          } else {
            check_atomic(n);
          }
        },
        a.node);
  }

  std::vector<VarBinding> bindings;

 private:
  void check_atomic(const AtomicNode& n) {
    const AtomicInfo& info = atomic_info(n.name);
    if (n.args.size() != info.slots.size())
      throw SortError("'" + std::string(info.text) + "' expects " + std::to_string(info.slots.size()) +
                          " arguments, got " + std::to_string(n.args.size()),
                      n.pos);
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      const ArgSlot& slot = info.slots[i];
      const AtomicArg& arg = n.args[i];
      const std::string* var = arg.var();
      if (slot.pattern) {
        if (var)
          throw SortError("argument " + std::to_string(i + 1) + " of '" + std::string(info.text) +
                              "' must be all_only_var, all_constructor or mixed, got '" + *var + "'",
                          arg.pos);
        continue;
      }
      if (!var)
        throw SortError("pattern literal at " + std::string(to_string(slot.sort)) + " position " +
                            std::to_string(i + 1) + " of '" + std::string(info.text) + "'",
                        arg.pos);
      require(*var, slot.sort, arg.pos, "position " + std::to_string(i + 1) + " of '" + std::string(info.text) + "'");
    }
  }

  void require(const std::string& var, Sort want, SourcePos pos, const std::string& where) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->var != var) continue;
      if (it->sort != want)
        throw SortError("sort mismatch: '" + var + "' bound at " + std::string(to_string(it->sort)) +
                            ", used at " + std::string(to_string(want)) + " in " + where,
                        pos);
      return;
    }
    throw SortError("unbound variable '" + var + "' in " + where, pos);
  }

  std::vector<VarBinding> scope_;
};

}  // namespace

AssertionPtr parse_assertion(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

std::string render_assertion(const Assertion& a) {
  std::ostringstream os;
  render(os, a);
  return os.str();
}

CheckedAssertion sort_check(AssertionPtr a) {
  if (!a) throw std::invalid_argument("sort_check: null assertion");
  SortChecker checker;
  checker.check(*a);
  return CheckedAssertion(std::move(a), std::move(checker.bindings));
}

CheckedAssertion compile_assertion(std::string_view text) { return sort_check(parse_assertion(text)); }

}  // namespace lifter
