#include "lifter/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lifter/error.hpp"

namespace lifter {

namespace {

[[noreturn]] void fail(const Sexp& at, const std::string& message) {
  throw ParseError(message, at.pos);
}

const std::string& expect_string(const Sexp& s, const char* what) {
  if (s.kind != Sexp::Kind::String) fail(s, std::string("expected a string for ") + what);
  return s.text;
}

void expect_arity(const Sexp& form, std::size_t n) {
  if (form.items.size() != n + 1)
    fail(form, "'" + form.items[0].text + "' expects " + std::to_string(n) + " argument" +
                   (n == 1 ? "" : "s") + ", got " + std::to_string(form.items.size() - 1));
}

const Sexp& expect_list_head(const Sexp& s, const char* context) {
  if (!s.is_list() || s.items.empty() || s.items[0].kind != Sexp::Kind::Symbol)
    fail(s, std::string("expected a keyword form in ") + context);
  return s.items[0];
}

bool parse_bool(const Sexp& s) {
  if (s.is_symbol("true")) return true;
  if (s.is_symbol("false")) return false;
  fail(s, "expected true or false");
}

ParamPattern parse_param(const Sexp& s) {
  if (s.is_symbol("var")) return ParamPattern::Var;
  if (s.is_symbol("constructor")) return ParamPattern::Constructor;
  fail(s, "expected var or constructor");
}

Definition parse_defn(const Sexp& form) {
  if (form.items.size() < 3 || form.items.size() > 4)
    fail(form, "'defn' expects a name, (recursive ...) and optional (clauses ...)");
  Definition def;
  def.constant_name = expect_string(form.items[1], "defn name");
  const Sexp& rec = form.items[2];
  if (!rec.is_form("recursive")) fail(rec, "expected (recursive true|false)");
  expect_arity(rec, 1);
  def.is_recursive = parse_bool(rec.items[1]);
  if (form.items.size() == 4) {
    const Sexp& clauses = form.items[3];
    if (!clauses.is_form("clauses")) fail(clauses, "expected (clauses ...)");
    for (std::size_t i = 1; i < clauses.items.size(); ++i) {
      const Sexp& cl = clauses.items[i];
      if (!cl.is_form("clause")) fail(cl, "expected (clause ...)");
      ClausePattern pattern;
      for (std::size_t j = 1; j < cl.items.size(); ++j) pattern.params.push_back(parse_param(cl.items[j]));
      def.clauses.push_back(std::move(pattern));
    }
  }
  return def;
}

Context parse_context(const Sexp& form) {
  Context ctx;
  for (std::size_t i = 1; i < form.items.size(); ++i) {
    const Sexp& entry = form.items[i];
    const Sexp& head = expect_list_head(entry, "context");
    if (head.text == "defn") {
      Definition def = parse_defn(entry);
      std::string name = def.constant_name;
      if (!ctx.definitions.emplace(name, std::move(def)).second)
        throw ValidationError("duplicate definition \"" + name + "\" at " + to_string(entry.pos));
    } else if (head.text == "rule") {
      expect_arity(entry, 2);
      RuleRecord rule;
      rule.rule_name = expect_string(entry.items[1], "rule name");
      const Sexp& from = entry.items[2];
      if (!from.is_form("derived-from")) fail(from, "expected (derived-from \"<const>\")");
      expect_arity(from, 1);
      rule.derived_from = expect_string(from.items[1], "derived-from");
      std::string name = rule.rule_name;
      if (!ctx.rules.emplace(name, std::move(rule)).second)
        throw ValidationError("duplicate rule \"" + name + "\" at " + to_string(entry.pos));
    } else {
      fail(head, "unknown context entry '" + head.text + "'");
    }
  }
  return ctx;
}

std::pair<std::string, InductArgs> parse_args(const Sexp& form) {
  if (form.items.size() < 2) fail(form, "'args' expects an id");
  std::pair<std::string, InductArgs> out;
  out.first = expect_string(form.items[1], "args id");
  bool seen_on = false, seen_arb = false, seen_rule = false;
  for (std::size_t i = 2; i < form.items.size(); ++i) {
    const Sexp& field = form.items[i];
    const Sexp& head = expect_list_head(field, "args");
    auto once = [&](bool& seen) {
      if (seen) fail(field, "duplicate '" + head.text + "' field");
      seen = true;
    };
    if (head.text == "on") {
      once(seen_on);
      for (std::size_t j = 1; j < field.items.size(); ++j)
        out.second.induction_terms.push_back(term_from_sexp(field.items[j]));
    } else if (head.text == "arbitrary") {
      once(seen_arb);
      for (std::size_t j = 1; j < field.items.size(); ++j)
        out.second.arbitrary_terms.push_back(term_from_sexp(field.items[j]));
    } else if (head.text == "rule") {
      once(seen_rule);
      for (std::size_t j = 1; j < field.items.size(); ++j)
        out.second.rules.push_back(expect_string(field.items[j], "rule name"));
    } else {
      fail(head, "unknown args field '" + head.text + "'");
    }
  }
  return out;
}

void validate_term(const Term& t, const std::string& where) {
  if (!is_well_formed(t))
    throw ValidationError(where + ": malformed term " + to_sexp(t) +
                          " (empty name or dangling bound index)");
}

void write_quoted(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace

const InductArgs& CorpusCase::args(const std::string& args_id) const {
  auto it = arg_sets.find(args_id);
  if (it == arg_sets.end())
    throw ValidationError("case \"" + case_id + "\" has no argument set \"" + args_id + "\"");
  return it->second;
}

Term term_from_sexp(const Sexp& form) {
  if (!form.is_list()) fail(form, "expected a term form, e.g. (free \"x\")");
  if (form.items.empty()) fail(form, "empty term form");
  const Sexp& head = form.items[0];
  if (head.kind != Sexp::Kind::Symbol) fail(head, "expected a term keyword");
  const std::string& k = head.text;
  if (k == "const" || k == "free" || k == "schematic") {
    expect_arity(form, 1);
    const std::string& name = expect_string(form.items[1], "name");
    if (k == "const") return Term::constant(name);
    if (k == "free") return Term::free(name);
    return Term::schematic(name);
  }
  if (k == "bound") {
    expect_arity(form, 1);
    if (form.items[1].kind != Sexp::Kind::Integer)
      fail(form.items[1], "bound index must be a natural number");
    return Term::bound(static_cast<std::size_t>(form.items[1].integer));
  }
  if (k == "abs") {
    expect_arity(form, 2);
    return Term::lambda(expect_string(form.items[1], "binder name"), term_from_sexp(form.items[2]));
  }
  if (k == "app") {
    expect_arity(form, 2);
    return Term::app(term_from_sexp(form.items[1]), term_from_sexp(form.items[2]));
  }
  fail(head, "unknown term keyword '" + k + "'");
}

Term parse_term_sexp(std::string_view text) { return term_from_sexp(read_sexp(text)); }

void validate_case(const CorpusCase& c) {
  if (c.case_id.empty()) throw ValidationError("case with empty id");
  const std::string where = "case \"" + c.case_id + "\"";
  if (c.goal.subgoals.empty()) throw ValidationError(where + ": goal has no subgoals");
  for (std::size_t i = 0; i < c.goal.subgoals.size(); ++i)
    validate_term(c.goal.subgoals[i], where + ", subgoal " + std::to_string(i));
  try {
    c.context.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  for (const auto& [id, args] : c.arg_sets) {
    const std::string at = where + ", args \"" + id + "\"";
    if (id.empty()) throw ValidationError(where + ": argument set with empty id");
    for (std::size_t i = 0; i < args.induction_terms.size(); ++i)
      validate_term(args.induction_terms[i], at + ", on[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < args.arbitrary_terms.size(); ++i)
      validate_term(args.arbitrary_terms[i], at + ", arbitrary[" + std::to_string(i) + "]");
    for (const std::string& r : args.rules)
      if (!c.context.find_rule(r))
        throw ValidationError(at + ": rule \"" + r + "\" is not in the context");
  }
}

CorpusCase parse_case_file(std::string_view text) {
  Sexp top = read_sexp(text);
  if (!top.is_form("case")) fail(top, "expected (case \"<id>\" ...)");
  if (top.items.size() < 2) fail(top, "'case' expects an id");
  CorpusCase c;
  c.case_id = expect_string(top.items[1], "case id");
  bool seen_goal = false, seen_context = false;
  for (std::size_t i = 2; i < top.items.size(); ++i) {
    const Sexp& section = top.items[i];
    const Sexp& head = expect_list_head(section, "case");
    if (head.text == "goal") {
      if (seen_goal) fail(section, "duplicate 'goal' section");
      seen_goal = true;
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& sg = section.items[j];
        if (!sg.is_form("subgoal")) fail(sg, "expected (subgoal <term>)");
        expect_arity(sg, 1);
        c.goal.subgoals.push_back(term_from_sexp(sg.items[1]));
      }
    } else if (head.text == "context") {
      if (seen_context) fail(section, "duplicate 'context' section");
      seen_context = true;
      c.context = parse_context(section);
    } else if (head.text == "args") {
      auto [id, args] = parse_args(section);
      if (c.arg_sets.contains(id))
        throw ValidationError("case \"" + c.case_id + "\": duplicate argument set \"" + id +
                              "\" at " + to_string(section.pos));
      c.arg_sets.emplace(std::move(id), std::move(args));
    } else {
      fail(head, "unknown case section '" + head.text + "'");
    }
  }
  if (!seen_goal) fail(top, "case \"" + c.case_id + "\" has no 'goal' section");
  if (!seen_context) fail(top, "case \"" + c.case_id + "\" has no 'context' section");
  validate_case(c);
  return c;
}

std::string render_case(const CorpusCase& c) {
  std::ostringstream os;
  os << "(case ";
  write_quoted(os, c.case_id);
  os << "\n  (goal";
  for (const Term& sg : c.goal.subgoals) os << "\n    (subgoal " << sg << ')';
  os << ")\n  (context";
  for (const auto& [name, def] : c.context.definitions) {
    os << "\n    (defn ";
    write_quoted(os, name);
    os << " (recursive " << (def.is_recursive ? "true" : "false") << ')';
    if (!def.clauses.empty()) {
      os << "\n      (clauses";
      for (const ClausePattern& cl : def.clauses) {
        os << " (clause";
        for (ParamPattern p : cl.params) os << (p == ParamPattern::Var ? " var" : " constructor");
        os << ')';
      }
      os << ')';
    }
    os << ')';
  }
  for (const auto& [name, rule] : c.context.rules) {
    os << "\n    (rule ";
    write_quoted(os, name);
    os << " (derived-from ";
    write_quoted(os, rule.derived_from);
    os << "))";
  }
  os << ')';
  for (const auto& [id, args] : c.arg_sets) {
    os << "\n  (args ";
    write_quoted(os, id);
    os << "\n    (on";
    for (const Term& t : args.induction_terms) os << ' ' << t;
    os << ")\n    (arbitrary";
    for (const Term& t : args.arbitrary_terms) os << ' ' << t;
    os << ")\n    (rule";
    for (const std::string& r : args.rules) {
      os << ' ';
      write_quoted(os, r);
    }
    os << "))";
  }
  os << ")\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("error reading " + file.string());
  return ss.str();
}

CorpusCase load_case_file(const std::filesystem::path& file) {
  std::string text = read_text_file(file);
  try {
    return parse_case_file(text);
  } catch (const ParseError& e) {
    throw ParseError(file.string() + ": " + e.detail(), e.pos());
  } catch (const ValidationError& e) {
    throw ValidationError(file.string() + ": " + e.what());
  }
}

std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".case") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusCase> cases;
  for (const fs::path& f : files) cases.push_back(load_case_file(f));
  std::sort(cases.begin(), cases.end(),
            [](const CorpusCase& a, const CorpusCase& b) { return a.case_id < b.case_id; });
  for (std::size_t i = 1; i < cases.size(); ++i)
    if (cases[i].case_id == cases[i - 1].case_id)
      throw ValidationError("duplicate case id \"" + cases[i].case_id + "\" in " + dir.string());
  return cases;
}

}  // namespace lifter
