#include "lifter/term.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "lifter/error.hpp"

namespace lifter {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::size_t index = 0;
  std::vector<Term> kids;  // Lambda: [body]; App: [fun, arg]
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

namespace detail {

// Node construction needs access to Term's private constructor; kept here
// so the header stays free of the node layout.
struct TermFactory {
  static Term make(TermKind kind, std::string name, std::size_t index, std::vector<Term> kids) {
    auto node = std::make_shared<Term::Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->index = index;
    node->kids = std::move(kids);
    std::size_t h = mix(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(node->name));
    h = mix(h, node->index);
    for (const Term& k : node->kids) h = mix(h, k.hash());
    node->hash = h;
    return Term(std::move(node));
  }
};

}  // namespace detail

Term Term::constant(std::string name) {
  return detail::TermFactory::make(TermKind::Const, std::move(name), 0, {});
}
Term Term::free(std::string name) {
  return detail::TermFactory::make(TermKind::Free, std::move(name), 0, {});
}
Term Term::schematic(std::string name) {
  return detail::TermFactory::make(TermKind::Schematic, std::move(name), 0, {});
}
Term Term::bound(std::size_t index) {
  return detail::TermFactory::make(TermKind::Bound, {}, index, {});
}
Term Term::lambda(std::string binder, Term body) {
  return detail::TermFactory::make(TermKind::Lambda, std::move(binder), 0, {std::move(body)});
}
Term Term::app(Term fun, Term arg) {
  return detail::TermFactory::make(TermKind::App, {}, 0, {std::move(fun), std::move(arg)});
}

Term Term::apply(Term head, std::span<const Term> args) {
  for (const Term& a : args) head = app(std::move(head), a);
  return head;
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::size_t Term::index() const { return node_->index; }
std::size_t Term::hash() const { return node_->hash; }

const Term& Term::body() const {
  if (node_->kind != TermKind::Lambda) throw std::logic_error("Term::body on non-lambda");
  return node_->kids[0];
}
const Term& Term::fun() const {
  if (node_->kind != TermKind::App) throw std::logic_error("Term::fun on non-application");
  return node_->kids[0];
}
const Term& Term::arg() const {
  if (node_->kind != TermKind::App) throw std::logic_error("Term::arg on non-application");
  return node_->kids[1];
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.index != y.index || x.name != y.name) return false;
  if (x.kids.size() != y.kids.size()) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (!(x.kids[i] == y.kids[i])) return false;
  return true;
}

namespace {

bool well_formed_under(const Term& t, std::size_t binders) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Free:
    case TermKind::Schematic:
      return !t.name().empty();
    case TermKind::Bound:
      return t.index() < binders;
    case TermKind::Lambda:
      return !t.name().empty() && well_formed_under(t.body(), binders + 1);
    case TermKind::App:
      return well_formed_under(t.fun(), binders) && well_formed_under(t.arg(), binders);
  }
  return false;
}

void quote(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

void write_sexp(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const: os << "(const "; quote(os, t.name()); os << ')'; return;
    case TermKind::Free: os << "(free "; quote(os, t.name()); os << ')'; return;
    case TermKind::Schematic: os << "(schematic "; quote(os, t.name()); os << ')'; return;
    case TermKind::Bound: os << "(bound " << t.index() << ')'; return;
    case TermKind::Lambda:
      os << "(abs ";
      quote(os, t.name());
      os << ' ';
      write_sexp(os, t.body());
      os << ')';
      return;
    case TermKind::App:
      os << "(app ";
      write_sexp(os, t.fun());
      os << ' ';
      write_sexp(os, t.arg());
      os << ')';
      return;
  }
}

void walk(const FlatNode& node, std::size_t subgoal, std::vector<std::size_t>& path,
          std::vector<OccurrenceEntry>& out) {
  out.push_back({Occurrence{subgoal, path}, node.term});
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    walk(node.children[i], subgoal, path, out);
    path.pop_back();
  }
}

}  // namespace

bool is_well_formed(const Term& t) { return well_formed_under(t, 0); }

std::string to_sexp(const Term& t) {
  std::ostringstream os;
  write_sexp(os, t);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  write_sexp(os, t);
  return os;
}

FlatNode flatten(const Term& t) {
  switch (t.kind()) {
    case TermKind::Lambda: {
      FlatNode n{FlatKind::Lambda, t, t.name(), {}};
      n.children.push_back(flatten(t.body()));
      return n;
    }
    case TermKind::App: {
      std::vector<const Term*> spine;
      const Term* head = &t;
      while (head->kind() == TermKind::App) {
        spine.push_back(&head->arg());
        head = &head->fun();
      }
      FlatNode n{FlatKind::App, t, {}, {}};
      n.children.reserve(spine.size() + 1);
      n.children.push_back(flatten(*head));
      for (auto it = spine.rbegin(); it != spine.rend(); ++it) n.children.push_back(flatten(**it));
      return n;
    }
    default:
      return FlatNode{FlatKind::Atom, t, {}, {}};
  }
}

Term unflatten(const FlatNode& node) {
  switch (node.kind) {
    case FlatKind::Atom:
      return node.term;
    case FlatKind::Lambda:
      return Term::lambda(node.binder, unflatten(node.children.at(0)));
    case FlatKind::App: {
      Term acc = unflatten(node.children.at(0));
      for (std::size_t i = 1; i < node.children.size(); ++i)
        acc = Term::app(std::move(acc), unflatten(node.children[i]));
      return acc;
    }
  }
  throw std::logic_error("unflatten: bad node kind");
}

std::size_t height(const FlatNode& node) {
  std::size_t h = 0;
  for (const FlatNode& c : node.children) h = std::max(h, 1 + height(c));
  return h;
}

const FlatNode* resolve_path(const FlatNode& root, std::span<const std::size_t> path) {
  const FlatNode* cur = &root;
  for (std::size_t step : path) {
    if (step >= cur->children.size()) return nullptr;
    cur = &cur->children[step];
  }
  return cur;
}

std::ostream& operator<<(std::ostream& os, const Occurrence& o) {
  os << o.subgoal << ":[";
  for (std::size_t i = 0; i < o.path.size(); ++i) os << (i ? "," : "") << o.path[i];
  return os << ']';
}

std::vector<OccurrenceEntry> enumerate_occurrences(const Goal& g, std::size_t subgoal) {
  if (subgoal >= g.subgoals.size())
    throw std::out_of_range("subgoal " + std::to_string(subgoal) + " out of range (goal has " +
                            std::to_string(g.subgoals.size()) + ")");
  std::vector<OccurrenceEntry> out;
  std::vector<std::size_t> path;
  walk(flatten(g.subgoals[subgoal]), subgoal, path, out);
  return out;
}

std::vector<Term> enumerate_subterms(const Goal& g) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (std::size_t i = 0; i < g.subgoals.size(); ++i)
    for (OccurrenceEntry& e : enumerate_occurrences(g, i))
      if (seen.insert(e.term).second) out.push_back(std::move(e.term));
  return out;
}

std::optional<Term> resolve(const Goal& g, const Occurrence& o) {
  if (o.subgoal >= g.subgoals.size()) return std::nullopt;
  FlatNode root = flatten(g.subgoals[o.subgoal]);
  const FlatNode* n = resolve_path(root, o.path);
  if (!n) return std::nullopt;
  return n->term;
}

std::optional<std::size_t> Definition::arity() const {
  if (clauses.empty()) return std::nullopt;
  return clauses.front().params.size();
}

const Definition* Context::find_definition(const std::string& constant) const {
  auto it = definitions.find(constant);
  return it == definitions.end() ? nullptr : &it->second;
}

const RuleRecord* Context::find_rule(const std::string& rule) const {
  auto it = rules.find(rule);
  return it == rules.end() ? nullptr : &it->second;
}

void Context::validate() const {
  for (const auto& [key, def] : definitions) {
    if (key.empty()) throw ValidationError("definition with empty constant name");
    if (key != def.constant_name)
      throw ValidationError("definition keyed \"" + key + "\" names constant \"" +
                            def.constant_name + "\"");
    for (std::size_t i = 0; i < def.clauses.size(); ++i)
      if (def.clauses[i].params.size() != def.clauses[0].params.size())
        throw ValidationError("definition \"" + key + "\": clause " + std::to_string(i) + " has " +
                              std::to_string(def.clauses[i].params.size()) +
                              " parameters, clause 0 has " +
                              std::to_string(def.clauses[0].params.size()));
  }
  for (const auto& [key, rule] : rules) {
    if (key.empty()) throw ValidationError("rule with empty name");
    if (key != rule.rule_name)
      throw ValidationError("rule keyed \"" + key + "\" is named \"" + rule.rule_name + "\"");
    if (!definitions.contains(rule.derived_from))
      throw ValidationError("rule \"" + key + "\" is derived from undefined constant \"" +
                            rule.derived_from + "\"");
  }
}

}  // namespace lifter
