// SPDX-License-Identifier: MIT
#include "aspu/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace aspu {

struct Formula::Node {
  Kind kind;
  Literal lit;
  std::shared_ptr<const Node> a, b;
};

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

bool is_reserved_word(std::string_view s) {
  return s == "not" || s == "true" || s == "false";
}

}  // namespace

Atom make_atom(std::string name) {
  if (name.empty() || !is_ident_start(name.front()))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  for (char c : name)
    if (!is_ident_char(c))
      throw std::invalid_argument("invalid atom name: '" + name + "'");
  if (is_reserved_word(name))
    throw std::invalid_argument("reserved word used as atom: '" + name + "'");
  return Atom{std::move(name)};
}

Literal complement_literal(const Literal& l) { return Literal{l.atom, !l.strong_neg}; }

Literal make_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-')
    return Literal{make_atom(std::string(text.substr(1))), true};
  return Literal{make_atom(std::string(text)), false};
}

std::string render_literal(const Literal& l) {
  return l.strong_neg ? "-" + l.atom.name : l.atom.name;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::lit(Literal l) {
  return Formula(std::make_shared<const Node>(Node{Kind::Lit, std::move(l), nullptr, nullptr}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, a.node_, b.node_}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, a.node_, b.node_}));
}
Formula Formula::neg(Formula a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, a.node_, nullptr}));
}
Formula Formula::strong(Formula a) {
  return Formula(std::make_shared<const Node>(Node{Kind::SNot, {}, a.node_, nullptr}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, {}, a.node_, b.node_}));
}
Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr}));
  return f;
}
Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Bottom, {}, nullptr, nullptr}));
  return f;
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Literal& Formula::literal() const {
  if (node_->kind != Kind::Lit) throw std::logic_error("formula is not a literal");
  return node_->lit;
}
Formula Formula::lhs() const {
  if (!node_->a) throw std::logic_error("formula has no operand");
  return Formula(node_->a);
}
Formula Formula::rhs() const {
  if (!node_->b) throw std::logic_error("formula has no right operand");
  return Formula(node_->b);
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Lit: return node_->lit == other.node_->lit;
    case Kind::Top:
    case Kind::Bottom: return true;
    case Kind::Not:
    case Kind::SNot: return lhs() == other.lhs();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

Rule fact(Literal l) { return Rule{RuleHead::literal(std::move(l)), Formula::top()}; }
Rule rule(Literal head, Formula body) {
  return Rule{RuleHead::literal(std::move(head)), std::move(body)};
}
Rule constraint(Formula body) { return Rule{RuleHead::bottom(), std::move(body)}; }

bool same_rules(const Program& a, const Program& b) { return a.rules == b.rules; }

Program union_programs(const Program& a, const Program& b) {
  Program out = a;
  out.rules.insert(out.rules.end(), b.rules.begin(), b.rules.end());
  out.declared_signature.insert(b.declared_signature.begin(), b.declared_signature.end());
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, True, False, Not, ColonDash, Dot, Comma, Semi, LParen, RParen, Dash, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    const char c = src_[pos_];
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
      std::string word(src_.substr(start, pos_ - start));
      if (word == "not") return {Tok::Not, word, line, col};
      if (word == "true") return {Tok::True, word, line, col};
      if (word == "false") return {Tok::False, word, line, col};
      return {Tok::Ident, word, line, col};
    }
    switch (c) {
      case '.': advance(); return {Tok::Dot, ".", line, col};
      case ',': advance(); return {Tok::Comma, ",", line, col};
      case ';': advance(); return {Tok::Semi, ";", line, col};
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case '-': advance(); return {Tok::Dash, "-", line, col};
      case ':':
        advance();
        if (pos_ < src_.size() && src_[pos_] == '-') {
          advance();
          return {Tok::ColonDash, ":-", line, col};
        }
        throw ParseError("expected ':-'", line, col);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  Program parse() {
    Program p;
    while (cur_.kind != Tok::End) p.rules.push_back(statement());
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " (got '" + (cur_.kind == Tok::End ? "<eof>" : cur_.text) + "')",
                     cur_.line, cur_.column);
  }

  void shift() { cur_ = lex_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    shift();
  }

  Rule statement() {
    if (cur_.kind == Tok::ColonDash) {
      shift();
      Formula body = disjunction();
      expect(Tok::Dot, "'.'");
      return Rule{RuleHead::bottom(), body};
    }
    RuleHead head = parse_head();
    if (cur_.kind == Tok::Dot) {
      shift();
      return Rule{head, Formula::top()};
    }
    expect(Tok::ColonDash, "':-' or '.'");
    Formula body = disjunction();
    expect(Tok::Dot, "'.'");
    return Rule{head, body};
  }

  RuleHead parse_head() {
    if (cur_.kind == Tok::True) {
      shift();
      return RuleHead::top();
    }
    if (cur_.kind == Tok::False) {
      shift();
      return RuleHead::bottom();
    }
    return RuleHead::literal(parse_literal());
  }

  Literal parse_literal() {
    bool strong = false;
    if (cur_.kind == Tok::Dash) {
      strong = true;
      shift();
    }
    if (cur_.kind != Tok::Ident) {
      if (cur_.kind == Tok::Not || cur_.kind == Tok::True || cur_.kind == Tok::False)
        fail("reserved word used as atom");
      fail("expected atom");
    }
    Literal l{Atom{cur_.text}, strong};
    shift();
    return l;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cur_.kind == Tok::Semi) {
      shift();
      f = Formula::disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unit();
    while (cur_.kind == Tok::Comma) {
      shift();
      f = Formula::conj(f, unit());
    }
    return f;
  }

  Formula unit() {
    switch (cur_.kind) {
      case Tok::Not:
        shift();
        return Formula::neg(unit());
      case Tok::LParen: {
        shift();
        Formula f = disjunction();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::True:
        shift();
        return Formula::top();
      case Tok::False:
        shift();
        return Formula::bottom();
      case Tok::Dash:
      case Tok::Ident:
        return Formula::lit(parse_literal());
      default:
        fail("expected body unit");
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0, 0};
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Renderer

namespace {

// Collects the left spine of a connective chain. Right-nested chains of the
// same connective stay parenthesized so the left-associative parser
// reproduces the tree exactly.
void flatten(const Formula& f, Formula::Kind k, std::vector<Formula>& out) {
  if (f.kind() == k) {
    flatten(f.lhs(), k, out);
    out.push_back(f.rhs());
  } else {
    out.push_back(f);
  }
}

std::string render_disj(const Formula& f);

std::string render_unit(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Lit: return render_literal(f.literal());
    case Formula::Kind::Top: return "true";
    case Formula::Kind::Bottom: return "false";
    case Formula::Kind::Not: return "not " + render_unit(f.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or: return "(" + render_disj(f) + ")";
    default:
      throw std::invalid_argument("formula outside the program grammar cannot be rendered");
  }
}

std::string render_conj(const Formula& f) {
  std::vector<Formula> units;
  flatten(f, Formula::Kind::And, units);
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i) out += ", ";
    out += render_unit(units[i]);
  }
  return out;
}

std::string render_disj(const Formula& f) {
  std::vector<Formula> args;
  flatten(f, Formula::Kind::Or, args);
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += " ; ";
    if (args[i].kind() == Formula::Kind::And)
      out += "(" + render_conj(args[i]) + ")";
    else
      out += render_unit(args[i]);
  }
  return out;
}

}  // namespace

std::string render_formula(const Formula& body) {
  if (body.kind() == Formula::Kind::Or) return render_disj(body);
  return render_conj(body);
}

std::string render_rule(const Rule& r) {
  std::string head;
  switch (r.head.kind) {
    case RuleHead::Kind::Lit: head = render_literal(r.head.lit); break;
    case RuleHead::Kind::Top: head = "true"; break;
    case RuleHead::Kind::Bottom:
      return ":- " + render_formula(r.body) + ".";
  }
  if (r.is_fact()) return head + ".";
  return head + " :- " + render_formula(r.body) + ".";
}

std::string render_program(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules) {
    out += render_rule(r);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Signatures and occurrence

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::Lit: out.insert(f.literal().atom); return;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Not:
    case Formula::Kind::SNot: collect_atoms(f.lhs(), out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

void collect_literals(const Formula& f, std::set<Literal>& out) {
  switch (f.kind()) {
    case Formula::Kind::Lit: out.insert(f.literal()); return;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Not:
    case Formula::Kind::SNot: collect_literals(f.lhs(), out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_literals(f.lhs(), out);
      collect_literals(f.rhs(), out);
      return;
  }
}

// True iff every occurrence of l in f lies under a Not node.
bool shielded(const Literal& l, const Formula& f, bool under_not) {
  switch (f.kind()) {
    case Formula::Kind::Lit: return f.literal() != l || under_not;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return true;
    case Formula::Kind::Not: return shielded(l, f.lhs(), true);
    case Formula::Kind::SNot: return shielded(l, f.lhs(), under_not);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return shielded(l, f.lhs(), under_not) && shielded(l, f.rhs(), under_not);
  }
  return true;
}

}  // namespace

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

std::set<Atom> signature_of(const Program& p) {
  std::set<Atom> out = p.declared_signature;
  for (const Rule& r : p.rules) {
    if (r.head.kind == RuleHead::Kind::Lit) out.insert(r.head.lit.atom);
    collect_atoms(r.body, out);
  }
  return out;
}

std::set<Literal> literals_over(const std::set<Atom>& atoms) {
  std::set<Literal> out;
  for (const Atom& a : atoms) {
    out.insert(Literal{a, false});
    out.insert(Literal{a, true});
  }
  return out;
}

bool occurs(const Literal& l, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Lit: return f.literal() == l;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Not:
    case Formula::Kind::SNot: return occurs(l, f.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return occurs(l, f.lhs()) || occurs(l, f.rhs());
  }
  return false;
}

bool occurs_in_rule(const Literal& l, const Rule& r) {
  if (r.head.kind == RuleHead::Kind::Lit && r.head.lit == l) return true;
  return occurs(l, r.body);
}

bool occurs_in_program(const Literal& l, const Program& p) {
  return std::any_of(p.rules.begin(), p.rules.end(),
                     [&](const Rule& r) { return occurs_in_rule(l, r); });
}

std::set<Literal> occurring_literals(const Program& p) {
  std::set<Literal> out;
  for (const Rule& r : p.rules) {
    if (r.head.kind == RuleHead::Kind::Lit) out.insert(r.head.lit);
    collect_literals(r.body, out);
  }
  return out;
}

bool occurs_only_under_weak_negation(const Literal& l, const Program& p) {
  for (const Rule& r : p.rules) {
    if (r.head.kind == RuleHead::Kind::Lit && r.head.lit == l) return false;
    if (!shielded(l, r.body, false)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ELP structure and tau rules

namespace {

// Flattens an ELP body into its conjunct list; returns false on non-ELP shape.
bool elp_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::And)
    return elp_conjuncts(f.lhs(), out) && elp_conjuncts(f.rhs(), out);
  switch (f.kind()) {
    case Formula::Kind::Lit:
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      out.push_back(f);
      return true;
    case Formula::Kind::Not: {
      const Formula arg = f.lhs();
      if (arg.kind() == Formula::Kind::Lit || arg.kind() == Formula::Kind::Top ||
          arg.kind() == Formula::Kind::Bottom) {
        out.push_back(f);
        return true;
      }
      return false;
    }
    default:
      return false;
  }
}

bool head_in_positive_conjuncts(const Rule& r) {
  if (r.head.kind != RuleHead::Kind::Lit) return false;
  std::vector<Formula> units;
  if (!elp_conjuncts(r.body, units))
    throw std::invalid_argument("non-ELP rule: " + render_rule(r));
  const Formula head = Formula::lit(r.head.lit);
  return std::find(units.begin(), units.end(), head) != units.end();
}

}  // namespace

bool is_elp_rule(const Rule& r) {
  std::vector<Formula> units;
  return elp_conjuncts(r.body, units);
}

bool is_elp(const Program& p) {
  return std::all_of(p.rules.begin(), p.rules.end(), is_elp_rule);
}

bool is_tau_comp(const Program& p, const std::set<Atom>& sig) {
  for (const Literal& l : literals_over(sig)) {
    const Rule tau = rule(l, Formula::lit(l));
    if (std::find(p.rules.begin(), p.rules.end(), tau) == p.rules.end()) return false;
  }
  return true;
}

Program tau_completion(const Program& p, const std::set<Atom>& sig) {
  Program out = p;
  for (const Literal& l : literals_over(sig)) {
    const Rule tau = rule(l, Formula::lit(l));
    if (std::find(out.rules.begin(), out.rules.end(), tau) == out.rules.end())
      out.rules.push_back(tau);
  }
  return out;
}

bool is_tau_free(const Program& p) {
  return std::none_of(p.rules.begin(), p.rules.end(), head_in_positive_conjuncts);
}

Program strip_tau_rules(const Program& p) {
  Program out;
  out.declared_signature = p.declared_signature;
  for (const Rule& r : p.rules) {
    if (r.is_tautology_head()) continue;
    if (head_in_positive_conjuncts(r)) continue;
    out.rules.push_back(r);
  }
  return out;
}

Formula rule_formula(const Rule& r) {
  Formula head = Formula::top();
  switch (r.head.kind) {
    case RuleHead::Kind::Lit: head = Formula::lit(r.head.lit); break;
    case RuleHead::Kind::Bottom: head = Formula::bottom(); break;
    case RuleHead::Kind::Top: head = Formula::top(); break;
  }
  if (r.is_fact()) return head;
  return Formula::implies(r.body, head);
}

std::vector<Formula> program_theory(const Program& p) {
  std::vector<Formula> out;
  out.reserve(p.rules.size());
  for (const Rule& r : p.rules) out.push_back(rule_formula(r));
  return out;
}

}  // namespace aspu
