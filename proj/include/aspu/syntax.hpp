// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aspu {

struct Atom {
  std::string name;
  auto operator<=>(const Atom&) const = default;
};

/// Validates the identifier shape of the text grammar (letter first, then
/// letters, digits, `-`, `_`; `not`/`true`/`false` are reserved).
Atom make_atom(std::string name);

/// A ~-literal: an atom or its strong negation.
struct Literal {
  Atom atom;
  bool strong_neg = false;
  auto operator<=>(const Literal&) const = default;
};

Literal complement_literal(const Literal& l);

/// Builds a literal from its rendered form, e.g. "-tv-on".
Literal make_literal(std::string_view text);

std::string render_literal(const Literal& l);

/// Immutable formula tree. Parsed programs use Lit/And/Or/Not/Bottom/Top
/// only; SNot (strong negation on a compound) exists transiently inside the
/// N2 pushdown, and Implies backs internal theories that exceed the rule
/// grammar (the completion checks). Structural equality throughout.
class Formula {
 public:
  enum class Kind { Lit, And, Or, Not, SNot, Implies, Bottom, Top };

  static Formula lit(Literal l);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula strong(Formula a);
  static Formula implies(Formula a, Formula b);
  static Formula top();
  static Formula bottom();

  Kind kind() const;
  const Literal& literal() const;
  Formula lhs() const;
  Formula rhs() const;

  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Left-associative chains, matching what the parser builds.
Formula conj_all(const std::vector<Formula>& fs);  // empty -> Top
Formula disj_all(const std::vector<Formula>& fs);  // empty -> Bottom

struct RuleHead {
  enum class Kind { Lit, Bottom, Top };
  Kind kind = Kind::Bottom;
  Literal lit;  // meaningful only when kind == Lit

  static RuleHead literal(Literal l) { return {Kind::Lit, std::move(l)}; }
  static RuleHead bottom() { return {Kind::Bottom, {}}; }
  static RuleHead top() { return {Kind::Top, {}}; }
  bool operator==(const RuleHead& o) const {
    return kind == o.kind && (kind != Kind::Lit || lit == o.lit);
  }
};

struct Rule {
  RuleHead head;
  Formula body = Formula::top();

  bool is_constraint() const { return head.kind == RuleHead::Kind::Bottom; }
  bool is_tautology_head() const { return head.kind == RuleHead::Kind::Top; }
  bool is_fact() const { return body.kind() == Formula::Kind::Top; }
  bool operator==(const Rule& o) const { return head == o.head && body == o.body; }
};

Rule fact(Literal l);
Rule rule(Literal head, Formula body);
Rule constraint(Formula body);

/// Rule order and duplicates are preserved exactly as parsed; rejection
/// naming and the deterministic sup() disjunct order depend on it.
struct Program {
  std::vector<Rule> rules;
  std::set<Atom> declared_signature;
};

bool same_rules(const Program& a, const Program& b);

/// Concatenates rule sequences and unions declared signatures.
Program union_programs(const Program& a, const Program& b);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

Program parse_program(std::string_view text);

std::string render_formula(const Formula& body);
std::string render_rule(const Rule& r);
/// One rule per line; parse_program(render_program(p)) is structurally p.
std::string render_program(const Program& p);

std::set<Atom> atoms_of(const Formula& f);
std::set<Atom> signature_of(const Program& p);

/// Lit_A: both polarities over a set of atoms.
std::set<Literal> literals_over(const std::set<Atom>& atoms);

/// Polarity-exact occurrence: a does not occur in ~a.
bool occurs(const Literal& l, const Formula& f);
bool occurs_in_rule(const Literal& l, const Rule& r);
bool occurs_in_program(const Literal& l, const Program& p);

/// All literal occurrences of heads and bodies, polarity-sensitive.
std::set<Literal> occurring_literals(const Program& p);

/// True iff every occurrence of l sits inside some weak-negation subtree;
/// head occurrences count as occurrences outside the scope.
bool occurs_only_under_weak_negation(const Literal& l, const Program& p);

/// ELP: every body is a conjunction of literals, weakly negated literals,
/// and the constants.
bool is_elp(const Program& p);
bool is_elp_rule(const Rule& r);

bool is_tau_comp(const Program& p, const std::set<Atom>& sig);
Program tau_completion(const Program& p, const std::set<Atom>& sig);

/// Throws std::invalid_argument on a non-ELP rule.
bool is_tau_free(const Program& p);

/// Drops every l <- l, alpha rule and every rule with head Top.
Program strip_tau_rules(const Program& p);

/// The rule as an N2 formula: body -> head (facts become the bare head).
Formula rule_formula(const Rule& r);
std::vector<Formula> program_theory(const Program& p);

}  // namespace aspu
