// SPDX-License-Identifier: MIT
#include "aspu/n2.hpp"

#include <stdexcept>

#include "aspu/g3.hpp"

namespace aspu {

namespace {

Formula push(const Formula& f);

// push(~g): the axioms A1-A5 drive ~ down to the literal leaves.
Formula push_strong(const Formula& g) {
  switch (g.kind()) {
    case Formula::Kind::Lit: return Formula::lit(complement_literal(g.literal()));
    case Formula::Kind::And: return Formula::disj(push_strong(g.lhs()), push_strong(g.rhs()));
    case Formula::Kind::Or: return Formula::conj(push_strong(g.lhs()), push_strong(g.rhs()));
    case Formula::Kind::Not: return push(g.lhs());
    case Formula::Kind::SNot: return push(g.lhs());
    case Formula::Kind::Implies: return Formula::conj(push(g.lhs()), push_strong(g.rhs()));
    case Formula::Kind::Top: return Formula::bottom();
    case Formula::Kind::Bottom: return Formula::top();
  }
  throw std::logic_error("unreachable formula kind");
}

Formula push(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Lit:
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Not: return Formula::neg(push(f.lhs()));
    case Formula::Kind::SNot: return push_strong(f.lhs());
    case Formula::Kind::And: return Formula::conj(push(f.lhs()), push(f.rhs()));
    case Formula::Kind::Or: return Formula::disj(push(f.lhs()), push(f.rhs()));
    case Formula::Kind::Implies: return Formula::implies(push(f.lhs()), push(f.rhs()));
  }
  throw std::logic_error("unreachable formula kind");
}

Formula substitute_primes(const Formula& f, const RenamingMap& map) {
  switch (f.kind()) {
    case Formula::Kind::Lit: {
      const Literal& l = f.literal();
      if (!l.strong_neg) return f;
      return Formula::lit(Literal{map.primed_of(l.atom), false});
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Not: return Formula::neg(substitute_primes(f.lhs(), map));
    case Formula::Kind::SNot:
      throw std::logic_error("pushdown left a strong negation on a compound");
    case Formula::Kind::And:
      return Formula::conj(substitute_primes(f.lhs(), map), substitute_primes(f.rhs(), map));
    case Formula::Kind::Or:
      return Formula::disj(substitute_primes(f.lhs(), map), substitute_primes(f.rhs(), map));
    case Formula::Kind::Implies:
      return Formula::implies(substitute_primes(f.lhs(), map), substitute_primes(f.rhs(), map));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

const Atom& RenamingMap::primed_of(const Atom& a) const {
  const auto it = primed.find(a);
  if (it == primed.end())
    throw std::invalid_argument("atom missing from the renaming map: " + a.name);
  return it->second;
}

Formula push_strong_negation(const Formula& f) { return push(f); }

Formula rename_formula(const Formula& f, const RenamingMap& map) {
  return substitute_primes(push(f), map);
}

G3Reduction translate_to_g3(const std::vector<Formula>& theory,
                            const std::vector<Formula>& extra) {
  std::set<Atom> sig;
  for (const Formula& f : theory) sig.merge(atoms_of(f));
  for (const Formula& f : extra) sig.merge(atoms_of(f));

  G3Reduction out;
  for (const Atom& a : sig) out.map.primed.emplace(a, Atom{a.name + "'"});
  for (const Formula& f : theory) out.theory.push_back(rename_formula(f, out.map));
  for (const Atom& a : sig) {
    const Atom& p = out.map.primed.at(a);
    out.theory.push_back(
        Formula::implies(Formula::lit(Literal{p, false}), Formula::neg(Formula::lit(Literal{a, false}))));
    out.universe.insert(a);
    out.universe.insert(p);
  }
  return out;
}

std::vector<bool> n2_entails_each(const std::vector<Formula>& theory,
                                  const std::vector<Formula>& goals) {
  const G3Reduction red = translate_to_g3(theory, goals);
  std::vector<Formula> translated_goals;
  translated_goals.reserve(goals.size());
  for (const Formula& g : goals) translated_goals.push_back(rename_formula(g, red.map));
  return g3_entails_each(red.theory, translated_goals, red.universe);
}

bool n2_entails(const std::vector<Formula>& theory, const Formula& f) {
  return n2_entails_each(theory, {f}).front();
}

bool n2_entails_all(const std::vector<Formula>& theory, const std::vector<Formula>& goals) {
  const std::vector<bool> each = n2_entails_each(theory, goals);
  for (bool b : each)
    if (!b) return false;
  return true;
}

bool n2_consistent(const std::vector<Formula>& theory) {
  const G3Reduction red = translate_to_g3(theory);
  return g3_satisfiable(red.theory, red.universe);
}

bool strongly_equivalent(const Program& p1, const Program& p2) {
  const std::vector<Formula> t1 = program_theory(p1);
  const std::vector<Formula> t2 = program_theory(p2);
  return n2_entails_all(t1, t2) && n2_entails_all(t2, t1);
}

}  // namespace aspu
