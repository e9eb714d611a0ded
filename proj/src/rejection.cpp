// SPDX-License-Identifier: MIT
#include "aspu/rejection.hpp"

#include <algorithm>
#include <stdexcept>

#include "aspu/limits.hpp"

namespace aspu {

namespace {

Program drop_tautology_heads(const Program& p) {
  Program out;
  out.declared_signature = p.declared_signature;
  for (const Rule& r : p.rules)
    if (!r.is_tautology_head()) out.rules.push_back(r);
  return out;
}

// Truth of an ELP body in the unique model of S-bar: literal conjuncts by
// membership, weakly negated ones by absence.
bool sbar_satisfies_body(const LiteralSet& s, const Formula& body) {
  switch (body.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Lit: return s.count(body.literal()) != 0;
    case Formula::Kind::And:
      return sbar_satisfies_body(s, body.lhs()) && sbar_satisfies_body(s, body.rhs());
    case Formula::Kind::Not: {
      const Formula arg = body.lhs();
      if (arg.kind() == Formula::Kind::Lit) return s.count(arg.literal()) == 0;
      if (arg.kind() == Formula::Kind::Top) return false;
      if (arg.kind() == Formula::Kind::Bottom) return true;
      break;
    }
    default: break;
  }
  throw std::invalid_argument("not an ELP body: " + render_formula(body));
}

}  // namespace

bool conflicting(const Rule& r1, const Rule& r2) {
  if (r1.head.kind != RuleHead::Kind::Lit || r2.head.kind != RuleHead::Kind::Lit)
    throw std::invalid_argument("conflicting: both heads must be literals");
  return r1.head.lit == complement_literal(r2.head.lit);
}

std::vector<Formula> closure_bar(const LiteralSet& s, const std::set<Atom>& sig) {
  if (!is_consistent(s)) throw std::invalid_argument("closure_bar: inconsistent literal set");
  std::vector<Formula> out;
  for (const Literal& l : s) out.push_back(Formula::lit(l));
  for (const Literal& l : literals_over(sig))
    if (!s.count(l)) out.push_back(Formula::neg(Formula::lit(l)));
  return out;
}

RejectionSet rej_prime(const LiteralSet& s, const Program& p1, const Program& p2) {
  if (!is_elp(p1) || !is_elp(p2))
    throw std::invalid_argument("rej_prime: inputs must be extended logic programs");
  RejectionSet out;
  for (std::size_t i = 0; i < p1.rules.size(); ++i) {
    const Rule& r = p1.rules[i];
    if (r.head.kind != RuleHead::Kind::Lit) continue;
    if (!sbar_satisfies_body(s, r.body)) continue;
    for (const Rule& rp : p2.rules) {
      if (rp.head.kind != RuleHead::Kind::Lit) continue;
      if (!conflicting(r, rp)) continue;
      if (sbar_satisfies_body(s, rp.body)) {
        out.rule_indices.insert(i);
        break;
      }
    }
  }
  return out;
}

std::vector<LiteralSet> update_answer_sets_rej(const Program& p1_in, const Program& p2_in) {
  if (!is_elp(p1_in) || !is_elp(p2_in))
    throw std::invalid_argument("rej-oracle: inputs must be extended logic programs");
  const Program p1 = drop_tautology_heads(p1_in);
  const Program p2 = drop_tautology_heads(p2_in);

  std::set<Atom> sig = signature_of(p1_in);
  sig.merge(signature_of(p2_in));
  const std::size_t cap = global_limits().solve_signature_cap;
  if (sig.size() > cap)
    throw LimitError("rej-oracle: signature of " + std::to_string(sig.size()) +
                         " atoms exceeds the cap of " + std::to_string(cap),
                     sig.size());

  const std::vector<Atom> atoms(sig.begin(), sig.end());
  std::vector<LiteralSet> out;
  std::vector<std::uint8_t> digit(atoms.size(), 0);  // 0 absent, 1 positive, 2 negative
  while (true) {
    LiteralSet s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (digit[i] == 1) s.insert(Literal{atoms[i], false});
      if (digit[i] == 2) s.insert(Literal{atoms[i], true});
    }
    const RejectionSet rej = rej_prime(s, p1, p2);
    Program reduced;
    for (std::size_t i = 0; i < p1.rules.size(); ++i)
      if (!rej.rule_indices.count(i)) reduced.rules.push_back(p1.rules[i]);
    reduced.rules.insert(reduced.rules.end(), p2.rules.begin(), p2.rules.end());
    reduced.declared_signature = sig;
    if (is_answer_set(reduced, s, sig)) out.push_back(std::move(s));

    std::size_t i = 0;
    while (i < atoms.size() && digit[i] == 2) digit[i++] = 0;
    if (i == atoms.size()) break;
    ++digit[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace aspu
