// SPDX-License-Identifier: MIT
#include "aspu/answer_sets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "aspu/limits.hpp"

namespace aspu {

namespace {

// ---------------------------------------------------------------------------
// Literal interning

struct LitIndex {
  std::vector<Literal> lits;
  std::map<Literal, int> ids;

  int intern(const Literal& l) {
    const auto [it, fresh] = ids.emplace(l, static_cast<int>(lits.size()));
    if (fresh) lits.push_back(l);
    return it->second;
  }
  int find(const Literal& l) const {
    const auto it = ids.find(l);
    return it == ids.end() ? -1 : it->second;
  }
  std::size_t size() const { return lits.size(); }

  // id of the complementary literal, or -1 if it was never interned
  std::vector<int> complement_ids() const {
    std::vector<int> comp(lits.size(), -1);
    for (std::size_t i = 0; i < lits.size(); ++i) {
      const int c = find(complement_literal(lits[i]));
      comp[i] = c;
    }
    return comp;
  }
};

LiteralSet to_literal_set(const std::vector<int>& ids, const LitIndex& ix) {
  LiteralSet out;
  for (int id : ids) out.insert(ix.lits[static_cast<std::size_t>(id)]);
  return out;
}

// ---------------------------------------------------------------------------
// Formulas compiled over literal ids (three-valued evaluation)

struct LNode {
  Formula::Kind kind;
  int lit = -1;
  int a = -1;
  int b = -1;
};

struct LitTheory {
  std::vector<LNode> nodes;
  std::vector<int> roots;
};

int compile_lit(const Formula& f, LitIndex& ix, std::vector<LNode>& nodes,
                const std::set<Atom>* sig) {
  LNode n{f.kind(), -1, -1, -1};
  switch (f.kind()) {
    case Formula::Kind::Lit:
      if (sig && !sig->count(f.literal().atom))
        throw std::invalid_argument("atom outside the stated signature: " +
                                    f.literal().atom.name);
      n.lit = ix.intern(f.literal());
      break;
    case Formula::Kind::SNot:
      throw std::invalid_argument("strong negation on a compound; push it down first");
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      break;
    case Formula::Kind::Not:
      n.a = compile_lit(f.lhs(), ix, nodes, sig);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      n.a = compile_lit(f.lhs(), ix, nodes, sig);
      n.b = compile_lit(f.rhs(), ix, nodes, sig);
      break;
  }
  nodes.push_back(n);
  return static_cast<int>(nodes.size()) - 1;
}

int leval(const std::vector<LNode>& nodes, int root, const std::vector<std::uint8_t>& v) {
  const LNode& n = nodes[root];
  switch (n.kind) {
    case Formula::Kind::Lit: return v[static_cast<std::size_t>(n.lit)];
    case Formula::Kind::Top: return 2;
    case Formula::Kind::Bottom: return 0;
    case Formula::Kind::Not: return leval(nodes, n.a, v) == 0 ? 2 : 0;
    case Formula::Kind::And: return std::min(leval(nodes, n.a, v), leval(nodes, n.b, v));
    case Formula::Kind::Or: return std::max(leval(nodes, n.a, v), leval(nodes, n.b, v));
    case Formula::Kind::Implies: {
      const int a = leval(nodes, n.a, v);
      const int b = leval(nodes, n.b, v);
      return a <= b ? 2 : b;
    }
    case Formula::Kind::SNot: break;
  }
  throw std::logic_error("unreachable node kind");
}

bool all_designated(const LitTheory& th, const std::vector<std::uint8_t>& v) {
  for (int r : th.roots)
    if (leval(th.nodes, r, v) != 2) return false;
  return true;
}

LitTheory compile_program_rules(const Program& p, LitIndex& ix, const std::set<Atom>* sig) {
  LitTheory th;
  for (const Rule& r : p.rules) {
    if (r.is_tautology_head()) continue;
    th.roots.push_back(compile_lit(rule_formula(r), ix, th.nodes, sig));
  }
  return th;
}

// ---------------------------------------------------------------------------
// Two-world (equilibrium) check for compiled theories
//
// Candidate M is an answer set iff the all-true valuation of M satisfies the
// theory and no valuation that demotes a nonempty part of M to value 1 does.
// This is the defining consistency-and-entailment condition read through the
// N2->G3 reduction: the premises not(Lit\M) and not not M pin every renamed
// atom to 0 or {1,2}.

bool equilibrium(const LitTheory& th, const std::vector<int>& m, std::size_t nlits) {
  std::vector<std::uint8_t> v(nlits, 0);
  for (int id : m) v[static_cast<std::size_t>(id)] = 2;
  if (!all_designated(th, v)) return false;

  const std::size_t k = m.size();
  if (k > global_limits().equilibrium_subset_cap)
    throw LimitError("equilibrium check: candidate of " + std::to_string(k) +
                         " literals exceeds the subset cap",
                     k);
  const std::uint64_t full = (k == 0) ? 0 : ((std::uint64_t{1} << k) - 1);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    for (std::size_t j = 0; j < k; ++j)
      v[static_cast<std::size_t>(m[j])] = (mask >> j) & 1 ? 2 : 1;
    if (all_designated(th, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ELP view

struct ElpRule {
  int head;  // literal id, or -1 for a constraint
  std::vector<int> pos, neg;
  bool dead = false;  // body contains bottom or not-true
};

struct ElpView {
  std::vector<ElpRule> rules;  // head-Top rules dropped
};

void elp_unit(const Formula& f, LitIndex& ix, ElpRule& out) {
  switch (f.kind()) {
    case Formula::Kind::Lit: out.pos.push_back(ix.intern(f.literal())); return;
    case Formula::Kind::Top: return;
    case Formula::Kind::Bottom: out.dead = true; return;
    case Formula::Kind::And:
      elp_unit(f.lhs(), ix, out);
      elp_unit(f.rhs(), ix, out);
      return;
    case Formula::Kind::Not: {
      const Formula arg = f.lhs();
      if (arg.kind() == Formula::Kind::Lit) {
        out.neg.push_back(ix.intern(arg.literal()));
        return;
      }
      if (arg.kind() == Formula::Kind::Top) {
        out.dead = true;
        return;
      }
      if (arg.kind() == Formula::Kind::Bottom) return;
      break;
    }
    default: break;
  }
  throw std::invalid_argument("not an ELP body: " + render_formula(f));
}

ElpView elp_view(const Program& p, LitIndex& ix) {
  ElpView view;
  for (const Rule& r : p.rules) {
    if (r.is_tautology_head()) continue;
    ElpRule er{-1, {}, {}, false};
    if (r.head.kind == RuleHead::Kind::Lit) er.head = ix.intern(r.head.lit);
    elp_unit(r.body, ix, er);
    view.rules.push_back(std::move(er));
  }
  return view;
}

// Watch lists for the unit-propagation closure, built once per program view.
struct ElpIndex {
  std::vector<std::vector<int>> watchers;  // literal id -> rules watching it positively
  std::vector<int> pos_count;

  ElpIndex(const ElpView& view, std::size_t nlits)
      : watchers(nlits), pos_count(view.rules.size(), 0) {
    for (std::size_t r = 0; r < view.rules.size(); ++r) {
      pos_count[r] = static_cast<int>(view.rules[r].pos.size());
      for (int q : view.rules[r].pos) watchers[static_cast<std::size_t>(q)].push_back(static_cast<int>(r));
    }
  }
};

// Least model of the positive parts of the rules whose weak negations avoid
// the blocked marks.
std::vector<int> reduct_closure(const ElpView& view, const ElpIndex& index,
                                const std::vector<std::uint8_t>& blocked, std::size_t nlits) {
  std::vector<std::uint8_t> derived(nlits, 0);
  std::vector<int> remaining = index.pos_count;
  std::vector<std::uint8_t> active(view.rules.size(), 0);
  std::vector<int> out;

  const auto derive = [&](int lit) {
    if (!derived[static_cast<std::size_t>(lit)]) {
      derived[static_cast<std::size_t>(lit)] = 1;
      out.push_back(lit);
    }
  };

  for (std::size_t r = 0; r < view.rules.size(); ++r) {
    const ElpRule& rule = view.rules[r];
    if (rule.head < 0 || rule.dead) continue;
    bool ok = true;
    for (int n : rule.neg)
      if (blocked[static_cast<std::size_t>(n)]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    active[r] = 1;
    if (remaining[r] == 0) derive(rule.head);
  }

  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    for (int r : index.watchers[static_cast<std::size_t>(out[qi])]) {
      if (!active[static_cast<std::size_t>(r)]) continue;
      if (--remaining[static_cast<std::size_t>(r)] == 0)
        derive(view.rules[static_cast<std::size_t>(r)].head);
    }
  }
  return out;
}

bool elp_equilibrium(const ElpView& view, const std::vector<int>& m, std::size_t nlits) {
  std::vector<std::uint8_t> inM(nlits, 0);
  for (int id : m) inM[static_cast<std::size_t>(id)] = 1;

  // Classical pass: a firing body needs a satisfied head.
  for (const ElpRule& r : view.rules) {
    if (r.dead) continue;
    bool fires = true;
    for (int q : r.pos)
      if (!inM[static_cast<std::size_t>(q)]) {
        fires = false;
        break;
      }
    if (fires)
      for (int n : r.neg)
        if (inM[static_cast<std::size_t>(n)]) {
          fires = false;
          break;
        }
    if (!fires) continue;
    if (r.head < 0 || !inM[static_cast<std::size_t>(r.head)]) return false;
  }

  // Minimality: the reduct's least model must reproduce M exactly.
  const ElpIndex index(view, nlits);
  const std::vector<int> closure = reduct_closure(view, index, inM, nlits);
  if (closure.size() != m.size()) return false;
  for (int id : closure)
    if (!inM[static_cast<std::size_t>(id)]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ELP solving: enumerate assumption sets over the weakly negated literals
// that are derivable at all, take the least model of each reduct, and keep
// the fixpoints. Sound and complete for consistent answer sets.

std::vector<LiteralSet> solve_elp(const Program& p, const std::set<Atom>& sig) {
  (void)sig;
  LitIndex ix;
  const ElpView view = elp_view(p, ix);
  const std::size_t nlits = ix.size();

  std::vector<std::uint8_t> derivable(nlits, 0);
  for (const ElpRule& r : view.rules)
    if (r.head >= 0 && !r.dead) derivable[static_cast<std::size_t>(r.head)] = 1;

  std::vector<int> assumptions;  // derivable literals carrying a weak negation
  {
    std::vector<std::uint8_t> seen(nlits, 0);
    for (const ElpRule& r : view.rules) {
      if (r.head < 0 || r.dead) continue;
      for (int n : r.neg)
        if (derivable[static_cast<std::size_t>(n)] && !seen[static_cast<std::size_t>(n)]) {
          seen[static_cast<std::size_t>(n)] = 1;
          assumptions.push_back(n);
        }
    }
    std::sort(assumptions.begin(), assumptions.end());
  }
  if (assumptions.size() > global_limits().assumption_cap)
    throw LimitError("answer_sets: " + std::to_string(assumptions.size()) +
                         " weakly negated literals exceed the assumption cap",
                     assumptions.size());

  const std::vector<int> comp = ix.complement_ids();
  const ElpIndex index(view, nlits);
  std::vector<LiteralSet> out;
  std::vector<std::uint8_t> inS(nlits, 0);

  const std::uint64_t guesses = std::uint64_t{1} << assumptions.size();
  for (std::uint64_t guess = 0; guess < guesses; ++guess) {
    std::fill(inS.begin(), inS.end(), 0);
    for (std::size_t j = 0; j < assumptions.size(); ++j)
      if ((guess >> j) & 1) inS[static_cast<std::size_t>(assumptions[j])] = 1;

    const std::vector<int> closure = reduct_closure(view, index, inS, nlits);

    std::fill(inS.begin(), inS.end(), 0);
    for (int id : closure) inS[static_cast<std::size_t>(id)] = 1;

    bool ok = true;
    for (std::size_t j = 0; ok && j < assumptions.size(); ++j)
      if (inS[static_cast<std::size_t>(assumptions[j])] != ((guess >> j) & 1)) ok = false;
    for (std::size_t j = 0; ok && j < closure.size(); ++j) {
      const int c = comp[static_cast<std::size_t>(closure[j])];
      if (c >= 0 && inS[static_cast<std::size_t>(c)]) ok = false;
    }
    for (const ElpRule& r : view.rules) {
      if (!ok) break;
      if (r.head >= 0 || r.dead) continue;
      bool fires = true;
      for (int q : r.pos)
        if (!inS[static_cast<std::size_t>(q)]) {
          fires = false;
          break;
        }
      if (fires)
        for (int n : r.neg)
          if (inS[static_cast<std::size_t>(n)]) {
            fires = false;
            break;
          }
      if (fires) ok = false;
    }
    if (ok) out.push_back(to_literal_set(closure, ix));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Augmented solving: candidates are the consistent subsets of the head
// literals (members of an answer set are always supported), each screened by
// the two-world check.

std::vector<LiteralSet> solve_augmented(const Program& p, const std::set<Atom>& sig) {
  LitIndex ix;
  const LitTheory th = compile_program_rules(p, ix, nullptr);

  std::vector<int> heads;
  {
    std::set<int> set;
    for (const Rule& r : p.rules)
      if (r.head.kind == RuleHead::Kind::Lit && !r.is_tautology_head())
        set.insert(ix.intern(r.head.lit));
    heads.assign(set.begin(), set.end());
  }
  for (int h : heads)
    if (!sig.count(ix.lits[static_cast<std::size_t>(h)].atom))
      throw std::invalid_argument("head literal outside the stated signature");

  const std::size_t cap = 2 * global_limits().solve_signature_cap;
  if (heads.size() > cap)
    throw LimitError("answer_sets: " + std::to_string(heads.size()) +
                         " head literals exceed the candidate cap",
                     heads.size());

  std::vector<std::pair<std::uint64_t, std::uint64_t>> conflicts;
  for (std::size_t i = 0; i < heads.size(); ++i)
    for (std::size_t j = i + 1; j < heads.size(); ++j)
      if (ix.lits[static_cast<std::size_t>(heads[i])].atom ==
          ix.lits[static_cast<std::size_t>(heads[j])].atom)
        conflicts.emplace_back(std::uint64_t{1} << i, std::uint64_t{1} << j);

  std::vector<LiteralSet> out;
  const std::uint64_t total = std::uint64_t{1} << heads.size();
  std::vector<int> m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool consistent = true;
    for (const auto& [a, b] : conflicts)
      if ((mask & a) && (mask & b)) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    m.clear();
    for (std::size_t j = 0; j < heads.size(); ++j)
      if ((mask >> j) & 1) m.push_back(heads[j]);
    if (equilibrium(th, m, ix.size())) out.push_back(to_literal_set(m, ix));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_signature_covers(const Program& p, const std::set<Atom>& sig) {
  for (const Atom& a : signature_of(p))
    if (!sig.count(a))
      throw std::invalid_argument("signature does not cover the program (missing atom '" +
                                  a.name + "')");
}

}  // namespace

bool is_consistent(const LiteralSet& s) {
  for (const Literal& l : s)
    if (l.strong_neg && s.count(Literal{l.atom, false})) return false;
  return true;
}

bool is_answer_set(const Program& p, const LiteralSet& m, const std::set<Atom>& sig) {
  if (!is_consistent(m)) throw std::invalid_argument("candidate literal set is inconsistent");
  for (const Literal& l : m)
    if (!sig.count(l.atom))
      throw std::invalid_argument("candidate mentions an atom outside the signature: " +
                                  l.atom.name);
  require_signature_covers(p, sig);

  if (is_elp(p)) {
    LitIndex ix;
    const ElpView view = elp_view(p, ix);
    for (const Literal& l : m) ix.intern(l);
    std::vector<int> ids;
    ids.reserve(m.size());
    for (const Literal& l : m) ids.push_back(ix.find(l));
    return elp_equilibrium(view, ids, ix.size());
  }

  LitIndex ix;
  const LitTheory th = compile_program_rules(p, ix, nullptr);
  for (const Literal& l : m) ix.intern(l);
  std::vector<int> ids;
  ids.reserve(m.size());
  for (const Literal& l : m) ids.push_back(ix.find(l));
  return equilibrium(th, ids, ix.size());
}

std::vector<LiteralSet> answer_sets(const Program& p, const std::set<Atom>& sig) {
  require_signature_covers(p, sig);
  if (is_elp(p)) return solve_elp(p, sig);
  return solve_augmented(p, sig);
}

std::vector<LiteralSet> answer_sets_theory(const std::vector<Formula>& theory,
                                           const std::set<Atom>& sig) {
  const std::size_t cap = global_limits().solve_signature_cap;
  if (sig.size() > cap)
    throw LimitError("answer_sets_theory: signature of " + std::to_string(sig.size()) +
                         " atoms exceeds the cap of " + std::to_string(cap),
                     sig.size());

  LitIndex ix;
  std::vector<int> pos_ids, neg_ids;
  for (const Atom& a : sig) {
    pos_ids.push_back(ix.intern(Literal{a, false}));
    neg_ids.push_back(ix.intern(Literal{a, true}));
  }
  LitTheory th;
  for (const Formula& f : theory) th.roots.push_back(compile_lit(f, ix, th.nodes, &sig));

  std::vector<LiteralSet> out;
  const std::size_t n = sig.size();
  std::vector<std::uint8_t> digit(n, 0);  // 0 absent, 1 positive, 2 negative
  std::vector<int> m;
  while (true) {
    m.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) m.push_back(pos_ids[i]);
      if (digit[i] == 2) m.push_back(neg_ids[i]);
    }
    if (equilibrium(th, m, ix.size())) out.push_back(to_literal_set(m, ix));
    std::size_t i = 0;
    while (i < n && digit[i] == 2) digit[i++] = 0;
    if (i == n) break;
    ++digit[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_family(const std::vector<LiteralSet>& a, const std::vector<LiteralSet>& b) {
  return a == b;
}

bool same_answer_sets(const Program& p1, const Program& p2) {
  std::set<Atom> sig = signature_of(p1);
  sig.merge(signature_of(p2));
  return same_family(answer_sets(p1, sig), answer_sets(p2, sig));
}

bool is_conservative_extension(const Program& p, const Program& p_big,
                               const std::set<Atom>& sig) {
  // Multiset inclusion of rules.
  std::vector<Rule> remaining = p_big.rules;
  for (const Rule& r : p.rules) {
    const auto it = std::find(remaining.begin(), remaining.end(), r);
    if (it == remaining.end())
      throw std::invalid_argument("is_conservative_extension: p is not a subprogram of p_big");
    remaining.erase(it);
  }

  const std::vector<LiteralSet> small = answer_sets(p, sig);
  std::set<Atom> big_sig = signature_of(p_big);
  for (const Atom& a : sig) big_sig.insert(a);
  std::vector<LiteralSet> projected;
  for (const LiteralSet& m : answer_sets(p_big, big_sig)) {
    LiteralSet proj;
    for (const Literal& l : m)
      if (sig.count(l.atom)) proj.insert(l);
    projected.push_back(std::move(proj));
  }
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  return same_family(small, projected);
}

}  // namespace aspu
