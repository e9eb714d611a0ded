// SPDX-License-Identifier: MIT
//
// Shared test helpers. The reference oracle here goes through the literal
// N2 reduction (n2_consistent + n2_entails per member) and stays independent
// of the solver's equilibrium path; brute_answer_sets sweeps every candidate.
#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "aspu/answer_sets.hpp"
#include "aspu/harness.hpp"
#include "aspu/n2.hpp"
#include "aspu/syntax.hpp"

namespace aspu::test {

inline Program P(const std::string& text) { return parse_program(text); }

inline Literal L(const std::string& text) { return make_literal(text); }

inline LiteralSet S(const std::vector<std::string>& lits) {
  LiteralSet out;
  for (const std::string& t : lits) out.insert(make_literal(t));
  return out;
}

inline std::set<Atom> sig(const std::vector<std::string>& names) {
  std::set<Atom> out;
  for (const std::string& n : names) out.insert(make_atom(n));
  return out;
}

// M is an answer set of P iff P + not(Lit\M) + not not M is consistent and
// entails every member of M, all judged through the N2 reduction.
inline bool oracle_is_answer_set(const Program& p, const LiteralSet& m,
                                   const std::set<Atom>& sigma) {
  std::vector<Formula> theory = program_theory(p);
  for (const Literal& l : literals_over(sigma))
    if (!m.count(l)) theory.push_back(Formula::neg(Formula::lit(l)));
  for (const Literal& l : m)
    theory.push_back(Formula::neg(Formula::neg(Formula::lit(l))));
  if (!n2_consistent(theory)) return false;
  for (const Literal& l : m)
    if (!n2_entails(theory, Formula::lit(l))) return false;
  return true;
}

inline std::vector<LiteralSet> all_consistent_sets(const std::set<Atom>& sigma) {
  const std::vector<Atom> atoms(sigma.begin(), sigma.end());
  std::vector<LiteralSet> out;
  std::vector<int> digit(atoms.size(), 0);
  while (true) {
    LiteralSet s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (digit[i] == 1) s.insert(Literal{atoms[i], false});
      if (digit[i] == 2) s.insert(Literal{atoms[i], true});
    }
    out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < atoms.size() && digit[i] == 2) digit[i++] = 0;
    if (i == atoms.size()) break;
    ++digit[i];
  }
  return out;
}

inline std::vector<LiteralSet> brute_answer_sets(const Program& p, const std::set<Atom>& sigma) {
  std::vector<LiteralSet> out;
  for (const LiteralSet& m : all_consistent_sets(sigma))
    if (oracle_is_answer_set(p, m, sigma)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LiteralSet> family(const std::vector<std::vector<std::string>>& sets) {
  std::vector<LiteralSet> out;
  for (const auto& s : sets) out.push_back(S(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Hand-rolled generator helpers for property tests.
struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(std::uint64_t seed) : eng(seed) {}
  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(eng() % n); }
  bool chance(double p) { return static_cast<double>(eng() >> 11) * 0x1.0p-53 < p; }
};

inline Formula random_formula(TestRng& rng, const std::vector<Literal>& pool, int depth,
                              bool allow_strong_compound = false) {
  if (pool.empty() || depth == 0 || rng.chance(0.35))
    return pool.empty() ? Formula::top() : Formula::lit(pool[rng.below(static_cast<std::uint32_t>(pool.size()))]);
  switch (rng.below(allow_strong_compound ? 5u : 4u)) {
    case 0: return Formula::conj(random_formula(rng, pool, depth - 1, allow_strong_compound),
                                 random_formula(rng, pool, depth - 1, allow_strong_compound));
    case 1: return Formula::disj(random_formula(rng, pool, depth - 1, allow_strong_compound),
                                 random_formula(rng, pool, depth - 1, allow_strong_compound));
    case 2: return Formula::neg(random_formula(rng, pool, depth - 1, allow_strong_compound));
    case 3: return rng.chance(0.5) ? Formula::top() : Formula::bottom();
    default: return Formula::strong(random_formula(rng, pool, depth - 1, allow_strong_compound));
  }
}

inline std::vector<Literal> pool_over(const std::set<Atom>& sigma) {
  std::vector<Literal> out;
  for (const Literal& l : literals_over(sigma)) out.push_back(l);
  return out;
}

inline Program gen(std::uint64_t seed, int atoms = 3, int rules = 4) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.atoms = atoms;
  cfg.rules_max = rules;
  return gen_elp(cfg);
}

}  // namespace aspu::test
