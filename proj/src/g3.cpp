// SPDX-License-Identifier: MIT
#include "aspu/g3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "aspu/limits.hpp"

namespace aspu {

namespace {

// Formulas compiled to flat nodes over atom indices for the inner loop.
struct CNode {
  Formula::Kind kind;
  int atom = -1;
  int a = -1;
  int b = -1;
};

struct CompiledTheory {
  std::vector<CNode> nodes;
  std::vector<int> roots;
};

int compile(const Formula& f, const std::map<Atom, int>& index, std::vector<CNode>& nodes) {
  CNode n{f.kind(), -1, -1, -1};
  switch (f.kind()) {
    case Formula::Kind::Lit: {
      const Literal& l = f.literal();
      if (l.strong_neg)
        throw std::invalid_argument("strong negation reached the G3 evaluator; translate first");
      auto it = index.find(l.atom);
      if (it == index.end())
        throw std::invalid_argument("atom outside the interpretation universe: " + l.atom.name);
      n.atom = it->second;
      break;
    }
    case Formula::Kind::SNot:
      throw std::invalid_argument("strong negation reached the G3 evaluator; translate first");
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      break;
    case Formula::Kind::Not:
      n.a = compile(f.lhs(), index, nodes);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      n.a = compile(f.lhs(), index, nodes);
      n.b = compile(f.rhs(), index, nodes);
      break;
  }
  nodes.push_back(n);
  return static_cast<int>(nodes.size()) - 1;
}

int ceval(const std::vector<CNode>& nodes, int root, const std::uint8_t* v) {
  const CNode& n = nodes[root];
  switch (n.kind) {
    case Formula::Kind::Lit: return v[n.atom];
    case Formula::Kind::Top: return 2;
    case Formula::Kind::Bottom: return 0;
    case Formula::Kind::Not: return ceval(nodes, n.a, v) == 0 ? 2 : 0;
    case Formula::Kind::And: return std::min(ceval(nodes, n.a, v), ceval(nodes, n.b, v));
    case Formula::Kind::Or: return std::max(ceval(nodes, n.a, v), ceval(nodes, n.b, v));
    case Formula::Kind::Implies: {
      const int a = ceval(nodes, n.a, v);
      const int b = ceval(nodes, n.b, v);
      return a <= b ? 2 : b;
    }
    case Formula::Kind::SNot: break;
  }
  throw std::logic_error("unreachable node kind");
}

std::map<Atom, int> index_of(const std::vector<Atom>& atoms) {
  std::map<Atom, int> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], static_cast<int>(i));
  return index;
}

CompiledTheory compile_all(const std::vector<Formula>& fs, const std::map<Atom, int>& index) {
  CompiledTheory ct;
  for (const Formula& f : fs) ct.roots.push_back(compile(f, index, ct.nodes));
  return ct;
}

bool models_all(const CompiledTheory& ct, const std::uint8_t* v) {
  for (int r : ct.roots)
    if (ceval(ct.nodes, r, v) != 2) return false;
  return true;
}

// Base-3 odometer; calls f for every assignment, stops early when f returns false.
template <typename F>
void for_each_assignment(std::size_t n, F&& f) {
  std::vector<std::uint8_t> v(n, 0);
  while (true) {
    if (!f(v)) return;
    std::size_t i = 0;
    while (i < n && v[i] == 2) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

void check_cap(std::size_t n, const char* what) {
  const std::size_t cap = global_limits().g3_universe_cap;
  if (n > cap)
    throw LimitError(std::string(what) + ": universe of " + std::to_string(n) +
                         " atoms exceeds the cap of " + std::to_string(cap),
                     n);
}

std::vector<Atom> occurring_universe(const std::vector<Formula>& theory,
                                     const std::vector<Formula>& goals,
                                     const std::set<Atom>& universe) {
  std::set<Atom> occ;
  for (const Formula& f : theory) occ.merge(atoms_of(f));
  for (const Formula& f : goals) occ.merge(atoms_of(f));
  for (const Atom& a : occ)
    if (!universe.count(a))
      throw std::invalid_argument("atom outside the stated universe: " + a.name);
  return {occ.begin(), occ.end()};
}

}  // namespace

int Interpretation3::value_of(const Atom& a) const {
  const auto it = std::lower_bound(universe.begin(), universe.end(), a);
  if (it == universe.end() || *it != a)
    throw std::invalid_argument("atom outside the interpretation universe: " + a.name);
  return values[static_cast<std::size_t>(it - universe.begin())];
}

int eval_formula(const Interpretation3& i, const Formula& f) {
  std::vector<CNode> nodes;
  const int root = compile(f, index_of(i.universe), nodes);
  return ceval(nodes, root, i.values.data());
}

bool is_model(const Interpretation3& i, const std::vector<Formula>& theory) {
  return std::all_of(theory.begin(), theory.end(),
                     [&](const Formula& f) { return eval_formula(i, f) == 2; });
}

std::vector<Interpretation3> g3_models(const std::vector<Formula>& theory,
                                       const std::set<Atom>& universe) {
  check_cap(universe.size(), "g3_models");
  const std::vector<Atom> atoms(universe.begin(), universe.end());
  const CompiledTheory ct = compile_all(theory, index_of(atoms));
  std::vector<Interpretation3> out;
  for_each_assignment(atoms.size(), [&](const std::vector<std::uint8_t>& v) {
    if (models_all(ct, v.data())) out.push_back(Interpretation3{atoms, v});
    return true;
  });
  return out;
}

std::vector<bool> g3_entails_each(const std::vector<Formula>& theory,
                                  const std::vector<Formula>& goals,
                                  const std::set<Atom>& universe) {
  const std::vector<Atom> atoms = occurring_universe(theory, goals, universe);
  check_cap(atoms.size(), "g3_entails");
  const auto index = index_of(atoms);
  const CompiledTheory ct = compile_all(theory, index);
  const CompiledTheory cg = compile_all(goals, index);
  std::vector<bool> entailed(goals.size(), true);
  std::size_t open = goals.size();
  for_each_assignment(atoms.size(), [&](const std::vector<std::uint8_t>& v) {
    if (!models_all(ct, v.data())) return true;
    for (std::size_t g = 0; g < cg.roots.size(); ++g) {
      if (!entailed[g]) continue;
      if (ceval(cg.nodes, cg.roots[g], v.data()) != 2) {
        entailed[g] = false;
        --open;
      }
    }
    return open != 0;
  });
  return entailed;
}

bool g3_entails(const std::vector<Formula>& theory, const Formula& f,
                const std::set<Atom>& universe) {
  return g3_entails_each(theory, {f}, universe).front();
}

bool g3_satisfiable(const std::vector<Formula>& theory, const std::set<Atom>& universe) {
  const std::vector<Atom> atoms = occurring_universe(theory, {}, universe);
  check_cap(atoms.size(), "g3_satisfiable");
  const CompiledTheory ct = compile_all(theory, index_of(atoms));
  bool found = false;
  for_each_assignment(atoms.size(), [&](const std::vector<std::uint8_t>& v) {
    if (models_all(ct, v.data())) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace aspu
