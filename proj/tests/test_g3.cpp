// SPDX-License-Identifier: MIT
#include "doctest.h"

#include "aspu/g3.hpp"
#include "aspu/limits.hpp"
#include "support.hpp"

using namespace aspu;
using namespace aspu::test;

namespace {

Interpretation3 interp(const std::vector<std::pair<std::string, int>>& vals) {
  Interpretation3 i;
  for (const auto& [name, v] : vals) {
    i.universe.push_back(make_atom(name));
    i.values.push_back(static_cast<std::uint8_t>(v));
  }
  return i;
}

Formula atom(const char* name) { return Formula::lit(make_literal(name)); }

// Two-valued classical evaluator used as the G2 cross-check.
bool classical_eval(const Formula& f, const std::set<Literal>& truths) {
  switch (f.kind()) {
    case Formula::Kind::Lit: return truths.count(f.literal()) != 0;
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Not: return !classical_eval(f.lhs(), truths);
    case Formula::Kind::And: return classical_eval(f.lhs(), truths) && classical_eval(f.rhs(), truths);
    case Formula::Kind::Or: return classical_eval(f.lhs(), truths) || classical_eval(f.rhs(), truths);
    case Formula::Kind::Implies:
      return !classical_eval(f.lhs(), truths) || classical_eval(f.rhs(), truths);
    default: throw std::logic_error("unexpected kind");
  }
}

}  // namespace

TEST_CASE("eval_formula follows the tables") {
  CHECK(eval_formula(interp({{"a", 1}, {"b", 2}}), Formula::disj(atom("a"), atom("b"))) == 2);
  // v(b <- a) with v(a)=2 > v(b)=1 takes the consequent's value.
  CHECK(eval_formula(interp({{"a", 2}, {"b", 1}}), Formula::implies(atom("a"), atom("b"))) == 1);
  CHECK(eval_formula(interp({{"a", 1}}), Formula::neg(atom("a"))) == 0);
  CHECK(eval_formula(interp({{"a", 0}}), Formula::neg(atom("a"))) == 2);
  CHECK(eval_formula(interp({}), Formula::top()) == 2);
  CHECK(eval_formula(interp({{"a", 1}, {"b", 1}}), Formula::conj(atom("a"), atom("b"))) == 1);
}

TEST_CASE("eval_formula rejects untranslated strong negation") {
  CHECK_THROWS_AS(eval_formula(interp({{"a", 1}}), Formula::lit(L("-a"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_formula(interp({{"a", 1}}), Formula::strong(atom("a"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_formula(interp({{"a", 1}}), atom("b")), std::invalid_argument);
}

TEST_CASE("is_model") {
  CHECK(is_model(interp({{"a", 0}}), {}));
  CHECK(is_model(interp({{"a", 2}}), {atom("a")}));
  // v(a | not a) = max(1, 0) = 1, not designated.
  CHECK_FALSE(is_model(interp({{"a", 1}}), {Formula::disj(atom("a"), Formula::neg(atom("a")))}));
}

TEST_CASE("g3_models enumerates") {
  CHECK(g3_models({}, sig({"a"})).size() == 3);
  const auto only = g3_models({atom("a")}, sig({"a"}));
  REQUIRE(only.size() == 1);
  CHECK(only[0].value_of(make_atom("a")) == 2);

  // The axiom schema separating G3: a | (a -> b) | not b is valid.
  const Formula hd3 = Formula::disj(
      Formula::disj(atom("a"), Formula::implies(atom("a"), atom("b"))), Formula::neg(atom("b")));
  CHECK(g3_models({hd3}, sig({"a", "b"})).size() == 9);
}

TEST_CASE("g3_entails: tautologies and refutations") {
  CHECK_FALSE(g3_entails({}, Formula::disj(atom("a"), Formula::neg(atom("a"))), sig({"a"})));
  CHECK(g3_entails({atom("a")}, Formula::disj(atom("a"), atom("b")), sig({"a", "b"})));
  // Pierce's law has a G3 countermodel.
  const Formula pierce = Formula::implies(
      Formula::implies(Formula::implies(atom("a"), atom("b")), atom("a")), atom("a"));
  CHECK_FALSE(g3_entails({}, pierce, sig({"a", "b"})));
}

TEST_CASE("g3 cap errors") {
  std::set<Atom> big;
  for (char c = 'a'; c <= 'z'; ++c) big.insert(Atom{std::string(1, c)});
  CHECK_THROWS_AS(g3_models({}, big), LimitError);
}

TEST_CASE("property: designated-value monotonicity of theories") {
  TestRng rng(5);
  const auto pool = pool_over(sig({"a", "b"}));
  std::vector<Literal> plain;
  for (const Literal& l : pool)
    if (!l.strong_neg) plain.push_back(l);
  for (int i = 0; i < 40; ++i) {
    std::vector<Formula> theory = {random_formula(rng, plain, 2)};
    std::vector<Formula> larger = theory;
    larger.push_back(random_formula(rng, plain, 2));
    const auto m_small = g3_models(theory, sig({"a", "b"}));
    for (const Interpretation3& m : g3_models(larger, sig({"a", "b"}))) {
      CHECK(std::any_of(m_small.begin(), m_small.end(), [&](const Interpretation3& s) {
        return s.values == m.values;
      }));
    }
  }
}

TEST_CASE("property: entailment reflexivity and cut") {
  TestRng rng(17);
  std::vector<Literal> plain = {L("a"), L("b")};
  const auto universe = sig({"a", "b"});
  for (int i = 0; i < 30; ++i) {
    const Formula f = random_formula(rng, plain, 2);
    const Formula g = random_formula(rng, plain, 2);
    const Formula h = random_formula(rng, plain, 2);
    CHECK(g3_entails({f}, f, universe));
    // Cut: T |= g and T,g |= h imply T |= h.
    if (g3_entails({f}, g, universe) && g3_entails({f, g}, h, universe))
      CHECK(g3_entails({f}, h, universe));
  }
}

TEST_CASE("property: values restricted to {0,2} recover classical logic") {
  TestRng rng(23);
  std::vector<Literal> plain = {L("a"), L("b"), L("c")};
  for (int i = 0; i < 60; ++i) {
    const Formula f = random_formula(rng, plain, 3);
    for (int mask = 0; mask < 8; ++mask) {
      Interpretation3 iv;
      std::set<Literal> truths;
      for (int j = 0; j < 3; ++j) {
        iv.universe.push_back(plain[static_cast<std::size_t>(j)].atom);
        const bool t = (mask >> j) & 1;
        iv.values.push_back(t ? 2 : 0);
        if (t) truths.insert(plain[static_cast<std::size_t>(j)]);
      }
      CHECK((eval_formula(iv, f) == 2) == classical_eval(f, truths));
      CHECK((eval_formula(iv, f) == 0) == !classical_eval(f, truths));
    }
  }
}

TEST_CASE("property: occurring-atom restriction equals the full sweep") {
  // g3_entails restricts to occurring atoms; compare against model counting
  // over a strictly larger universe.
  TestRng rng(31);
  std::vector<Literal> plain = {L("a"), L("b")};
  const auto small = sig({"a", "b"});
  const auto large = sig({"a", "b", "z1", "z2"});
  for (int i = 0; i < 40; ++i) {
    const Formula t = random_formula(rng, plain, 2);
    const Formula g = random_formula(rng, plain, 2);
    bool full = true;
    for (const Interpretation3& m : g3_models({t}, large))
      if (eval_formula(m, g) != 2) {
        full = false;
        break;
      }
    CHECK(g3_entails({t}, g, large) == full);
    CHECK(g3_entails({t}, g, small) == full);
  }
}
