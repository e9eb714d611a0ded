// SPDX-License-Identifier: MIT
#include "doctest.h"

#include "aspu/answer_sets.hpp"
#include "aspu/n2.hpp"
#include "support.hpp"

using namespace aspu;
using namespace aspu::test;

namespace {
Formula atom(const char* name) { return Formula::lit(make_literal(name)); }
}

TEST_CASE("push_strong_negation: the axioms") {
  const Formula a = atom("a"), b = atom("b");
  CHECK(push_strong_negation(Formula::strong(Formula::conj(a, b))) ==
        Formula::disj(atom("-a"), atom("-b")));
  CHECK(push_strong_negation(Formula::strong(Formula::disj(a, b))) ==
        Formula::conj(atom("-a"), atom("-b")));
  CHECK(push_strong_negation(Formula::strong(Formula::strong(a))) == a);
  CHECK(push_strong_negation(Formula::strong(Formula::neg(a))) == a);
  CHECK(push_strong_negation(Formula::strong(Formula::implies(a, b))) ==
        Formula::conj(a, atom("-b")));
  CHECK(push_strong_negation(Formula::strong(Formula::bottom())) == Formula::top());
  CHECK(push_strong_negation(Formula::strong(Formula::top())) == Formula::bottom());
}

TEST_CASE("push_strong_negation: idempotent on random inputs") {
  TestRng rng(3);
  const auto pool = pool_over(sig({"a", "b"}));
  for (int i = 0; i < 60; ++i) {
    const Formula f = random_formula(rng, pool, 3, /*allow_strong_compound=*/true);
    const Formula once = push_strong_negation(f);
    CHECK(push_strong_negation(once) == once);
  }
}

TEST_CASE("translate_to_g3: renaming and coherence") {
  // ~(a & b) -> not b turns into (a' | b') -> not b plus both coherence premises.
  const Formula input = Formula::implies(
      Formula::strong(Formula::conj(atom("a"), atom("b"))), Formula::neg(atom("b")));
  const G3Reduction red = translate_to_g3({input});
  const Atom ap = red.map.primed_of(make_atom("a"));
  const Atom bp = red.map.primed_of(make_atom("b"));
  const Formula expected = Formula::implies(
      Formula::disj(Formula::lit(Literal{ap, false}), Formula::lit(Literal{bp, false})),
      Formula::neg(atom("b")));
  CHECK(std::find(red.theory.begin(), red.theory.end(), expected) != red.theory.end());
  const Formula coh_a =
      Formula::implies(Formula::lit(Literal{ap, false}), Formula::neg(atom("a")));
  const Formula coh_b =
      Formula::implies(Formula::lit(Literal{bp, false}), Formula::neg(atom("b")));
  CHECK(std::find(red.theory.begin(), red.theory.end(), coh_a) != red.theory.end());
  CHECK(std::find(red.theory.begin(), red.theory.end(), coh_b) != red.theory.end());
  CHECK(red.universe.size() == 4);

  // Coherence only, over the signature contributed by extra.
  const G3Reduction empty = translate_to_g3({}, {atom("a")});
  REQUIRE(empty.theory.size() == 1);
  CHECK(empty.theory[0] ==
        Formula::implies(Formula::lit(Literal{empty.map.primed_of(make_atom("a")), false}),
                         Formula::neg(atom("a"))));

  const G3Reduction strong = translate_to_g3({atom("-a")});
  CHECK(strong.theory.size() == 2);  // a' plus coherence
}

TEST_CASE("n2_entails") {
  CHECK(n2_entails({}, Formula::implies(atom("-a"), Formula::neg(atom("a")))));
  // ~(a & b) -> not b is not an N2 theorem (countermodel: a'=2, b=2).
  CHECK_FALSE(n2_entails({}, Formula::implies(Formula::strong(Formula::conj(atom("a"), atom("b"))),
                                              Formula::neg(atom("b")))));
  CHECK(n2_entails({atom("a")}, atom("a")));
}

TEST_CASE("n2_consistent") {
  CHECK_FALSE(n2_consistent({atom("a"), atom("-a")}));
  CHECK(n2_consistent({atom("a")}));
  CHECK(n2_consistent({}));
}

TEST_CASE("strongly_equivalent") {
  CHECK(strongly_equivalent(P("a :- a."), Program{}));
  CHECK(strongly_equivalent(P("b."), P("b.\na :- a.")));
  CHECK_FALSE(strongly_equivalent(P("a."), P("b.")));
  CHECK_FALSE(strongly_equivalent(P("a :- not b."), P("a.")));
}

TEST_CASE("property: pushdown preserves N2 judgments") {
  TestRng rng(41);
  const auto pool = pool_over(sig({"a", "b"}));
  for (int i = 0; i < 40; ++i) {
    const Formula t = random_formula(rng, pool, 2, true);
    const Formula g = random_formula(rng, pool, 2, true);
    CHECK(n2_entails({t}, g) == n2_entails({push_strong_negation(t)}, push_strong_negation(g)));
  }
}

TEST_CASE("property: reflexivity and monotonicity of n2_entails") {
  TestRng rng(43);
  const auto pool = pool_over(sig({"a", "b"}));
  for (int i = 0; i < 40; ++i) {
    const Formula t = random_formula(rng, pool, 2, true);
    const Formula u = random_formula(rng, pool, 2, true);
    const Formula g = random_formula(rng, pool, 2, true);
    CHECK(n2_entails({t}, t));
    if (n2_entails({t}, g)) CHECK(n2_entails({t, u}, g));
  }
}

TEST_CASE("property: strong equivalence transfers under program extension") {
  // Strongly equivalent programs keep the
  // same answer sets under any extension.
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Program p1 = gen(seed, 3, 3);
    Program p2 = p1;
    p2.rules.push_back(rule(L("a"), Formula::lit(L("a"))));
    if (!p2.rules.empty()) std::rotate(p2.rules.begin(), p2.rules.begin() + 1, p2.rules.end());
    REQUIRE(strongly_equivalent(p1, p2));
    for (std::uint64_t extra = 100; extra < 104; ++extra) {
      const Program ext = gen(extra, 3, 4);
      CHECK(same_answer_sets(union_programs(p1, ext), union_programs(p2, ext)));
    }
  }
}
