// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "aspu/answer_sets.hpp"
#include "aspu/syntax.hpp"

namespace aspu {

/// Rule occurrences of P1 rejected for a candidate; only P1 rules are ever
/// rejected in a two-program sequence.
struct RejectionSet {
  std::set<std::size_t> rule_indices;  // positions in p1.rules
};

/// Heads are complementary literals. Throws on constraint or Top heads.
bool conflicting(const Rule& r1, const Rule& r2);

/// S-bar: the members of s as formulas plus the weak negation of every other
/// literal over sig.
std::vector<Formula> closure_bar(const LiteralSet& s, const std::set<Atom>& sig);

/// Rej'(S, (p1, p2)): p1 rules with a conflicting p2 rule such that S-bar
/// N2-entails both bodies. Body entailment under the complete theory S-bar
/// collapses to membership tests (equality with n2_entails is
/// property-tested).
RejectionSet rej_prime(const LiteralSet& s, const Program& p1, const Program& p2);

/// Independent update semantics: S is an update answer set iff S is an
/// answer set of (p1 \ Rej'(S)) u p2. Differential oracle for op1/op3.
std::vector<LiteralSet> update_answer_sets_rej(const Program& p1, const Program& p2);

}  // namespace aspu
