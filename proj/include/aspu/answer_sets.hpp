// SPDX-License-Identifier: MIT
#pragma once

#include <set>
#include <vector>

#include "aspu/syntax.hpp"

namespace aspu {

/// Candidate or actual answer set; always consistent (never both a and ~a).
using LiteralSet = std::set<Literal>;

bool is_consistent(const LiteralSet& s);

/// The answer-set test: M is an answer set of P iff
/// P + not(Lit \ M) + not not M is N2-consistent and N2-entails every l in M.
/// Implemented as the equivalent two-world check over the reduced theory
/// (the classical pass plus minimality over proper "here" subsets); the
/// literal N2 reduction serves as the test oracle for this equivalence.
/// Preconditions (violations throw std::invalid_argument): m is consistent,
/// m is over sig, and sig covers the program's signature.
bool is_answer_set(const Program& p, const LiteralSet& m, const std::set<Atom>& sig);

/// Every consistent subset of Lit_sig that passes is_answer_set, canonically
/// ordered. ELPs are solved by assumption-set enumeration over the weakly
/// negated derivable literals; augmented programs enumerate consistent
/// subsets of the head literals. Both equal the naive 3^|sig| sweep
/// (property-tested).
std::vector<LiteralSet> answer_sets(const Program& p, const std::set<Atom>& sig);

/// Generalized rules (arbitrary implications) for the completion checks;
/// exhaustive 3^|sig| candidate sweep, so the signature cap applies.
std::vector<LiteralSet> answer_sets_theory(const std::vector<Formula>& theory,
                                           const std::set<Atom>& sig);

/// Same answer sets over the union signature.
bool same_answer_sets(const Program& p1, const Program& p2);

bool same_family(const std::vector<LiteralSet>& a, const std::vector<LiteralSet>& b);

/// p_big is a conservative extension of p: the answer sets of p are exactly
/// the Lit_sig projections of the answer sets of p_big.
bool is_conservative_extension(const Program& p, const Program& p_big,
                               const std::set<Atom>& sig);

}  // namespace aspu
