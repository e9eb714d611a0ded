// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <set>
#include <vector>

#include "aspu/syntax.hpp"

namespace aspu {

/// Primed companion atoms standing for the strong negations of the source
/// atoms. Primes carry a quote suffix, which the text grammar forbids, so
/// they can never collide with user, indexed, or rej atoms.
struct RenamingMap {
  std::map<Atom, Atom> primed;

  const Atom& primed_of(const Atom& a) const;
};

/// Rewrites with the strong-negation axioms until ~ sits on atoms only:
/// ~(a->b) => a & ~b, ~(a&b) => ~a | ~b, ~(a|b) => ~a & ~b, ~~a => a,
/// ~not a => a, plus ~bot => top and ~top => bot. Idempotent on outputs.
Formula push_strong_negation(const Formula& f);

struct G3Reduction {
  std::vector<Formula> theory;  // translated inputs plus coherence premises
  std::set<Atom> universe;      // source atoms and their primes
  RenamingMap map;
};

/// The provability reduction: push ~ to atoms, replace each ~a by the primed
/// atom a', and add a coherence premise a' -> not a for every atom of the
/// combined signature of theory and extra.
G3Reduction translate_to_g3(const std::vector<Formula>& theory,
                            const std::vector<Formula>& extra = {});

/// Pushdown plus prime substitution for a single formula under a fixed map.
Formula rename_formula(const Formula& f, const RenamingMap& map);

bool n2_entails(const std::vector<Formula>& theory, const Formula& f);
std::vector<bool> n2_entails_each(const std::vector<Formula>& theory,
                                  const std::vector<Formula>& goals);
bool n2_entails_all(const std::vector<Formula>& theory, const std::vector<Formula>& goals);

bool n2_consistent(const std::vector<Formula>& theory);

/// N2 inter-derivability of the rule sets; coincides with strong equivalence
/// of the programs.
bool strongly_equivalent(const Program& p1, const Program& p2);

}  // namespace aspu
