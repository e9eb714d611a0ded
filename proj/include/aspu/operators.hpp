// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aspu/answer_sets.hpp"
#include "aspu/syntax.hpp"

namespace aspu {

enum class OperatorTag { op1, op2, op2c, op3, op3r, rej_oracle };

std::string to_string(OperatorTag tag);
std::optional<OperatorTag> operator_tag_from(std::string_view name);

/// The extended signature of the op1 construction: fresh indexed copies A_1,
/// A_2 per base atom and one rej atom per rule occurrence of P1. Names are
/// grammar-legal, injective, and disjoint from the base atoms.
struct StarSignature {
  std::set<Atom> base;
  std::map<std::pair<Atom, int>, Atom> indexed;
  std::map<std::size_t, Atom> rej;  // keyed by rule position in P1

  Literal indexed_literal(const Literal& l, int i) const;
};

struct UpdateResult {
  Program program;
  std::set<Atom> projection_signature;
  OperatorTag operator_tag;
  std::optional<std::string> branch_note;  // op3r: "union" or "rejected-tautology-free"
  std::optional<StarSignature> star;       // op1 only
};

/// The causal-rejection construction over the star signature:
/// (i) constraints verbatim, (ii) L1 <- B(r), not rej(r) and
/// rej(r) <- B(r), comp(L)2 per P1 rule, (iii) L2 <- B(r) per P2 rule,
/// (iv) L1 <- L2 and L <- L1 per occurring literal L. Inputs must be ELPs;
/// head-Top rules are dropped first.
UpdateResult build_op1(const Program& p1, const Program& p2);

/// Every P1 rule guarded by the weak negation of its complementary head;
/// P2 verbatim.
UpdateResult build_op2(const Program& p1, const Program& p2);

/// As op2, but the guard is added only when P2 holds a conflicting rule.
UpdateResult build_op2c(const Program& p1, const Program& p2);

/// Support formula of l in p: Top if l is a fact there, Bottom if l heads no
/// rule, otherwise the disjunction of the bodies in rule order (first
/// occurrence wins for structurally equal bodies).
Formula sup(const Literal& l, const Program& p);

/// P1 rules guarded by not sup(comp(L), P2); P2 verbatim. The output is an
/// augmented program. A Bottom guard is dropped, leaving the rule unchanged.
UpdateResult build_op3(const Program& p1, const Program& p2);

/// P1 u P2 when that union has answer sets; otherwise op3 against P2 with
/// its tautology rules stripped.
UpdateResult build_op3r(const Program& p1, const Program& p2);

UpdateResult build_update(OperatorTag tag, const Program& p1, const Program& p2);

/// Answer sets of the constructed program projected to the base literals,
/// deduplicated and canonically ordered.
std::vector<LiteralSet> update_answer_sets(const UpdateResult& u);

/// Dispatch that also covers the rejection-set oracle tag.
std::vector<LiteralSet> update_answer_sets_for(OperatorTag tag, const Program& p1,
                                               const Program& p2);

}  // namespace aspu
