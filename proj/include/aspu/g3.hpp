// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "aspu/syntax.hpp"

namespace aspu {

/// Total map from a fixed atom universe into {0, 1, 2}. Value 2 is the
/// designated value; models make every theory formula evaluate to 2.
struct Interpretation3 {
  std::vector<Atom> universe;  // sorted, duplicate-free
  std::vector<std::uint8_t> values;

  int value_of(const Atom& a) const;
};

/// Evaluation per the Goedel tables: v(A&B)=min, v(A|B)=max, v(bot)=0,
/// v(A->B)=2 if v(A)<=v(B) else v(B). Weak negation and top are derived
/// (~p := p->bot, top := bot->bot). Literal leaves must be plain atoms:
/// strong negation is rejected here and must be translated first.
int eval_formula(const Interpretation3& i, const Formula& f);

bool is_model(const Interpretation3& i, const std::vector<Formula>& theory);

/// Exhaustive 3^|universe| enumeration (capped); deterministic order.
std::vector<Interpretation3> g3_models(const std::vector<Formula>& theory,
                                       const std::set<Atom>& universe);

/// Semantic consequence. Internally restricts the sweep to atoms occurring
/// in theory or goal; equality with the full enumeration is property-tested.
bool g3_entails(const std::vector<Formula>& theory, const Formula& f,
                const std::set<Atom>& universe);

/// One enumeration pass answering every goal at once.
std::vector<bool> g3_entails_each(const std::vector<Formula>& theory,
                                  const std::vector<Formula>& goals,
                                  const std::set<Atom>& universe);

bool g3_satisfiable(const std::vector<Formula>& theory, const std::set<Atom>& universe);

}  // namespace aspu
