// SPDX-License-Identifier: MIT
#include "aspu/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "aspu/rejection.hpp"

namespace aspu {

namespace {

void require_elp(const Program& p, const char* op) {
  if (!is_elp(p))
    throw std::invalid_argument(std::string(op) + ": input is not an extended logic program");
}

// Head-Top rules are N2 theorems; every construction drops them first.
Program drop_tautology_heads(const Program& p) {
  Program out;
  out.declared_signature = p.declared_signature;
  for (const Rule& r : p.rules)
    if (!r.is_tautology_head()) out.rules.push_back(r);
  return out;
}

std::set<Atom> joint_signature(const Program& p1, const Program& p2) {
  std::set<Atom> sig = signature_of(p1);
  sig.merge(signature_of(p2));
  return sig;
}

Formula guarded_body(const Formula& body, const Formula& guard) {
  if (body.kind() == Formula::Kind::Top) return guard;
  return Formula::conj(body, guard);
}

void append_constraints(const Program& p, Program& out) {
  for (const Rule& r : p.rules)
    if (r.is_constraint()) out.rules.push_back(r);
}

Atom fresh_atom(std::string stem, std::set<std::string>& taken) {
  while (taken.count(stem)) stem += "_";
  taken.insert(stem);
  return Atom{std::move(stem)};
}

}  // namespace

std::string to_string(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::op1: return "op1";
    case OperatorTag::op2: return "op2";
    case OperatorTag::op2c: return "op2c";
    case OperatorTag::op3: return "op3";
    case OperatorTag::op3r: return "op3r";
    case OperatorTag::rej_oracle: return "rej-oracle";
  }
  return "?";
}

std::optional<OperatorTag> operator_tag_from(std::string_view name) {
  if (name == "op1") return OperatorTag::op1;
  if (name == "op2") return OperatorTag::op2;
  if (name == "op2c") return OperatorTag::op2c;
  if (name == "op3") return OperatorTag::op3;
  if (name == "op3r") return OperatorTag::op3r;
  if (name == "rej-oracle") return OperatorTag::rej_oracle;
  return std::nullopt;
}

Literal StarSignature::indexed_literal(const Literal& l, int i) const {
  const auto it = indexed.find({l.atom, i});
  if (it == indexed.end())
    throw std::logic_error("no indexed atom allocated for " + l.atom.name);
  return Literal{it->second, l.strong_neg};
}

UpdateResult build_op1(const Program& p1_in, const Program& p2_in) {
  require_elp(p1_in, "op1");
  require_elp(p2_in, "op1");
  const Program p1 = drop_tautology_heads(p1_in);
  const Program p2 = drop_tautology_heads(p2_in);
  const Program joined = union_programs(p1, p2);

  StarSignature star;
  star.base = joint_signature(p1_in, p2_in);
  std::set<std::string> taken;
  for (const Atom& a : star.base) taken.insert(a.name);

  const std::set<Literal> occurring = occurring_literals(joined);
  std::set<Atom> occurring_atoms;
  for (const Literal& l : occurring) occurring_atoms.insert(l.atom);
  for (const Atom& a : occurring_atoms)
    for (int i : {1, 2})
      star.indexed.emplace(std::make_pair(a, i),
                           fresh_atom(a.name + "_" + std::to_string(i), taken));
  for (std::size_t k = 0; k < p1.rules.size(); ++k)
    if (!p1.rules[k].is_constraint())
      star.rej.emplace(k, fresh_atom("rej_" + std::to_string(k + 1), taken));

  UpdateResult out;
  out.operator_tag = OperatorTag::op1;
  out.projection_signature = star.base;

  append_constraints(p1, out.program);
  append_constraints(p2, out.program);

  for (std::size_t k = 0; k < p1.rules.size(); ++k) {
    const Rule& r = p1.rules[k];
    if (r.is_constraint()) continue;
    const Literal head = r.head.lit;
    const Literal rej_lit{star.rej.at(k), false};
    out.program.rules.push_back(rule(star.indexed_literal(head, 1),
                                     guarded_body(r.body, Formula::neg(Formula::lit(rej_lit)))));
    const Literal comp2 = star.indexed_literal(complement_literal(head), 2);
    out.program.rules.push_back(rule(rej_lit, guarded_body(r.body, Formula::lit(comp2))));
  }

  for (const Rule& r : p2.rules) {
    if (r.is_constraint()) continue;
    out.program.rules.push_back(rule(star.indexed_literal(r.head.lit, 2), r.body));
  }

  for (const Literal& l : occurring) {
    const Literal l1 = star.indexed_literal(l, 1);
    const Literal l2 = star.indexed_literal(l, 2);
    out.program.rules.push_back(rule(l1, Formula::lit(l2)));
    out.program.rules.push_back(rule(l, Formula::lit(l1)));
  }

  out.star = std::move(star);
  return out;
}

UpdateResult build_op2(const Program& p1_in, const Program& p2_in) {
  require_elp(p1_in, "op2");
  require_elp(p2_in, "op2");
  const Program p1 = drop_tautology_heads(p1_in);
  const Program p2 = drop_tautology_heads(p2_in);

  UpdateResult out;
  out.operator_tag = OperatorTag::op2;
  out.projection_signature = joint_signature(p1_in, p2_in);

  append_constraints(p1, out.program);
  for (const Rule& r : p1.rules) {
    if (r.is_constraint()) continue;
    const Formula guard = Formula::neg(Formula::lit(complement_literal(r.head.lit)));
    out.program.rules.push_back(rule(r.head.lit, guarded_body(r.body, guard)));
  }
  out.program.rules.insert(out.program.rules.end(), p2.rules.begin(), p2.rules.end());
  return out;
}

UpdateResult build_op2c(const Program& p1_in, const Program& p2_in) {
  require_elp(p1_in, "op2c");
  require_elp(p2_in, "op2c");
  const Program p1 = drop_tautology_heads(p1_in);
  const Program p2 = drop_tautology_heads(p2_in);

  std::set<Literal> p2_heads;
  for (const Rule& r : p2.rules)
    if (!r.is_constraint()) p2_heads.insert(r.head.lit);

  UpdateResult out;
  out.operator_tag = OperatorTag::op2c;
  out.projection_signature = joint_signature(p1_in, p2_in);

  append_constraints(p1, out.program);
  for (const Rule& r : p1.rules) {
    if (r.is_constraint()) continue;
    const Literal comp = complement_literal(r.head.lit);
    if (p2_heads.count(comp)) {
      const Formula guard = Formula::neg(Formula::lit(comp));
      out.program.rules.push_back(rule(r.head.lit, guarded_body(r.body, guard)));
    } else {
      out.program.rules.push_back(r);
    }
  }
  out.program.rules.insert(out.program.rules.end(), p2.rules.begin(), p2.rules.end());
  return out;
}

Formula sup(const Literal& l, const Program& p) {
  std::vector<Formula> bodies;
  bool has_fact = false;
  for (const Rule& r : p.rules) {
    if (r.is_constraint() || r.is_tautology_head()) continue;
    if (r.head.lit != l) continue;
    if (r.is_fact()) has_fact = true;
    if (std::find(bodies.begin(), bodies.end(), r.body) == bodies.end())
      bodies.push_back(r.body);
  }
  if (has_fact) return Formula::top();
  if (bodies.empty()) return Formula::bottom();
  return disj_all(bodies);
}

UpdateResult build_op3(const Program& p1_in, const Program& p2_in) {
  require_elp(p1_in, "op3");
  require_elp(p2_in, "op3");
  const Program p1 = drop_tautology_heads(p1_in);
  const Program p2 = drop_tautology_heads(p2_in);

  UpdateResult out;
  out.operator_tag = OperatorTag::op3;
  out.projection_signature = joint_signature(p1_in, p2_in);

  append_constraints(p1, out.program);
  for (const Rule& r : p1.rules) {
    if (r.is_constraint()) continue;
    const Formula s = sup(complement_literal(r.head.lit), p2);
    if (s.kind() == Formula::Kind::Bottom) {
      out.program.rules.push_back(r);
    } else {
      out.program.rules.push_back(rule(r.head.lit, guarded_body(r.body, Formula::neg(s))));
    }
  }
  out.program.rules.insert(out.program.rules.end(), p2.rules.begin(), p2.rules.end());
  return out;
}

UpdateResult build_op3r(const Program& p1_in, const Program& p2_in) {
  require_elp(p1_in, "op3r");
  require_elp(p2_in, "op3r");
  const Program joined = union_programs(drop_tautology_heads(p1_in), drop_tautology_heads(p2_in));
  if (!answer_sets(joined, signature_of(joined)).empty()) {
    UpdateResult out;
    out.operator_tag = OperatorTag::op3r;
    out.projection_signature = joint_signature(p1_in, p2_in);
    out.program = joined;
    out.branch_note = "union";
    return out;
  }
  UpdateResult out = build_op3(p1_in, strip_tau_rules(p2_in));
  out.operator_tag = OperatorTag::op3r;
  out.projection_signature = joint_signature(p1_in, p2_in);
  out.branch_note = "rejected-tautology-free";
  return out;
}

UpdateResult build_update(OperatorTag tag, const Program& p1, const Program& p2) {
  switch (tag) {
    case OperatorTag::op1: return build_op1(p1, p2);
    case OperatorTag::op2: return build_op2(p1, p2);
    case OperatorTag::op2c: return build_op2c(p1, p2);
    case OperatorTag::op3: return build_op3(p1, p2);
    case OperatorTag::op3r: return build_op3r(p1, p2);
    case OperatorTag::rej_oracle:
      throw std::invalid_argument("the rejection oracle does not construct a program");
  }
  throw std::logic_error("unknown operator tag");
}

std::vector<LiteralSet> update_answer_sets(const UpdateResult& u) {
  std::set<Atom> sig = signature_of(u.program);
  for (const Atom& a : u.projection_signature) sig.insert(a);
  std::vector<LiteralSet> projected;
  for (const LiteralSet& m : answer_sets(u.program, sig)) {
    LiteralSet proj;
    for (const Literal& l : m)
      if (u.projection_signature.count(l.atom)) proj.insert(l);
    projected.push_back(std::move(proj));
  }
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  return projected;
}

std::vector<LiteralSet> update_answer_sets_for(OperatorTag tag, const Program& p1,
                                               const Program& p2) {
  if (tag == OperatorTag::rej_oracle) return update_answer_sets_rej(p1, p2);
  return update_answer_sets(build_update(tag, p1, p2));
}

}  // namespace aspu
