// SPDX-License-Identifier: MIT
#include "aspu/harness.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

#include "aspu/n2.hpp"
#include "aspu/rejection.hpp"

namespace aspu {

namespace {

// ---------------------------------------------------------------------------
// Deterministic randomness. Raw engine draws only: the std distributions are
// not pinned across standard library implementations.

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, SuiteId suite, std::size_t index) {
  return splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(suite) << 32) ^ index));
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(eng() % n); }
  bool chance(double p) { return static_cast<double>(eng() >> 11) * 0x1.0p-53 < p; }
  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(static_cast<std::uint32_t>(xs.size()))];
  }
};

std::vector<Atom> alphabet(int count, int offset = 0) {
  std::vector<Atom> out;
  for (int i = 0; i < count; ++i)
    out.push_back(Atom{std::string(1, static_cast<char>('a' + offset + i))});
  return out;
}

Literal random_literal(Rng& rng, const std::vector<Atom>& atoms, double p_strong) {
  return Literal{atoms[rng.below(static_cast<std::uint32_t>(atoms.size()))], rng.chance(p_strong)};
}

Formula random_elp_body(Rng& rng, const std::vector<Atom>& atoms, const GeneratorConfig& cfg) {
  const std::uint32_t n = 1 + rng.below(3);
  std::vector<Formula> units;
  for (std::uint32_t i = 0; i < n; ++i) {
    Formula u = Formula::lit(random_literal(rng, atoms, cfg.p_strong_neg));
    if (rng.chance(cfg.p_weak_neg)) u = Formula::neg(u);
    units.push_back(u);
  }
  return conj_all(units);
}

Program gen_elp_over(Rng& rng, const std::vector<Atom>& atoms, const GeneratorConfig& cfg) {
  Program p;
  if (atoms.empty()) return p;
  const std::uint32_t n = rng.below(static_cast<std::uint32_t>(cfg.rules_max) + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rng.chance(cfg.p_constraint)) {
      p.rules.push_back(constraint(random_elp_body(rng, atoms, cfg)));
    } else {
      const Literal head = random_literal(rng, atoms, cfg.p_strong_neg);
      if (rng.chance(cfg.p_fact))
        p.rules.push_back(fact(head));
      else
        p.rules.push_back(rule(head, random_elp_body(rng, atoms, cfg)));
    }
  }
  return p;
}

// Random body formula over a literal pool; used by the completion suite.
Formula random_formula(Rng& rng, const std::vector<Literal>& pool, int depth) {
  if (pool.empty()) return rng.chance(0.5) ? Formula::top() : Formula::bottom();
  if (depth == 0 || rng.chance(0.4)) return Formula::lit(rng.pick(pool));
  switch (rng.below(3)) {
    case 0: return Formula::conj(random_formula(rng, pool, depth - 1),
                                 random_formula(rng, pool, depth - 1));
    case 1: return Formula::disj(random_formula(rng, pool, depth - 1),
                                 random_formula(rng, pool, depth - 1));
    default: return Formula::neg(random_formula(rng, pool, depth - 1));
  }
}

// ---------------------------------------------------------------------------

Verdict equal_verdict(bool equal) { return equal ? Verdict::holds : Verdict::fails; }

Witness family_witness(std::initializer_list<std::pair<const char*, const Program*>> programs,
                       const std::vector<LiteralSet>& lhs, const std::vector<LiteralSet>& rhs) {
  Witness w;
  for (const auto& [label, prog] : programs) w.programs.emplace_back(label, render_program(*prog));
  w.detail = "lhs: " + render_family(lhs) + " | rhs: " + render_family(rhs);
  return w;
}

bool subprogram(const Program& p, const Program& big) {
  std::vector<Rule> remaining = big.rules;
  for (const Rule& r : p.rules) {
    const auto it = std::find(remaining.begin(), remaining.end(), r);
    if (it == remaining.end()) return false;
    remaining.erase(it);
  }
  return true;
}

// Base-signature form for the N2 judgments: op1 is judged through its op3
// equivalent; the other operators already live on the base signature.
Program base_form(OperatorTag op, const Program& p1, const Program& p2) {
  if (op == OperatorTag::op1) return build_op3(p1, p2).program;
  return build_update(op, p1, p2).program;
}

bool tau_free_rule(const Rule& r) {
  Program single;
  single.rules.push_back(r);
  return is_tau_free(single);
}

// Rules N2-entailed by p: duplicates and antecedent-strengthened variants,
// plus bare tautologies when tau-freeness is not required.
std::vector<Rule> entailed_rules(Rng& rng, const Program& p, bool tau_free_only) {
  std::vector<Rule> sources;
  for (const Rule& r : p.rules)
    if (r.head.kind == RuleHead::Kind::Lit) sources.push_back(r);

  std::vector<Literal> pool;
  for (const Literal& l : literals_over(signature_of(p))) pool.push_back(l);

  std::vector<Rule> out;
  const std::uint32_t n = 1 + rng.below(2);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t action = rng.below(tau_free_only ? 2u : 3u);
    if (action == 0 && !sources.empty()) {
      const Rule& r = rng.pick(sources);
      if (!tau_free_only || tau_free_rule(r)) out.push_back(r);
    } else if (action == 1 && !sources.empty() && !pool.empty()) {
      const Rule& r = rng.pick(sources);
      Literal extra = rng.pick(pool);
      if (extra == r.head.lit) extra = complement_literal(extra);
      Formula u = Formula::lit(extra);
      if (rng.chance(0.5)) u = Formula::neg(u);
      const Rule extended = rule(r.head.lit, r.is_fact() ? u : Formula::conj(r.body, u));
      if (!tau_free_only || tau_free_rule(extended)) out.push_back(extended);
    } else if (action == 2 && !pool.empty()) {
      const Literal l = rng.pick(pool);
      out.push_back(rule(l, Formula::lit(l)));
    }
  }
  return out;
}

Program equivalent_variant(Rng& rng, const Program& p, bool keep_tau_free) {
  Program out = p;
  for (const Rule& r : entailed_rules(rng, p, keep_tau_free)) out.rules.push_back(r);
  if (out.rules.size() > 1 && rng.chance(0.5))
    std::rotate(out.rules.begin(), out.rules.begin() + 1, out.rules.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generator

Program gen_elp(const GeneratorConfig& cfg) {
  if (cfg.atoms < 0 || cfg.atoms > 26)
    throw std::invalid_argument("gen_elp: atom count must be between 0 and 26");
  Rng rng(splitmix64(cfg.seed));
  return gen_elp_over(rng, alphabet(cfg.atoms), cfg);
}

// ---------------------------------------------------------------------------
// Names

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(ClassicProperty p) {
  switch (p) {
    case ClassicProperty::initialization: return "initialization";
    case ClassicProperty::idempotence: return "idempotence";
    case ClassicProperty::noninterference: return "noninterference";
    case ClassicProperty::augmented: return "augmented";
  }
  return "?";
}

std::optional<ClassicProperty> classic_property_from(std::string_view name) {
  if (name == "initialization") return ClassicProperty::initialization;
  if (name == "idempotence") return ClassicProperty::idempotence;
  if (name == "noninterference") return ClassicProperty::noninterference;
  if (name == "augmented") return ClassicProperty::augmented;
  return std::nullopt;
}

std::string to_string(BkProperty p) {
  switch (p) {
    case BkProperty::bk0: return "bk0";
    case BkProperty::bk1: return "bk1";
    case BkProperty::bk2: return "bk2";
    case BkProperty::bk3: return "bk3";
    case BkProperty::bk4: return "bk4";
    case BkProperty::bk5: return "bk5";
    case BkProperty::bk6: return "bk6";
  }
  return "?";
}

std::optional<BkProperty> bk_property_from(std::string_view name) {
  for (int i = 0; i <= 6; ++i) {
    const BkProperty p = static_cast<BkProperty>(i);
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::string to_string(SuiteId s) {
  switch (s) {
    case SuiteId::op1_op3: return "op1-op3";
    case SuiteId::op1_op2_taucomp: return "op1-op2-taucomp";
    case SuiteId::rej_oracle: return "rej-oracle";
    case SuiteId::bk_op3: return "bk-op3";
    case SuiteId::bk_op3r: return "bk-op3r";
    case SuiteId::wis_pattern: return "wis-pattern";
    case SuiteId::update_redundancy: return "update-redundancy";
    case SuiteId::classic: return "classic";
    case SuiteId::completion: return "completion";
  }
  return "?";
}

std::optional<SuiteId> suite_from(std::string_view name) {
  for (SuiteId s : all_suites())
    if (name == to_string(s)) return s;
  return std::nullopt;
}

std::vector<SuiteId> all_suites() {
  return {SuiteId::op1_op3, SuiteId::op1_op2_taucomp,  SuiteId::rej_oracle,
          SuiteId::bk_op3, SuiteId::bk_op3r, SuiteId::wis_pattern,
          SuiteId::update_redundancy,  SuiteId::classic,   SuiteId::completion};
}

std::string render_family(const std::vector<LiteralSet>& family) {
  std::vector<std::string> lines;
  for (const LiteralSet& m : family) {
    std::vector<std::string> lits;
    for (const Literal& l : m) lits.push_back(render_literal(l));
    std::sort(lits.begin(), lits.end());
    std::string line = "{";
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i) line += ", ";
      line += lits[i];
    }
    line += "}";
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += " ";
    out += lines[i];
  }
  return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------
// Classic properties

PropertyVerdict check_classic(ClassicProperty prop, OperatorTag op,
                              const std::vector<Program>& inputs) {
  PropertyVerdict v{to_string(prop), op, Verdict::not_applicable, std::nullopt};
  switch (prop) {
    case ClassicProperty::initialization:
    case ClassicProperty::idempotence: {
      if (inputs.size() != 1)
        throw std::invalid_argument("property takes exactly one program");
      const Program& p = inputs.front();
      const Program empty;
      const auto lhs = prop == ClassicProperty::initialization
                           ? update_answer_sets_for(op, empty, p)
                           : update_answer_sets_for(op, p, p);
      const auto rhs = answer_sets(p, signature_of(p));
      v.verdict = equal_verdict(same_family(lhs, rhs));
      if (v.verdict == Verdict::fails) v.witness = family_witness({{"p", &p}}, lhs, rhs);
      return v;
    }
    case ClassicProperty::noninterference: {
      if (inputs.size() != 2)
        throw std::invalid_argument("noninterference takes exactly two programs");
      const Program& p1 = inputs[0];
      const Program& p2 = inputs[1];
      std::set<Atom> shared;
      for (const Atom& a : signature_of(p1))
        if (signature_of(p2).count(a)) shared.insert(a);
      if (!shared.empty()) return v;  // hypothesis unmet
      const auto lhs = update_answer_sets_for(op, p1, p2);
      const auto rhs = update_answer_sets_for(op, p2, p1);
      v.verdict = equal_verdict(same_family(lhs, rhs));
      if (v.verdict == Verdict::fails)
        v.witness = family_witness({{"p1", &p1}, {"p2", &p2}}, lhs, rhs);
      return v;
    }
    case ClassicProperty::augmented: {
      if (inputs.size() != 2)
        throw std::invalid_argument("augmented takes exactly two programs");
      const Program& p1 = inputs[0];
      const Program& p2 = inputs[1];
      if (!subprogram(p1, p2)) return v;  // hypothesis unmet
      const auto lhs = update_answer_sets_for(op, p1, p2);
      std::set<Atom> sig = signature_of(p1);
      sig.merge(signature_of(p2));
      const auto rhs = answer_sets(p2, sig);
      v.verdict = equal_verdict(same_family(lhs, rhs));
      if (v.verdict == Verdict::fails)
        v.witness = family_witness({{"p1", &p1}, {"p2", &p2}}, lhs, rhs);
      return v;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// BK properties

PropertyVerdict check_bk(BkProperty prop, OperatorTag op, const BkInputs& in) {
  PropertyVerdict v{to_string(prop), op, Verdict::not_applicable, std::nullopt};
  const bool constructs = op != OperatorTag::rej_oracle;
  switch (prop) {
    case BkProperty::bk0: {
      if (!n2_entails_all(program_theory(in.p2), program_theory(in.r))) return v;
      const auto lhs = update_answer_sets_for(op, in.p1, in.p2);
      const auto rhs = update_answer_sets_for(op, in.p1, union_programs(in.p2, in.r));
      v.verdict = equal_verdict(same_family(lhs, rhs));
      if (v.verdict == Verdict::fails)
        v.witness = family_witness({{"p1", &in.p1}, {"p2", &in.p2}, {"r", &in.r}}, lhs, rhs);
      return v;
    }
    case BkProperty::bk1: {
      if (!constructs) return v;
      const UpdateResult u = build_update(op, in.p1, in.p2);
      const Program reparsed = parse_program(render_program(u.program));
      v.verdict = equal_verdict(same_rules(reparsed, u.program));
      if (v.verdict == Verdict::fails) {
        Witness w;
        w.programs.emplace_back("output", render_program(u.program));
        w.detail = "output does not round-trip through the grammar";
        v.witness = w;
      }
      return v;
    }
    case BkProperty::bk2: {
      if (!constructs) return v;
      const Program out = base_form(op, in.p1, in.p2);
      v.verdict = equal_verdict(n2_entails_all(program_theory(out), program_theory(in.p2)));
      if (v.verdict == Verdict::fails) {
        Witness w;
        w.programs.emplace_back("p1", render_program(in.p1));
        w.programs.emplace_back("p2", render_program(in.p2));
        w.programs.emplace_back("update", render_program(out));
        w.detail = "update does not N2-entail p2";
        v.witness = w;
      }
      return v;
    }
    case BkProperty::bk3: {
      if (!constructs) return v;
      const Program out = base_form(op, in.p1, in.p2);
      const Program joined = union_programs(in.p1, in.p2);
      v.verdict = equal_verdict(n2_entails_all(program_theory(joined), program_theory(out)));
      if (v.verdict == Verdict::fails) {
        Witness w;
        w.programs.emplace_back("p1", render_program(in.p1));
        w.programs.emplace_back("p2", render_program(in.p2));
        w.programs.emplace_back("update", render_program(out));
        w.detail = "p1 u p2 does not N2-entail the update";
        v.witness = w;
      }
      return v;
    }
    case BkProperty::bk4: {
      const Program joined = union_programs(in.p1, in.p2);
      std::set<Atom> sig = signature_of(joined);
      const auto union_sets = answer_sets(joined, sig);
      if (union_sets.empty()) return v;  // hypothesis unmet
      const auto lhs = update_answer_sets_for(op, in.p1, in.p2);
      v.verdict = equal_verdict(same_family(union_sets, lhs));
      if (v.verdict == Verdict::fails)
        v.witness = family_witness({{"p1", &in.p1}, {"p2", &in.p2}}, union_sets, lhs);
      return v;
    }
    case BkProperty::bk5: {
      if (!constructs) return v;
      if (n2_consistent(program_theory(in.p2))) return v;  // hypothesis unmet
      const Program out = base_form(op, in.p1, in.p2);
      v.verdict = equal_verdict(!n2_consistent(program_theory(out)));
      if (v.verdict == Verdict::fails) {
        Witness w;
        w.programs.emplace_back("p1", render_program(in.p1));
        w.programs.emplace_back("p2", render_program(in.p2));
        w.programs.emplace_back("update", render_program(out));
        w.detail = "p2 is N2-inconsistent but the update is not";
        v.witness = w;
      }
      return v;
    }
    case BkProperty::bk6: {
      if (!strongly_equivalent(in.p1, in.p2)) return v;  // hypothesis unmet
      const auto lhs = update_answer_sets_for(op, in.p, in.p1);
      const auto rhs = update_answer_sets_for(op, in.p, in.p2);
      v.verdict = equal_verdict(same_family(lhs, rhs));
      if (v.verdict == Verdict::fails)
        v.witness = family_witness({{"p", &in.p}, {"p1", &in.p1}, {"p2", &in.p2}}, lhs, rhs);
      return v;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Completion check

PropertyVerdict check_completion(const Program& p, const Literal& x, const Formula& f,
                                 bool scope_variant) {
  PropertyVerdict v{scope_variant ? "completion-scope" : "completion", OperatorTag::op1,
                    Verdict::not_applicable, std::nullopt};
  if (scope_variant) {
    if (!occurs_only_under_weak_negation(x, p)) return v;
    if (atoms_of(f).count(x.atom)) return v;
  } else {
    if (occurs_in_program(x, p)) return v;
  }

  std::set<Atom> sig = signature_of(p);
  sig.merge(atoms_of(f));
  sig.insert(x.atom);

  Program with_arrow = p;
  with_arrow.rules.push_back(rule(x, f));
  const auto lhs = answer_sets(with_arrow, sig);

  std::vector<Formula> theory = program_theory(p);
  theory.push_back(Formula::implies(f, Formula::lit(x)));
  theory.push_back(Formula::implies(Formula::lit(x), f));
  const auto rhs = answer_sets_theory(theory, sig);

  v.verdict = equal_verdict(same_family(lhs, rhs));
  if (v.verdict == Verdict::fails) {
    Witness w;
    w.programs.emplace_back("p", render_program(p));
    w.detail = "x = " + render_literal(x) + ", f = " + render_formula(f) +
               " | arrow: " + render_family(lhs) + " | iff: " + render_family(rhs);
    v.witness = w;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fuzz campaign

namespace {

struct Campaign {
  const GeneratorConfig& cfg;
  FuzzReport& report;
  std::string witness_dir;

  GeneratorConfig sized(std::uint64_t seed) const {
    GeneratorConfig c = cfg;
    c.seed = seed;
    return c;
  }

  void record(SuiteId suite, std::size_t index, const PropertyVerdict& pv) {
    CaseRecord rec;
    rec.seed = cfg.seed;
    rec.case_index = index;
    rec.suite = to_string(suite);
    rec.property = pv.property;
    rec.op = to_string(pv.op);
    rec.verdict = pv.verdict;
    switch (pv.verdict) {
      case Verdict::holds: ++report.holds; break;
      case Verdict::fails: ++report.fails; break;
      case Verdict::not_applicable: ++report.not_applicable; break;
    }
    if (pv.verdict == Verdict::fails && pv.witness && !witness_dir.empty()) {
      for (const auto& [label, text] : pv.witness->programs) {
        const std::string path = witness_dir + "/" + rec.suite + "-s" +
                                 std::to_string(cfg.seed) + "-c" + std::to_string(index) + "-" +
                                 rec.op + "-" + label + ".lp";
        std::ofstream(path) << text;
        rec.witness_paths.push_back(path);
      }
    }
    report.records.push_back(std::move(rec));
  }
};

// Greedy rule deletion preserving failure, applied to both programs.
template <typename StillFails>
void shrink_pair(Program& p1, Program& p2, StillFails&& still_fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Program* p : {&p1, &p2}) {
      for (std::size_t i = 0; i < p->rules.size(); ++i) {
        Program trial = *p;
        trial.rules.erase(trial.rules.begin() + static_cast<long>(i));
        const Program& other = (p == &p1) ? p2 : p1;
        const bool fails = (p == &p1) ? still_fails(trial, other) : still_fails(other, trial);
        if (fails) {
          *p = std::move(trial);
          changed = true;
          break;
        }
      }
    }
  }
}

// Re-checks with greedily rule-deleted inputs so recorded witnesses are small.
PropertyVerdict check_bk_minimized(BkProperty prop, OperatorTag op, BkInputs in) {
  PropertyVerdict first = check_bk(prop, op, in);
  if (first.verdict != Verdict::fails) return first;
  bool changed = true;
  while (changed) {
    changed = false;
    Program* slots[] = {&in.p, &in.p1, &in.p2, &in.r};
    for (int s = 0; s < 4 && !changed; ++s) {
      for (std::size_t i = 0; i < slots[s]->rules.size(); ++i) {
        BkInputs trial = in;
        Program* tslots[] = {&trial.p, &trial.p1, &trial.p2, &trial.r};
        tslots[s]->rules.erase(tslots[s]->rules.begin() + static_cast<long>(i));
        if (check_bk(prop, op, trial).verdict == Verdict::fails) {
          in = trial;
          changed = true;
          break;
        }
      }
    }
  }
  return check_bk(prop, op, in);
}

PropertyVerdict differential_case(const char* property, OperatorTag lhs_op, OperatorTag rhs_op,
                                  Program p1, Program p2) {
  PropertyVerdict v{property, rhs_op, Verdict::holds, std::nullopt};
  const auto differs = [&](const Program& a, const Program& b) {
    return !same_family(update_answer_sets_for(lhs_op, a, b),
                        update_answer_sets_for(rhs_op, a, b));
  };
  if (!differs(p1, p2)) return v;
  shrink_pair(p1, p2, differs);
  v.verdict = Verdict::fails;
  Witness w;
  w.programs.emplace_back("p1", render_program(p1));
  w.programs.emplace_back("p2", render_program(p2));
  w.detail = to_string(lhs_op) + ": " + render_family(update_answer_sets_for(lhs_op, p1, p2)) +
             " | " + to_string(rhs_op) + ": " +
             render_family(update_answer_sets_for(rhs_op, p1, p2));
  v.witness = w;
  return v;
}

void run_op1_op3(Campaign& c, std::size_t cases) {
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::op1_op3, i);
    const Program p1 = gen_elp(c.sized(s));
    const Program p2 = gen_elp(c.sized(splitmix64(s)));
    c.record(SuiteId::op1_op3, i,
             differential_case("op1-op3", OperatorTag::op1, OperatorTag::op3, p1, p2));
  }
}

void run_op1_op2_taucomp(Campaign& c, std::size_t cases) {
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::op1_op2_taucomp, i);
    const Program p1 = gen_elp(c.sized(s));
    Program p2 = gen_elp(c.sized(splitmix64(s)));
    std::set<Atom> joint = signature_of(p1);
    joint.merge(signature_of(p2));
    p2 = tau_completion(p2, joint);
    c.record(SuiteId::op1_op2_taucomp, i,
             differential_case("op1-op2-taucomp", OperatorTag::op1, OperatorTag::op2, p1, p2));
  }
}

void run_rej_oracle(Campaign& c, std::size_t cases) {
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::rej_oracle, i);
    const Program p1 = gen_elp(c.sized(s));
    const Program p2 = gen_elp(c.sized(splitmix64(s)));
    c.record(SuiteId::rej_oracle, i,
             differential_case("rej-oracle-op1", OperatorTag::rej_oracle, OperatorTag::op1, p1, p2));
    c.record(SuiteId::rej_oracle, i,
             differential_case("rej-oracle-op3", OperatorTag::rej_oracle, OperatorTag::op3, p1, p2));
  }
}

void run_bk_suite(Campaign& c, SuiteId suite, OperatorTag op, std::size_t cases) {
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, suite, i);
    Rng rng(s);
    const Program p1 = gen_elp(c.sized(splitmix64(s ^ 1)));
    Program p2 = gen_elp(c.sized(splitmix64(s ^ 2)));
    if (i % 3 == 2) {
      // Inconsistent update, so bk5 has informative cases.
      p2.rules.push_back(fact(Literal{Atom{"a"}, false}));
      p2.rules.push_back(fact(Literal{Atom{"a"}, true}));
    }
    BkInputs in;
    in.p1 = p1;
    in.p2 = p2;
    c.record(suite, i, check_bk(BkProperty::bk1, op, in));
    c.record(suite, i, check_bk(BkProperty::bk2, op, in));
    c.record(suite, i, check_bk(BkProperty::bk3, op, in));
    c.record(suite, i, check_bk(BkProperty::bk5, op, in));
    if (suite == SuiteId::bk_op3r) c.record(suite, i, check_bk(BkProperty::bk4, op, in));

    // bk6 on an equivalent pair; tau-free when exercising op3.
    const bool keep_tau_free = suite == SuiteId::bk_op3;
    BkInputs eq;
    eq.p = gen_elp(c.sized(splitmix64(s ^ 3)));
    eq.p1 = gen_elp(c.sized(splitmix64(s ^ 4)));
    if (keep_tau_free) {
      eq.p = strip_tau_rules(eq.p);
      eq.p1 = strip_tau_rules(eq.p1);
    }
    eq.p2 = equivalent_variant(rng, eq.p1, keep_tau_free);
    c.record(suite, i, check_bk(BkProperty::bk6, op, eq));
  }
}

void run_wis_pattern(Campaign& c, std::size_t cases) {
  const std::vector<OperatorTag> ops = {OperatorTag::op1,  OperatorTag::op2,
                                        OperatorTag::op2c, OperatorTag::op3,
                                        OperatorTag::op3r, OperatorTag::rej_oracle};
  for (std::size_t i = 0; i < cases; ++i) {
    BkInputs bk6_in, bk0_in;
    if (i == 0) {
      // The known WIS counterexample, pinned so that operators violating
      // bk6 exhibit failures on both sides of the equivalence.
      bk6_in.p = parse_program("a :- not -a.\n-a.");
      bk6_in.p1 = parse_program("a :- a.\nb.");
      bk6_in.p2 = parse_program("b.");
      bk0_in.p1 = bk6_in.p;
      bk0_in.p2 = parse_program("b.");
      bk0_in.r = parse_program("a :- a.");
    } else {
      const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::wis_pattern, i);
      Rng rng(s);
      bk6_in.p = gen_elp(c.sized(splitmix64(s ^ 1)));
      bk6_in.p1 = gen_elp(c.sized(splitmix64(s ^ 2)));
      Program extra;
      extra.rules = entailed_rules(rng, bk6_in.p1, false);
      bk6_in.p2 = union_programs(bk6_in.p1, extra);
      bk0_in.p1 = bk6_in.p;
      bk0_in.p2 = bk6_in.p1;
      bk0_in.r = extra;
    }
    for (OperatorTag op : ops) {
      c.record(SuiteId::wis_pattern, i, check_bk_minimized(BkProperty::bk6, op, bk6_in));
      c.record(SuiteId::wis_pattern, i, check_bk_minimized(BkProperty::bk0, op, bk0_in));
    }
  }
}

void run_update_redundancy(Campaign& c, std::size_t cases) {
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::update_redundancy, i);
    Rng rng(s);
    const Program p1 = gen_elp(c.sized(splitmix64(s ^ 1)));
    const Program p2 = gen_elp(c.sized(splitmix64(s ^ 2)));
    Program r;
    r.rules = entailed_rules(rng, p2, true);
    PropertyVerdict v{"update-redundancy", OperatorTag::op1, Verdict::holds, std::nullopt};
    if (!is_tau_free(r) || !n2_entails_all(program_theory(p2), program_theory(r))) {
      v.verdict = Verdict::not_applicable;
    } else {
      const Program extended = union_programs(p2, r);
      const bool op1_same = same_family(update_answer_sets_for(OperatorTag::op1, p1, p2),
                                        update_answer_sets_for(OperatorTag::op1, p1, extended));
      const bool oracle_same =
          same_family(update_answer_sets_rej(p1, p2), update_answer_sets_rej(p1, extended));
      v.verdict = equal_verdict(op1_same && oracle_same);
      if (v.verdict == Verdict::fails) {
        Witness w;
        w.programs.emplace_back("p1", render_program(p1));
        w.programs.emplace_back("p2", render_program(p2));
        w.programs.emplace_back("r", render_program(r));
        w.detail = op1_same ? "oracle results differ" : "op1 results differ";
        v.witness = w;
      }
    }
    c.record(SuiteId::update_redundancy, i, v);
  }
}

void run_classic(Campaign& c, std::size_t cases) {
  const std::vector<OperatorTag> ops = {OperatorTag::op1,  OperatorTag::op2,
                                        OperatorTag::op2c, OperatorTag::op3,
                                        OperatorTag::op3r, OperatorTag::rej_oracle};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::classic, i);
    Rng rng(s);
    const Program p = gen_elp(c.sized(splitmix64(s ^ 1)));
    const Program whole = gen_elp(c.sized(splitmix64(s ^ 2)));
    Program part;
    part.declared_signature = whole.declared_signature;
    for (const Rule& r : whole.rules)
      if (rng.chance(0.5)) part.rules.push_back(r);

    GeneratorConfig half = c.cfg;
    half.atoms = std::min(c.cfg.atoms, 2);
    half.seed = splitmix64(s ^ 3);
    Rng rng_a(half.seed);
    const Program left = gen_elp_over(rng_a, alphabet(half.atoms, 0), half);
    half.seed = splitmix64(s ^ 4);
    Rng rng_b(half.seed);
    const Program right = gen_elp_over(rng_b, alphabet(half.atoms, 3), half);

    for (OperatorTag op : ops) {
      c.record(SuiteId::classic, i, check_classic(ClassicProperty::initialization, op, {p}));
      c.record(SuiteId::classic, i, check_classic(ClassicProperty::idempotence, op, {p}));
      c.record(SuiteId::classic, i,
               check_classic(ClassicProperty::augmented, op, {part, whole}));
      if (op != OperatorTag::op2)  // op2 does not commute even on disjoint alphabets
        c.record(SuiteId::classic, i,
                 check_classic(ClassicProperty::noninterference, op, {left, right}));
    }
  }
}

void run_completion(Campaign& c, std::size_t cases) {
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(c.cfg.seed, SuiteId::completion, i);
    Rng rng(s);
    GeneratorConfig small = c.cfg;
    small.atoms = std::min(c.cfg.atoms, 4);
    small.seed = splitmix64(s ^ 1);
    Program p = gen_elp(small);
    const bool scope = i % 2 == 1;

    Literal x{Atom{"x"}, false};
    if (!scope) {
      // Sometimes reuse an occurring atom with the unused polarity.
      const std::set<Literal> occ = occurring_literals(p);
      std::vector<Literal> flips;
      for (const Literal& l : occ)
        if (!occ.count(complement_literal(l))) flips.push_back(complement_literal(l));
      if (!flips.empty() && rng.chance(0.5)) x = rng.pick(flips);
    } else {
      // Make x occur only under weak negation in a few bodies.
      for (Rule& r : p.rules)
        if (rng.chance(0.4) && !r.is_tautology_head())
          r.body = r.is_fact() ? Formula::neg(Formula::lit(x))
                               : Formula::conj(r.body, Formula::neg(Formula::lit(x)));
    }

    std::vector<Literal> pool;
    for (const Literal& l : literals_over(signature_of(p)))
      if (l != x && l.atom != x.atom) pool.push_back(l);
    const Formula f = random_formula(rng, pool, 2);

    c.record(SuiteId::completion, i, check_completion(p, x, f, scope));
  }
}

}  // namespace

FuzzReport fuzz_campaign(const GeneratorConfig& cfg, std::size_t cases,
                         const std::vector<SuiteId>& suites, const std::string& witness_dir) {
  FuzzReport report;
  Campaign c{cfg, report, witness_dir};
  bool wis_pattern_ran = false;
  for (SuiteId suite : suites) {
    const std::size_t before = report.fails;
    switch (suite) {
      case SuiteId::op1_op3: run_op1_op3(c, cases); break;
      case SuiteId::op1_op2_taucomp: run_op1_op2_taucomp(c, cases); break;
      case SuiteId::rej_oracle: run_rej_oracle(c, cases); break;
      case SuiteId::bk_op3: run_bk_suite(c, suite, OperatorTag::op3, cases); break;
      case SuiteId::bk_op3r: run_bk_suite(c, suite, OperatorTag::op3r, cases); break;
      case SuiteId::wis_pattern:
        run_wis_pattern(c, cases);
        wis_pattern_ran = true;
        break;
      case SuiteId::update_redundancy: run_update_redundancy(c, cases); break;
      case SuiteId::classic: run_classic(c, cases); break;
      case SuiteId::completion: run_completion(c, cases); break;
    }
    if (suite != SuiteId::wis_pattern && report.fails != before) report.suites_ok = false;
  }

  if (wis_pattern_ran) {
    for (const OperatorTag op : {OperatorTag::op1, OperatorTag::op2, OperatorTag::op2c,
                                 OperatorTag::op3, OperatorTag::op3r, OperatorTag::rej_oracle}) {
      bool bk0_all = true, bk6_all = true;
      std::size_t bk0_seen = 0, bk6_seen = 0;
      for (const CaseRecord& rec : report.records) {
        if (rec.suite != "wis-pattern" || rec.op != to_string(op)) continue;
        if (rec.verdict == Verdict::not_applicable) continue;
        if (rec.property == "bk0") {
          ++bk0_seen;
          if (rec.verdict == Verdict::fails) bk0_all = false;
        } else if (rec.property == "bk6") {
          ++bk6_seen;
          if (rec.verdict == Verdict::fails) bk6_all = false;
        }
      }
      const bool match = bk0_all == bk6_all && bk0_seen > 0 && bk6_seen > 0;
      report.notes.push_back("wis-pattern " + to_string(op) + ": bk0 " +
                             (bk0_all ? "holds" : "fails") + ", bk6 " +
                             (bk6_all ? "holds" : "fails") + (match ? "" : " (MISMATCH)"));
      if (!match) report.suites_ok = false;
    }
  }
  return report;
}

}  // namespace aspu
