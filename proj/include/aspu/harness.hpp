// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aspu/operators.hpp"
#include "aspu/syntax.hpp"

namespace aspu {

/// Deterministic per seed: the same config always reproduces the same
/// program byte for byte.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int atoms = 4;  // alphabet size, a.. (the shipped campaigns stay at <= 5)
  int rules_max = 5;
  double p_strong_neg = 0.35;
  double p_weak_neg = 0.45;
  double p_constraint = 0.10;
  double p_fact = 0.25;
};

Program gen_elp(const GeneratorConfig& cfg);

enum class Verdict { holds, fails, not_applicable };
std::string to_string(Verdict v);

struct Witness {
  std::vector<std::pair<std::string, std::string>> programs;  // label -> program text
  std::string detail;
};

struct PropertyVerdict {
  std::string property;
  OperatorTag op = OperatorTag::op1;
  Verdict verdict = Verdict::not_applicable;
  std::optional<Witness> witness;  // present whenever verdict == fails
};

enum class ClassicProperty { initialization, idempotence, noninterference, augmented };
std::string to_string(ClassicProperty p);
std::optional<ClassicProperty> classic_property_from(std::string_view name);

/// initialization/idempotence take one program, the others two.
/// Noninterference requires disjoint signatures and augmented requires
/// P1 to be a subprogram of P2; unmet hypotheses yield not_applicable.
PropertyVerdict check_classic(ClassicProperty prop, OperatorTag op,
                              const std::vector<Program>& inputs);

enum class BkProperty { bk0, bk1, bk2, bk3, bk4, bk5, bk6 };
std::string to_string(BkProperty p);
std::optional<BkProperty> bk_property_from(std::string_view name);

/// Slots used per property: bk6 reads (p, p1, p2); bk0 reads (p1, p2, r);
/// the rest read (p1, p2). N2 judgments about the update program (bk2, bk3,
/// bk5) are evaluated on the base-signature form: op1 is replaced by its op3
/// equivalent.
struct BkInputs {
  Program p, p1, p2, r;
};
PropertyVerdict check_bk(BkProperty prop, OperatorTag op, const BkInputs& in);

/// Compares the answer sets of p + {x <- f} and p + {x <-> f}. The
/// biconditional is an internal theory (f <- x exceeds the rule grammar).
/// scope_variant=false requires x not to occur in p; scope_variant=true
/// requires x to occur only under weak negation and x outside Lit(f).
PropertyVerdict check_completion(const Program& p, const Literal& x, const Formula& f,
                                 bool scope_variant);

enum class SuiteId {
  op1_op3,            // the two constructions agree
  op1_op2_taucomp,    // op1 == op2 once P2 is tau-completed
  rej_oracle,         // rejection-set semantics == op1 == op3
  bk_op3,             // op3: bk1/bk2/bk3/bk5 always, bk6 on tau-free pairs
  bk_op3r,            // op3r: bk1..bk6
  wis_pattern,        // per operator, bk0 and bk6 stand or fall together
  update_redundancy,  // op1 invariant under adding entailed tau-free rules to P2
  classic,            // initialization/idempotence/augmented/noninterference
  completion,         // x <- F vs x <-> F
};
std::string to_string(SuiteId s);
std::optional<SuiteId> suite_from(std::string_view name);
std::vector<SuiteId> all_suites();

struct CaseRecord {
  std::uint64_t seed = 0;
  std::size_t case_index = 0;
  std::string suite;
  std::string property;
  std::string op;
  Verdict verdict = Verdict::not_applicable;
  std::vector<std::string> witness_paths;
};

struct FuzzReport {
  std::vector<CaseRecord> records;
  std::size_t holds = 0, fails = 0, not_applicable = 0;
  bool suites_ok = true;
  std::vector<std::string> notes;
};

/// Deterministic per seed. Failing cases are shrunk by greedy rule deletion;
/// when witness_dir is set the reduced programs are written there and the
/// paths recorded. wis_pattern counts as ok when, per operator, "all
/// informative bk0 cases hold" agrees with "all informative bk6 cases hold";
/// every other suite counts as ok when nothing fails.
FuzzReport fuzz_campaign(const GeneratorConfig& cfg, std::size_t cases,
                         const std::vector<SuiteId>& suites,
                         const std::string& witness_dir = "");

std::string render_family(const std::vector<LiteralSet>& family);

}  // namespace aspu
