// SPDX-License-Identifier: MIT
//
// aspu - answer sets and update operators for extended/augmented logic
// programs. Subcommands: solve, update, equiv, check, fuzz.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aspu/answer_sets.hpp"
#include "aspu/harness.hpp"
#include "aspu/limits.hpp"
#include "aspu/n2.hpp"
#include "aspu/operators.hpp"
#include "aspu/rejection.hpp"
#include "aspu/syntax.hpp"

namespace {

using namespace aspu;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Program load_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_program(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) +
                     ": " + e.what());
  }
}

std::vector<std::string> family_lines(const std::vector<LiteralSet>& family) {
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
  return lines;
}

void print_family(const std::vector<LiteralSet>& family, const std::string& format,
                  const char* header) {
  const std::vector<std::string> lines = family_lines(family);
  if (format == "human") std::cout << header << ": " << lines.size() << "\n";
  for (const std::string& line : lines) std::cout << line << "\n";
}

OperatorTag parse_operator(const std::string& name) {
  const auto tag = operator_tag_from(name);
  if (!tag) throw UsageError("unknown operator: " + name);
  return *tag;
}

std::set<Atom> parse_sig_flag(const std::string& csv) {
  std::set<Atom> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(make_atom(item));
  return out;
}

int cmd_solve(const std::string& file, const std::string& sig_csv, const std::string& format) {
  Program p = load_program(file);
  for (const Atom& a : parse_sig_flag(sig_csv)) p.declared_signature.insert(a);
  print_family(answer_sets(p, signature_of(p)), format, "answer sets");
  return kExitOk;
}

int cmd_update(const std::string& op_name, const std::vector<std::string>& files,
               bool emit_program, bool solve, const std::string& format) {
  const OperatorTag tag = parse_operator(op_name);
  if (files.size() < 2) throw UsageError("update takes at least two program files");
  std::vector<Program> programs;
  for (const std::string& f : files) programs.push_back(load_program(f));
  if (programs.size() > 2)
    std::cerr << "notice: more than two programs; folding pairwise left-to-right "
                 "(non-normative for n > 2)\n";

  if (tag == OperatorTag::rej_oracle) {
    if (emit_program) throw UsageError("rej-oracle computes answer sets only; no program to emit");
    if (programs.size() != 2) throw UsageError("rej-oracle takes exactly two programs");
    print_family(update_answer_sets_rej(programs[0], programs[1]), format, "update answer sets");
    return kExitOk;
  }

  UpdateResult u = build_update(tag, programs[0], programs[1]);
  std::set<Atom> base = u.projection_signature;
  for (std::size_t i = 2; i < programs.size(); ++i) {
    base.merge(signature_of(programs[i]));
    u = build_update(tag, u.program, programs[i]);
    u.projection_signature = base;
  }

  if (emit_program) std::cout << render_program(u.program);
  if (solve || !emit_program)
    print_family(update_answer_sets(u), format, "update answer sets");
  return kExitOk;
}

int cmd_equiv(bool strong, const std::string& file1, const std::string& file2) {
  const Program p1 = load_program(file1);
  const Program p2 = load_program(file2);
  if (strong) {
    if (strongly_equivalent(p1, p2)) {
      std::cout << "strongly-equivalent\n";
      return kExitOk;
    }
    std::cout << "not strongly-equivalent\n";
    return kExitNegative;
  }
  if (same_answer_sets(p1, p2)) {
    std::cout << "equivalent\n";
    return kExitOk;
  }
  std::cout << "not equivalent\n";
  return kExitNegative;
}

int report_verdict(const PropertyVerdict& v) {
  std::cout << to_string(v.verdict) << "\n";
  if (v.witness) {
    for (const auto& [label, text] : v.witness->programs)
      std::cout << "--- " << label << " ---\n" << text;
    std::cout << v.witness->detail << "\n";
  }
  return v.verdict == Verdict::holds ? kExitOk : kExitNegative;
}

int cmd_check(const std::string& property, const std::string& op_name,
              const std::vector<std::string>& files) {
  const OperatorTag op = parse_operator(op_name);
  std::vector<Program> programs;
  for (const std::string& f : files) programs.push_back(load_program(f));

  if (const auto classic = classic_property_from(property)) {
    const std::size_t arity =
        (*classic == ClassicProperty::initialization || *classic == ClassicProperty::idempotence)
            ? 1
            : 2;
    if (programs.size() != arity)
      throw UsageError(property + " takes " + std::to_string(arity) + " program file(s)");
    return report_verdict(check_classic(*classic, op, programs));
  }
  if (const auto bk = bk_property_from(property)) {
    BkInputs in;
    switch (*bk) {
      case BkProperty::bk6:
        if (programs.size() != 3) throw UsageError("bk6 takes P, P1, P2");
        in.p = programs[0];
        in.p1 = programs[1];
        in.p2 = programs[2];
        break;
      case BkProperty::bk0:
        if (programs.size() != 3) throw UsageError("bk0 takes P1, P2, R");
        in.p1 = programs[0];
        in.p2 = programs[1];
        in.r = programs[2];
        break;
      default:
        if (programs.size() != 2) throw UsageError(property + " takes P1, P2");
        in.p1 = programs[0];
        in.p2 = programs[1];
        break;
    }
    return report_verdict(check_bk(*bk, op, in));
  }
  throw UsageError("unknown property: " + property);
}

int cmd_fuzz(std::uint64_t seed, std::size_t cases, int atoms, const std::string& suites_csv,
             const std::string& witness_dir) {
  std::vector<SuiteId> suites;
  std::stringstream ss(suites_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto s = suite_from(name);
    if (!s) throw UsageError("unknown suite: " + name);
    suites.push_back(*s);
  }
  if (suites.empty()) throw UsageError("no suites given");

  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.atoms = atoms;
  const FuzzReport report = fuzz_campaign(cfg, cases, suites, witness_dir);

  for (const CaseRecord& rec : report.records) {
    nlohmann::ordered_json j;
    j["seed"] = rec.seed;
    j["case"] = rec.case_index;
    j["suite"] = rec.suite;
    j["property"] = rec.property;
    j["operator"] = rec.op;
    j["verdict"] = to_string(rec.verdict);
    j["witness_paths"] = rec.witness_paths;
    std::cout << j.dump() << "\n";
  }
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["cases"] = cases;
  summary["holds"] = report.holds;
  summary["fails"] = report.fails;
  summary["not_applicable"] = report.not_applicable;
  summary["suites_ok"] = report.suites_ok;
  summary["notes"] = report.notes;
  std::cout << summary.dump() << "\n";
  return report.suites_ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"answer sets and causal-rejection updates for extended logic programs"};
  app.require_subcommand(1);

  std::string file, file2, sig_csv, format = "human", op_name, property, suites_csv,
              witness_dir;
  std::vector<std::string> files;
  bool strong = false, emit_program = false, solve = false;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  int atoms = 4;

  CLI::App* c_solve = app.add_subcommand("solve", "answer sets of a program");
  c_solve->add_option("file", file)->required();
  c_solve->add_option("--sig", sig_csv, "extra signature atoms, comma-separated");
  c_solve->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

  CLI::App* c_update = app.add_subcommand("update", "update a program sequence");
  c_update->add_option("--operator", op_name)->required();
  c_update->add_option("files", files);
  c_update->add_flag("--emit-program", emit_program);
  c_update->add_flag("--solve", solve);
  c_update->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

  CLI::App* c_equiv = app.add_subcommand("equiv", "compare two programs");
  c_equiv->add_flag("--strong", strong, "N2 (strong) equivalence");
  c_equiv->add_option("file1", file)->required();
  c_equiv->add_option("file2", file2)->required();

  CLI::App* c_check = app.add_subcommand("check", "check an update property");
  c_check->add_option("--property", property)->required();
  c_check->add_option("--operator", op_name)->required();
  c_check->add_option("files", files);

  CLI::App* c_fuzz = app.add_subcommand("fuzz", "seeded property campaigns");
  c_fuzz->add_option("--seed", seed);
  c_fuzz->add_option("--cases", cases);
  c_fuzz->add_option("--atoms", atoms)->check(CLI::Range(0, 26));
  c_fuzz->add_option("--suite", suites_csv)->required();
  c_fuzz->add_option("--witness-dir", witness_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_solve)) return cmd_solve(file, sig_csv, format);
    if (app.got_subcommand(c_update))
      return cmd_update(op_name, files, emit_program, solve, format);
    if (app.got_subcommand(c_equiv)) return cmd_equiv(strong, file, file2);
    if (app.got_subcommand(c_check)) return cmd_check(property, op_name, files);
    if (app.got_subcommand(c_fuzz))
      return cmd_fuzz(seed, cases, atoms, suites_csv, witness_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
