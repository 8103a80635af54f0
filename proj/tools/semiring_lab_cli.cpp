// semiring-lab: build finite semirings, explore their congruence structure,
// compute m/s-radicals, classify and decompose, and run the corpus-wide
// verification suites.
//
// Exit codes: 0 success/pass, 1 mathematical failure or counterexample,
// 2 input error, 3 resource cap.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiring_lab/corpus.hpp"
#include "semiring_lab/json_io.hpp"
#include "semiring_lab/structure.hpp"
#include "semiring_lab/verify.hpp"

namespace {

using namespace semiring_lab;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct Output {
  std::optional<std::string> out_path;
  bool pretty = false;

  // JSON goes to --out when given (compact), otherwise to stdout; --pretty
  // replaces the stdout JSON with the provided human rendering.
  void emit(const std::string& json, const std::string& human) const {
    if (out_path) write_file(*out_path, json + "\n");
    if (pretty) std::cout << human;
    else if (!out_path) std::cout << json << "\n";
  }
};

std::string render_partition(const FiniteSemiring& s, const Partition& p) {
  std::string out;
  for (const auto& blk : p.blocks()) {
    out += "{";
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) out += ",";
      out += s.label(blk[i]);
    }
    out += "}";
  }
  return out;
}

const char* regularity_name(Regularity r) {
  switch (r) {
    case Regularity::not_regular: return "not-regular";
    case Regularity::regular: return "regular";
    case Regularity::m_regular: return "m-regular";
    case Regularity::s_regular: return "s-regular";
  }
  return "?";
}

int cmd_validate(const std::string& path, const Output& out) {
  try {
    FiniteSemiring s = load_semiring(path);
    out.emit(violations_to_json({}, false),
             "valid semiring '" + s.name + "' with " + std::to_string(s.n) + " elements\n");
    return kExitOk;
  } catch (const ValidationError& e) {
    std::string human = "invalid semiring:\n";
    for (const auto& v : e.violations) {
      human += "  " + v.law + " (witness:";
      for (int w : v.witness) human += " " + std::to_string(w);
      human += ") " + v.detail + "\n";
    }
    out.emit(violations_to_json(e.violations, false), human);
    return kExitMathFailure;
  }
}

int cmd_generate(const std::string& spec, const std::optional<std::string>& name,
                 const Output& out) {
  FiniteSemiring s = generate_from_spec(spec);
  if (name) s.name = *name;
  out.emit(semiring_to_json(s, false),
           semiring_to_json(s, true) + "\n");
  return kExitOk;
}

int cmd_congruences(const std::string& path, bool two_sided, bool classify, const Output& out) {
  FiniteSemiring s = load_semiring(path);
  auto list = two_sided ? enumerate_congruences(s) : enumerate_right_congruences(s);
  ordered_json entries = ordered_json::array();
  std::string human;
  for (const Partition& p : list) {
    ordered_json j = ordered_json::parse(partition_to_json(p, false));
    std::string line = render_partition(s, p);
    if (classify) {
      RegularityClassification rc = classify_regularity(s, p);
      j["regularity"] = regularity_name(rc.cls);
      if (rc.witness_e) j["witness_e"] = *rc.witness_e;
      line += std::string("  [") + regularity_name(rc.cls) + "]";
    }
    entries.push_back(std::move(j));
    human += line + "\n";
  }
  ordered_json j{{"semiring", s.name},
                 {"kind", two_sided ? "two-sided" : "right"},
                 {"count", list.size()},
                 {"congruences", std::move(entries)}};
  out.emit(j.dump(), human);
  return kExitOk;
}

int cmd_ideals(const std::string& path, const Output& out) {
  FiniteSemiring s = load_semiring(path);
  auto ideals = enumerate_right_ideals(s);
  ordered_json entries = ordered_json::array();
  std::string human;
  for (const RightIdeal& i : ideals) {
    entries.push_back(ordered_json::parse(ideal_to_json(i, false)));
    human += "{";
    for (std::size_t k = 0; k < i.members.size(); ++k) {
      if (k) human += ",";
      human += s.label(i.members[k]);
    }
    human += "}\n";
  }
  ordered_json j{{"semiring", s.name}, {"count", ideals.size()}, {"ideals", std::move(entries)}};
  out.emit(j.dump(), human);
  return kExitOk;
}

int cmd_radical(const std::string& path, RadicalKind kind, const Output& out) {
  FiniteSemiring s = load_semiring(path);
  RadicalReport r = rad(s, kind);
  std::string human = std::string("rad_") + to_string(kind) + "(" + s.name +
                      ") = " + render_partition(s, r.radical) +
                      (r.semisimple ? "  (semisimple)\n" : "\n") +
                      (r.agreement ? "" : "WARNING: characterizations disagree\n");
  out.emit(radical_report_to_json(s, r, false), human);
  return r.agreement ? kExitOk : kExitMathFailure;
}

int cmd_classify(const std::string& path, const Output& out) {
  FiniteSemiring s = load_semiring(path);
  SemiringFlags f = classify_semiring(s);
  PrimitivityReport pm = is_primitive(s, RadicalKind::m);
  PrimitivityReport ps = is_primitive(s, RadicalKind::s);
  RadicalReport rm = rad(s, RadicalKind::m);
  RadicalReport rs = rad(s, RadicalKind::s);
  ordered_json j{{"semiring", s.name},
                 {"n", s.n},
                 {"commutative", f.commutative},
                 {"has_identity", f.has_identity},
                 {"zerosumfree", f.zerosumfree},
                 {"additively_idempotent", f.additively_idempotent},
                 {"division", f.division},
                 {"semifield", f.semifield},
                 {"field", f.field},
                 {"congruence_simple", f.congruence_simple},
                 {"m_primitive", pm.primitive},
                 {"s_primitive", ps.primitive},
                 {"m_semisimple", rm.semisimple},
                 {"s_semisimple", rs.semisimple}};
  if (f.identity) j["identity"] = *f.identity;
  if (pm.witness_congruence)
    j["m_witness"] = ordered_json::parse(partition_to_json(*pm.witness_congruence, false));
  if (ps.witness_congruence)
    j["s_witness"] = ordered_json::parse(partition_to_json(*ps.witness_congruence, false));
  std::string human = s.name + " (" + std::to_string(s.n) + " elements)\n";
  auto flag = [&](const char* k, bool v) { human += std::string("  ") + k + ": " + (v ? "yes" : "no") + "\n"; };
  flag("commutative", f.commutative);
  flag("has identity", f.has_identity);
  flag("zerosumfree", f.zerosumfree);
  flag("additively idempotent", f.additively_idempotent);
  flag("division semiring", f.division);
  flag("semifield", f.semifield);
  flag("field", f.field);
  flag("congruence-simple", f.congruence_simple);
  flag("m-primitive", pm.primitive);
  flag("s-primitive", ps.primitive);
  flag("m-semisimple", rm.semisimple);
  flag("s-semisimple", rs.semisimple);
  out.emit(j.dump(), human);
  return kExitOk;
}

int cmd_decompose(const std::string& path, RadicalKind kind, const Output& out) {
  FiniteSemiring s = load_semiring(path);
  SubdirectDecomposition d = subdirect_decomposition(s, kind);
  std::string human;
  if (d.decomposed) {
    human = s.name + " is a subdirect product of " + std::to_string(d.factors.size()) +
            " " + to_string(kind) + "-primitive factor(s):\n";
    for (const auto& f : d.factors)
      human += "  " + render_partition(s, f.congruence) + " -> " + f.quotient.name + " (" +
               std::to_string(f.quotient.n) + " elements)\n";
  } else {
    human = s.name + " is not " + to_string(kind) + "-semisimple; radical = " +
            render_partition(s, *d.radical_certificate) + "\n";
  }
  out.emit(decomposition_to_json(s, d, false), human);
  return d.decomposed ? kExitOk : kExitMathFailure;
}

int cmd_verify(const std::string& suite, const std::optional<std::string>& manifest,
               const Output& out) {
  std::vector<CorpusEntry> corpus = manifest ? load_manifest(*manifest) : default_corpus();
  VerificationOutcome o = run_suite(suite, corpus);
  std::string human = "suite " + o.suite + ": " + std::to_string(o.passed) + " passed, " +
                      std::to_string(o.failed) + " failed, " + std::to_string(o.capped) +
                      " capped\n";
  for (const CheckResult& c : o.checks)
    if (!c.pass)
      human += "  FAIL " + c.entry + " / " + c.name + "\n    " + c.witness_json + "\n";
  out.emit(outcome_to_json(o, false), human);
  return o.ok() ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semiring radical and structure laboratory"};
  app.require_subcommand(1);

  Output out;
  std::string path, spec, suite, kind_str = "m";
  std::optional<std::string> out_path, name, manifest;
  bool two_sided = false, classify_flag = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON report to a file");
    cmd->add_flag("--pretty", out.pretty, "human-readable output instead of JSON on stdout");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a semiring file against the axioms");
  validate->add_option("path", path, "semiring JSON file")->required();
  add_common(validate);

  CLI::App* generate = app.add_subcommand("generate", "emit a semiring from a generator spec");
  generate->add_option("spec", spec,
                       "boolean | zmod:N | chain:N | zero-mul:N | matrix-b:K | "
                       "group-semiring-b:(zN|file) | product:A:B | opposite:A | file.json")
      ->required();
  generate->add_option("--name", name, "override the semiring name");
  add_common(generate);

  CLI::App* congruences = app.add_subcommand("congruences", "enumerate the congruence lattice");
  congruences->add_option("path", path)->required();
  congruences->add_flag("--two-sided", two_sided, "two-sided congruences (default: right)");
  congruences->add_flag("--classify", classify_flag, "tag each entry with its regularity class");
  add_common(congruences);

  CLI::App* ideals = app.add_subcommand("ideals", "enumerate the right ideals");
  ideals->add_option("path", path)->required();
  add_common(ideals);

  CLI::App* radical = app.add_subcommand("radical", "compute a radical report");
  radical->add_option("path", path)->required();
  radical->add_option("--kind", kind_str, "m or s")->check(CLI::IsMember({"m", "s"}));
  add_common(radical);

  CLI::App* classify = app.add_subcommand("classify", "structure flags and primitivity");
  classify->add_option("path", path)->required();
  add_common(classify);

  CLI::App* decompose = app.add_subcommand("decompose", "subdirect decomposition");
  decompose->add_option("path", path)->required();
  decompose->add_option("--kind", kind_str, "m or s")->check(CLI::IsMember({"m", "s"}));
  add_common(decompose);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite over a corpus");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(semiring_lab::suite_names()));
  verify->add_option("--corpus", manifest, "corpus manifest (default: built-in corpus)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    RadicalKind kind = (kind_str == "s") ? RadicalKind::s : RadicalKind::m;
    out.out_path = out_path;
    if (validate->parsed()) return cmd_validate(path, out);
    if (generate->parsed()) return cmd_generate(spec, name, out);
    if (congruences->parsed()) return cmd_congruences(path, two_sided, classify_flag, out);
    if (ideals->parsed()) return cmd_ideals(path, out);
    if (radical->parsed()) return cmd_radical(path, kind, out);
    if (classify->parsed()) return cmd_classify(path, out);
    if (decompose->parsed()) return cmd_decompose(path, kind, out);
    if (verify->parsed()) return cmd_verify(suite, manifest, out);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
