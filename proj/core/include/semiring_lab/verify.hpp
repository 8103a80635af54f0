// Corpus-wide verification suites. Each check either passes, fails with a
// machine-readable witness, or reports a resource cap. Suites run corpus
// entries concurrently; results are aggregated in manifest order so the
// outcome is deterministic (apart from wall_ms).

#pragma once

#include <string>
#include <vector>

#include "semiring_lab/corpus.hpp"
#include "semiring_lab/radical.hpp"

namespace semiring_lab {

struct CheckResult {
  std::string entry;
  std::string name;
  bool pass = false;
  bool capped = false;          // resource limit, not a mathematical failure
  std::string witness_json;     // populated on failure (and for informational checks)
};

struct VerificationOutcome {
  std::string suite;
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  int capped = 0;
  double wall_ms = 0.0;
  bool ok() const { return failed == 0; }
};

// Suites: hoehnke, product, equivalence, minimal-iff, simple-iff, schur,
// representation, commutative-class, conjecture-e, oracle.
std::vector<std::string> suite_names();

VerificationOutcome run_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus);

std::string outcome_to_json(const VerificationOutcome& o, bool pretty = false);

// Granular check groups, reused by the acceptance harness.
std::vector<CheckResult> equivalence_checks(const CorpusEntry& e);
std::vector<CheckResult> hoehnke_checks(const CorpusEntry& e);
std::vector<CheckResult> product_checks(const CorpusEntry& r, const CorpusEntry& s);
std::vector<CheckResult> minimal_iff_checks(const CorpusEntry& e, int max_size);
std::vector<CheckResult> simple_iff_checks(const CorpusEntry& e, int max_size);
std::vector<CheckResult> generation_law_checks(const CorpusEntry& e, int max_size);
std::vector<CheckResult> delta_regularity_checks(const CorpusEntry& e, int max_size);
std::vector<CheckResult> schur_checks(const CorpusEntry& e, int max_size);
std::vector<CheckResult> representation_checks(const CorpusEntry& e);
std::vector<CheckResult> commutative_class_checks(const CorpusEntry& e);
std::vector<CheckResult> conjecture_e_checks(const CorpusEntry& e, int max_size);
std::vector<CheckResult> oracle_checks(const CorpusEntry& e);

// Brute-force oracle: every partition of {0..n-1} (restricted growth
// strings) filtered through the stability predicate. Only for small n.
std::vector<Partition> brute_force_right_congruences(const FiniteSemiring& s);
std::vector<Partition> brute_force_congruences(const FiniteSemiring& s);

}  // namespace semiring_lab
