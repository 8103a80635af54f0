// Finite right semimodules over a finite semiring: validation, quotients
// S/mu, subsemimodule and congruence enumeration, minimal/simple/elementary
// classification, annihilators and the per-element congruences delta_m, and
// exhaustive generation at small carrier sizes.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/partition.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

struct FiniteSemimodule {
  int m = 0;  // carrier size
  int n = 0;  // scalar count, must match the base semiring
  std::vector<std::string> labels;
  std::vector<int> add_table;     // row-major m*m
  std::vector<int> action_table;  // row-major m*n, entry (i, j) = index of m_i . s_j
  int zero = 0;

  int add(int a, int b) const { return add_table[a * m + b]; }
  int act(int x, int s) const { return action_table[x * n + s]; }
};

std::vector<AxiomViolation> semimodule_violations(const FiniteSemiring& s,
                                                  const FiniteSemimodule& raw);
FiniteSemimodule validate_semimodule(const FiniteSemiring& s, FiniteSemimodule raw);

// S itself as a right S-semimodule.
FiniteSemimodule regular_semimodule(const FiniteSemiring& s);

// The mu-classes with [a] + [b] = [a+b] and [a].s = [as]; mu must be a right
// congruence.
FiniteSemimodule quotient_semimodule(const FiniteSemiring& s, const Partition& mu);

// All subsets containing zero and closed under + and the action, sorted.
std::vector<std::vector<int>> enumerate_subsemimodules(const FiniteSemiring& s,
                                                       const FiniteSemimodule& mod);

// Partitions of the carrier stable under + by every element and under the
// action of every scalar; canonically sorted.
std::vector<Partition> enumerate_semimodule_congruences(const FiniteSemiring& s,
                                                        const FiniteSemimodule& mod);

bool is_semimodule_congruence(const FiniteSemiring& s, const FiniteSemimodule& mod,
                              const Partition& p);

struct SemimoduleClassification {
  bool nonzero_action = false;  // some m.s differs from zero
  bool minimal = false;         // nonzero action and only trivial subsemimodules
  bool simple = false;          // minimal and congruence-simple
  bool elementary = false;      // nonzero action and congruence-simple
  std::optional<std::vector<int>> offending_subsemimodule;
  std::optional<Partition> offending_congruence;
};

SemimoduleClassification classify_semimodule(const FiniteSemiring& s,
                                             const FiniteSemimodule& mod);

struct AnnihilatorResult {
  Partition congruence;  // on S: scalars acting identically on all of M
  bool faithful = false;
};

AnnihilatorResult annihilator(const FiniteSemiring& s, const FiniteSemimodule& mod);

// delta_m = {(a, b) | m.a = m.b}, a right congruence on S for every m.
Partition delta_m(const FiniteSemiring& s, const FiniteSemimodule& mod, int m);

struct SemimoduleEnumLimits {
  int max_size = 4;  // largest carrier the exhaustive table search accepts
};

// Every right S-semimodule with carrier size <= max_size, one representative
// per isomorphism class (lexicographically least tables under zero-fixing
// carrier permutations), in canonical order.
std::vector<FiniteSemimodule> enumerate_semimodules(const FiniteSemiring& s, int max_size,
                                                    const SemimoduleEnumLimits& limits = {});

// Zero-fixing bijection preserving + and the action, if one exists (the base
// semiring must be the same).
std::optional<std::vector<int>> semimodule_isomorphism(const FiniteSemiring& s,
                                                       const FiniteSemimodule& a,
                                                       const FiniteSemimodule& b);

}  // namespace semiring_lab
