// Structure theory: classification flags, m/s-primitivity, primitive
// congruences, subdirect decomposition of semisimple semirings, endomorphism
// semirings, the Schur property, and the 1-fold transitive representation of
// s-primitive semirings with its converse.

#pragma once

#include <optional>
#include <vector>

#include "semiring_lab/partition.hpp"
#include "semiring_lab/radical.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

struct SemiringFlags {
  bool commutative = false;
  bool has_identity = false;
  std::optional<int> identity;
  bool zerosumfree = false;        // a + b = 0 forces a = b = 0
  bool division = false;           // identity present, every nonzero element invertible
  bool semifield = false;          // commutative division semiring
  bool field = false;              // semifield whose addition is a group
  bool congruence_simple = false;  // only the identity and full congruences
  bool additively_idempotent = false;
};

SemiringFlags classify_semiring(const FiniteSemiring& s);

// Z(S) = {x | x + y = 0 for some y}; always a two-sided ideal.
std::vector<int> zero_sum_set(const FiniteSemiring& s);

// {(0,0)} together with nonzero x nonzero, as a partition. A congruence
// whenever S is zerosumfree without zero divisors; the standard witness
// against congruence-simplicity of larger zerosumfree semifields.
Partition two_block_partition(const FiniteSemiring& s);

struct PrimitivityReport {
  RadicalKind kind = RadicalKind::m;
  bool primitive = false;
  std::optional<Partition> witness_congruence;      // rho in RC with trivial residual
  std::optional<FiniteSemimodule> witness_semimodule;  // the faithful minimal/simple S/rho
};

// Primitive iff some rho in RC_m (RC_s) has (rho : full) = identity; the
// witness quotient is recomputed and checked faithful and minimal (simple).
PrimitivityReport is_primitive(const FiniteSemiring& s, RadicalKind kind);

// {(rho : full) | rho in RC_kind}, deduplicated and sorted; every quotient
// S/sigma is verified primitive of the same kind.
std::vector<Partition> primitive_congruences(const FiniteSemiring& s, RadicalKind kind);

struct SubdirectFactor {
  Partition congruence;
  FiniteSemiring quotient;
};

struct SubdirectDecomposition {
  bool decomposed = false;
  std::vector<SubdirectFactor> factors;
  // embedding[x] = the tuple of factor classes of x
  std::vector<std::vector<int>> embedding;
  bool injective = false;
  std::vector<bool> projections_surjective;  // one flag per factor
  std::optional<Partition> radical_certificate;  // set when S is not semisimple
};

// Semisimple semirings decompose over their primitive congruences (whose
// meet is the identity); otherwise the radical is returned as certificate.
SubdirectDecomposition subdirect_decomposition(const FiniteSemiring& s, RadicalKind kind);

struct ClassificationCheck {
  bool m_primitive_iff_semifield = false;
  bool s_primitive_iff_cs_semifield = false;
  bool cs_semifield_iff_field = false;  // only meaningful for |S| > 2
  bool field_check_applicable = false;
  bool s_primitive_iff_boolean_or_field = false;
  bool ok() const {
    return m_primitive_iff_semifield && s_primitive_iff_cs_semifield &&
           (!field_check_applicable || cs_semifield_iff_field) &&
           s_primitive_iff_boolean_or_field;
  }
};

// The commutative classification biconditionals, evaluated as computed-flag
// equalities. Throws InputError on non-commutative input.
ClassificationCheck commutative_classification_check(const FiniteSemiring& s);

struct EndomorphismSemiring {
  FiniteSemiring semiring;             // pointwise +, composition (f.g)(x) = f(g(x))
  std::vector<std::vector<int>> maps;  // maps[i][x] = image of x under endomorphism i
};

// All additive, zero-fixing, action-commuting self-maps of the module. The
// search is generator-driven; candidate_cap bounds the image assignments
// tried before giving up with ResourceLimitError.
EndomorphismSemiring endomorphism_semiring(const FiniteSemiring& s, const FiniteSemimodule& mod,
                                           std::size_t candidate_cap = 1000000);

struct SchurReport {
  bool division = false;
  std::optional<int> identity;
  std::optional<int> noninvertible;  // witness endomorphism when not division
  int endomorphism_count = 0;
};

// For simple modules the endomorphism semiring must be a division semiring.
// Throws InputError if the module is not simple.
SchurReport schur_check(const FiniteSemiring& s, const FiniteSemimodule& mod);

struct Representation {
  Partition witness_congruence;     // rho: the faithful simple quotient S/rho
  FiniteSemimodule module_over_s;   // M = S/rho
  EndomorphismSemiring end_s;       // End_S(M)
  FiniteSemiring division_semiring; // D = End_S(M)^op
  FiniteSemimodule module_over_d;   // M as a right D-semimodule, m.alpha = alpha(m)
  EndomorphismSemiring end_d;       // End_D(M)
  std::vector<int> psi;             // a -> index of (x -> x.a) inside end_d
  std::vector<int> t_members;       // image of psi, ascending
  bool injective = false;
  bool one_fold_transitive = false;
  bool ok() const { return injective && one_fold_transitive; }
};

// Realizes an s-primitive S: S^op embeds into End_D(M) with 1-fold
// transitive image. Throws InputError when S is not s-primitive.
Representation build_representation(const FiniteSemiring& s);

struct ConverseReport {
  FiniteSemiring t_op;            // the abstract semiring T^op
  FiniteSemimodule module_over_t; // M as a right T^op-semimodule
  bool minimal = false;
  bool faithful = false;
  bool m_primitive = false;       // re-derived via the RC scan on T^op
  bool ok() const { return minimal && faithful && m_primitive; }
};

// Given a division semiring D, a D-semimodule M and a 1-fold transitive
// subsemiring T of End_D(M) (as explicit maps, zero map included), checks
// that T^op is m-primitive with faithful minimal module M. Precondition
// failures (D not division, T not closed, not transitive, ...) throw
// InputError.
ConverseReport converse_check(const FiniteSemiring& d, const FiniteSemimodule& mod,
                              const std::vector<std::vector<int>>& t_maps);

}  // namespace semiring_lab
