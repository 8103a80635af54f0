// The m- and s-radicals of a finite semiring, computed along three
// characterizations that provably agree: the meet of the m-regular
// (s-regular) right congruences, the meet of their residuals, and the meet
// of the annihilators of the quotient semimodules S/mu. A report carries
// all three so a disagreement can be localized; disagreement is an engine
// bug, never a normal outcome.

#pragma once

#include <optional>
#include <vector>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/partition.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

enum class RadicalKind { m, s };

const char* to_string(RadicalKind k);

struct RadicalReport {
  RadicalKind kind = RadicalKind::m;
  Partition radical;
  Partition via_rc;            // meet of the RC members themselves
  Partition via_residual;      // meet of (rho : full) over the RC members
  Partition via_annihilators;  // meet of ann(S/mu) over the RC members
  std::vector<Partition> witnesses;  // the RC members used
  bool agreement = false;
  bool semisimple = false;  // radical equals the identity congruence
};

// The empty RC set yields the full congruence for every characterization.
RadicalReport rad(const FiniteSemiring& s, RadicalKind kind);

// Convenience: the radical congruence, throwing InvariantError when the
// three characterizations disagree.
Partition radical_of(const FiniteSemiring& s, RadicalKind kind);

struct RingCompatibilityReport {
  int n = 0;
  std::vector<int> jacobson_ideal;   // from the independent maximal-ideal oracle
  std::vector<int> radical_zero_class;
  bool zero_class_matches = false;   // [0]_{rad_s} equals the Jacobson ideal
  bool kinds_agree = false;          // rad_m = rad_s
  bool bourne_matches = false;       // rad_s equals the Bourne congruence of J
  bool ok() const { return zero_class_matches && kinds_agree && bourne_matches; }
};

// Z_n sanity check against classical ring theory. The Jacobson ideal is
// computed by brute force (intersection of the maximal ideals found by
// scanning all subsets), independent of the congruence machinery.
RingCompatibilityReport ring_compatibility_check(int n);

struct HoehnkeCounterexample {
  Partition theta;      // the quotient that broke the law
  int a = -1, b = -1;   // radical pair whose image escapes the quotient radical
};

struct HoehnkeReport {
  bool image_law = false;     // f(rad(S)) contained in rad(S/theta) for every theta
  bool quotient_trivial = false;  // rad(S/rad(S)) is the identity
  std::optional<HoehnkeCounterexample> counterexample;
  bool ok() const { return image_law && quotient_trivial; }
};

HoehnkeReport hoehnke_check(const FiniteSemiring& s, RadicalKind kind);

struct ProductRadicalReport {
  bool radical_matches = false;   // rad(R x S) = rad(R) x rad(S)
  bool rc_matches = true;         // RC_m(R x S) = {sigma x full} union {full x delta}
  bool ok() const { return radical_matches && rc_matches; }
};

// Checks the product-radical law, and for the m-kind also the description of
// RC_m(R x S) in terms of RC_m(R) and RC_m(S).
ProductRadicalReport product_radical_check(const FiniteSemiring& r, const FiniteSemiring& s,
                                           RadicalKind kind);

struct LowerBoundReport {
  bool containment = false;    // rad(S) inside ann(M) for every enumerated minimal/simple M
  bool meet_equality = false;  // meet of those annihilators equals the radical
  bool meet_checked = false;   // equality is only decidable when max_size >= |S|
  int modules_seen = 0;
  bool ok() const { return containment && (!meet_checked || meet_equality); }
};

// Independent oracle for the definition of the radical: enumerate all
// semimodules up to max_size, keep the minimal (m) or simple (s) ones, and
// compare their annihilator meet with the computed radical.
LowerBoundReport rad_lower_bound_check(const FiniteSemiring& s, RadicalKind kind, int max_size,
                                       const SemimoduleEnumLimits& limits = {});

}  // namespace semiring_lab
