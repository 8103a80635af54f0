// Right/two-sided congruence machinery: stability checking, closure,
// lattice enumeration, right ideals, Bourne congruences, saturation,
// regularity classification and the residual operator.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semiring_lab/partition.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// Enumeration cap; SEMIRING_LAB_MAX_RELATIONS overrides the default 200000.
std::size_t max_relations();

struct StabilityViolation {
  int a = -1, b = -1, c = -1;
  // which translation broke: "add" (a+c vs b+c), "mul-right" (ac vs bc),
  // "mul-left" (ca vs cb)
  std::string law;
};

bool is_right_congruence(const FiniteSemiring& s, const Partition& p,
                         StabilityViolation* out = nullptr);
bool is_congruence(const FiniteSemiring& s, const Partition& p,
                   StabilityViolation* out = nullptr);

// Smallest right (resp. two-sided) congruence containing the given pairs,
// computed by worklist closure under translation and merging.
Partition right_congruence_closure(const FiniteSemiring& s,
                                   std::span<const std::pair<int, int>> pairs);
Partition congruence_closure(const FiniteSemiring& s,
                             std::span<const std::pair<int, int>> pairs);

Partition principal_right_congruence(const FiniteSemiring& s, int a, int b);

Partition join_right_congruences(const FiniteSemiring& s, const Partition& p,
                                 const Partition& q);

// The complete lattice, as the join-closure of the principal right
// congruences together with the identity; canonically sorted.
std::vector<Partition> enumerate_right_congruences(const FiniteSemiring& s);
std::vector<Partition> enumerate_congruences(const FiniteSemiring& s);

struct RightIdeal {
  std::vector<int> members;  // ascending
};

bool is_right_ideal(const FiniteSemiring& s, const std::vector<int>& members,
                    std::string* why = nullptr);

// Smallest right ideal containing the seed.
RightIdeal right_ideal_closure(const FiniteSemiring& s, const std::vector<int>& seed);

std::vector<RightIdeal> enumerate_right_ideals(const FiniteSemiring& s);

// x ~ y iff x + i1 = y + i2 for some i1, i2 in I. The smallest right
// congruence whose zero class contains I.
Partition bourne_congruence(const FiniteSemiring& s, const RightIdeal& i);

// The zero class of the Bourne congruence: {x | x + i1 = i2 for some
// i1, i2 in I}. Note this is weaker than asking for a single i with
// x + i = i; the two already differ over rings, where every ideal is
// saturated in the present sense. Saturation is inflationary and idempotent.
RightIdeal saturation(const FiniteSemiring& s, const RightIdeal& i);

// True iff I is a union of mu-classes.
bool is_mu_saturated(const FiniteSemiring& s, const RightIdeal& i, const Partition& mu);

enum class Regularity { not_regular, regular, m_regular, s_regular };

struct RegularityClassification {
  Partition congruence;
  Regularity cls = Regularity::not_regular;
  // e with (e.s, s) in mu for all s, when regular.
  std::optional<int> witness_e;
  // A proper mu-saturated right ideal strictly above [0]_mu, when that is
  // what blocks m-regularity.
  std::optional<RightIdeal> blocking_ideal;
  // A regular right congruence strictly between mu and the full one, when
  // that is what blocks s-regularity.
  std::optional<Partition> blocking_congruence;

  bool at_least(Regularity r) const { return static_cast<int>(cls) >= static_cast<int>(r); }
};

// regular:   some e acts as a left identity modulo mu;
// m-regular: regular, [0]_mu proper, and no proper mu-saturated right ideal
//            strictly contains [0]_mu;
// s-regular: m-regular and every regular right congruence above mu is mu
//            itself or the full congruence.
RegularityClassification classify_regularity(const FiniteSemiring& s, const Partition& mu);

std::vector<Partition> rc_m(const FiniteSemiring& s);
std::vector<Partition> rc_s(const FiniteSemiring& s);

// (rho : full) = {(x, y) | (sx, sy) in rho for all s}; always a two-sided
// congruence, and the largest one contained in rho whenever rho is regular.
Partition residual(const FiniteSemiring& s, const Partition& rho);

}  // namespace semiring_lab
