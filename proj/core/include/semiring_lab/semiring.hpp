// Finite semirings presented by explicit operation tables: validation,
// generator families, homomorphisms, quotients and isomorphism search.
//
// A semiring here is (S, +, ., 0) where (S, +) is a commutative monoid with
// absorbing identity 0 and (S, .) is a semigroup distributing over + on both
// sides. A multiplicative identity is not assumed; operations that need one
// (the division/semifield tests) look for it explicitly.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/errors.hpp"
#include "semiring_lab/partition.hpp"

namespace semiring_lab {

// One failed axiom instance: which law and the elements witnessing it.
struct AxiomViolation {
  std::string law;
  std::vector<int> witness;
  std::string detail;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string what, std::vector<AxiomViolation> v)
      : Error(std::move(what)), violations(std::move(v)) {}
  std::vector<AxiomViolation> violations;
};

struct FiniteSemiring {
  std::string name;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<int> add_table;  // row-major n*n, entry (i,j) = index of a_i + a_j
  std::vector<int> mul_table;  // row-major n*n, entry (i,j) = index of a_i . a_j
  int zero = 0;

  int add(int a, int b) const { return add_table[a * n + b]; }
  int mul(int a, int b) const { return mul_table[a * n + b]; }
  const std::string& label(int x) const { return labels[x]; }
};

// Structural equality of the algebra itself; names and labels are ignored.
bool same_tables(const FiniteSemiring& a, const FiniteSemiring& b);

// Dimension and range problems throw InputError; axiom failures are data.
std::vector<AxiomViolation> semiring_violations(const FiniteSemiring& raw);

// Returns the input if every axiom holds, otherwise throws ValidationError
// carrying the complete violation list.
FiniteSemiring validate_semiring(FiniteSemiring raw);

struct FiniteGroup {
  std::string name;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<int> op_table;  // row-major
  int identity = 0;
  std::vector<int> inverse;

  int op(int a, int b) const { return op_table[a * n + b]; }
};

FiniteGroup validate_group(FiniteGroup raw);
FiniteGroup cyclic_group(int n);

// Generator families. Every generator returns a validated semiring whose
// zero sits at index 0.
FiniteSemiring make_boolean();                 // {0,1}, + = max, . = min
FiniteSemiring make_zmod(int n);               // integers mod n
FiniteSemiring make_chain(int n);              // totally ordered idempotent chain, + = max, . = min
FiniteSemiring make_zero_mul(int n);           // + = max on a chain, every product zero
FiniteSemiring make_group_semiring_b(const FiniteGroup& g);  // subsets of g, + = union, . = setwise product
FiniteSemiring make_product(const FiniteSemiring& r, const FiniteSemiring& s);
FiniteSemiring make_opposite(const FiniteSemiring& s);
FiniteSemiring make_matrix_b(int k);           // k x k matrices over the Boolean semifield

struct SemiringHomomorphism {
  FiniteSemiring source;
  FiniteSemiring target;
  std::vector<int> map;  // source index -> target index

  bool surjective() const;
  bool injective() const;
};

// Validates preservation of +, . and zero.
SemiringHomomorphism make_homomorphism(FiniteSemiring source, FiniteSemiring target,
                                       std::vector<int> map);

// ker h = {(a,b) | h(a) = h(b)}, always a two-sided congruence.
Partition kernel(const SemiringHomomorphism& h);

struct QuotientSemiring {
  FiniteSemiring semiring;
  SemiringHomomorphism surjection;  // the canonical map S -> S/theta
};

// theta must be a two-sided congruence; elements of the quotient are the
// theta-classes in canonical (first-occurrence) order.
QuotientSemiring quotient_semiring(const FiniteSemiring& s, const Partition& theta);

// The semiring induced on a subset that contains zero and is closed under
// both operations (element order preserved).
FiniteSemiring subsemiring(const FiniteSemiring& s, const std::vector<int>& members);

// Zero-preserving structure-respecting bijection A -> B, or nullopt after an
// exhaustive (invariant-pruned) search.
std::optional<std::vector<int>> find_isomorphism(const FiniteSemiring& a,
                                                 const FiniteSemiring& b);

// e with e.s = s.e = s for all s, if present.
std::optional<int> find_multiplicative_identity(const FiniteSemiring& s);

}  // namespace semiring_lab
