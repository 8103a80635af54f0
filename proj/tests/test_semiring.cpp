#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/corpus.hpp"
#include "semiring_lab/semiring.hpp"

using namespace semiring_lab;

namespace {

// Exhaustive zero-fixing bijection search, independent of find_isomorphism.
bool isomorphic_by_brute_force(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.zero] != b.zero) continue;
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y)
        if (perm[a.add(x, y)] != b.add(perm[x], perm[y]) ||
            perm[a.mul(x, y)] != b.mul(perm[x], perm[y]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("boolean and zmod tables satisfy the axioms") {
  CHECK(semiring_violations(make_boolean()).empty());
  CHECK(semiring_violations(make_zmod(4)).empty());
}

TEST_CASE("non-absorbing zero is reported with its witness") {
  FiniteSemiring bad;
  bad.name = "bad";
  bad.n = 2;
  bad.labels = {"0", "a"};
  bad.add_table = {0, 1, 1, 1};
  bad.mul_table = {0, 1, 0, 1};  // 0.a = a
  bad.zero = 0;
  auto v = semiring_violations(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().law == "zero-absorbing");
  CHECK(v.front().witness == std::vector<int>{0, 1});
  CHECK_THROWS_AS(validate_semiring(bad), ValidationError);
}

TEST_CASE("malformed tables are input errors, not violations") {
  FiniteSemiring bad;
  bad.name = "bad";
  bad.n = 2;
  bad.labels = {"0", "a"};
  bad.add_table = {0, 1, 1};  // wrong shape
  bad.mul_table = {0, 0, 0, 1};
  CHECK_THROWS_AS(semiring_violations(bad), InputError);
  bad.add_table = {0, 1, 1, 7};  // out of range
  CHECK_THROWS_AS(semiring_violations(bad), InputError);
}

TEST_CASE("group semiring over B enumerates subsets with setwise products") {
  FiniteSemiring s = make_group_semiring_b(cyclic_group(2));
  REQUIRE(s.n == 4);  // subsets of a 2-element group
  // oracle: subsets as bitmasks, product by direct subset multiplication
  FiniteGroup z2 = cyclic_group(2);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK(s.add(x, y) == (x | y));
      int prod = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if ((x >> i & 1) && (y >> j & 1)) prod |= 1 << z2.op(i, j);
      CHECK(s.mul(x, y) == prod);
    }
  // the singleton {e} is the multiplicative identity
  auto e = find_multiplicative_identity(s);
  REQUIRE(e.has_value());
  CHECK(*e == 1);
  CHECK(s.label(*e) == "{e}");
}

TEST_CASE("product semiring has componentwise operations") {
  FiniteSemiring p = make_product(make_boolean(), make_zmod(4));
  CHECK(p.n == 8);
  CHECK(semiring_violations(p).empty());
}

TEST_CASE("quotient of Z4 by the mod-2 congruence is Z2") {
  FiniteSemiring z4 = make_zmod(4);
  Partition sigma = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  QuotientSemiring q = quotient_semiring(z4, sigma);
  // brute-force expected tables on representatives {0, 1}
  CHECK(q.semiring.n == 2);
  CHECK(q.semiring.add_table == std::vector<int>{0, 1, 1, 0});
  CHECK(q.semiring.mul_table == std::vector<int>{0, 0, 0, 1});
  CHECK(find_isomorphism(q.semiring, make_zmod(2)).has_value());
  CHECK(q.surjection.surjective());
}

TEST_CASE("quotient by identity is the semiring itself, by full a point") {
  for (const auto& name : {"B", "Z6", "chain3"}) {
    FiniteSemiring s = generate_from_spec(
        std::string(name) == "B" ? "boolean"
                                 : (std::string(name) == "Z6" ? "zmod:6" : "chain:3"));
    QuotientSemiring by_identity = quotient_semiring(s, Partition::identity(s.n));
    CHECK(find_isomorphism(by_identity.semiring, s).has_value());
    QuotientSemiring by_full = quotient_semiring(s, Partition::full(s.n));
    CHECK(by_full.semiring.n == 1);
  }
}

TEST_CASE("quotient rejects a partition that is not a congruence") {
  FiniteSemiring z4 = make_zmod(4);
  CHECK_THROWS_AS(quotient_semiring(z4, Partition::from_blocks(4, {{0, 1}, {2}, {3}})),
                  InputError);
}

TEST_CASE("kernel of the canonical surjection recovers the congruence") {
  FiniteSemiring z4 = make_zmod(4);
  Partition sigma = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(kernel(quotient_semiring(z4, sigma).surjection) == sigma);
  // identity map and constant-to-zero map
  CHECK(kernel(make_homomorphism(z4, z4, {0, 1, 2, 3})) == Partition::identity(4));
  FiniteSemiring one = quotient_semiring(z4, Partition::full(4)).semiring;
  CHECK(kernel(make_homomorphism(z4, one, {0, 0, 0, 0})) == Partition::full(4));
}

TEST_CASE("first isomorphism: quotient by the kernel matches the image") {
  FiniteSemiring z6 = make_zmod(6);
  // surjection Z6 -> Z3 by reduction mod 3
  FiniteSemiring z3 = make_zmod(3);
  SemiringHomomorphism h = make_homomorphism(z6, z3, {0, 1, 2, 0, 1, 2});
  QuotientSemiring q = quotient_semiring(z6, kernel(h));
  CHECK(find_isomorphism(q.semiring, z3).has_value());
}

TEST_CASE("homomorphism validation rejects non-structure maps") {
  FiniteSemiring b = make_boolean();
  FiniteSemiring z2 = make_zmod(2);
  CHECK_THROWS_AS(make_homomorphism(b, z2, {0, 1}), InputError);  // 1+1 differs
}

TEST_CASE("isomorphism search: positive and negative cases") {
  FiniteSemiring b = make_boolean();
  FiniteSemiring b2 = b;
  b2.name = "B-relabeled";
  b2.labels = {"bot", "top"};
  CHECK(find_isomorphism(b, b2).has_value());
  CHECK_FALSE(find_isomorphism(b, make_zmod(2)).has_value());  // 1+1 = 1 vs 1+1 = 0

  FiniteSemiring prod = make_product(make_zmod(2), make_zmod(3));
  FiniteSemiring z6 = make_zmod(6);
  auto iso = find_isomorphism(prod, z6);
  REQUIRE(iso.has_value());
  CHECK(isomorphic_by_brute_force(prod, z6));
  CHECK_FALSE(find_isomorphism(make_zmod(4), make_product(make_zmod(2), make_zmod(2))).has_value());
}

TEST_CASE("isomorphism search finds shuffled relabelings") {
  std::mt19937 rng(20240817);
  for (const char* spec : {"zmod:6", "chain:4", "group-semiring-b:z2", "product:boolean:zmod:3"}) {
    FiniteSemiring s = generate_from_spec(spec);
    CAPTURE(spec);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(s.n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      FiniteSemiring shuffled;
      shuffled.name = s.name + "-shuffled";
      shuffled.n = s.n;
      shuffled.labels.resize(s.n);
      shuffled.add_table.resize(s.n * s.n);
      shuffled.mul_table.resize(s.n * s.n);
      for (int x = 0; x < s.n; ++x) shuffled.labels[perm[x]] = s.label(x);
      for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
          shuffled.add_table[perm[x] * s.n + perm[y]] = perm[s.add(x, y)];
          shuffled.mul_table[perm[x] * s.n + perm[y]] = perm[s.mul(x, y)];
        }
      shuffled.zero = perm[s.zero];
      auto iso = find_isomorphism(s, shuffled);
      REQUIRE(iso.has_value());
      for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
          CHECK((*iso)[s.add(x, y)] == shuffled.add((*iso)[x], (*iso)[y]));
          CHECK((*iso)[s.mul(x, y)] == shuffled.mul((*iso)[x], (*iso)[y]));
        }
    }
  }
}

TEST_CASE("multiplicative identity is found exactly when present") {
  auto e = find_multiplicative_identity(make_boolean());
  REQUIRE(e.has_value());
  CHECK(*e == 1);
  CHECK_FALSE(find_multiplicative_identity(make_zero_mul(2)).has_value());
}

TEST_CASE("every corpus semiring passes validation") {
  for (const CorpusEntry& e : default_corpus()) {
    CAPTURE(e.name);
    CHECK(semiring_violations(e.semiring).empty());
    CHECK(e.semiring.zero == 0);
  }
}

TEST_CASE("product projections are surjective with fiber kernels") {
  FiniteSemiring r = make_boolean();
  FiniteSemiring s = make_zmod(3);
  FiniteSemiring p = make_product(r, s);
  std::vector<int> first(p.n), second(p.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      first[a * s.n + b] = a;
      second[a * s.n + b] = b;
    }
  SemiringHomomorphism pi_r = make_homomorphism(p, r, first);
  SemiringHomomorphism pi_s = make_homomorphism(p, s, second);
  CHECK(pi_r.surjective());
  CHECK(pi_s.surjective());
  // kernel of the first projection relates exactly the pairs with equal
  // first component
  CHECK(kernel(pi_r) == product_partition(Partition::identity(r.n), Partition::full(s.n)));
  CHECK(kernel(pi_s) == product_partition(Partition::full(r.n), Partition::identity(s.n)));
}

TEST_CASE("opposite is an involution on the tables") {
  for (const char* spec : {"matrix-b:2", "zmod:6", "group-semiring-b:z2"}) {
    FiniteSemiring s = generate_from_spec(spec);
    CHECK(same_tables(make_opposite(make_opposite(s)), s));
  }
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(make_zmod(0), InputError);
  CHECK_THROWS_AS(make_chain(0), InputError);
  CHECK_THROWS_AS(cyclic_group(0), InputError);
}

TEST_CASE("subsemiring extraction checks closure") {
  FiniteSemiring z4 = make_zmod(4);
  FiniteSemiring sub = subsemiring(z4, {0, 2});
  CHECK(sub.n == 2);
  CHECK(semiring_violations(sub).empty());
  CHECK_THROWS_AS(subsemiring(z4, {0, 1}), InputError);  // 1+1 = 2 escapes
  CHECK_THROWS_AS(subsemiring(z4, {1, 2}), InputError);  // no zero
}
