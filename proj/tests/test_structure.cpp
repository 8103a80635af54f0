#include <doctest.h>

#include <algorithm>

#include "semiring_lab/corpus.hpp"
#include "semiring_lab/structure.hpp"

using namespace semiring_lab;

TEST_CASE("classification flags of the standard examples") {
  SemiringFlags b = classify_semiring(make_boolean());
  CHECK(b.semifield);
  CHECK(b.congruence_simple);
  CHECK(b.zerosumfree);
  CHECK(b.additively_idempotent);
  CHECK_FALSE(b.field);

  SemiringFlags z5 = classify_semiring(make_zmod(5));
  CHECK(z5.field);
  CHECK(z5.semifield);
  CHECK_FALSE(z5.zerosumfree);

  SemiringFlags c3 = classify_semiring(make_chain(3));
  CHECK_FALSE(c3.congruence_simple);
  CHECK_FALSE(c3.semifield);
  CHECK(c3.has_identity);  // the top of the chain
  CHECK(c3.additively_idempotent);

  SemiringFlags zm = classify_semiring(make_zero_mul(2));
  CHECK_FALSE(zm.has_identity);
  CHECK_FALSE(zm.division);
}

TEST_CASE("zero-sum set is an ideal; trivial or everything on semifields") {
  for (const CorpusEntry& e : default_corpus()) {
    std::vector<int> z = zero_sum_set(e.semiring);
    CAPTURE(e.name);
    CHECK(is_right_ideal(e.semiring, z));
    SemiringFlags f = classify_semiring(e.semiring);
    if (f.semifield)
      CHECK((static_cast<int>(z.size()) == 1 || static_cast<int>(z.size()) == e.semiring.n));
  }
}

TEST_CASE("two-block partition witnesses zerosumfree non-simplicity") {
  FiniteSemiring c3 = make_chain(3);
  Partition two = two_block_partition(c3);
  CHECK(two == Partition::from_blocks(3, {{0}, {1, 2}}));
  CHECK(is_congruence(c3, two));  // nontrivial, so chain-3 is not congruence-simple
}

TEST_CASE("primitivity of the examples") {
  PrimitivityReport b = is_primitive(make_boolean(), RadicalKind::s);
  CHECK(b.primitive);
  REQUIRE(b.witness_congruence.has_value());
  CHECK(b.witness_congruence->is_identity());

  CHECK_FALSE(is_primitive(make_zmod(4), RadicalKind::m).primitive);
  CHECK(is_primitive(make_zmod(5), RadicalKind::m).primitive);
  CHECK_FALSE(is_primitive(make_chain(3), RadicalKind::m).primitive);
}

TEST_CASE("primitive congruences of the examples") {
  CHECK(primitive_congruences(make_boolean(), RadicalKind::m) ==
        std::vector<Partition>{Partition::identity(2)});
  CHECK(primitive_congruences(make_zmod(4), RadicalKind::s) ==
        std::vector<Partition>{Partition::from_blocks(4, {{0, 2}, {1, 3}})});
  CHECK(primitive_congruences(make_zero_mul(2), RadicalKind::m).empty());
}

TEST_CASE("subdirect decomposition of Z6 into the two prime fields") {
  SubdirectDecomposition d = subdirect_decomposition(make_zmod(6), RadicalKind::s);
  REQUIRE(d.decomposed);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.injective);
  // factors are the mod-2 and mod-3 congruences with field quotients
  std::vector<int> sizes;
  for (const auto& f : d.factors) sizes.push_back(f.quotient.n);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 3});
  bool has_z2 = false, has_z3 = false;
  for (const auto& f : d.factors) {
    if (find_isomorphism(f.quotient, make_zmod(2))) has_z2 = true;
    if (find_isomorphism(f.quotient, make_zmod(3))) has_z3 = true;
  }
  CHECK(has_z2);
  CHECK(has_z3);
  std::vector<Partition> sigmas{d.factors[0].congruence, d.factors[1].congruence};
  CHECK(meet_all(6, sigmas).is_identity());
  CHECK(d.projections_surjective == std::vector<bool>{true, true});
}

TEST_CASE("subdirect decomposition refuses non-semisimple input with a certificate") {
  SubdirectDecomposition d = subdirect_decomposition(make_zmod(4), RadicalKind::s);
  CHECK_FALSE(d.decomposed);
  REQUIRE(d.radical_certificate.has_value());
  CHECK(*d.radical_certificate == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("boolean semifield decomposes through the identity factor") {
  SubdirectDecomposition d = subdirect_decomposition(make_boolean(), RadicalKind::m);
  REQUIRE(d.decomposed);
  CHECK(d.factors.size() == 1);
  CHECK(d.factors[0].congruence.is_identity());
}

TEST_CASE("commutative classification biconditionals") {
  ClassificationCheck b = commutative_classification_check(make_boolean());
  CHECK(b.ok());
  CHECK_FALSE(b.field_check_applicable);  // |S| = 2
  ClassificationCheck c3 = commutative_classification_check(make_chain(3));
  CHECK(c3.ok());
  ClassificationCheck z5 = commutative_classification_check(make_zmod(5));
  CHECK(z5.ok());
  CHECK(z5.field_check_applicable);
  CHECK_THROWS_AS(commutative_classification_check(make_matrix_b(2)), InputError);
}

TEST_CASE("endomorphism semirings of the regular modules") {
  FiniteSemiring b = make_boolean();
  EndomorphismSemiring eb = endomorphism_semiring(b, regular_semimodule(b));
  CHECK(eb.semiring.n == 2);
  CHECK(find_isomorphism(eb.semiring, b).has_value());

  FiniteSemiring z2 = make_zmod(2);
  EndomorphismSemiring e2 = endomorphism_semiring(z2, regular_semimodule(z2));
  CHECK(e2.semiring.n == 2);
  CHECK(find_isomorphism(e2.semiring, z2).has_value());

  FiniteSemimodule pt = quotient_semimodule(b, Partition::full(2));
  CHECK(endomorphism_semiring(b, pt).semiring.n == 1);
}

TEST_CASE("schur: endomorphisms of simple modules form division semirings") {
  for (const char* spec : {"boolean", "zmod:2", "zmod:3"}) {
    FiniteSemiring s = generate_from_spec(spec);
    SchurReport rep = schur_check(s, regular_semimodule(s));
    CAPTURE(spec);
    CHECK(rep.division);
  }
  // non-simple input is a precondition failure
  FiniteSemiring z4 = make_zmod(4);
  CHECK_THROWS_AS(schur_check(z4, regular_semimodule(z4)), InputError);
}

TEST_CASE("representation of the boolean semifield") {
  Representation rep = build_representation(make_boolean());
  CHECK(rep.ok());
  CHECK(rep.division_semiring.n == 2);
  CHECK(find_isomorphism(rep.division_semiring, make_boolean()).has_value());
  CHECK(rep.t_members.size() == 2);
}

TEST_CASE("representation of Z2 and rejection of Z4") {
  Representation rep = build_representation(make_zmod(2));
  CHECK(rep.ok());
  CHECK(rep.t_members.size() == 2);
  CHECK_THROWS_AS(build_representation(make_zmod(4)), InputError);
}

TEST_CASE("representation round trip: T^op is m-primitive and isomorphic to S") {
  for (const char* spec : {"boolean", "zmod:2", "zmod:3", "zmod:5"}) {
    FiniteSemiring s = generate_from_spec(spec);
    CAPTURE(spec);
    Representation rep = build_representation(s);
    REQUIRE(rep.ok());
    std::vector<std::vector<int>> t_maps;
    for (int t : rep.t_members) t_maps.push_back(rep.end_d.maps[t]);
    ConverseReport conv = converse_check(rep.division_semiring, rep.module_over_d, t_maps);
    CHECK(conv.ok());
    CHECK(find_isomorphism(conv.t_op, s).has_value());
  }
}

TEST_CASE("converse check validates transitivity") {
  FiniteSemiring b = make_boolean();
  Representation rep = build_representation(b);
  // dropping the identity leaves only the zero map: not transitive
  std::vector<std::vector<int>> just_zero = {std::vector<int>(rep.module_over_d.m,
                                                              rep.module_over_d.zero)};
  CHECK_THROWS_AS(converse_check(rep.division_semiring, rep.module_over_d, just_zero),
                  InputError);
  // a non-division scalar semiring is rejected up front
  CHECK_THROWS_AS(converse_check(make_zmod(4), regular_semimodule(make_zmod(4)), {}),
                  InputError);
}

TEST_CASE("the 2x2 boolean matrix semiring: noncommutative structure") {
  FiniteSemiring mat = make_matrix_b(2);
  SemiringFlags f = classify_semiring(mat);
  CHECK_FALSE(f.commutative);
  CHECK(f.has_identity);
  CHECK(f.congruence_simple);
  CHECK(f.zerosumfree);
  CHECK(f.additively_idempotent);
  CHECK_FALSE(f.division);

  PrimitivityReport ps = is_primitive(mat, RadicalKind::s);
  REQUIRE(ps.primitive);
  CHECK(ps.witness_congruence->num_classes() == 4);  // the row space

  Representation rep = build_representation(mat);
  REQUIRE(rep.ok());
  CHECK(rep.module_over_s.m == 4);
  CHECK(rep.end_s.semiring.n == 2);
  CHECK(find_isomorphism(rep.division_semiring, make_boolean()).has_value());
  CHECK(rep.end_d.semiring.n == 16);

  std::vector<std::vector<int>> t_maps;
  for (int t : rep.t_members) t_maps.push_back(rep.end_d.maps[t]);
  ConverseReport conv = converse_check(rep.division_semiring, rep.module_over_d, t_maps);
  CHECK(conv.ok());
  CHECK(find_isomorphism(conv.t_op, mat).has_value());

  RadicalReport rm = rad(mat, RadicalKind::m);
  CHECK(rm.semisimple);
  CHECK(rm.witnesses.size() == 3);
}

TEST_CASE("endomorphism search respects its candidate cap") {
  FiniteSemiring z4 = make_zmod(4);
  CHECK_THROWS_AS(endomorphism_semiring(z4, regular_semimodule(z4), 2), ResourceLimitError);
}

TEST_CASE("quotients by primitive congruences are semisimple with trivial radical") {
  for (const char* spec : {"zmod:6", "zmod:12", "chain:3", "group-semiring-b:z2"}) {
    FiniteSemiring s = generate_from_spec(spec);
    CAPTURE(spec);
    for (RadicalKind kind : {RadicalKind::m, RadicalKind::s})
      for (const Partition& sigma : primitive_congruences(s, kind)) {
        QuotientSemiring q = quotient_semiring(s, sigma);
        CHECK(radical_of(q.semiring, kind).is_identity());
      }
  }
}

TEST_CASE("primitive implies semisimple across the corpus") {
  for (const CorpusEntry& e : default_corpus()) {
    if (e.semiring.n > 8) continue;  // keep the sweep quick
    CAPTURE(e.name);
    for (RadicalKind kind : {RadicalKind::m, RadicalKind::s}) {
      if (!is_primitive(e.semiring, kind).primitive) continue;
      CHECK(radical_of(e.semiring, kind).is_identity());
    }
  }
}
