#include <doctest.h>

#include "semiring_lab/partition.hpp"

using namespace semiring_lab;

TEST_CASE("canonical encoding uses first-occurrence numbering") {
  Partition p = Partition::from_class_map({7, 3, 7, 1, 3});
  CHECK(p.class_map() == std::vector<int>{0, 1, 0, 2, 1});
  CHECK(p.num_classes() == 3);
  CHECK(p.same(0, 2));
  CHECK_FALSE(p.same(0, 1));
  // blocks come back sorted by least member
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 4}, {3}});
}

TEST_CASE("equal relations encode identically") {
  Partition a = Partition::from_class_map({5, 5, 2, 2});
  Partition b = Partition::from_blocks(4, {{2, 3}, {0, 1}});
  CHECK(a == b);
}

TEST_CASE("from_blocks validates the cover") {
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {2, 5}}), InputError);
}

TEST_CASE("meet intersects relations and the empty meet is full") {
  Partition a = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  Partition b = Partition::from_blocks(4, {{0, 1, 2}, {3}});
  CHECK(meet(a, b) == Partition::from_blocks(4, {{0, 1}, {2}, {3}}));
  CHECK(meet_all(4, {}) == Partition::full(4));
  CHECK(meet(Partition::identity(4), a) == Partition::identity(4));
  CHECK_THROWS_AS(meet(a, Partition::identity(3)), InputError);
}

TEST_CASE("product partition relates pairs componentwise") {
  Partition a = Partition::from_blocks(2, {{0, 1}});
  Partition b = Partition::identity(3);
  Partition p = product_partition(a, b);
  CHECK(p.size() == 6);
  CHECK(p.same(0 * 3 + 1, 1 * 3 + 1));
  CHECK_FALSE(p.same(0 * 3 + 1, 0 * 3 + 2));
  CHECK(p.num_classes() == 3);
}

TEST_CASE("refines is containment of relations") {
  Partition fine = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  Partition coarse = Partition::from_blocks(4, {{0, 1, 2}, {3}});
  CHECK(fine.refines(coarse));
  CHECK_FALSE(coarse.refines(fine));
  CHECK(Partition::identity(4).refines(fine));
  CHECK(fine.refines(Partition::full(4)));
}
