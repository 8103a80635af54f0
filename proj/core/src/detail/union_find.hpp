// Internal: path-compressing union-find with canonical partition export.

#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "semiring_lab/partition.hpp"

namespace semiring_lab::detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  Partition to_partition() {
    std::vector<int> raw(parent.size());
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) raw[i] = find(i);
    return Partition::from_class_map(raw);
  }
};

}  // namespace semiring_lab::detail
