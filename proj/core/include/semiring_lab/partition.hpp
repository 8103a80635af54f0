// Canonical partitions of {0, ..., n-1}. Congruences of all flavours are
// represented as partitions in first-occurrence canonical form, so equal
// relations always have identical encodings and sets of congruences sort
// deterministically.

#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

class Partition {
 public:
  Partition() = default;

  // Relabels arbitrary class ids so that ids appear in increasing order of
  // first occurrence (class 0 is the class of element 0, and so on).
  static Partition from_class_map(const std::vector<int>& raw) {
    Partition p;
    p.class_of_.assign(raw.size(), -1);
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, inserted] = relabel.emplace(raw[i], p.num_classes_);
      if (inserted) ++p.num_classes_;
      p.class_of_[i] = it->second;
    }
    return p;
  }

  static Partition identity(int n) {
    Partition p;
    p.class_of_.resize(n);
    for (int i = 0; i < n; ++i) p.class_of_[i] = i;
    p.num_classes_ = n;
    return p;
  }

  static Partition full(int n) {
    Partition p;
    p.class_of_.assign(n, 0);
    p.num_classes_ = n > 0 ? 1 : 0;
    return p;
  }

  // Blocks must cover {0..n-1} exactly once.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int id = 0;
    for (const auto& blk : blocks) {
      for (int x : blk) {
        if (x < 0 || x >= n) throw InputError("partition block entry out of range");
        if (raw[x] != -1) throw InputError("partition blocks overlap");
        raw[x] = id;
      }
      ++id;
    }
    for (int x = 0; x < n; ++x)
      if (raw[x] == -1) throw InputError("partition blocks do not cover the set");
    return from_class_map(raw);
  }

  int size() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return num_classes_; }
  int operator[](int x) const { return class_of_[x]; }
  bool same(int a, int b) const { return class_of_[a] == class_of_[b]; }
  bool is_identity() const { return num_classes_ == size(); }
  bool is_full() const { return num_classes_ <= 1; }
  const std::vector<int>& class_map() const { return class_of_; }

  // Blocks come out sorted by least member, members ascending.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(num_classes_);
    for (int i = 0; i < size(); ++i) out[class_of_[i]].push_back(i);
    return out;
  }

  // True iff every pair related here is related in `coarser`.
  bool refines(const Partition& coarser) const {
    if (coarser.size() != size()) throw InputError("refines: size mismatch");
    std::vector<int> image(num_classes_, -1);
    for (int i = 0; i < size(); ++i) {
      int& img = image[class_of_[i]];
      if (img == -1) img = coarser.class_of_[i];
      else if (img != coarser.class_of_[i]) return false;
    }
    return true;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> class_of_;
  int num_classes_ = 0;
};

inline Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InputError("meet: partitions over different sets");
  int n = a.size();
  std::vector<int> raw(n);
  std::map<std::pair<int, int>, int> ids;
  for (int i = 0; i < n; ++i) {
    auto [it, _] = ids.emplace(std::pair{a[i], b[i]}, static_cast<int>(ids.size()));
    raw[i] = it->second;
  }
  return Partition::from_class_map(raw);
}

// Meet of a family of partitions of an n-set; the empty family yields the
// full partition (the convention every empty congruence intersection uses).
inline Partition meet_all(int n, std::span<const Partition> ps) {
  Partition acc = Partition::full(n);
  for (const auto& p : ps) {
    if (p.size() != n) throw InputError("meet_all: partitions over different sets");
    acc = meet(acc, p);
  }
  return acc;
}

// Partition of the index set {0..|a|*|b|-1}, element (x, y) at x*|b| + y,
// relating (x1,y1) ~ (x2,y2) iff x1 ~a x2 and y1 ~b y2.
inline Partition product_partition(const Partition& a, const Partition& b) {
  int na = a.size(), nb = b.size();
  std::vector<int> raw(static_cast<std::size_t>(na) * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) raw[x * nb + y] = a[x] * nb + b[y];
  return Partition::from_class_map(raw);
}

// True iff p-related elements have q-related images under f.
inline bool maps_into(const Partition& p, const std::vector<int>& f, const Partition& q) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (p.same(x, y) && !q.same(f[x], f[y])) return false;
  return true;
}

}  // namespace semiring_lab
