#include "semiring_lab/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "detail/union_find.hpp"
#include "semiring_lab/semimodule.hpp"

namespace semiring_lab {

using detail::UnionFind;

std::size_t max_relations() {
  if (const char* env = std::getenv("SEMIRING_LAB_MAX_RELATIONS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

// Worklist closure: whenever two classes merge, the merged generator pair is
// translated and re-enqueued. Transitivity is free from the union-find, and
// translates of derived pairs follow from translates of generator pairs, so
// the fixpoint is the least stable partition containing the seed.
Partition stable_closure(const FiniteSemiring& s, std::span<const std::pair<int, int>> seed,
                         bool two_sided) {
  UnionFind uf(s.n);
  std::vector<std::pair<int, int>> work(seed.begin(), seed.end());
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (int c = 0; c < s.n; ++c) {
      work.emplace_back(s.add(a, c), s.add(b, c));
      work.emplace_back(s.mul(a, c), s.mul(b, c));
      if (two_sided) work.emplace_back(s.mul(c, a), s.mul(c, b));
    }
  }
  return uf.to_partition();
}

std::vector<std::pair<int, int>> partition_seed(const Partition& p) {
  std::vector<std::pair<int, int>> seed;
  std::vector<int> first(p.num_classes(), -1);
  for (int x = 0; x < p.size(); ++x) {
    int c = p[x];
    if (first[c] == -1) first[c] = x;
    else seed.emplace_back(first[c], x);
  }
  return seed;
}

std::vector<Partition> enumerate_stable(const FiniteSemiring& s, bool two_sided) {
  const std::size_t cap = max_relations();
  std::set<Partition> seen;
  std::vector<Partition> all;
  auto push = [&](Partition p) {
    if (seen.insert(p).second) {
      all.push_back(std::move(p));
      if (all.size() > cap)
        throw ResourceLimitError("congruence enumeration exceeded the cap of " +
                                 std::to_string(cap) +
                                 " relations (override via SEMIRING_LAB_MAX_RELATIONS)");
    }
  };
  push(Partition::identity(s.n));
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b) {
      std::pair<int, int> pr{a, b};
      push(stable_closure(s, std::span(&pr, 1), two_sided));
    }
  // join-closure: every congruence is a join of principal ones
  for (std::size_t i = 1; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto seed = partition_seed(all[i]);
      auto more = partition_seed(all[j]);
      seed.insert(seed.end(), more.begin(), more.end());
      push(stable_closure(s, seed, two_sided));
    }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

bool is_right_congruence(const FiniteSemiring& s, const Partition& p, StabilityViolation* out) {
  if (p.size() != s.n) throw InputError("partition size does not match semiring");
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b) {
      if (!p.same(a, b)) continue;
      for (int c = 0; c < s.n; ++c) {
        if (!p.same(s.add(a, c), s.add(b, c))) {
          if (out) *out = {a, b, c, "add"};
          return false;
        }
        if (!p.same(s.mul(a, c), s.mul(b, c))) {
          if (out) *out = {a, b, c, "mul-right"};
          return false;
        }
      }
    }
  return true;
}

bool is_congruence(const FiniteSemiring& s, const Partition& p, StabilityViolation* out) {
  if (!is_right_congruence(s, p, out)) return false;
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b) {
      if (!p.same(a, b)) continue;
      for (int c = 0; c < s.n; ++c)
        if (!p.same(s.mul(c, a), s.mul(c, b))) {
          if (out) *out = {a, b, c, "mul-left"};
          return false;
        }
    }
  return true;
}

Partition right_congruence_closure(const FiniteSemiring& s,
                                   std::span<const std::pair<int, int>> pairs) {
  for (auto [a, b] : pairs)
    if (a < 0 || a >= s.n || b < 0 || b >= s.n) throw InputError("pair out of range");
  return stable_closure(s, pairs, false);
}

Partition congruence_closure(const FiniteSemiring& s,
                             std::span<const std::pair<int, int>> pairs) {
  for (auto [a, b] : pairs)
    if (a < 0 || a >= s.n || b < 0 || b >= s.n) throw InputError("pair out of range");
  return stable_closure(s, pairs, true);
}

Partition principal_right_congruence(const FiniteSemiring& s, int a, int b) {
  std::pair<int, int> pr{a, b};
  return right_congruence_closure(s, std::span(&pr, 1));
}

Partition join_right_congruences(const FiniteSemiring& s, const Partition& p,
                                 const Partition& q) {
  if (p.size() != s.n || q.size() != s.n) throw InputError("join: size mismatch");
  auto seed = partition_seed(p);
  auto more = partition_seed(q);
  seed.insert(seed.end(), more.begin(), more.end());
  return stable_closure(s, seed, false);
}

std::vector<Partition> enumerate_right_congruences(const FiniteSemiring& s) {
  return enumerate_stable(s, false);
}

std::vector<Partition> enumerate_congruences(const FiniteSemiring& s) {
  return enumerate_stable(s, true);
}

bool is_right_ideal(const FiniteSemiring& s, const std::vector<int>& members, std::string* why) {
  std::vector<char> in(s.n, 0);
  for (int x : members) {
    if (x < 0 || x >= s.n) throw InputError("ideal member out of range");
    in[x] = 1;
  }
  if (!in[s.zero]) {
    if (why) *why = "does not contain zero";
    return false;
  }
  for (int a : members) {
    for (int b : members)
      if (!in[s.add(a, b)]) {
        if (why) *why = "not closed under addition at (" + s.label(a) + "," + s.label(b) + ")";
        return false;
      }
    for (int c = 0; c < s.n; ++c)
      if (!in[s.mul(a, c)]) {
        if (why)
          *why = "not closed under right multiplication at (" + s.label(a) + ")." + s.label(c);
        return false;
      }
  }
  return true;
}

namespace {

std::vector<char> ideal_close(const FiniteSemiring& s, std::vector<char> in) {
  in[s.zero] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < s.n; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < s.n; ++b) {
        if (in[b] && !in[s.add(a, b)]) {
          in[s.add(a, b)] = 1;
          changed = true;
        }
        if (!in[s.mul(a, b)]) {
          in[s.mul(a, b)] = 1;
          changed = true;
        }
      }
    }
  }
  return in;
}

std::vector<int> to_sorted(const std::vector<char>& in) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(in.size()); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace

RightIdeal right_ideal_closure(const FiniteSemiring& s, const std::vector<int>& seed) {
  std::vector<char> in(s.n, 0);
  for (int x : seed) {
    if (x < 0 || x >= s.n) throw InputError("seed element out of range");
    in[x] = 1;
  }
  return {to_sorted(ideal_close(s, std::move(in)))};
}

std::vector<RightIdeal> enumerate_right_ideals(const FiniteSemiring& s) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  auto zero_ideal = right_ideal_closure(s, {}).members;
  seen.insert(zero_ideal);
  work.push_back(zero_ideal);
  // every ideal is reachable from a smaller one by adjoining one generator
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<char> in(s.n, 0);
    for (int x : work[i]) in[x] = 1;
    for (int x = 0; x < s.n; ++x) {
      if (in[x]) continue;
      auto bigger = in;
      bigger[x] = 1;
      auto closed = to_sorted(ideal_close(s, std::move(bigger)));
      if (seen.insert(closed).second) work.push_back(std::move(closed));
    }
  }
  std::vector<RightIdeal> out;
  out.reserve(work.size());
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto& m : work) out.push_back({std::move(m)});
  return out;
}

Partition bourne_congruence(const FiniteSemiring& s, const RightIdeal& i) {
  std::string why;
  if (!is_right_ideal(s, i.members, &why)) throw InputError("bourne congruence: " + why);
  std::vector<char> in(s.n, 0);
  for (int x : i.members) in[x] = 1;
  // x ~ y iff x + i1 = y + i2; reflexive via 0, symmetric by swap, and
  // transitive because (i1 + i3) and (i4 + i2) stay inside the ideal.
  UnionFind uf(s.n);
  std::vector<std::vector<int>> reach(s.n);  // reach[x] = {x + i : i in I}
  for (int x = 0; x < s.n; ++x) {
    std::vector<char> r(s.n, 0);
    for (int j : i.members) r[s.add(x, j)] = 1;
    for (int v = 0; v < s.n; ++v)
      if (r[v]) reach[x].push_back(v);
  }
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y) {
      std::vector<char> rx(s.n, 0);
      for (int v : reach[x]) rx[v] = 1;
      for (int v : reach[y])
        if (rx[v]) {
          uf.unite(x, y);
          break;
        }
    }
  Partition p = uf.to_partition();
  if (!is_right_congruence(s, p))
    throw InvariantError("Bourne relation failed to be a right congruence");
  return p;
}

RightIdeal saturation(const FiniteSemiring& s, const RightIdeal& i) {
  Partition sigma = bourne_congruence(s, i);
  std::vector<int> bar;
  for (int x = 0; x < s.n; ++x)
    if (sigma.same(x, s.zero)) bar.push_back(x);
  // inflationary and idempotent by construction; verify both
  std::vector<char> in(s.n, 0);
  for (int x : bar) in[x] = 1;
  for (int x : i.members)
    if (!in[x]) throw InvariantError("saturation lost an ideal member");
  RightIdeal out{std::move(bar)};
  std::string why;
  if (!is_right_ideal(s, out.members, &why))
    throw InvariantError("saturation is not an ideal: " + why);
  return out;
}

bool is_mu_saturated(const FiniteSemiring& s, const RightIdeal& i, const Partition& mu) {
  if (mu.size() != s.n) throw InputError("congruence size does not match semiring");
  std::vector<char> in(s.n, 0);
  for (int x : i.members) in[x] = 1;
  for (int x : i.members)
    for (int y = 0; y < s.n; ++y)
      if (mu.same(x, y) && !in[y]) return false;
  return true;
}

namespace {

// Smallest mu-saturated right ideal containing the seed: alternate ideal
// closure with closing up under mu-classes until stable.
std::vector<char> saturated_ideal_close(const FiniteSemiring& s, const Partition& mu,
                                        std::vector<char> in) {
  bool changed = true;
  while (changed) {
    in = ideal_close(s, std::move(in));
    changed = false;
    for (int x = 0; x < s.n; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < s.n; ++y)
        if (!in[y] && mu.same(x, y)) {
          in[y] = 1;
          changed = true;
        }
    }
  }
  return in;
}

}  // namespace

RegularityClassification classify_regularity(const FiniteSemiring& s, const Partition& mu) {
  StabilityViolation viol;
  if (!is_right_congruence(s, mu, &viol))
    throw InputError("classify_regularity: not a right congruence (" + viol.law + ")");

  RegularityClassification rc;
  rc.congruence = mu;
  for (int e = 0; e < s.n && !rc.witness_e; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      if (!mu.same(s.mul(e, x), x)) ok = false;
    if (ok) rc.witness_e = e;
  }
  if (!rc.witness_e) return rc;
  rc.cls = Regularity::regular;

  if (mu.is_full()) return rc;  // zero class is everything, never m-regular

  std::vector<char> zero_class(s.n, 0);
  for (int x = 0; x < s.n; ++x)
    if (mu.same(x, s.zero)) zero_class[x] = 1;
  for (int x = 0; x < s.n; ++x) {
    if (zero_class[x]) continue;
    auto grown = zero_class;
    grown[x] = 1;
    auto closed = saturated_ideal_close(s, mu, std::move(grown));
    bool proper = std::any_of(closed.begin(), closed.end(), [](char c) { return c == 0; });
    if (proper) {
      // proper mu-saturated right ideal strictly above the zero class
      std::vector<int> members;
      for (int v = 0; v < s.n; ++v)
        if (closed[v]) members.push_back(v);
      rc.blocking_ideal = RightIdeal{std::move(members)};
      return rc;
    }
  }
  rc.cls = Regularity::m_regular;

  // s-regularity: right congruences above mu are exactly the lifts of the
  // semimodule congruences of S/mu; look for a regular one strictly between.
  FiniteSemimodule quo = quotient_semimodule(s, mu);
  for (const Partition& theta : enumerate_semimodule_congruences(s, quo)) {
    if (theta.is_identity() || theta.is_full()) continue;
    std::vector<int> lifted(s.n);
    for (int x = 0; x < s.n; ++x) lifted[x] = theta[mu[x]];
    Partition phi = Partition::from_class_map(lifted);
    for (int e = 0; e < s.n; ++e) {
      bool ok = true;
      for (int x = 0; x < s.n && ok; ++x)
        if (!phi.same(s.mul(e, x), x)) ok = false;
      if (ok) {
        rc.blocking_congruence = phi;
        return rc;
      }
    }
  }
  rc.cls = Regularity::s_regular;
  return rc;
}

namespace {

std::vector<Partition> rc_filter(const FiniteSemiring& s, Regularity threshold) {
  std::vector<Partition> out;
  for (const Partition& mu : enumerate_right_congruences(s))
    if (classify_regularity(s, mu).at_least(threshold)) out.push_back(mu);
  return out;
}

}  // namespace

std::vector<Partition> rc_m(const FiniteSemiring& s) { return rc_filter(s, Regularity::m_regular); }

std::vector<Partition> rc_s(const FiniteSemiring& s) { return rc_filter(s, Regularity::s_regular); }

Partition residual(const FiniteSemiring& s, const Partition& rho) {
  if (rho.size() != s.n) throw InputError("residual: size mismatch");
  // (x, y) related iff every left translate pair (sx, sy) lies in rho;
  // elements with equal translate signatures form the classes.
  std::vector<std::vector<int>> sig(s.n, std::vector<int>(s.n));
  for (int x = 0; x < s.n; ++x)
    for (int t = 0; t < s.n; ++t) sig[x][t] = rho[s.mul(t, x)];
  std::map<std::vector<int>, int> ids;
  std::vector<int> raw(s.n);
  for (int x = 0; x < s.n; ++x) {
    auto [it, _] = ids.emplace(sig[x], static_cast<int>(ids.size()));
    raw[x] = it->second;
  }
  Partition p = Partition::from_class_map(raw);
  if (!is_congruence(s, p)) throw InvariantError("residual is not a two-sided congruence");
  return p;
}

}  // namespace semiring_lab
