#include "semiring_lab/semimodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detail/union_find.hpp"

namespace semiring_lab {

using detail::UnionFind;

namespace {

void check_module_shape(const FiniteSemiring& s, const FiniteSemimodule& mod) {
  if (mod.m < 1) throw InputError("semimodule needs at least one element");
  if (mod.n != s.n) throw InputError("semimodule scalar count does not match the semiring");
  if (static_cast<int>(mod.add_table.size()) != mod.m * mod.m)
    throw InputError("semimodule addition table has wrong shape");
  if (static_cast<int>(mod.action_table.size()) != mod.m * mod.n)
    throw InputError("semimodule action table has wrong shape");
  for (int v : mod.add_table)
    if (v < 0 || v >= mod.m) throw InputError("semimodule addition entry out of range");
  for (int v : mod.action_table)
    if (v < 0 || v >= mod.m) throw InputError("semimodule action entry out of range");
  if (mod.zero < 0 || mod.zero >= mod.m) throw InputError("semimodule zero out of range");
  if (!mod.labels.empty() && static_cast<int>(mod.labels.size()) != mod.m)
    throw InputError("semimodule label count does not match carrier");
}

}  // namespace

std::vector<AxiomViolation> semimodule_violations(const FiniteSemiring& s,
                                                  const FiniteSemimodule& raw) {
  check_module_shape(s, raw);
  const FiniteSemimodule& mod = raw;
  std::vector<AxiomViolation> out;
  const int m = mod.m, n = mod.n;
  for (int a = 0; a < m; ++a) {
    if (mod.add(mod.zero, a) != a || mod.add(a, mod.zero) != a)
      out.push_back({"madd-identity", {a}, "zero is not an additive identity"});
    for (int b = a + 1; b < m; ++b)
      if (mod.add(a, b) != mod.add(b, a))
        out.push_back({"madd-commutativity", {a, b}, ""});
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (mod.add(mod.add(a, b), c) != mod.add(a, mod.add(b, c)))
          out.push_back({"madd-associativity", {a, b, c}, ""});
  for (int s1 = 0; s1 < n; ++s1) {
    if (mod.act(mod.zero, s1) != mod.zero)
      out.push_back({"zero-module-element", {s1}, "0_M . s != 0_M"});
    for (int a = 0; a < m; ++a) {
      if (mod.act(a, s.zero) != mod.zero)
        out.push_back({"zero-scalar", {a}, "m . 0 != 0_M"});
      for (int b = 0; b < m; ++b)
        if (mod.act(mod.add(a, b), s1) != mod.add(mod.act(a, s1), mod.act(b, s1)))
          out.push_back({"action-add-distributivity", {a, b, s1}, "(m1+m2)s != m1 s + m2 s"});
      for (int s2 = 0; s2 < n; ++s2) {
        if (mod.act(a, s.add(s1, s2)) != mod.add(mod.act(a, s1), mod.act(a, s2)))
          out.push_back({"scalar-add-distributivity", {a, s1, s2}, "m(s1+s2) != m s1 + m s2"});
        if (mod.act(a, s.mul(s1, s2)) != mod.act(mod.act(a, s1), s2))
          out.push_back({"action-associativity", {a, s1, s2}, "m(s1 s2) != (m s1) s2"});
      }
    }
  }
  return out;
}

FiniteSemimodule validate_semimodule(const FiniteSemiring& s, FiniteSemimodule raw) {
  auto v = semimodule_violations(s, raw);
  if (!v.empty()) {
    std::string what = "semimodule over '" + s.name + "': " + std::to_string(v.size()) +
                       " axiom violation(s), first: " + v.front().law;
    throw ValidationError(std::move(what), std::move(v));
  }
  return raw;
}

FiniteSemimodule regular_semimodule(const FiniteSemiring& s) {
  FiniteSemimodule mod;
  mod.m = s.n;
  mod.n = s.n;
  mod.labels = s.labels;
  mod.add_table = s.add_table;
  mod.action_table = s.mul_table;
  mod.zero = s.zero;
  return mod;
}

FiniteSemimodule quotient_semimodule(const FiniteSemiring& s, const Partition& mu) {
  StabilityViolation viol;
  if (!is_right_congruence(s, mu, &viol))
    throw InputError("quotient semimodule: not right-stable (" + viol.law + ")");
  const int q = mu.num_classes();
  std::vector<int> rep(q, -1);
  for (int x = 0; x < s.n; ++x)
    if (rep[mu[x]] == -1) rep[mu[x]] = x;
  FiniteSemimodule mod;
  mod.m = q;
  mod.n = s.n;
  mod.labels.resize(q);
  for (int c = 0; c < q; ++c) mod.labels[c] = "[" + s.label(rep[c]) + "]";
  mod.add_table.resize(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) mod.add_table[a * q + b] = mu[s.add(rep[a], rep[b])];
  mod.action_table.resize(static_cast<std::size_t>(q) * s.n);
  for (int a = 0; a < q; ++a)
    for (int t = 0; t < s.n; ++t)
      mod.action_table[static_cast<std::size_t>(a) * s.n + t] = mu[s.mul(rep[a], t)];
  mod.zero = mu[s.zero];
  return mod;
}

namespace {

std::vector<char> submodule_close(const FiniteSemiring& s, const FiniteSemimodule& mod,
                                  std::vector<char> in) {
  in[mod.zero] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < mod.m; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < mod.m; ++b)
        if (in[b] && !in[mod.add(a, b)]) {
          in[mod.add(a, b)] = 1;
          changed = true;
        }
      for (int t = 0; t < s.n; ++t)
        if (!in[mod.act(a, t)]) {
          in[mod.act(a, t)] = 1;
          changed = true;
        }
    }
  }
  return in;
}

std::vector<int> flags_to_sorted(const std::vector<char>& in) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(in.size()); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_subsemimodules(const FiniteSemiring& s,
                                                       const FiniteSemimodule& mod) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  auto zero_sub = flags_to_sorted(submodule_close(s, mod, std::vector<char>(mod.m, 0)));
  seen.insert(zero_sub);
  work.push_back(zero_sub);
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<char> in(mod.m, 0);
    for (int x : work[i]) in[x] = 1;
    for (int x = 0; x < mod.m; ++x) {
      if (in[x]) continue;
      auto grown = in;
      grown[x] = 1;
      auto closed = flags_to_sorted(submodule_close(s, mod, std::move(grown)));
      if (seen.insert(closed).second) work.push_back(std::move(closed));
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_semimodule_congruence(const FiniteSemiring& s, const FiniteSemimodule& mod,
                              const Partition& p) {
  if (p.size() != mod.m) throw InputError("partition size does not match carrier");
  for (int a = 0; a < mod.m; ++a)
    for (int b = a + 1; b < mod.m; ++b) {
      if (!p.same(a, b)) continue;
      for (int x = 0; x < mod.m; ++x)
        if (!p.same(mod.add(a, x), mod.add(b, x))) return false;
      for (int t = 0; t < s.n; ++t)
        if (!p.same(mod.act(a, t), mod.act(b, t))) return false;
    }
  return true;
}

namespace {

Partition module_stable_closure(const FiniteSemiring& s, const FiniteSemimodule& mod,
                                std::vector<std::pair<int, int>> work) {
  UnionFind uf(mod.m);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (int x = 0; x < mod.m; ++x) work.emplace_back(mod.add(a, x), mod.add(b, x));
    for (int t = 0; t < s.n; ++t) work.emplace_back(mod.act(a, t), mod.act(b, t));
  }
  return uf.to_partition();
}

std::vector<std::pair<int, int>> partition_seed(const Partition& p) {
  std::vector<std::pair<int, int>> seed;
  std::vector<int> first(p.num_classes(), -1);
  for (int x = 0; x < p.size(); ++x) {
    if (first[p[x]] == -1) first[p[x]] = x;
    else seed.emplace_back(first[p[x]], x);
  }
  return seed;
}

}  // namespace

std::vector<Partition> enumerate_semimodule_congruences(const FiniteSemiring& s,
                                                        const FiniteSemimodule& mod) {
  const std::size_t cap = max_relations();
  std::set<Partition> seen;
  std::vector<Partition> all;
  auto push = [&](Partition p) {
    if (seen.insert(p).second) {
      all.push_back(std::move(p));
      if (all.size() > cap)
        throw ResourceLimitError("semimodule congruence enumeration exceeded the cap");
    }
  };
  push(Partition::identity(mod.m));
  for (int a = 0; a < mod.m; ++a)
    for (int b = a + 1; b < mod.m; ++b) push(module_stable_closure(s, mod, {{a, b}}));
  for (std::size_t i = 1; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto seed = partition_seed(all[i]);
      auto more = partition_seed(all[j]);
      seed.insert(seed.end(), more.begin(), more.end());
      push(module_stable_closure(s, mod, std::move(seed)));
    }
  std::sort(all.begin(), all.end());
  return all;
}

SemimoduleClassification classify_semimodule(const FiniteSemiring& s,
                                             const FiniteSemimodule& mod) {
  SemimoduleClassification out;
  for (int a = 0; a < mod.m && !out.nonzero_action; ++a)
    for (int t = 0; t < s.n; ++t)
      if (mod.act(a, t) != mod.zero) {
        out.nonzero_action = true;
        break;
      }

  auto subs = enumerate_subsemimodules(s, mod);
  bool trivial_subs = subs.size() <= 2;
  out.minimal = out.nonzero_action && trivial_subs;
  if (!trivial_subs)
    for (const auto& sub : subs)
      if (static_cast<int>(sub.size()) > 1 && static_cast<int>(sub.size()) < mod.m) {
        out.offending_subsemimodule = sub;
        break;
      }

  // cross-check: for a module with nonzero action, minimality is the same as
  // every nonzero element generating everything via its orbit
  if (out.nonzero_action) {
    bool orbits = true;
    for (int a = 0; a < mod.m && orbits; ++a) {
      if (a == mod.zero) continue;
      std::vector<char> orbit(mod.m, 0);
      for (int t = 0; t < s.n; ++t) orbit[mod.act(a, t)] = 1;
      auto closed = submodule_close(s, mod, std::move(orbit));
      if (std::any_of(closed.begin(), closed.end(), [](char c) { return c == 0; }))
        orbits = false;
    }
    // the generating set {ms | s in S} is itself closed, so the closure adds
    // nothing beyond zero; still compare through the closure for safety
    if (orbits != out.minimal && mod.m > 1)
      throw InvariantError("minimality via subsemimodules disagrees with orbit generation");
  }

  auto congs = enumerate_semimodule_congruences(s, mod);
  bool cong_simple = congs.size() <= 2;
  if (!cong_simple)
    for (const auto& c : congs)
      if (!c.is_identity() && !c.is_full()) {
        out.offending_congruence = c;
        break;
      }
  out.simple = out.minimal && cong_simple;
  out.elementary = out.nonzero_action && cong_simple;
  return out;
}

AnnihilatorResult annihilator(const FiniteSemiring& s, const FiniteSemimodule& mod) {
  // scalars with equal action columns
  std::map<std::vector<int>, int> ids;
  std::vector<int> raw(s.n);
  for (int t = 0; t < s.n; ++t) {
    std::vector<int> col(mod.m);
    for (int a = 0; a < mod.m; ++a) col[a] = mod.act(a, t);
    auto [it, _] = ids.emplace(std::move(col), static_cast<int>(ids.size()));
    raw[t] = it->second;
  }
  Partition p = Partition::from_class_map(raw);
  if (!is_congruence(s, p))
    throw InvariantError("annihilator failed to be a two-sided congruence");
  return {p, p.is_identity()};
}

Partition delta_m(const FiniteSemiring& s, const FiniteSemimodule& mod, int m) {
  if (m < 0 || m >= mod.m) throw InputError("delta_m: element out of range");
  std::vector<int> raw(s.n);
  for (int t = 0; t < s.n; ++t) raw[t] = mod.act(m, t);
  return Partition::from_class_map(raw);
}

namespace {

// Commutative monoids on {0..m-1} with identity 0, one lexicographically
// least representative per isomorphism class, plus its automorphisms.
struct MonoidRep {
  std::vector<int> add;             // m*m
  std::vector<std::vector<int>> autos;  // zero-fixing permutations preserving add
};

std::vector<int> permute_square_table(const std::vector<int>& t, int m,
                                      const std::vector<int>& perm) {
  std::vector<int> out(t.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out[perm[a] * m + perm[b]] = perm[t[a * m + b]];
  return out;
}

void zero_fixing_perms(int m, std::vector<std::vector<int>>& out) {
  std::vector<int> rest(m - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> perm(m);
    perm[0] = 0;
    for (int i = 1; i < m; ++i) perm[i] = rest[i - 1];
    out.push_back(std::move(perm));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<MonoidRep> commutative_monoids(int m) {
  std::vector<MonoidRep> out;
  std::vector<std::vector<int>> perms;
  zero_fixing_perms(m, perms);

  std::vector<std::pair<int, int>> cells;  // free cells, i <= j, both nonzero
  for (int i = 1; i < m; ++i)
    for (int j = i; j < m; ++j) cells.emplace_back(i, j);

  std::vector<int> table(m * m, 0);
  for (int j = 0; j < m; ++j) {
    table[0 * m + j] = j;
    table[j * m + 0] = j;
  }
  std::vector<int> choice(cells.size(), 0);
  auto apply = [&]() {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      table[i * m + j] = choice[c];
      table[j * m + i] = choice[c];
    }
  };
  while (true) {
    apply();
    bool assoc = true;
    for (int a = 1; a < m && assoc; ++a)
      for (int b = 1; b < m && assoc; ++b)
        for (int c = 1; c < m; ++c)
          if (table[table[a * m + b] * m + c] != table[a * m + table[b * m + c]]) {
            assoc = false;
            break;
          }
    if (assoc) {
      bool least = true;
      std::vector<std::vector<int>> autos;
      for (const auto& perm : perms) {
        auto relabeled = permute_square_table(table, m, perm);
        if (relabeled < table) {
          least = false;
          break;
        }
        if (relabeled == table) autos.push_back(perm);
      }
      if (least) out.push_back({table, std::move(autos)});
    }
    // odometer
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == m) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

std::vector<int> permute_action(const std::vector<int>& act, int m, int n,
                                const std::vector<int>& perm) {
  std::vector<int> out(act.size());
  for (int a = 0; a < m; ++a)
    for (int t = 0; t < n; ++t) out[perm[a] * n + t] = perm[act[a * n + t]];
  return out;
}

}  // namespace

std::vector<FiniteSemimodule> enumerate_semimodules(const FiniteSemiring& s, int max_size,
                                                    const SemimoduleEnumLimits& limits) {
  if (max_size < 1) throw InputError("enumerate_semimodules: max_size must be positive");
  if (max_size > limits.max_size)
    throw ResourceLimitError("semimodule enumeration bound " + std::to_string(max_size) +
                             " exceeds the configured limit " + std::to_string(limits.max_size));
  const int n = s.n;
  std::vector<FiniteSemimodule> out;
  for (int m = 1; m <= max_size; ++m) {
    for (const MonoidRep& mon : commutative_monoids(m)) {
      // free action cells: nonzero module element x scalar other than 0_S
      std::vector<std::pair<int, int>> cells;
      for (int a = 1; a < m; ++a)
        for (int t = 0; t < n; ++t)
          if (t != s.zero) cells.emplace_back(a, t);
      std::vector<int> act(static_cast<std::size_t>(m) * n, 0);
      std::vector<int> choice(cells.size(), 0);
      while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c)
          act[cells[c].first * n + cells[c].second] = choice[c];
        // validity: both distributive laws and action associativity; the
        // zero rows/columns hold by construction
        bool ok = true;
        for (int a = 1; a < m && ok; ++a)
          for (int t1 = 0; t1 < n && ok; ++t1) {
            for (int t2 = 0; t2 < n; ++t2) {
              if (act[a * n + s.mul(t1, t2)] != act[act[a * n + t1] * n + t2] ||
                  act[a * n + s.add(t1, t2)] !=
                      mon.add[act[a * n + t1] * m + act[a * n + t2]]) {
                ok = false;
                break;
              }
            }
          }
        if (ok)
          for (int a = 1; a < m && ok; ++a)
            for (int b = a; b < m && ok; ++b) {
              int sum = mon.add[a * m + b];
              for (int t = 0; t < n; ++t)
                if (act[sum * n + t] != mon.add[act[a * n + t] * m + act[b * n + t]]) {
                  ok = false;
                  break;
                }
            }
        if (ok) {
          // keep only the orbit representative under Aut(M, +)
          bool least = true;
          for (const auto& perm : mon.autos) {
            if (perm[0] == 0 && std::is_sorted(perm.begin(), perm.end())) continue;  // identity
            if (permute_action(act, m, n, perm) < act) {
              least = false;
              break;
            }
          }
          if (least) {
            FiniteSemimodule mod;
            mod.m = m;
            mod.n = n;
            for (int a = 0; a < m; ++a) mod.labels.push_back("m" + std::to_string(a));
            mod.add_table = mon.add;
            mod.action_table = act;
            mod.zero = 0;
            out.push_back(std::move(mod));
          }
        }
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == m) choice[pos++] = 0;
        if (pos == choice.size() || cells.empty()) break;
      }
    }
  }
  return out;
}

namespace {

bool full_module_match(const FiniteSemimodule& a, const FiniteSemimodule& b,
                       const std::vector<int>& map) {
  for (int x = 0; x < a.m; ++x) {
    for (int y = 0; y < a.m; ++y)
      if (map[a.add(x, y)] != b.add(map[x], map[y])) return false;
    for (int t = 0; t < a.n; ++t)
      if (map[a.act(x, t)] != b.act(map[x], t)) return false;
  }
  return true;
}

// As with semirings, constraints whose result element is unassigned are
// skipped along the way, so completion requires the full match.
bool extend_module_iso(const FiniteSemimodule& a, const FiniteSemimodule& b,
                       std::vector<int>& map, std::vector<char>& used, int depth) {
  if (depth == a.m) return full_module_match(a, b, map);
  if (map[depth] != -1) return extend_module_iso(a, b, map, used, depth + 1);
  for (int img = 0; img < b.m; ++img) {
    if (used[img]) continue;
    map[depth] = img;
    used[img] = 1;
    bool consistent = true;
    for (int y = 0; y < a.m && consistent; ++y) {
      if (map[y] == -1) continue;
      int v = map[a.add(depth, y)];
      if (v != -1 && v != b.add(img, map[y])) consistent = false;
    }
    for (int t = 0; t < a.n && consistent; ++t) {
      int v = map[a.act(depth, t)];
      if (v != -1 && v != b.act(img, t)) consistent = false;
    }
    if (consistent && extend_module_iso(a, b, map, used, depth + 1)) return true;
    map[depth] = -1;
    used[img] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> semimodule_isomorphism(const FiniteSemiring& s,
                                                       const FiniteSemimodule& a,
                                                       const FiniteSemimodule& b) {
  if (a.n != s.n || b.n != s.n) throw InputError("semimodule isomorphism: different base semiring");
  if (a.m != b.m) return std::nullopt;
  std::vector<int> map(a.m, -1);
  std::vector<char> used(b.m, 0);
  map[a.zero] = b.zero;
  used[b.zero] = 1;
  if (!extend_module_iso(a, b, map, used, 0)) return std::nullopt;
  return map;
}

}  // namespace semiring_lab
