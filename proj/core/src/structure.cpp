#include "semiring_lab/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semiring_lab {

SemiringFlags classify_semiring(const FiniteSemiring& s) {
  SemiringFlags f;
  f.commutative = true;
  for (int a = 0; a < s.n && f.commutative; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (s.mul(a, b) != s.mul(b, a)) {
        f.commutative = false;
        break;
      }

  f.identity = find_multiplicative_identity(s);
  f.has_identity = f.identity.has_value();

  f.zerosumfree = true;
  for (int a = 0; a < s.n && f.zerosumfree; ++a)
    for (int b = 0; b < s.n; ++b)
      if (s.add(a, b) == s.zero && (a != s.zero || b != s.zero)) {
        f.zerosumfree = false;
        break;
      }

  f.additively_idempotent = true;
  for (int a = 0; a < s.n; ++a)
    if (s.add(a, a) != a) {
      f.additively_idempotent = false;
      break;
    }

  if (f.has_identity) {
    f.division = true;
    for (int a = 0; a < s.n && f.division; ++a) {
      if (a == s.zero) continue;
      bool invertible = false;
      for (int b = 0; b < s.n; ++b)
        if (s.mul(a, b) == *f.identity && s.mul(b, a) == *f.identity) {
          invertible = true;
          break;
        }
      if (!invertible) f.division = false;
    }
    // the one-element semiring has identity == zero and no nonzero elements;
    // treat it as not a division semiring
    if (s.n == 1) f.division = false;
  }
  f.semifield = f.division && f.commutative;

  if (f.semifield) {
    f.field = true;
    for (int a = 0; a < s.n && f.field; ++a) {
      bool has_neg = false;
      for (int b = 0; b < s.n; ++b)
        if (s.add(a, b) == s.zero) {
          has_neg = true;
          break;
        }
      if (!has_neg) f.field = false;
    }
  }

  f.congruence_simple = enumerate_congruences(s).size() <= 2;
  return f;
}

std::vector<int> zero_sum_set(const FiniteSemiring& s) {
  std::vector<int> out;
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (s.add(a, b) == s.zero) {
        out.push_back(a);
        break;
      }
  return out;
}

Partition two_block_partition(const FiniteSemiring& s) {
  std::vector<int> raw(s.n, 1);
  raw[s.zero] = 0;
  return Partition::from_class_map(raw);
}

PrimitivityReport is_primitive(const FiniteSemiring& s, RadicalKind kind) {
  PrimitivityReport rep;
  rep.kind = kind;
  auto members = (kind == RadicalKind::m) ? rc_m(s) : rc_s(s);
  for (const Partition& rho : members) {
    if (!residual(s, rho).is_identity()) continue;
    FiniteSemimodule mod = quotient_semimodule(s, rho);
    AnnihilatorResult ann = annihilator(s, mod);
    if (!ann.faithful)
      throw InvariantError("primitivity witness quotient is not faithful on '" + s.name + "'");
    SemimoduleClassification cls = classify_semimodule(s, mod);
    bool wanted = (kind == RadicalKind::m) ? cls.minimal : cls.simple;
    if (!wanted)
      throw InvariantError("primitivity witness quotient is not minimal/simple on '" + s.name +
                           "'");
    rep.primitive = true;
    rep.witness_congruence = rho;
    rep.witness_semimodule = std::move(mod);
    break;
  }
  return rep;
}

std::vector<Partition> primitive_congruences(const FiniteSemiring& s, RadicalKind kind) {
  std::vector<Partition> out;
  auto members = (kind == RadicalKind::m) ? rc_m(s) : rc_s(s);
  for (const Partition& rho : members) out.push_back(residual(s, rho));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const Partition& sigma : out) {
    QuotientSemiring q = quotient_semiring(s, sigma);
    if (!is_primitive(q.semiring, kind).primitive)
      throw InvariantError("quotient by a primitive congruence is not primitive on '" + s.name +
                           "'");
  }
  return out;
}

SubdirectDecomposition subdirect_decomposition(const FiniteSemiring& s, RadicalKind kind) {
  SubdirectDecomposition out;
  Partition radical = radical_of(s, kind);
  if (!radical.is_identity()) {
    out.radical_certificate = radical;
    return out;
  }
  std::vector<Partition> sigmas = primitive_congruences(s, kind);
  Partition check = meet_all(s.n, sigmas);
  if (!check.is_identity())
    throw InvariantError("primitive congruences of a semisimple semiring do not meet to identity");
  for (Partition& sigma : sigmas) {
    QuotientSemiring q = quotient_semiring(s, sigma);
    out.factors.push_back({std::move(sigma), std::move(q.semiring)});
  }
  out.embedding.resize(s.n);
  for (int x = 0; x < s.n; ++x) {
    out.embedding[x].reserve(out.factors.size());
    for (const auto& f : out.factors) out.embedding[x].push_back(f.congruence[x]);
  }
  std::set<std::vector<int>> distinct(out.embedding.begin(), out.embedding.end());
  out.injective = static_cast<int>(distinct.size()) == s.n;
  for (std::size_t k = 0; k < out.factors.size(); ++k) {
    std::vector<char> hit(out.factors[k].quotient.n, 0);
    for (int x = 0; x < s.n; ++x) hit[out.embedding[x][k]] = 1;
    out.projections_surjective.push_back(
        std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }));
  }
  out.decomposed = out.injective;
  if (!out.injective)
    throw InvariantError("subdirect embedding is not injective despite trivial meet");
  return out;
}

ClassificationCheck commutative_classification_check(const FiniteSemiring& s) {
  SemiringFlags f = classify_semiring(s);
  if (!f.commutative) throw InputError("commutative classification applies to commutative input");
  ClassificationCheck out;
  bool m_prim = is_primitive(s, RadicalKind::m).primitive;
  bool s_prim = is_primitive(s, RadicalKind::s).primitive;

  out.m_primitive_iff_semifield = (m_prim == f.semifield);
  out.s_primitive_iff_cs_semifield = (s_prim == (f.semifield && f.congruence_simple));
  out.field_check_applicable = s.n > 2;
  if (out.field_check_applicable)
    out.cs_semifield_iff_field = ((f.semifield && f.congruence_simple) == f.field);
  bool is_boolean = find_isomorphism(s, make_boolean()).has_value();
  out.s_primitive_iff_boolean_or_field = (s_prim == (is_boolean || f.field));
  return out;
}

namespace {

struct Recipe {
  enum Kind { generator, sum, action } kind = generator;
  int u = -1, v = -1;  // sum: u + v; action: u . scalar v
};

// Minimal generating data for the module: targets[i] says how element i is
// produced from earlier elements and generators.
struct GeneratorPlan {
  std::vector<int> gens;
  std::vector<Recipe> recipes;   // per element
  std::vector<int> order;        // derivation order, starts at zero + gens
};

GeneratorPlan plan_generators(const FiniteSemiring& s, const FiniteSemimodule& mod) {
  GeneratorPlan plan;
  plan.recipes.resize(mod.m);
  std::vector<char> known(mod.m, 0);

  auto grow = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < mod.m; ++a) {
        if (!known[a]) continue;
        for (int b = 0; b < mod.m; ++b) {
          if (!known[b]) continue;
          int c = mod.add(a, b);
          if (!known[c]) {
            known[c] = 1;
            plan.recipes[c] = {Recipe::sum, a, b};
            plan.order.push_back(c);
            changed = true;
          }
        }
        for (int t = 0; t < s.n; ++t) {
          int c = mod.act(a, t);
          if (!known[c]) {
            known[c] = 1;
            plan.recipes[c] = {Recipe::action, a, t};
            plan.order.push_back(c);
            changed = true;
          }
        }
      }
    }
  };

  known[mod.zero] = 1;
  plan.order.push_back(mod.zero);
  grow();
  for (int x = 0; x < mod.m; ++x) {
    if (known[x]) continue;
    known[x] = 1;
    plan.gens.push_back(x);
    plan.recipes[x] = {Recipe::generator, -1, -1};
    plan.order.push_back(x);
    grow();
  }
  return plan;
}

}  // namespace

EndomorphismSemiring endomorphism_semiring(const FiniteSemiring& s, const FiniteSemimodule& mod,
                                           std::size_t candidate_cap) {
  GeneratorPlan plan = plan_generators(s, mod);
  const std::size_t g = plan.gens.size();
  double budget = 1.0;
  for (std::size_t i = 0; i < g; ++i) {
    budget *= mod.m;
    if (budget > static_cast<double>(candidate_cap))
      throw ResourceLimitError("endomorphism search over " + std::to_string(g) +
                               " generators exceeds the candidate cap");
  }

  std::vector<std::vector<int>> maps;
  std::vector<int> images(g, 0);
  while (true) {
    std::vector<int> f(mod.m, -1);
    f[mod.zero] = mod.zero;
    for (std::size_t i = 0; i < g; ++i) f[plan.gens[i]] = images[i];
    bool consistent = true;
    for (int x : plan.order) {
      const Recipe& r = plan.recipes[x];
      int val = f[x];
      if (r.kind == Recipe::sum) val = mod.add(f[r.u], f[r.v]);
      else if (r.kind == Recipe::action) val = mod.act(f[r.u], r.v);
      if (f[x] == -1) f[x] = val;
      else if (f[x] != val) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      bool valid = true;
      for (int a = 0; a < mod.m && valid; ++a) {
        for (int b = a; b < mod.m && valid; ++b)
          if (f[mod.add(a, b)] != mod.add(f[a], f[b])) valid = false;
        for (int t = 0; t < s.n && valid; ++t)
          if (f[mod.act(a, t)] != mod.act(f[a], t)) valid = false;
      }
      if (valid) maps.push_back(std::move(f));
    }
    std::size_t pos = 0;
    while (pos < images.size() && ++images[pos] == mod.m) images[pos++] = 0;
    if (pos == images.size() || g == 0) break;
  }
  std::sort(maps.begin(), maps.end());

  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < maps.size(); ++i) index_of[maps[i]] = static_cast<int>(i);

  const int k = static_cast<int>(maps.size());
  EndomorphismSemiring out;
  out.maps = maps;
  FiniteSemiring e;
  e.name = "End(" + s.name + "-module)";
  e.n = k;
  e.add_table.resize(static_cast<std::size_t>(k) * k);
  e.mul_table.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) e.labels.push_back("f" + std::to_string(i));
  std::vector<int> zero_map(mod.m, mod.zero);
  auto zit = index_of.find(zero_map);
  if (zit == index_of.end()) throw InvariantError("endomorphism set lacks the zero map");
  e.zero = zit->second;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> sum(mod.m), comp(mod.m);
      for (int x = 0; x < mod.m; ++x) {
        sum[x] = mod.add(maps[i][x], maps[j][x]);
        comp[x] = maps[i][maps[j][x]];  // (f.g)(x) = f(g(x))
      }
      auto si = index_of.find(sum);
      auto ci = index_of.find(comp);
      if (si == index_of.end() || ci == index_of.end())
        throw InvariantError("endomorphisms are not closed under + or composition");
      e.add_table[static_cast<std::size_t>(i) * k + j] = si->second;
      e.mul_table[static_cast<std::size_t>(i) * k + j] = ci->second;
    }
  out.semiring = validate_semiring(std::move(e));
  return out;
}

SchurReport schur_check(const FiniteSemiring& s, const FiniteSemimodule& mod) {
  SemimoduleClassification cls = classify_semimodule(s, mod);
  if (!cls.simple) throw InputError("schur check requires a simple semimodule");
  EndomorphismSemiring end = endomorphism_semiring(s, mod);
  SemiringFlags f = classify_semiring(end.semiring);
  SchurReport rep;
  rep.endomorphism_count = end.semiring.n;
  rep.division = f.division;
  rep.identity = f.identity;
  if (!f.division && f.has_identity) {
    for (int a = 0; a < end.semiring.n; ++a) {
      if (a == end.semiring.zero) continue;
      bool invertible = false;
      for (int b = 0; b < end.semiring.n; ++b)
        if (end.semiring.mul(a, b) == *f.identity && end.semiring.mul(b, a) == *f.identity)
          invertible = true;
      if (!invertible) {
        rep.noninvertible = a;
        break;
      }
    }
  }
  return rep;
}

Representation build_representation(const FiniteSemiring& s) {
  PrimitivityReport prim = is_primitive(s, RadicalKind::s);
  if (!prim.primitive) throw InputError("'" + s.name + "' is not s-primitive");

  Representation rep;
  rep.witness_congruence = *prim.witness_congruence;
  rep.module_over_s = *prim.witness_semimodule;
  const FiniteSemimodule& mod = rep.module_over_s;

  rep.end_s = endomorphism_semiring(s, mod);
  rep.division_semiring = make_opposite(rep.end_s.semiring);
  rep.division_semiring.name = rep.end_s.semiring.name + "^op";
  if (!classify_semiring(rep.division_semiring).division)
    throw InvariantError("endomorphisms of the faithful simple module do not form a division semiring");

  FiniteSemimodule over_d;
  over_d.m = mod.m;
  over_d.n = rep.division_semiring.n;
  over_d.labels = mod.labels;
  over_d.add_table = mod.add_table;
  over_d.zero = mod.zero;
  over_d.action_table.resize(static_cast<std::size_t>(mod.m) * over_d.n);
  for (int x = 0; x < mod.m; ++x)
    for (int alpha = 0; alpha < over_d.n; ++alpha)
      over_d.action_table[static_cast<std::size_t>(x) * over_d.n + alpha] =
          rep.end_s.maps[alpha][x];
  rep.module_over_d = validate_semimodule(rep.division_semiring, std::move(over_d));

  rep.end_d = endomorphism_semiring(rep.division_semiring, rep.module_over_d);
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < rep.end_d.maps.size(); ++i)
    index_of[rep.end_d.maps[i]] = static_cast<int>(i);

  rep.psi.resize(s.n);
  for (int a = 0; a < s.n; ++a) {
    std::vector<int> column(mod.m);
    for (int x = 0; x < mod.m; ++x) column[x] = mod.act(x, a);
    auto it = index_of.find(column);
    if (it == index_of.end())
      throw InvariantError("right translation is not D-linear");
    rep.psi[a] = it->second;
  }

  const FiniteSemiring& endd = rep.end_d.semiring;
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      if (rep.psi[s.add(a, b)] != endd.add(rep.psi[a], rep.psi[b]))
        throw InvariantError("psi does not preserve addition");
      // psi reverses multiplication: it is a homomorphism out of S^op
      if (rep.psi[s.mul(b, a)] != endd.mul(rep.psi[a], rep.psi[b]))
        throw InvariantError("psi does not reverse multiplication");
    }

  std::set<int> image(rep.psi.begin(), rep.psi.end());
  rep.injective = static_cast<int>(image.size()) == s.n;
  rep.t_members.assign(image.begin(), image.end());

  rep.one_fold_transitive = true;
  for (int x = 0; x < mod.m && rep.one_fold_transitive; ++x) {
    if (x == mod.zero) continue;
    for (int y = 0; y < mod.m; ++y) {
      bool hit = false;
      for (int t : rep.t_members)
        if (rep.end_d.maps[t][x] == y) {
          hit = true;
          break;
        }
      if (!hit) {
        rep.one_fold_transitive = false;
        break;
      }
    }
  }
  return rep;
}

ConverseReport converse_check(const FiniteSemiring& d, const FiniteSemimodule& mod,
                              const std::vector<std::vector<int>>& t_maps) {
  if (!classify_semiring(d).division) throw InputError("converse check requires a division semiring");
  FiniteSemimodule m = validate_semimodule(d, mod);

  const int sz = m.m;
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < t_maps.size(); ++i) {
    const auto& f = t_maps[i];
    if (static_cast<int>(f.size()) != sz) throw InputError("endomorphism map has wrong size");
    for (int v : f)
      if (v < 0 || v >= sz) throw InputError("endomorphism map entry out of range");
    if (f[m.zero] != m.zero) throw InputError("endomorphism does not fix zero");
    for (int x = 0; x < sz; ++x) {
      for (int y = 0; y < sz; ++y)
        if (f[m.add(x, y)] != m.add(f[x], f[y])) throw InputError("map is not additive");
      for (int alpha = 0; alpha < d.n; ++alpha)
        if (f[m.act(x, alpha)] != m.act(f[x], alpha))
          throw InputError("map does not commute with the scalar action");
    }
    if (!index_of.emplace(f, static_cast<int>(i)).second)
      throw InputError("duplicate endomorphism in T");
  }
  if (!index_of.count(std::vector<int>(sz, m.zero)))
    throw InputError("T must contain the zero map");

  const int k = static_cast<int>(t_maps.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> sum(sz), comp(sz);
      for (int x = 0; x < sz; ++x) {
        sum[x] = m.add(t_maps[i][x], t_maps[j][x]);
        comp[x] = t_maps[i][t_maps[j][x]];
      }
      if (!index_of.count(sum) || !index_of.count(comp))
        throw InputError("T is not closed under + and composition");
    }

  for (int x = 0; x < sz; ++x) {
    if (x == m.zero) continue;
    for (int y = 0; y < sz; ++y) {
      bool hit = false;
      for (const auto& f : t_maps)
        if (f[x] == y) {
          hit = true;
          break;
        }
      if (!hit) throw InputError("T is not 1-fold transitive");
    }
  }

  ConverseReport rep;
  FiniteSemiring t_op;
  t_op.name = "T^op";
  t_op.n = k;
  for (int i = 0; i < k; ++i) t_op.labels.push_back("t" + std::to_string(i));
  t_op.add_table.resize(static_cast<std::size_t>(k) * k);
  t_op.mul_table.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> sum(sz), comp(sz);
      for (int x = 0; x < sz; ++x) {
        sum[x] = m.add(t_maps[i][x], t_maps[j][x]);
        comp[x] = t_maps[j][t_maps[i][x]];  // opposite of (f.g)(x) = f(g(x))
      }
      t_op.add_table[static_cast<std::size_t>(i) * k + j] = index_of[sum];
      t_op.mul_table[static_cast<std::size_t>(i) * k + j] = index_of[comp];
    }
  t_op.zero = index_of[std::vector<int>(sz, m.zero)];
  rep.t_op = validate_semiring(std::move(t_op));

  FiniteSemimodule over_t;
  over_t.m = sz;
  over_t.n = k;
  over_t.labels = m.labels;
  over_t.add_table = m.add_table;
  over_t.zero = m.zero;
  over_t.action_table.resize(static_cast<std::size_t>(sz) * k);
  for (int x = 0; x < sz; ++x)
    for (int i = 0; i < k; ++i)
      over_t.action_table[static_cast<std::size_t>(x) * k + i] = t_maps[i][x];
  rep.module_over_t = validate_semimodule(rep.t_op, std::move(over_t));

  SemimoduleClassification cls = classify_semimodule(rep.t_op, rep.module_over_t);
  rep.minimal = cls.minimal;
  rep.faithful = annihilator(rep.t_op, rep.module_over_t).faithful;
  rep.m_primitive = is_primitive(rep.t_op, RadicalKind::m).primitive;
  return rep;
}

}  // namespace semiring_lab
