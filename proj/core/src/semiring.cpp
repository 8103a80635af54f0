#include "semiring_lab/semiring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace semiring_lab {

namespace {

void check_table_shape(const std::vector<int>& table, int n, const char* what) {
  if (static_cast<int>(table.size()) != n * n)
    throw InputError(std::string(what) + ": expected " + std::to_string(n * n) +
                     " entries, got " + std::to_string(table.size()));
  for (int v : table)
    if (v < 0 || v >= n)
      throw InputError(std::string(what) + ": entry " + std::to_string(v) + " out of range");
}

std::string w3(const FiniteSemiring& s, int a, int b, int c) {
  return s.label(a) + ", " + s.label(b) + ", " + s.label(c);
}

}  // namespace

bool same_tables(const FiniteSemiring& a, const FiniteSemiring& b) {
  return a.n == b.n && a.zero == b.zero && a.add_table == b.add_table &&
         a.mul_table == b.mul_table;
}

std::vector<AxiomViolation> semiring_violations(const FiniteSemiring& raw) {
  const int n = raw.n;
  if (n < 1) throw InputError("semiring needs at least one element");
  if (static_cast<int>(raw.labels.size()) != n)
    throw InputError("label count does not match element count");
  if (std::set<std::string>(raw.labels.begin(), raw.labels.end()).size() !=
      raw.labels.size())
    throw InputError("element labels must be distinct");
  if (raw.zero < 0 || raw.zero >= n) throw InputError("zero index out of range");
  check_table_shape(raw.add_table, n, "add table");
  check_table_shape(raw.mul_table, n, "mul table");

  std::vector<AxiomViolation> out;
  const FiniteSemiring& s = raw;
  for (int a = 0; a < n; ++a) {
    if (s.add(s.zero, a) != a)
      out.push_back({"add-identity", {s.zero, a}, "0 + " + s.label(a) + " != " + s.label(a)});
    if (s.add(a, s.zero) != a)
      out.push_back({"add-identity", {a, s.zero}, s.label(a) + " + 0 != " + s.label(a)});
    if (s.mul(s.zero, a) != s.zero)
      out.push_back({"zero-absorbing", {s.zero, a}, "0 . " + s.label(a) + " != 0"});
    if (s.mul(a, s.zero) != s.zero)
      out.push_back({"zero-absorbing", {a, s.zero}, s.label(a) + " . 0 != 0"});
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (s.add(a, b) != s.add(b, a))
        out.push_back({"add-commutativity", {a, b},
                       s.label(a) + " + " + s.label(b) + " differs from the swap"});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c)))
          out.push_back({"add-associativity", {a, b, c}, w3(s, a, b, c)});
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          out.push_back({"mul-associativity", {a, b, c}, w3(s, a, b, c)});
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
          out.push_back({"left-distributivity", {a, b, c}, w3(s, a, b, c)});
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)))
          out.push_back({"right-distributivity", {a, b, c}, w3(s, a, b, c)});
      }
  return out;
}

FiniteSemiring validate_semiring(FiniteSemiring raw) {
  auto v = semiring_violations(raw);
  if (!v.empty()) {
    std::string what = "semiring '" + raw.name + "': " + std::to_string(v.size()) +
                       " axiom violation(s), first: " + v.front().law;
    throw ValidationError(std::move(what), std::move(v));
  }
  return raw;
}

FiniteGroup validate_group(FiniteGroup raw) {
  const int n = raw.n;
  if (n < 1) throw InputError("group needs at least one element");
  if (static_cast<int>(raw.labels.size()) != n)
    throw InputError("group label count does not match element count");
  check_table_shape(raw.op_table, n, "group op table");
  if (raw.identity < 0 || raw.identity >= n) throw InputError("group identity out of range");
  for (int a = 0; a < n; ++a)
    if (raw.op(raw.identity, a) != a || raw.op(a, raw.identity) != a)
      throw InputError("group identity law fails at " + raw.labels[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (raw.op(raw.op(a, b), c) != raw.op(a, raw.op(b, c)))
          throw InputError("group associativity fails");
  raw.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (raw.op(a, b) == raw.identity && raw.op(b, a) == raw.identity) {
        raw.inverse[a] = b;
        break;
      }
    if (raw.inverse[a] == -1) throw InputError("group element without inverse: " + raw.labels[a]);
  }
  return raw;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  FiniteGroup g;
  g.name = "Z" + std::to_string(n);
  g.n = n;
  for (int i = 0; i < n; ++i)
    g.labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  g.op_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.op_table[a * n + b] = (a + b) % n;
  g.identity = 0;
  return validate_group(std::move(g));
}

FiniteSemiring make_boolean() {
  FiniteSemiring s;
  s.name = "B";
  s.n = 2;
  s.labels = {"0", "1"};
  s.add_table = {0, 1, 1, 1};
  s.mul_table = {0, 0, 0, 1};
  s.zero = 0;
  return validate_semiring(std::move(s));
}

FiniteSemiring make_zmod(int n) {
  if (n < 1) throw InputError("zmod: n must be positive");
  FiniteSemiring s;
  s.name = "Z" + std::to_string(n);
  s.n = n;
  for (int i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
  s.add_table.resize(n * n);
  s.mul_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      s.add_table[a * n + b] = (a + b) % n;
      s.mul_table[a * n + b] = (a * b) % n;
    }
  s.zero = 0;
  return validate_semiring(std::move(s));
}

FiniteSemiring make_chain(int n) {
  if (n < 1) throw InputError("chain: n must be positive");
  FiniteSemiring s;
  s.name = "chain" + std::to_string(n);
  s.n = n;
  for (int i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
  s.add_table.resize(n * n);
  s.mul_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      s.add_table[a * n + b] = std::max(a, b);
      s.mul_table[a * n + b] = std::min(a, b);
    }
  s.zero = 0;
  return validate_semiring(std::move(s));
}

FiniteSemiring make_zero_mul(int n) {
  if (n < 1) throw InputError("zero-mul: n must be positive");
  FiniteSemiring s;
  s.name = "zeromul" + std::to_string(n);
  s.n = n;
  static const char* letters = "abcdefghijklmnopqrstuvwxyz";
  for (int i = 0; i < n; ++i)
    s.labels.push_back(i == 0 ? "0" : (i <= 26 ? std::string(1, letters[i - 1])
                                               : "x" + std::to_string(i)));
  s.add_table.resize(n * n);
  s.mul_table.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.add_table[a * n + b] = std::max(a, b);
  s.zero = 0;
  return validate_semiring(std::move(s));
}

FiniteSemiring make_group_semiring_b(const FiniteGroup& g) {
  FiniteGroup grp = validate_group(g);
  const int k = grp.n;
  if (k > 20) throw InputError("group semiring over B: group too large");
  const int n = 1 << k;
  FiniteSemiring s;
  s.name = "B[" + (grp.name.empty() ? "G" : grp.name) + "]";
  s.n = n;
  s.labels.resize(n);
  for (int mask = 0; mask < n; ++mask) {
    std::string lbl = "{";
    bool first = true;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) {
        if (!first) lbl += ",";
        lbl += grp.labels[i];
        first = false;
      }
    lbl += "}";
    s.labels[mask] = lbl;
  }
  s.add_table.resize(static_cast<std::size_t>(n) * n);
  s.mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      s.add_table[static_cast<std::size_t>(x) * n + y] = x | y;
      int prod = 0;
      for (int i = 0; i < k; ++i)
        if (x & (1 << i))
          for (int j = 0; j < k; ++j)
            if (y & (1 << j)) prod |= 1 << grp.op(i, j);
      s.mul_table[static_cast<std::size_t>(x) * n + y] = prod;
    }
  s.zero = 0;
  return validate_semiring(std::move(s));
}

FiniteSemiring make_product(const FiniteSemiring& r, const FiniteSemiring& s) {
  FiniteSemiring p;
  p.name = r.name + "x" + s.name;
  p.n = r.n * s.n;
  p.labels.resize(p.n);
  p.add_table.resize(static_cast<std::size_t>(p.n) * p.n);
  p.mul_table.resize(static_cast<std::size_t>(p.n) * p.n);
  auto idx = [&](int a, int b) { return a * s.n + b; };
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < s.n; ++b)
      p.labels[idx(a, b)] = "(" + r.label(a) + "," + s.label(b) + ")";
  for (int a1 = 0; a1 < r.n; ++a1)
    for (int b1 = 0; b1 < s.n; ++b1)
      for (int a2 = 0; a2 < r.n; ++a2)
        for (int b2 = 0; b2 < s.n; ++b2) {
          std::size_t pos = static_cast<std::size_t>(idx(a1, b1)) * p.n + idx(a2, b2);
          p.add_table[pos] = idx(r.add(a1, a2), s.add(b1, b2));
          p.mul_table[pos] = idx(r.mul(a1, a2), s.mul(b1, b2));
        }
  p.zero = idx(r.zero, s.zero);
  return validate_semiring(std::move(p));
}

FiniteSemiring make_opposite(const FiniteSemiring& s) {
  FiniteSemiring o = s;
  o.name = s.name + "^op";
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) o.mul_table[a * s.n + b] = s.mul(b, a);
  return validate_semiring(std::move(o));
}

FiniteSemiring make_matrix_b(int k) {
  if (k < 1) throw InputError("matrix-b: k must be positive");
  if (k > 4) throw InputError("matrix-b: k too large for table representation");
  const int bits = k * k;
  const int n = 1 << bits;
  // matrix bit (i,j) = bit i*k+j of the element index
  auto at = [&](int m, int i, int j) { return (m >> (i * k + j)) & 1; };
  FiniteSemiring s;
  s.name = "MatB" + std::to_string(k);
  s.n = n;
  s.labels.resize(n);
  for (int m = 0; m < n; ++m) {
    std::string lbl(bits, '0');
    for (int b = 0; b < bits; ++b)
      if (m & (1 << b)) lbl[b] = '1';
    s.labels[m] = lbl;
  }
  s.add_table.resize(static_cast<std::size_t>(n) * n);
  s.mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      s.add_table[static_cast<std::size_t>(x) * n + y] = x | y;
      int prod = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int v = 0;
          for (int t = 0; t < k; ++t) v |= at(x, i, t) & at(y, t, j);
          if (v) prod |= 1 << (i * k + j);
        }
      s.mul_table[static_cast<std::size_t>(x) * n + y] = prod;
    }
  s.zero = 0;
  return validate_semiring(std::move(s));
}

bool SemiringHomomorphism::surjective() const {
  std::vector<char> hit(target.n, 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool SemiringHomomorphism::injective() const {
  std::set<int> seen(map.begin(), map.end());
  return static_cast<int>(seen.size()) == source.n;
}

SemiringHomomorphism make_homomorphism(FiniteSemiring source, FiniteSemiring target,
                                       std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.n)
    throw InputError("homomorphism map size does not match source");
  for (int v : map)
    if (v < 0 || v >= target.n) throw InputError("homomorphism map entry out of range");
  if (map[source.zero] != target.zero) throw InputError("homomorphism does not map zero to zero");
  for (int a = 0; a < source.n; ++a)
    for (int b = 0; b < source.n; ++b) {
      if (map[source.add(a, b)] != target.add(map[a], map[b]))
        throw InputError("map does not preserve addition at (" + source.label(a) + ", " +
                         source.label(b) + ")");
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw InputError("map does not preserve multiplication at (" + source.label(a) + ", " +
                         source.label(b) + ")");
    }
  return {std::move(source), std::move(target), std::move(map)};
}

Partition kernel(const SemiringHomomorphism& h) { return Partition::from_class_map(h.map); }

QuotientSemiring quotient_semiring(const FiniteSemiring& s, const Partition& theta) {
  if (theta.size() != s.n) throw InputError("congruence size does not match semiring");
  // two-sidedness check with a precise complaint
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (theta.same(a, b))
        for (int c = 0; c < s.n; ++c) {
          if (!theta.same(s.add(a, c), s.add(b, c)))
            throw InputError("not a congruence: addition unstable at (" + s.label(a) + "," +
                             s.label(b) + ")+" + s.label(c));
          if (!theta.same(s.mul(a, c), s.mul(b, c)))
            throw InputError("not a congruence: right multiplication unstable");
          if (!theta.same(s.mul(c, a), s.mul(c, b)))
            throw InputError("not a congruence: left multiplication unstable");
        }

  const int q = theta.num_classes();
  std::vector<int> rep(q, -1);
  for (int x = 0; x < s.n; ++x)
    if (rep[theta[x]] == -1) rep[theta[x]] = x;

  FiniteSemiring quo;
  quo.name = s.name + "/~";
  quo.n = q;
  quo.labels.resize(q);
  for (int c = 0; c < q; ++c) quo.labels[c] = "[" + s.label(rep[c]) + "]";
  quo.add_table.resize(q * q);
  quo.mul_table.resize(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      quo.add_table[a * q + b] = theta[s.add(rep[a], rep[b])];
      quo.mul_table[a * q + b] = theta[s.mul(rep[a], rep[b])];
    }
  quo.zero = theta[s.zero];
  quo = validate_semiring(std::move(quo));
  auto surj = make_homomorphism(s, quo, theta.class_map());
  return {std::move(quo), std::move(surj)};
}

FiniteSemiring subsemiring(const FiniteSemiring& s, const std::vector<int>& members) {
  std::vector<int> index_of(s.n, -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    int x = members[i];
    if (x < 0 || x >= s.n) throw InputError("subsemiring member out of range");
    index_of[x] = static_cast<int>(i);
  }
  if (index_of[s.zero] == -1) throw InputError("subsemiring must contain zero");
  FiniteSemiring sub;
  sub.name = s.name + "|sub";
  sub.n = static_cast<int>(members.size());
  sub.add_table.resize(sub.n * sub.n);
  sub.mul_table.resize(sub.n * sub.n);
  for (int i = 0; i < sub.n; ++i) sub.labels.push_back(s.label(members[i]));
  for (int i = 0; i < sub.n; ++i)
    for (int j = 0; j < sub.n; ++j) {
      int a = s.add(members[i], members[j]);
      int m = s.mul(members[i], members[j]);
      if (index_of[a] == -1 || index_of[m] == -1)
        throw InputError("subset is not closed under the operations");
      sub.add_table[i * sub.n + j] = index_of[a];
      sub.mul_table[i * sub.n + j] = index_of[m];
    }
  sub.zero = index_of[s.zero];
  return validate_semiring(std::move(sub));
}

namespace {

// Iterated refinement: the color of an element folds in the colors of its
// add/mul rows and columns, so only elements with matching local structure
// can correspond under an isomorphism.
std::vector<std::size_t> structure_colors(const FiniteSemiring& s) {
  std::vector<std::size_t> color(s.n);
  for (int x = 0; x < s.n; ++x) color[x] = (x == s.zero) ? 1 : 0;
  std::hash<std::size_t> h;
  for (int round = 0; round < 4; ++round) {
    std::vector<std::size_t> next(s.n);
    for (int x = 0; x < s.n; ++x) {
      std::vector<std::size_t> sig;
      sig.reserve(4 * s.n + 1);
      sig.push_back(color[x]);
      for (int y = 0; y < s.n; ++y) {
        sig.push_back(color[y] * 31 + color[s.add(x, y)]);
        sig.push_back(color[y] * 37 + color[s.mul(x, y)] * 3 + 1);
        sig.push_back(color[y] * 41 + color[s.mul(y, x)] * 5 + 2);
      }
      // add/mul rows are unordered neighborhoods
      std::sort(sig.begin() + 1, sig.end());
      std::size_t acc = 1469598103934665603ull;
      for (std::size_t v : sig) acc = (acc ^ h(v)) * 1099511628211ull;
      next[x] = acc;
    }
    color = std::move(next);
  }
  return color;
}

bool full_table_match(const FiniteSemiring& a, const FiniteSemiring& b,
                      const std::vector<int>& map) {
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (map[a.add(x, y)] != b.add(map[x], map[y]) ||
          map[a.mul(x, y)] != b.mul(map[x], map[y]))
        return false;
  return true;
}

// Partial checks skip constraints whose result element is still unassigned,
// so a complete assignment is accepted only after the full table match.
bool extend_isomorphism(const FiniteSemiring& a, const FiniteSemiring& b,
                        const std::vector<std::size_t>& ca, const std::vector<std::size_t>& cb,
                        std::vector<int>& map, std::vector<char>& used, int depth) {
  if (depth == a.n) return full_table_match(a, b, map);
  if (map[depth] != -1) return extend_isomorphism(a, b, ca, cb, map, used, depth + 1);
  for (int img = 0; img < b.n; ++img) {
    if (used[img] || ca[depth] != cb[img]) continue;
    map[depth] = img;
    used[img] = 1;
    bool consistent = true;
    for (int y = 0; y < a.n && consistent; ++y) {
      if (map[y] == -1) continue;
      int av = map[a.add(depth, y)], bv = b.add(img, map[y]);
      if (av != -1 && av != bv) consistent = false;
      if (consistent) {
        av = map[a.mul(depth, y)];
        if (av != -1 && av != b.mul(img, map[y])) consistent = false;
      }
      if (consistent) {
        av = map[a.mul(y, depth)];
        if (av != -1 && av != b.mul(map[y], img)) consistent = false;
      }
    }
    if (consistent && extend_isomorphism(a, b, ca, cb, map, used, depth + 1)) return true;
    map[depth] = -1;
    used[img] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteSemiring& a,
                                                 const FiniteSemiring& b) {
  if (a.n != b.n) return std::nullopt;
  auto ca = structure_colors(a);
  auto cb = structure_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(a.n, -1);
  std::vector<char> used(b.n, 0);
  map[a.zero] = b.zero;
  used[b.zero] = 1;
  if (ca[a.zero] != cb[b.zero]) return std::nullopt;
  if (!extend_isomorphism(a, b, ca, cb, map, used, 0)) return std::nullopt;
  return map;
}

std::optional<int> find_multiplicative_identity(const FiniteSemiring& s) {
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      if (s.mul(e, x) != x || s.mul(x, e) != x) ok = false;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace semiring_lab
