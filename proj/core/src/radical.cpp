#include "semiring_lab/radical.hpp"

#include <algorithm>

namespace semiring_lab {

const char* to_string(RadicalKind k) { return k == RadicalKind::m ? "m" : "s"; }

RadicalReport rad(const FiniteSemiring& s, RadicalKind kind) {
  RadicalReport report;
  report.kind = kind;
  report.witnesses = (kind == RadicalKind::m) ? rc_m(s) : rc_s(s);

  report.via_rc = meet_all(s.n, report.witnesses);

  std::vector<Partition> residuals;
  residuals.reserve(report.witnesses.size());
  for (const Partition& mu : report.witnesses) residuals.push_back(residual(s, mu));
  report.via_residual = meet_all(s.n, residuals);

  std::vector<Partition> anns;
  anns.reserve(report.witnesses.size());
  for (const Partition& mu : report.witnesses)
    anns.push_back(annihilator(s, quotient_semimodule(s, mu)).congruence);
  report.via_annihilators = meet_all(s.n, anns);

  report.agreement = report.via_rc == report.via_residual &&
                     report.via_residual == report.via_annihilators;
  report.radical = report.via_rc;
  report.semisimple = report.radical.is_identity();
  return report;
}

Partition radical_of(const FiniteSemiring& s, RadicalKind kind) {
  RadicalReport r = rad(s, kind);
  if (!r.agreement)
    throw InvariantError("radical characterizations disagree on '" + s.name +
                         "' (kind " + to_string(kind) + ")");
  return r.radical;
}

namespace {

// Ring ideals of Z_n by direct subset scan; nothing here touches the
// congruence machinery, so it can serve as an independent oracle.
std::vector<std::vector<int>> zn_ring_ideals(int n) {
  std::vector<std::vector<int>> ideals;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain 0
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = 0; b < n && ok; ++b) {
        if ((mask >> b & 1u) && !(mask >> ((a + b) % n) & 1u)) ok = false;
        if (!(mask >> (a * b % n) & 1u)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1u) members.push_back(a);
    ideals.push_back(std::move(members));
  }
  return ideals;
}

}  // namespace

RingCompatibilityReport ring_compatibility_check(int n) {
  if (n < 1 || n > 20) throw InputError("ring compatibility check supports 1 <= n <= 20");
  FiniteSemiring zn = make_zmod(n);
  RingCompatibilityReport rep;
  rep.n = n;

  auto ideals = zn_ring_ideals(n);
  std::vector<std::vector<int>> maximal;
  for (const auto& i : ideals) {
    if (static_cast<int>(i.size()) == n) continue;  // not proper
    bool is_max = true;
    for (const auto& j : ideals)
      if (static_cast<int>(j.size()) != n && j.size() > i.size() &&
          std::includes(j.begin(), j.end(), i.begin(), i.end())) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(i);
  }
  std::vector<char> in_all(n, 1);
  for (const auto& mi : maximal) {
    std::vector<char> here(n, 0);
    for (int x : mi) here[x] = 1;
    for (int x = 0; x < n; ++x) in_all[x] &= here[x];
  }
  for (int x = 0; x < n; ++x)
    if (in_all[x]) rep.jacobson_ideal.push_back(x);

  Partition rad_s_cong = radical_of(zn, RadicalKind::s);
  Partition rad_m_cong = radical_of(zn, RadicalKind::m);
  for (int x = 0; x < n; ++x)
    if (rad_s_cong.same(x, zn.zero)) rep.radical_zero_class.push_back(x);

  rep.zero_class_matches = rep.radical_zero_class == rep.jacobson_ideal;
  rep.kinds_agree = rad_m_cong == rad_s_cong;
  rep.bourne_matches = bourne_congruence(zn, RightIdeal{rep.jacobson_ideal}) == rad_s_cong;
  return rep;
}

HoehnkeReport hoehnke_check(const FiniteSemiring& s, RadicalKind kind) {
  HoehnkeReport rep;
  Partition rad_s_cong = radical_of(s, kind);

  rep.image_law = true;
  for (const Partition& theta : enumerate_congruences(s)) {
    QuotientSemiring q = quotient_semiring(s, theta);
    Partition rad_q = radical_of(q.semiring, kind);
    if (!maps_into(rad_s_cong, theta.class_map(), rad_q)) {
      rep.image_law = false;
      for (int a = 0; a < s.n && !rep.counterexample; ++a)
        for (int b = a + 1; b < s.n; ++b)
          if (rad_s_cong.same(a, b) && !rad_q.same(theta[a], theta[b])) {
            rep.counterexample = HoehnkeCounterexample{theta, a, b};
            break;
          }
      break;
    }
  }

  QuotientSemiring by_rad = quotient_semiring(s, rad_s_cong);
  rep.quotient_trivial = radical_of(by_rad.semiring, kind).is_identity();
  return rep;
}

ProductRadicalReport product_radical_check(const FiniteSemiring& r, const FiniteSemiring& s,
                                           RadicalKind kind) {
  ProductRadicalReport rep;
  FiniteSemiring p = make_product(r, s);
  Partition rad_p = radical_of(p, kind);
  Partition expected = product_partition(radical_of(r, kind), radical_of(s, kind));
  rep.radical_matches = rad_p == expected;

  if (kind == RadicalKind::m) {
    std::vector<Partition> expected_rc;
    for (const Partition& sigma : rc_m(r))
      expected_rc.push_back(product_partition(sigma, Partition::full(s.n)));
    for (const Partition& delta : rc_m(s))
      expected_rc.push_back(product_partition(Partition::full(r.n), delta));
    std::sort(expected_rc.begin(), expected_rc.end());
    expected_rc.erase(std::unique(expected_rc.begin(), expected_rc.end()), expected_rc.end());
    rep.rc_matches = expected_rc == rc_m(p);
  }
  return rep;
}

LowerBoundReport rad_lower_bound_check(const FiniteSemiring& s, RadicalKind kind, int max_size,
                                       const SemimoduleEnumLimits& limits) {
  LowerBoundReport rep;
  Partition radical = radical_of(s, kind);

  std::vector<Partition> anns;
  rep.containment = true;
  for (const FiniteSemimodule& mod : enumerate_semimodules(s, max_size, limits)) {
    SemimoduleClassification cls = classify_semimodule(s, mod);
    bool wanted = (kind == RadicalKind::m) ? cls.minimal : cls.simple;
    if (!wanted) continue;
    ++rep.modules_seen;
    Partition ann = annihilator(s, mod).congruence;
    if (!radical.refines(ann)) rep.containment = false;
    anns.push_back(std::move(ann));
  }

  // every minimal (simple) quotient S/mu has at most |S| elements, so the
  // enumerated family only attains the definitional meet once max_size >= |S|
  rep.meet_checked = max_size >= s.n;
  if (rep.meet_checked) rep.meet_equality = meet_all(s.n, anns) == radical;
  return rep;
}

}  // namespace semiring_lab
