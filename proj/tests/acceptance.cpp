// Acceptance run: one PASS/FAIL line per criterion, each under a wall-clock limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "twring/cocycle.hpp"
#include "twring/extension.hpp"
#include "twring/gl2_case.hpp"
#include "twring/tower.hpp"
#include "twring/unit_theory.hpp"

using namespace twring;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string hist(const std::map<int, int>& h) {
  std::string s = "{";
  for (auto [k, v] : h) s += (s.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

// ids 0..3 = 1, x, y, xy; values are exponents of -1
Cocycle ex_table(const std::vector<std::vector<int>>& t) {
  return Cocycle(elementary_abelian_2(2, {"x", "y"}), 2, t);
}

Outcome c01_example_tables() {
  Outcome o;
  // as printed
  Cocycle alpha = ex_table({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  Cocycle alpha_p = ex_table({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  auto ra = validate_cocycle(alpha), rp = validate_cocycle(alpha_p);
  if (!ra.ok()) {
    auto v = *ra.violation;
    o.fail("alpha as printed is not a cocycle, first failure at (" + alpha.group->label(v[0]) + "," +
           alpha.group->label(v[1]) + "," + alpha.group->label(v[2]) + ")");
  }
  if (!rp.ok()) o.fail("alpha' is not a cocycle");
  // the nearest cocycle: alpha(xy,x) and alpha(xy,y) exchanged
  Cocycle fixed = ex_table({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}});
  if (!validate_cocycle(fixed).ok()) o.fail("corrected alpha invalid");
  auto h1 = build_G_alpha(fixed).group->order_histogram();
  auto h2 = build_G_alpha(alpha_p).group->order_histogram();
  if (h1 != std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}) o.fail("G_alpha histogram " + hist(h1));
  if (h2 != std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}) o.fail("G_alpha' histogram " + hist(h2));
  auto w4 = are_cohomologous(fixed, alpha_p, 4);
  if (!w4) o.fail("no witness over modulus 4");
  Cochain f{4, {0, 1, 1, 2}};  // f(x) = f(y) = i, f(xy) = -1
  Cocycle a4 = with_modulus(fixed, 4), p4 = with_modulus(alpha_p, 4);
  if (!(coboundary_twist(a4, f) == p4 || coboundary_twist(p4, f) == a4)) o.fail("published witness does not relate the tables");
  if (are_cohomologous(fixed, alpha_p, 2)) o.fail("witness over modulus 2 should not exist");
  o.note("histograms " + hist(h1) + " / " + hist(h2));
  return o;
}

Outcome c02_phi_bijective() {
  Outcome o;
  RingPtr R = c2c2_ring();
  int bad = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      TwElement x = TwElement::basis(R, a), y = TwElement::basis(R, b);
      if (phi_model(x * y) != phi_model(x) * phi_model(y)) ++bad;
    }
  if (bad) o.fail(std::to_string(bad) + " basis pairs not multiplicative");
  // injective with image in D~ on a coefficient box
  std::set<std::array<std::int64_t, 4>> seen;
  for (int c = 0; c < 625; ++c) {
    std::vector<std::int64_t> v{c % 5 - 2, c / 5 % 5 - 2, c / 25 % 5 - 2, c / 125 - 2};
    IntMat2 m = phi_model(TwElement::from_ints(R, v));
    if (!m.in_dtilde()) o.fail("image outside D~");
    seen.insert({m.a, m.b, m.c, m.d});
  }
  if (seen.size() != 625) o.fail("phi not injective on the box");
  // surjective onto D~ on a matrix box
  int hits = 0;
  for (int c = 0; c < 2401; ++c) {
    IntMat2 m{c % 7 - 3, c / 7 % 7 - 3, c / 49 % 7 - 3, c / 343 - 3};
    auto x = phi_inverse(m);
    if (m.in_dtilde() != x.has_value()) o.fail("phi_inverse disagrees with D~ membership");
    if (x && phi_model(*x) != m) o.fail("phi(phi^-1(m)) != m");
    hits += x.has_value();
  }
  o.note("16 pairs, " + std::to_string(hits) + " D~ matrices inverted");
  return o;
}

Outcome c03_sanov_index() {
  Outcome o;
  TwElement v = unit_v(), w = unit_w();
  RingPtr R = v.ring();
  if (phi_model(v) != IntMat2{1, 0, 2, 1}) o.fail("phi(v) = " + phi_model(v).str());
  if (phi_model(w) != IntMat2{1, 2, 0, 1}) o.fail("phi(w) = " + phi_model(w).str());
  TwElement ug = TwElement::basis(R, 1), uh = TwElement::basis(R, 2), ugh = TwElement::basis(R, 3);
  auto inv = [](const TwElement& x) { return *is_unit(x); };
  if (uh * v * inv(uh) != w) o.fail("u_h v u_h^-1 != w");
  if (ug * v * inv(ug) != inv(v)) o.fail("u_g v u_g^-1 != v^-1");
  if (ugh * v * inv(ugh) != inv(w)) o.fail("u_gh v u_gh^-1 != w^-1");
  auto sc = sanov_scan(12);
  if (sc.round_trip_failures || sc.identity_collisions)
    o.fail(std::to_string(sc.round_trip_failures) + " round-trip failures, " + std::to_string(sc.identity_collisions) +
           " collisions");
  auto audit = unit_index_audit({v, w});
  if (audit.index != 8) o.fail("[U:<v,w>] = " + std::to_string(audit.index));
  o.note(std::to_string(sc.words) + " reduced words; index " + std::to_string(audit.index));
  return o;
}

Outcome c04_finiteness() {
  Outcome o;
  Cocycle q = q8_twist();
  RingPtr Q = make_ring(q.group, q, 1);
  auto vq = decide_finiteness(*Q);
  if (!vq.finite) o.fail("Q8 twist reported infinite");
  auto us = enumerate_units(Q, 2);
  if (us.size() != 8) o.fail(std::to_string(us.size()) + " units in the box");
  auto vr = decide_finiteness(*c2c2_ring());
  if (vr.finite) o.fail("relations twist reported finite");
  TwElement v = unit_v();
  if (!is_unit(v) || torsion_order(v)) o.fail("v is not a unit of infinite order");
  o.note(vq.case_name + ", " + std::to_string(us.size()) + " units; relations: infinite, witness v");
  return o;
}

Outcome c05_berman_higman() {
  Outcome o;
  auto ex = berman_higman_scan(c2c2_ring(), 1);
  if (!ex.empty()) o.fail(std::to_string(ex.size()) + " exceptions, e.g. " + ex[0].str());
  o.note("3^4 elements scanned");
  return o;
}

Outcome c06_psi_images() {
  Outcome o;
  D8Family f = d8_family(0);
  const PsiMap& P = f.psi;
  TwElement p1 = apply_psi(P, f.b1), p2 = apply_psi(P, f.b2), p3 = apply_psi(P, f.b3);
  TwElement vinv = *is_unit(f.v), winv = *is_unit(f.w);
  if (p1 != f.v * f.v) o.fail("psi(b1) != v^2");
  if (p2 != f.w * f.w) o.fail("psi(b2) != w^2");
  if (p3 != f.w * vinv) {
    std::string alt = p3 == -(f.v * winv) ? " (= -v w^-1)" : "";
    o.fail("psi(b3) = " + p3.str() + alt + " but w v^-1 = " + (f.w * vinv).str());
  }
  int pairs = P.source->order() * P.source->order();
  if (auto bad = psi_multiplicativity_failure(P)) o.fail("multiplicativity fails");
  o.note(std::to_string(pairs) + " basis pairs multiplicative");
  return o;
}

Outcome c07_kernel_torsion() {
  Outcome o;
  for (int n = 0; n <= 2; ++n) {
    D8Family f = d8_family(n);
    RingPtr S = f.psi.source;
    std::vector<TwElement> want{TwElement::one(S), -TwElement::basis(S, 2)};  // a^2 has id 2
    auto same = [&](std::vector<TwElement> got) {
      if (got.size() != want.size()) return false;
      for (const auto& w : want)
        if (std::find(got.begin(), got.end(), w) == got.end()) return false;
      return true;
    };
    if (!same(torsion_kernel_units(f.psi))) o.fail("n=" + std::to_string(n) + ": torsion kernel units differ");
    auto scan = kernel_torsion_scan(f.psi, 1, 4);
    if (!same(scan)) o.fail("n=" + std::to_string(n) + ": scan found " + std::to_string(scan.size()));
  }
  o.note("n = 0,1,2: {1, -u_a^2}");
  return o;
}

Outcome c08_cokernel() {
  Outcome o;
  Report r0 = d8_case_study(0, false);
  auto it = std::find_if(r0.items.begin(), r0.items.end(), [](const ReportItem& i) { return i.name == "cokernel.size"; });
  if (it == r0.items.end() || it->status != Status::verified) o.fail("n=0 cokernel not 2");
  else o.note("n=0: " + it->oracle_value);
  for (int n = 1; n <= 2; ++n) {
    D8Family f = d8_family(n);
    std::vector<TwElement> cert;
    for (const auto& c : f.cokernel_candidates)
      if (parity_obstruction(f.psi, c).certified) cert.push_back(c);
    long long ord = parity_subgroup_order(f.psi, cert);
    long long want = 2LL << n;
    long long v_part = parity_subgroup_order(f.psi, {f.v});
    if (ord < want) o.fail("n=" + std::to_string(n) + ": only " + std::to_string(ord));
    if (v_part * (want / 2) != ord) o.fail("product identity");
    o.note("n=" + std::to_string(n) + ": >= " + std::to_string(ord));
  }
  return o;
}

Outcome c09_congruence() {
  Outcome o;
  if (gl2_mod_order(2) != 6) o.fail("|GL2(Z/2)|");
  if (gl2_mod_order(4) != 96) o.fail("|GL2(Z/4)|");
  auto row = congruence_index(1);
  if (row.gamma_step != 16) o.fail("[Gamma(2):Gamma(4)] = " + std::to_string(row.gamma_step));
  Report r = congruence_report(3);
  bool flagged = false;
  for (const auto& i : r.items)
    if (i.name.rfind("gamma_index.", 0) == 0 && i.discrepancy) flagged = true;
  if (!flagged) o.fail("display discrepancy not flagged");
  o.note("6, 96, 16; 3*2^(3i) flagged");
  return o;
}

Outcome c10_tower() {
  Outcome o;
  TowerContext c = make_tower(c2c2_ring(), 2);
  std::mt19937_64 rng(0);
  int checked = 0, u2 = 0;
  for (int s = 0; s < 200; ++s) {
    int level = 1 + s % 2;
    TwElement u = random_tower_unit(c, level, rng);
    try {
      auto sp = split_unit(c, level, u);
      if (sp.k * sp.s != u || !tower_psi(c, level, sp.k).is_one()) o.fail("split_unit");
      TwElement y = kernel_embed(c, level, sp.k);
      if (!u_group_membership(c, 1, level - 1, y)) o.fail("kernel_embed left U_1");
      TwElement x = u * u;  // reduction mod 2 is commutative of exponent 2
      if (!u_group_membership(c, 1, level, x)) {
        o.fail("square not in U_1");
        continue;
      }
      auto us = u_split(c, 1, level, x);
      if (us.lift * tower_embed(c, us.b, level) != x) o.fail("u_split");
      for (const auto& part : iterated_split(c, 1, level, x))
        if (part.k >= 2 && !part.x.is_one()) {
          ++u2;
          if (torsion_order(part.x)) o.fail("torsion in U_2: " + part.x.str());
        }
      ++checked;
    } catch (const Error& e) {
      o.fail(e.what());
    }
  }
  o.note(std::to_string(checked) + "/200 factorizations, " + std::to_string(u2) + " nontrivial U_2 parts");
  return o;
}

Outcome c11_identities() {
  Outcome o;
  Cocycle q = q8_twist();
  std::vector<RingPtr> rings{c2c2_ring(), make_ring(q.group, q, 1), make_ring(alpha_relations(1).group, alpha_relations(1), 1),
                             make_group_ring(dihedral8())};
  int pairs = 0, units = 0;
  for (const auto& R : rings) {
    for (auto [g, h] : admissible_pairs(*R)) {
      ++pairs;
      if (!rewriting_identity_holds(R, g, h)) o.fail("rewriting fails at (" + std::to_string(g) + "," + std::to_string(h) + ")");
      for (int sgn : {1, -1}) {
        BicyclicSpec s{R, g, TwElement::zero(R), TwElement::basis(R, h, sgn)};
        TwElement d = bicyclic_increment(s);
        if (!(d * d).is_zero() || twisted_bicyclic(s) != TwElement::one(R) + d) o.fail("increment not square-zero");
        ++units;
      }
    }
    for (int g : g_zero(*R))
      for (int t = 0; t < R->order(); ++t) {
        BicyclicSpec s{R, g, TwElement::basis(R, t), TwElement::zero(R)};
        TwElement d = bicyclic_increment(s);
        if (!(d * d).is_zero()) o.fail("classical increment not square-zero");
        for (int k = 0; k < R->order(); ++k)
          if (!d[k].is_integer()) o.fail("non-integral coefficient");
        ++units;
      }
  }
  o.note(std::to_string(pairs) + " admissible pairs, " + std::to_string(units) + " units");
  return o;
}

Outcome c12_perlis_walker() {
  Outcome o;
  struct Case {
    std::string name;
    GroupPtr a;
    std::map<int, int> ad;
  };
  std::vector<Case> cases{{"C2", cyclic(2), {{1, 1}, {2, 1}}},
                          {"C2^2", elementary_abelian_2(2), {{1, 1}, {2, 3}}},
                          {"C4", cyclic(4), {{1, 1}, {2, 1}, {4, 1}}},
                          {"C6", cyclic(6), {{1, 1}, {2, 1}, {3, 1}, {6, 1}}}};
  for (const auto& c : cases) {
    auto pw = perlis_walker(*c.a, 1);
    if (pw.a != c.ad) o.fail(c.name + ": a_d " + hist(pw.a));
    if (pw.dim_sum != c.a->order()) o.fail(c.name + ": dimension sum");
    IdSet all(c.a->order());
    for (int i = 0; i < c.a->order(); ++i) all[i] = i;
    auto t = component_table(build_extension(c.a, all), std::nullopt, 1);
    if (!t.identity_holds()) o.fail(c.name + ": component dimensions");
    std::map<int, int> fields;  // conductor -> count, Q(zeta_2) = Q
    for (const auto& row : t.rows) ++fields[field_conductor(row.field_conductor)];
    std::map<int, int> want;
    for (auto [d, n] : c.ad) want[field_conductor(d)] += n;
    if (fields != want) o.fail(c.name + ": component fields " + hist(fields));
  }
  o.note("C4 over Q: Q + Q + Q(i)");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {"01 cocycle tables and cohomology", 1, c01_example_tables},
      {"02 phi multiplicative and bijective", 1, c02_phi_bijective},
      {"03 Sanov round trip and [U:<v,w>] = 8", 30, c03_sanov_index},
      {"04 finiteness decisions", 10, c04_finiteness},
      {"05 Berman-Higman scan", 60, c05_berman_higman},
      {"06 psi images of bicyclic units", 1, c06_psi_images},
      {"07 kernel torsion D8 x C2^n", 60, c07_kernel_torsion},
      {"08 cokernel certificates", 120, c08_cokernel},
      {"09 congruence oracle", 5, c09_congruence},
      {"10 tower factorizations", 120, c10_tower},
      {"11 bicyclic identities", 5, c11_identities},
      {"12 Perlis-Walker components", 1, c12_perlis_walker},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.fail("took " + std::to_string(s) + " s");
    failed += !o.ok;
    std::printf("%s  %-40s %7.3fs (limit %gs)  %s\n", o.ok ? "PASS" : "FAIL", c.name, s, c.limit_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
