#include "twring/unit_theory.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <set>

#include "twring/extension.hpp"

namespace twring {

namespace {

using i128 = __int128;

// Bareiss on int128; callers keep entries small (dim <= 8, |entry| <= ~50).
i128 small_det(const IntMatrix& m) {
  int n = m.n;
  std::vector<i128> a(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> i128& { return a[static_cast<size_t>(i) * n + j]; };
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

bool quick_unit(const TwElement& x) {
  IntMatrix M = regular_rep(x);
  if (M.n <= 8 && x.max_abs() <= 64) {
    i128 d = small_det(M);
    return d == 1 || d == -1;
  }
  return det_unit_sign(M) != 0;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// odometer over [-b, b]^dim, visiting every vector once
template <class F>
void for_each_box(int dim, int b, F&& f) {
  std::vector<std::int64_t> v(dim, -b);
  while (true) {
    f(v);
    int i = dim - 1;
    while (i >= 0 && v[i] == b) v[i--] = -b;
    if (i < 0) break;
    ++v[i];
  }
}

}  // namespace

FinitenessVerdict decide_finiteness(const TwRing& t) {
  FinitenessVerdict v;
  v.field_conductor = field_conductor(t.conductor());
  GAlpha ga = build_G_alpha(t.cocycle());
  const auto& H = *ga.group;
  v.histogram = H.order_histogram();
  v.galpha_order = H.order();
  v.galpha_abelian = H.is_abelian();
  bool trivial = t.cocycle().is_trivial_table();
  int e = H.exponent();
  std::string hist;
  for (auto [o, c] : v.histogram) hist += (hist.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(c);
  v.witness = "|G_alpha|=" + std::to_string(H.order()) + " exp=" + std::to_string(e) + " orders{" + hist +
              "} F=Q(zeta_" + std::to_string(v.field_conductor) + ")";
  if (v.galpha_abelian) {
    // components Q(zeta_M, zeta_d), d | exp; finite units iff all have degree <= 2
    v.finite = field_degree(std::lcm(t.conductor(), e)) <= 2;
    if (v.finite) {
      if (trivial) v.case_name = "trivial-cocycle-higman";
      else if (4 % e == 0) v.case_name = "abelian-exp4";
      else if (e == 3) v.case_name = "abelian-exp3";
      else v.case_name = "abelian-exp6";
    }
  } else {
    v.finite = is_power_of_two(H.order()) && H.is_hamiltonian() && v.field_conductor == 1;
    if (v.finite) v.case_name = trivial ? "trivial-cocycle-higman" : "hamiltonian-2group";
  }
  if (!v.finite) v.case_name = "infinite";
  return v;
}

std::vector<TwElement> enumerate_units(const RingPtr& t, int bound) {
  std::vector<TwElement> out;
  for_each_box(t->dim(), bound, [&](const std::vector<std::int64_t>& c) {
    TwElement x = TwElement::from_coords(t, c);
    if (quick_unit(x)) out.push_back(std::move(x));
  });
  return out;
}

std::optional<TwElement> find_infinite_unit(const RingPtr& t, int bound) {
  for (int b = 1; b <= bound; ++b) {
    std::optional<TwElement> hit;
    for_each_box(t->dim(), b, [&](const std::vector<std::int64_t>& c) {
      if (hit) return;
      std::int64_t mx = 0;
      for (auto v : c) mx = std::max<std::int64_t>(mx, v < 0 ? -v : v);
      if (mx != b) return;  // shell only
      TwElement x = TwElement::from_coords(t, c);
      if (quick_unit(x) && !torsion_order(x)) hit = std::move(x);
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

std::vector<TwElement> berman_higman_scan(const RingPtr& t, int bound) {
  if (!t->over_z()) throw Error("berman_higman_scan: ring must be over Z");
  std::vector<TwElement> bad;
  for_each_box(t->dim(), bound, [&](const std::vector<std::int64_t>& c) {
    if (c[0] == 0 || c[0] == 1 || c[0] == -1) {
      if (c[0] == 0) return;
      // +-1 identity coefficient: only the trivial +-1 itself is allowed
      bool rest_zero = std::all_of(c.begin() + 1, c.end(), [](std::int64_t v) { return v == 0; });
      if (rest_zero) return;
    }
    TwElement x = TwElement::from_coords(t, c);
    if (quick_unit(x) && torsion_order(x)) bad.push_back(std::move(x));
  });
  return bad;
}

bool bicyclic_admissible(const TwRing& t, int g, int h) {
  if (!t.over_z()) return false;
  if (self_twist(t.cocycle(), g) != 0) return false;
  auto cc = conj_character(t, g);
  return std::binary_search(cc.c_minus.begin(), cc.c_minus.end(), h);
}

std::vector<std::pair<int, int>> admissible_pairs(const TwRing& t) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < t.order(); ++g)
    for (int h = 0; h < t.order(); ++h)
      if (bicyclic_admissible(t, g, h)) out.push_back({g, h});
  return out;
}

TwElement bicyclic_increment(const BicyclicSpec& s) {
  const RingPtr& R = s.ring;
  if (!R->over_z()) throw Error("bicyclic: ring must be over Z");
  if (self_twist(R->cocycle(), s.g) != 0) throw Error("bicyclic: u_g^{o(g)} != 1 (g outside G_0)");
  int o = R->group()->element_order(s.g);
  auto cc = conj_character(*R, s.g);
  for (int h : s.b.support())
    if (!std::binary_search(cc.c_minus.begin(), cc.c_minus.end(), h))
      throw Error("bicyclic: supp(b) not inside C_g^- at " + R->group()->label(h));
  if (!s.b.is_zero() && o % 2) throw Error("bicyclic: o(g) odd with b != 0");
  TwElement ut = cyclic_sum(R, s.g);
  TwElement lhs = TwElement::one(R).scaled(o) - ut;
  TwElement num = lhs * (s.a.scaled(o) + s.b) * ut;
  if (!divisible_by(num, o)) throw Error("bicyclic: increment not integral");
  TwElement inc = exact_div(num, o);
  if (!(inc * inc).is_zero()) throw Error("bicyclic: increment is not square-zero");
  return inc;
}

TwElement twisted_bicyclic(const BicyclicSpec& s) {
  TwElement inc = bicyclic_increment(s);
  TwElement u = TwElement::one(s.ring) + inc;
  TwElement w = TwElement::one(s.ring) - inc;
  if (!(u * w).is_one() || !(w * u).is_one()) throw Error("bicyclic: 1 - increment is not the inverse");
  return u;
}

bool rewriting_identity_holds(const RingPtr& t, int g, int h) {
  int o = t->group()->element_order(g);
  TwElement ut = cyclic_sum(t, g), uh = TwElement::basis(t, h);
  TwElement lhs = (TwElement::one(t).scaled(o) - ut) * uh * ut;
  return lhs == (uh * ut).scaled(o);
}

GbicPair generalized_bicyclic(const RationalIdempotent& f, const TwElement& x) {
  if (f.den <= 0) throw Error("gbic: denominator must be positive");
  const RingPtr& R = f.num.ring();
  if (!(f.num * f.num == f.num.scaled(f.den))) throw Error("gbic: f is not idempotent");
  std::int64_t c = f.den;
  for (const auto& v : f.num.coords()) c = std::gcd(c, v < 0 ? -v : v);
  std::int64_t nf = f.den / c;  // least n with n f integral
  TwElement F = exact_div(f.num, c);  // n_f f
  TwElement one_minus = TwElement::one(R).scaled(nf) - F;  // n_f (1 - f)
  GbicPair p{TwElement::one(R) + one_minus * x * F, TwElement::one(R) + F * x * one_minus, nf};
  for (const auto* u : {&p.left, &p.right}) {
    TwElement inc = *u - TwElement::one(R);
    if (!(inc * inc).is_zero()) throw Error("gbic: increment is not square-zero");
  }
  return p;
}

TwElement GaloisTwist::operator()(const TwElement& x) const {
  if (!x.ring()->same_as(*source)) throw Error("galois twist: element not in the source ring");
  TwElement r(target);
  for (int g = 0; g < source->order(); ++g)
    if (!x[g].is_zero()) r[g] = galois_apply(x[g], j);
  return r;
}

GaloisTwist galois_twist_iso(const RingPtr& t, int j) {
  const Cocycle& a = t->cocycle();
  if (std::gcd(j, cocycle_order(a)) != 1) throw Error("galois twist: gcd(j, o([alpha])) != 1");
  if (std::gcd(j, a.m) != 1) throw Error("galois twist: gcd(j, value modulus) != 1");
  if (std::gcd(j, t->root_order()) != 1) throw Error("galois twist: j does not define a field automorphism");
  GaloisTwist s{t, make_ring(t->group(), cocycle_power(a, j), t->conductor()), j};
  if (!galois_twist_multiplicative(s)) throw Error("galois twist: map is not multiplicative");
  return s;
}

bool galois_twist_multiplicative(const GaloisTwist& s) {
  int n = s.source->order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      TwElement a = TwElement::basis(s.source, g), b = TwElement::basis(s.source, h);
      if (s(a * b) != s(a) * s(b)) return false;
    }
  return true;
}

namespace {

using Bits = std::bitset<FiniteGroup::kMaxOrder>;

Bits mod2(const TwElement& y) {
  Bits b;
  for (int g = 0; g < y.ring()->order(); ++g)
    if (y[g][0] & 1) b.set(g);
  return b;
}

Bits f2_mul(const FiniteGroup& G, const Bits& a, const Bits& b) {
  Bits r;
  for (int x = 0; x < G.order(); ++x)
    if (a[x])
      for (int y = 0; y < G.order(); ++y)
        if (b[y]) r.flip(G.mul(x, y));
  return r;
}

void check_parity_pre(const PsiMap& p) {
  if (!p.source->over_z() || !p.target->over_z()) throw Error("parity_obstruction: rings must be over Z");
  if (!decide_finiteness(*make_group_ring(p.ext.quotient())).finite)
    throw Error("parity_obstruction: U(ZG) is infinite");
}

}  // namespace

ParityCertificate parity_obstruction(const PsiMap& p, const TwElement& candidate) {
  check_parity_pre(p);
  if (!candidate.ring()->same_as(*p.target)) throw Error("parity_obstruction: candidate not in the target ring");
  if (!is_unit(candidate)) throw Error("parity_obstruction: candidate is not a unit");
  ParityCertificate c;
  Bits b = mod2(candidate);
  for (int g = 0; g < p.target->order(); ++g)
    if (b[g]) c.reduction.push_back(g);
  c.identity_coefficient_odd = b[0];
  c.nontrivial_mod2 = b.count() != 1;
  c.certified = c.nontrivial_mod2;
  c.reason = c.certified ? "mod-2 image is not a group element, while U(Z Gamma) maps into +-G"
                         : "mod-2 image is a group element; inconclusive";
  return c;
}

long long parity_subgroup_order(const PsiMap& p, const std::vector<TwElement>& candidates) {
  check_parity_pre(p);
  const auto& G = *p.target->group();
  std::vector<Bits> gens;
  for (const auto& y : candidates) gens.push_back(mod2(y));
  for (int g = 0; g < G.order(); ++g) {
    Bits e;
    e.set(g);
    gens.push_back(e);
  }
  auto key = [](const Bits& b) { return b.to_string(); };
  std::set<std::string> seen;
  Bits one;
  one.set(0);
  std::vector<Bits> todo{one};
  seen.insert(key(one));
  while (!todo.empty()) {
    Bits x = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      Bits y = f2_mul(G, x, s);
      if (seen.insert(key(y)).second) {
        if (seen.size() > (1u << 20)) throw CapExceeded("parity-closure", "parity subgroup closure above 2^20");
        todo.push_back(y);
      }
    }
  }
  return static_cast<long long>(seen.size()) / G.order();
}

}  // namespace twring
