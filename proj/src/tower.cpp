#include "twring/tower.hpp"

#include "twring/unit_theory.hpp"

namespace twring {

namespace {

TwElement checked_inverse(const TwElement& x, const char* what) {
  auto inv = is_unit(x);
  if (!inv) throw Error(std::string(what) + ": element is not a unit");
  return *inv;
}

}  // namespace

int TowerContext::level_of(const TwElement& x) const {
  for (int i = 0; i <= n; ++i)
    if (x.ring()->same_as(*rings[i])) return i;
  throw Error("tower: element does not belong to any level");
}

int TowerContext::x_id(int i, int level) const {
  if (i < 1 || i > level) throw Error("tower: x_" + std::to_string(i) + " not present at level " + std::to_string(level));
  return base->order() << (i - 1);
}

TowerContext make_tower(const RingPtr& base, int n) {
  if (n < 0) throw Error("tower: negative level count");
  TowerContext c;
  c.base = base;
  c.n = n;
  const auto& G = base->group();
  for (int i = 0; i <= n; ++i) {
    if (i == 0) {
      c.groups.push_back(G);
      c.rings.push_back(base);
      continue;
    }
    std::vector<std::string> names;
    for (int t = 1; t <= i; ++t) names.push_back("x" + std::to_string(t));
    if (G->order() << i > FiniteGroup::kMaxOrder) throw CapExceeded("group-order", "tower: level order above cap 256");
    GroupPtr Gi = direct_product(*G, *elementary_abelian_2(i, names));
    std::vector<int> pr(Gi->order());
    for (int x = 0; x < Gi->order(); ++x) pr[x] = x % G->order();
    Cocycle a = inflate(base->cocycle(), make_hom(Gi, G, pr));
    c.groups.push_back(Gi);
    c.rings.push_back(make_ring(Gi, a, base->conductor()));
  }
  return c;
}

TwElement tower_psi(const TowerContext& c, int i, const TwElement& x) {
  if (c.level_of(x) != i) throw Error("tower psi: element not at level " + std::to_string(i));
  int bit = c.x_id(i, i);
  TwElement r(c.rings[i - 1]);
  for (int g = 0; g < c.rings[i]->order(); ++g)
    if (!x[g].is_zero()) r[g & ~bit] += x[g];
  return r;
}

TwElement tower_phi(const TowerContext& c, int i, const TwElement& x) {
  if (c.level_of(x) != i) throw Error("tower phi: element not at level " + std::to_string(i));
  int bit = c.x_id(i, i);
  TwElement r(c.rings[i - 1]);
  for (int g = 0; g < c.rings[i]->order(); ++g)
    if (!x[g].is_zero()) {
      if (g & bit) r[g & ~bit] -= x[g];
      else r[g] += x[g];
    }
  return r;
}

TwElement tower_embed(const TowerContext& c, const TwElement& x, int to) {
  int from = c.level_of(x);
  if (to < from) throw Error("tower embed: target level below source level");
  TwElement r(c.rings[to]);
  for (int g = 0; g < c.rings[from]->order(); ++g) r[g] = x[g];
  return r;
}

SplitUnit split_unit(const TowerContext& c, int i, const TwElement& u) {
  TwElement s = tower_embed(c, tower_psi(c, i, u), i);
  TwElement k = u * checked_inverse(s, "split_unit");
  if (!tower_psi(c, i, k).is_one()) throw Error("split_unit: kernel part does not map to 1");
  if (k * s != u) throw Error("split_unit: factorization does not reproduce u");
  return {k, s};
}

TwElement kernel_embed(const TowerContext& c, int i, const TwElement& k) {
  if (!tower_psi(c, i, k).is_one()) throw Error("kernel_embed: element is not in K_" + std::to_string(i));
  TwElement y = tower_phi(c, i, k);
  if (!u_group_membership(c, 1, i - 1, y)) throw Error("kernel_embed: image is not in U_1");
  return y;
}

bool u_group_membership(const TowerContext& c, int k, int j, const TwElement& x) {
  if (c.level_of(x) != j) return false;
  if (k < 0 || k > 62) throw Error("u_group_membership: twist level out of range");
  if (!divisible_by(x - TwElement::one(x.ring()), std::int64_t{1} << k)) return false;
  return is_unit(x).has_value();
}

USplit u_split(const TowerContext& c, int k, int j, const TwElement& x) {
  if (j < 1) throw Error("u_split: needs j >= 1");
  if (!u_group_membership(c, k, j, x)) throw Error("u_split: element is not in U_{k,j}");
  TwElement b = tower_psi(c, j, x);
  TwElement kk = x * checked_inverse(tower_embed(c, b, j), "u_split");
  TwElement a = tower_phi(c, j, kk);
  if (!u_group_membership(c, k + 1, j - 1, a)) throw Error("u_split: a-part is not in U_{k+1,j-1}");
  if (!u_group_membership(c, k, j - 1, b)) throw Error("u_split: b-part is not in U_{k,j-1}");
  const RingPtr& R = c.rings[j];
  TwElement half = tower_embed(c, exact_div(a - TwElement::one(a.ring()), 2), j);
  TwElement lift = TwElement::one(R) + (TwElement::one(R) - TwElement::basis(R, c.x_id(j, j))) * half;
  if (lift * tower_embed(c, b, j) != x) throw Error("u_split: reconstruction failed");
  return {a, b, lift};
}

std::vector<SplitPart> iterated_split(const TowerContext& c, int k, int j, const TwElement& x) {
  if (j == 0) {
    if (!u_group_membership(c, k, 0, x)) throw Error("iterated_split: part left U_k");
    return {{k, x}};
  }
  USplit s = u_split(c, k, j, x);
  auto out = iterated_split(c, k + 1, j - 1, s.a);
  auto rest = iterated_split(c, k, j - 1, s.b);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

TwElement random_tower_unit(const TowerContext& c, int level, std::mt19937_64& rng, int length) {
  const RingPtr& R = c.rings[level];
  auto pairs = admissible_pairs(*R);
  std::vector<int> g0 = g_zero(*R);
  TwElement u = TwElement::one(R);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int step = 0; step < length; ++step) {
    int kind = pick(3);
    TwElement f;
    if (kind == 0) {
      f = TwElement::basis(R, pick(R->order()), pick(2) ? 1 : -1);
    } else if (kind == 1 && !pairs.empty()) {
      auto [g, h] = pairs[pick(static_cast<int>(pairs.size()))];
      f = twisted_bicyclic({R, g, TwElement::zero(R), TwElement::basis(R, h, pick(2) ? 1 : -1)});
    } else {
      int g = g0[pick(static_cast<int>(g0.size()))];
      f = twisted_bicyclic({R, g, TwElement::basis(R, pick(R->order()), pick(2) ? 1 : -1), TwElement::zero(R)});
    }
    u = u * f;
  }
  return u;
}

}  // namespace twring
