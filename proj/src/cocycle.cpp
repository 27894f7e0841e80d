#include "twring/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace twring {

namespace {
int md(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }
}  // namespace

Cocycle::Cocycle(GroupPtr g, int modulus, std::vector<int> t) : group(std::move(g)), m(modulus), table(std::move(t)) {
  if (m < 1) throw Error("cocycle: modulus must be positive");
  int n = group->order();
  if (static_cast<int>(table.size()) != n * n) throw Error("cocycle: table shape does not match group order");
  for (auto& v : table) v = md(v, m);
}

Cocycle::Cocycle(GroupPtr g, int modulus, const std::vector<std::vector<int>>& t) : group(std::move(g)), m(modulus) {
  if (m < 1) throw Error("cocycle: modulus must be positive");
  int n = group->order();
  if (static_cast<int>(t.size()) != n) throw Error("cocycle: table shape does not match group order");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw Error("cocycle: table shape does not match group order");
    for (int v : row) table.push_back(md(v, m));
  }
}

bool Cocycle::is_trivial_table() const {
  return std::all_of(table.begin(), table.end(), [](int v) { return v == 0; });
}

bool Cocycle::operator==(const Cocycle& o) const {
  if (group->order() != o.group->order()) return false;
  int L = std::lcm(m, o.m);
  for (size_t i = 0; i < table.size(); ++i)
    if (md(static_cast<long long>(table[i]) * (L / m), L) != md(static_cast<long long>(o.table[i]) * (L / o.m), L))
      return false;
  return true;
}

Cocycle trivial_cocycle(GroupPtr g, int m) {
  int n = g->order();
  return Cocycle(std::move(g), m, std::vector<int>(static_cast<size_t>(n) * n, 0));
}

Cocycle with_modulus(const Cocycle& c, int L) {
  if (L % c.m) throw Error("cocycle: modulus " + std::to_string(L) + " is not a multiple of " + std::to_string(c.m));
  std::vector<int> t(c.table);
  for (auto& v : t) v *= L / c.m;
  return Cocycle(c.group, L, std::move(t));
}

Cocycle cocycle_product(const Cocycle& a, const Cocycle& b) {
  if (a.group->order() != b.group->order()) throw Error("cocycle product: group mismatch");
  int L = std::lcm(a.m, b.m);
  Cocycle x = with_modulus(a, L), y = with_modulus(b, L);
  for (size_t i = 0; i < x.table.size(); ++i) x.table[i] = md(x.table[i] + y.table[i], L);
  return x;
}

Cocycle cocycle_power(const Cocycle& c, int i) {
  Cocycle r = c;
  for (auto& v : r.table) v = md(static_cast<long long>(v) * i, c.m);
  return r;
}

int cocycle_order(const Cocycle& c) {
  int g = c.m;
  for (int v : c.table) g = std::gcd(g, v);
  return c.m / g;
}

CocycleReport validate_cocycle(const Cocycle& c) {
  CocycleReport r;
  const auto& G = *c.group;
  int n = G.order();
  for (int g = 0; g < n && !r.unnormalized_at; ++g)
    if (c.at(0, g) || c.at(g, 0)) {
      r.normalized = false;
      r.unnormalized_at = g;
    }
  for (int g = 0; g < n && r.cocycle_ok; ++g)
    for (int h = 0; h < n && r.cocycle_ok; ++h)
      for (int k = 0; k < n; ++k) {
        int lhs = c.at(g, h) + c.at(G.mul(g, h), k);
        int rhs = c.at(h, k) + c.at(g, G.mul(h, k));
        if (md(lhs - rhs, c.m)) {
          r.cocycle_ok = false;
          r.violation = std::array<int, 3>{g, h, k};
          break;
        }
      }
  return r;
}

void require_cocycle(const Cocycle& c, const std::string& what) {
  auto r = validate_cocycle(c);
  if (r.violation) {
    const auto& v = *r.violation;
    const auto& G = *c.group;
    throw Error(what + ": cocycle condition fails at (" + G.label(v[0]) + "," + G.label(v[1]) + "," + G.label(v[2]) + ")");
  }
  if (!r.normalized) throw Error(what + ": cocycle is not normalized at " + c.group->label(*r.unnormalized_at));
}

Cocycle coboundary_twist(const Cocycle& c, const Cochain& f) {
  const auto& G = *c.group;
  int n = G.order();
  if (static_cast<int>(f.values.size()) != n) throw Error("coboundary: cochain size mismatch");
  if (md(f.values[0], f.m) != 0) throw Error("coboundary: f(1) must be 1");
  int L = std::lcm(c.m, f.m);
  Cocycle r = with_modulus(c, L);
  int s = L / f.m;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      r.table[g * n + h] = md(r.table[g * n + h] + s * (f.values[g] + f.values[h] - f.values[G.mul(g, h)]), L);
  return r;
}

Cochain pointwise_inverse(const Cochain& f) {
  Cochain r = f;
  for (auto& v : r.values) v = md(-v, f.m);
  return r;
}

std::optional<Cochain> are_cohomologous(const Cocycle& c1, const Cocycle& c2, int m, long long cap) {
  const auto& G = *c1.group;
  int n = G.order();
  if (c2.group->order() != n) throw Error("cohomologous: group mismatch");
  double space = std::pow(static_cast<double>(m), n - 1);
  if (space > static_cast<double>(cap))
    throw CapExceeded("coboundary-search", "coboundary search space " + std::to_string(m) + "^" +
                                               std::to_string(n - 1) + " exceeds cap " + std::to_string(cap));
  int L = std::lcm(std::lcm(c1.m, c2.m), m);
  Cocycle a = with_modulus(c1, L), b = with_modulus(c2, L);
  int s = L / m;
  // pairs checkable once every element <= idx is assigned
  std::vector<std::vector<std::pair<int, int>>> ready(n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) ready[std::max({g, h, G.mul(g, h)})].push_back({g, h});
  std::vector<int> f(n, 0);
  auto ok_at = [&](int idx) {
    for (auto [g, h] : ready[idx])
      if (md(a.at(g, h) + s * (f[g] + f[h] - f[G.mul(g, h)]) - b.at(g, h), L)) return false;
    return true;
  };
  if (!ok_at(0)) return std::nullopt;
  // iterative DFS in lexicographic order
  int idx = 1;
  if (n == 1) return Cochain{m, f};
  f[1] = -1;
  while (idx >= 1) {
    if (++f[idx] >= m) {
      f[idx] = -1;
      --idx;
      continue;
    }
    if (!ok_at(idx)) continue;
    if (idx == n - 1) return Cochain{m, f};
    ++idx;
    f[idx] = -1;
  }
  return std::nullopt;
}

Cocycle inflate(const Cocycle& c, const GroupHom& proj) {
  if (proj.target->order() != c.group->order()) throw Error("inflate: projection target mismatch");
  if (!proj.surjective()) throw Error("inflate: projection is not surjective");
  int n = proj.source->order();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = c.at(proj(x), proj(y));
  return Cocycle(proj.source, c.m, std::move(t));
}

Restriction restrict_to(const Cocycle& c, const IdSet& h) {
  Subgroup s = subgroup_as_group(*c.group, h);
  int k = s.group->order();
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = c.at(s.embed[a], s.embed[b]);
  return Restriction{Cocycle(s.group, c.m, std::move(t)), s.embed};
}

int self_twist(const Cocycle& c, int g) {
  // u_g^k = zeta^{e_k} u_{g^k};  e_{k+1} = e_k + alpha(g^k, g)
  const auto& G = *c.group;
  int e = 0, x = 0;
  for (int k = 0; k < G.element_order(g); ++k) {
    e += c.at(x, g);
    x = G.mul(x, g);
  }
  return md(e, c.m);
}

Cocycle normalize_odd_orders(const Cocycle& c) {
  const auto& G = *c.group;
  Cochain f{c.m, std::vector<int>(G.order(), 0)};
  for (int g = 1; g < G.order(); ++g) {
    int o = G.element_order(g);
    if (o % 2 == 0) continue;
    int j = self_twist(c, g);
    // want f^o = zeta^{-j}: solve o*t = -j mod m
    for (int t = 0; t < c.m; ++t)
      if (md(static_cast<long long>(o) * t + j, c.m) == 0) {
        f.values[g] = t;
        break;
      }
  }
  return coboundary_twist(c, f);
}

GAlpha build_G_alpha(const Cocycle& c) {
  const auto& G = *c.group;
  int n = G.order();
  int d = c.m;
  for (int v : c.table) d = std::gcd(d, v);
  int o = c.m / d;  // <im alpha> = <zeta_m^d>
  if (o * n > FiniteGroup::kMaxOrder) throw CapExceeded("group-order", "G_alpha: order above cap 256");
  int N = o * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> lab(N);
  for (int p = 0; p < N; ++p) {
    int i = p / n, g = p % n;
    for (int q = 0; q < N; ++q) {
      int j = q / n, h = q % n;
      int e = (i + j + c.at(g, h) / d) % o;
      t[p][q] = e * n + G.mul(g, h);
    }
    std::string z = i == 0 ? "" : i == 1 ? "z*" : "z^" + std::to_string(i) + "*";
    lab[p] = z + "u_" + G.label(g);
  }
  auto grp = std::make_shared<const FiniteGroup>(std::move(t), std::move(lab));
  std::vector<int> pr(N);
  for (int p = 0; p < N; ++p) pr[p] = p % n;
  return GAlpha{grp, o, d, make_hom(grp, c.group, pr)};
}

bool LinearCharacter::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [&](int v) { return md(v, m) == 0; });
}

int LinearCharacter::order() const {
  int g = m;
  for (int v : values) g = std::gcd(g, v);
  return m / g;
}

LinearCharacter trivial_character(GroupPtr a, int m) {
  int n = a->order();
  return LinearCharacter{std::move(a), m, std::vector<int>(n, 0)};
}

void require_character(const LinearCharacter& chi) {
  const auto& A = *chi.group;
  if (static_cast<int>(chi.values.size()) != A.order()) throw Error("character: size mismatch");
  if (md(chi.values[0], chi.m)) throw Error("character: chi(1) != 1");
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < A.order(); ++b)
      if (md(chi.values[a] + chi.values[b] - chi.values[A.mul(a, b)], chi.m))
        throw Error("character: not multiplicative at (" + A.label(a) + "," + A.label(b) + ")");
}

}  // namespace twring
