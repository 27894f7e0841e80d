#include "twring/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "twring/unit_theory.hpp"

namespace twring {

namespace {

ExtensionData finish(GroupHom lambda, Section mu) {
  ExtensionData e;
  e.total = lambda.source;
  e.sub = lambda.kernel();
  e.normal = subgroup_as_group(*e.total, e.sub);
  e.to_normal.assign(e.total->order(), -1);
  for (size_t i = 0; i < e.sub.size(); ++i) e.to_normal[e.sub[i]] = static_cast<int>(i);
  e.proj = std::move(lambda);
  e.section = std::move(mu);
  const auto& T = *e.total;
  int q = e.quotient()->order(), k = static_cast<int>(e.sub.size());
  e.alpha.resize(static_cast<size_t>(q) * q);
  for (int g = 0; g < q; ++g)
    for (int h = 0; h < q; ++h) {
      int x = T.mul(T.mul(e.section(g), e.section(h)), T.inv(e.section(e.quotient()->mul(g, h))));
      if (e.to_normal[x] < 0) throw Error("extension: section cocycle leaves N");
      e.alpha[g * q + h] = e.to_normal[x];
    }
  e.action.resize(static_cast<size_t>(q) * k);
  for (int g = 0; g < q; ++g)
    for (int i = 0; i < k; ++i) {
      int s = e.section(g);
      e.action[g * k + i] = e.to_normal[T.mul(T.mul(s, e.sub[i]), T.inv(s))];
    }
  return e;
}

int md(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

std::pair<int, int> ExtensionData::decompose(int gamma) const {
  int g = proj(gamma);
  int n = total->mul(gamma, total->inv(section(g)));
  return {to_normal[n], g};
}

ExtensionData build_extension(GroupPtr gamma, const IdSet& n, const std::optional<std::vector<int>>& transversal) {
  Quotient q = quotient(gamma, n);
  if (!transversal) return finish(q.proj, least_section(q.proj));
  std::vector<int> mu(q.group->order(), -1);
  for (int x : *transversal) {
    if (x < 0 || x >= gamma->order()) throw Error("extension: transversal element out of range");
    int c = q.proj(x);
    if (mu[c] >= 0) throw Error("extension: two transversal elements in one coset");
    mu[c] = x;
  }
  if (std::count(mu.begin(), mu.end(), -1)) throw Error("extension: transversal misses a coset");
  return finish(q.proj, make_section(q.proj, mu));
}

ExtensionData build_extension_from_hom(const GroupHom& lambda, const std::optional<std::vector<int>>& section) {
  if (!lambda.surjective()) throw Error("extension: lambda is not surjective");
  if (!section) return finish(lambda, least_section(lambda));
  return finish(lambda, make_section(lambda, *section));
}

bool character_invariant(const ExtensionData& ext, const LinearCharacter& chi) {
  const auto& T = *ext.total;
  for (int x = 0; x < T.order(); ++x)
    for (size_t i = 0; i < ext.sub.size(); ++i) {
      int c = ext.to_normal[T.mul(T.mul(x, ext.sub[i]), T.inv(x))];
      if (md(chi.values[c] - chi.values[i], chi.m)) return false;
    }
  return true;
}

Cocycle transgress(const ExtensionData& ext, const LinearCharacter& chi) {
  if (chi.group->order() != ext.normal.group->order()) throw Error("transgress: character is not on N");
  require_character(chi);
  if (!character_invariant(ext, chi)) throw Error("transgress: character is not invariant under conjugation");
  int q = ext.quotient()->order();
  std::vector<int> t(static_cast<size_t>(q) * q);
  for (int g = 0; g < q; ++g)
    for (int h = 0; h < q; ++h) t[g * q + h] = chi.values[ext.alpha_at(g, h)];
  Cocycle c(ext.quotient(), chi.m, std::move(t));
  require_cocycle(c, "transgress");
  return c;
}

PsiMap make_psi(const ExtensionData& ext, const LinearCharacter& chi, const std::optional<Cocycle>& beta,
                int conductor) {
  Cocycle b = beta ? *beta : trivial_cocycle(ext.quotient());
  if (b.group->order() != ext.quotient()->order()) throw Error("psi: beta must live on G");
  Cocycle tgt = cocycle_product(b, transgress(ext, chi));
  int need = std::lcm(b.m, chi.m);
  if (!conductor) conductor = conductor_for_roots(need);
  if (roots_order(conductor) % need) throw Error("psi: conductor too small for the character and cocycle values");
  PsiMap p{ext, chi, b, make_ring(ext.total, inflate(b, ext.proj), conductor), make_ring(ext.quotient(), tgt, conductor)};
  return p;
}

TwElement apply_psi(const PsiMap& p, const TwElement& x) {
  if (!x.ring()->same_as(*p.source)) throw Error("psi: element is not in the source ring");
  TwElement r(p.target);
  int M = p.target->conductor();
  for (int gamma = 0; gamma < p.ext.total->order(); ++gamma) {
    if (x[gamma].is_zero()) continue;
    auto [n, g] = p.ext.decompose(gamma);
    int v = p.chi.values[n];
    r[g] += v ? x[gamma] * CycInt::root(M, p.chi.m, v) : x[gamma];
  }
  return r;
}

std::optional<std::pair<int, int>> psi_multiplicativity_failure(const PsiMap& p) {
  int n = p.ext.total->order();
  std::vector<TwElement> img;
  for (int a = 0; a < n; ++a) img.push_back(apply_psi(p, TwElement::basis(p.source, a)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      TwElement lhs = apply_psi(p, TwElement::basis(p.source, a) * TwElement::basis(p.source, b));
      if (lhs != img[a] * img[b]) return std::make_pair(a, b);
    }
  if (!apply_psi(p, TwElement::one(p.source)).is_one()) return std::make_pair(0, 0);
  return std::nullopt;
}

std::vector<TwElement> kernel_basis(const PsiMap& p) {
  std::vector<TwElement> out;
  const auto& T = *p.ext.total;
  int M = p.source->conductor();
  for (int g = 0; g < p.ext.quotient()->order(); ++g)
    for (size_t i = 1; i < p.ext.sub.size(); ++i) {
      int mg = p.ext.section(g);
      TwElement e = TwElement::basis(p.source, T.mul(p.ext.sub[i], mg));
      e[mg] -= CycInt::root(M, p.chi.m, p.chi.values[i]);
      if (!apply_psi(p, e).is_zero()) throw Error("kernel_basis: basis vector not in the kernel");
      out.push_back(std::move(e));
    }
  return out;
}

std::optional<std::vector<CycInt>> decompose_kernel(const PsiMap& p, const TwElement& x) {
  if (!apply_psi(p, x).is_zero()) return std::nullopt;
  const auto& T = *p.ext.total;
  std::vector<CycInt> c;
  TwElement rest = x;
  auto basis = kernel_basis(p);
  size_t k = 0;
  for (int g = 0; g < p.ext.quotient()->order(); ++g)
    for (size_t i = 1; i < p.ext.sub.size(); ++i, ++k) {
      c.push_back(x[T.mul(p.ext.sub[i], p.ext.section(g))]);
      rest -= basis[k].scaled(c.back());
    }
  if (!rest.is_zero()) throw Error("decompose_kernel: residual after subtracting the basis expansion");
  return c;
}

std::vector<TwElement> torsion_kernel_units(const PsiMap& p) {
  if (!p.ext.central()) throw Error("torsion_kernel_units: N is not central");
  std::vector<TwElement> out;
  int M = p.source->conductor();
  for (size_t i = 0; i < p.ext.sub.size(); ++i)
    out.push_back(TwElement::basis(p.source, p.ext.sub[i], CycInt::root(M, p.chi.m, -p.chi.values[i])));
  return out;
}

std::vector<TwElement> kernel_torsion_scan(const PsiMap& p, int bound, int max_support) {
  int n = p.ext.total->order();
  std::vector<TwElement> found;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<int> idx;
  std::vector<std::int64_t> val;
  std::vector<std::int64_t> nonzero;
  for (int v = -bound; v <= bound; ++v)
    if (v) nonzero.push_back(v);
  // quick image test without building TwElements: psi(x) = 1
  int q = p.ext.quotient()->order();
  bool over_z = p.target->over_z();
  auto check = [&]() {
    if (over_z) {
      std::vector<std::int64_t> img(q, 0);
      for (size_t t = 0; t < idx.size(); ++t) {
        auto [nn, g] = p.ext.decompose(idx[t]);
        int s = p.chi.values[nn] ? -1 : 1;  // chi values are +-1 over Z
        img[g] += s * val[t];
      }
      if (img[0] != 1) return;
      for (int g = 1; g < q; ++g)
        if (img[g]) return;
    }
    std::vector<std::int64_t> c(n, 0);
    for (size_t t = 0; t < idx.size(); ++t) c[idx[t]] = val[t];
    TwElement x = TwElement::from_ints(p.source, c);
    if (!apply_psi(p, x).is_one()) return;
    if (!det_unit_sign(regular_rep(x))) return;
    if (torsion_order(x) && seen.insert(x.coords()).second) found.push_back(x);
  };
  // enumerate supports in increasing lexicographic order
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) {
      // all sign/value patterns on cur
      size_t k = cur.size();
      std::vector<size_t> pick(k, 0);
      idx = cur;
      val.assign(k, 0);
      while (true) {
        for (size_t t = 0; t < k; ++t) val[t] = nonzero[pick[t]];
        check();
        size_t t = 0;
        while (t < k && ++pick[t] == nonzero.size()) pick[t++] = 0;
        if (t == k) break;
      }
    }
    if (static_cast<int>(cur.size()) == max_support) return;
    for (int s = start; s < n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

KernelVerdict kernel_finiteness_predicate(const PsiMap& p) {
  if (!p.ext.central()) throw Error("kernel_finiteness_predicate: N is not central");
  if (decide_finiteness(*p.source).finite) return {true, "U(R^beta[Gamma]) finite"};
  if (p.chi.is_trivial()) return {false, "chi = omega_N and U(R^beta[Gamma]) infinite"};
  const auto& N = *p.ext.normal.group;
  const auto& G = *p.ext.quotient();
  std::vector<std::string> fired;
  int nn = N.order();
  bool prime = nn > 1;
  for (int d = 2; d * d <= nn; ++d)
    if (nn % d == 0) prime = false;
  if (prime && decide_finiteness(*make_group_ring(p.ext.quotient(), p.source->conductor())).finite)
    fired.push_back("N cyclic of prime order and U(RG) finite");
  if (G.is_abelian()) {
    int l = std::lcm(G.exponent(), N.exponent());
    if (4 % l == 0 || 6 % l == 0)
      fired.push_back("G abelian and lcm(exp G, exp N) = " + std::to_string(l) + " divides 4 or 6");
  }
  if (fired.empty()) return {false, "no clause applies"};
  std::string c = fired[0];
  for (size_t i = 1; i < fired.size(); ++i) c += "; " + fired[i];
  return {true, c};
}

std::vector<LinearCharacter> lin_characters(GroupPtr a, int m) {
  const auto& A = *a;
  if (!A.is_abelian()) throw Error("lin_characters: group is not abelian");
  // greedy generating set
  std::vector<int> gens;
  IdSet span{0};
  for (int x = 1; x < A.order(); ++x)
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = A.generated(gens);
    }
  std::vector<LinearCharacter> out;
  std::vector<int> pick(gens.size(), 0);
  while (true) {
    // extend by BFS; reject inconsistent assignments
    std::vector<int> v(A.order(), -1);
    v[0] = 0;
    std::vector<int> todo{0};
    bool ok = true;
    while (!todo.empty() && ok) {
      int x = todo.back();
      todo.pop_back();
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = A.mul(x, gens[i]);
        int w = md(v[x] + pick[i], m);
        if (v[y] < 0) {
          v[y] = w;
          todo.push_back(y);
        } else if (v[y] != w) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(LinearCharacter{a, m, v});
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == m) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  for (const auto& c : out) require_character(c);
  return out;
}

std::vector<std::vector<int>> orbit_space(const std::vector<LinearCharacter>& chars, const ExtensionData& ext) {
  std::vector<int> orbit_of(chars.size(), -1);
  std::vector<std::vector<int>> orbits;
  int k = ext.normal.group->order();
  auto find = [&](const std::vector<int>& vals, int m) -> int {
    for (size_t i = 0; i < chars.size(); ++i) {
      bool eq = chars[i].m == m;
      for (int n = 0; n < k && eq; ++n) eq = md(chars[i].values[n] - vals[n], m) == 0;
      if (eq) return static_cast<int>(i);
    }
    return -1;
  };
  for (size_t i = 0; i < chars.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    int o = static_cast<int>(orbits.size());
    orbits.push_back({});
    for (int g = 0; g < ext.quotient()->order(); ++g) {
      std::vector<int> vals(k);
      for (int n = 0; n < k; ++n) vals[n] = chars[i].values[ext.sigma(g, n)];
      int j = find(vals, chars[i].m);
      if (j < 0) throw Error("orbit_space: character set is not closed under the action");
      if (orbit_of[j] < 0) {
        orbit_of[j] = o;
        orbits[o].push_back(j);
      }
    }
    std::sort(orbits[o].begin(), orbits[o].end());
  }
  return orbits;
}

int field_conductor(int k) { return k % 4 == 2 ? k / 2 : k; }
int field_degree(int k) { return euler_phi(field_conductor(k)); }

ComponentTable component_table(const ExtensionData& ext, const std::optional<Cocycle>& beta, int m) {
  if (!ext.central()) throw Error("component_table: N is not central");
  Cocycle b = beta ? *beta : trivial_cocycle(ext.quotient());
  const auto& N = ext.normal.group;
  int e = N->exponent();
  auto chars = lin_characters(N, e);
  int L = std::lcm(e, std::max(m, 1));
  std::vector<char> used(chars.size(), 0);
  ComponentTable t{{}, 0, ext.total->order()};
  int base_deg = field_degree(std::max(m, 1));
  for (size_t i = 0; i < chars.size(); ++i) {
    if (used[i]) continue;
    // Gal(F(zeta_e)/F): j in (Z/L)^*, j = 1 mod m
    int orbit = 0;
    std::set<std::vector<int>> seen;
    for (int j = 1; j <= L; ++j) {
      if (std::gcd(j, L) != 1 || (j - 1) % std::max(m, 1)) continue;
      std::vector<int> v(chars[i].values);
      for (auto& x : v) x = md(static_cast<long long>(x) * j, e);
      if (!seen.insert(v).second) continue;
      for (size_t k = 0; k < chars.size(); ++k)
        if (chars[k].values == v) used[k] = 1;
      ++orbit;
    }
    int o = chars[i].order();
    int fc = field_conductor(std::lcm(std::max(m, 1), o));
    int deg = euler_phi(fc) / base_deg;
    if (deg != orbit) throw Error("component_table: orbit size disagrees with the field degree");
    Cocycle tw = cocycle_product(b, transgress(ext, chars[i]));
    require_cocycle(tw, "component_table");
    t.rows.push_back(Component{chars[i], orbit, fc, tw});
    t.lhs_dim += orbit * ext.quotient()->order();
  }
  return t;
}

PerlisWalker perlis_walker(const FiniteGroup& a, int m) {
  if (!a.is_abelian()) throw Error("perlis_walker: group is not abelian");
  PerlisWalker r{{}, {}, 0};
  std::map<int, int> k;
  for (const auto& c : a.cyclic_subgroups()) ++k[static_cast<int>(c.size())];
  int base = field_degree(std::max(m, 1));
  for (auto [d, kd] : k) {
    int deg = euler_phi(field_conductor(std::lcm(std::max(m, 1), d))) / base;
    r.degree[d] = deg;
    r.a[d] = kd * euler_phi(d) / deg;
    r.dim_sum += r.a[d] * deg;
  }
  return r;
}

}  // namespace twring
