#include "twring/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace twring {

namespace {

std::string join_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + b;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> labels)
    : n_(static_cast<int>(mul.size())) {
  if (n_ < 1) throw Error("group: empty table");
  if (n_ > kMaxOrder) throw CapExceeded("group-order", "group: order " + std::to_string(n_) + " above cap 256");
  mul_.resize(static_cast<size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(mul[a].size()) != n_) throw Error("group: table is not square");
    for (int b = 0; b < n_; ++b) {
      int c = mul[a][b];
      if (c < 0 || c >= n_) throw Error("group: entry out of range");
      mul_[a * n_ + b] = c;
    }
  }
  for (int a = 0; a < n_; ++a)
    if (this->mul(0, a) != a || this->mul(a, 0) != a) throw Error("group: id 0 is not the identity");

  // Latin square rows/columns give unique inverses
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    std::vector<char> row(n_, 0), col(n_, 0);
    for (int b = 0; b < n_; ++b) {
      if (row[this->mul(a, b)]++ || col[this->mul(b, a)]++) throw Error("group: table is not a Latin square");
      if (this->mul(a, b) == 0) inv_[a] = b;
    }
    if (inv_[a] < 0 || this->mul(inv_[a], a) != 0) throw Error("group: missing two-sided inverse");
  }

  auto assoc = [&](int a, int b, int c) {
    if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
      throw Error("group: not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
  };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) assoc(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, n_ - 1);
    for (int t = 0; t < 200000; ++t) assoc(d(rng), d(rng), d(rng));
  }

  orders_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = this->mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }

  if (labels.empty()) {
    labels.resize(n_);
    labels[0] = "1";
    for (int a = 1; a < n_; ++a) labels[a] = "e" + std::to_string(a);
  }
  if (static_cast<int>(labels.size()) != n_) throw Error("group: label count mismatch");
  labels_ = std::move(labels);
}

int FiniteGroup::pow(int a, long long k) const {
  int o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  int x = 0;
  for (long long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

int FiniteGroup::find_label(const std::string& s) const {
  auto it = std::find(labels_.begin(), labels_.end(), s);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::map<int, int> FiniteGroup::order_histogram() const {
  std::map<int, int> h;
  for (int o : orders_) ++h[o];
  return h;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

IdSet FiniteGroup::centralizer(int x) const {
  IdSet c;
  for (int g = 0; g < n_; ++g)
    if (commute(g, x)) c.push_back(g);
  return c;
}

IdSet FiniteGroup::center() const {
  IdSet z;
  for (int g = 0; g < n_; ++g) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = commute(g, x);
    if (ok) z.push_back(g);
  }
  return z;
}

IdSet FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> todo{0};
  in[0] = 1;
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int s : gens) {
      int y = mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        todo.push_back(y);
      }
    }
  }
  IdSet out;
  for (int g = 0; g < n_; ++g)
    if (in[g]) out.push_back(g);
  return out;
}

bool FiniteGroup::is_subgroup(const IdSet& h) const {
  if (h.empty()) return false;
  std::vector<char> in(n_, 0);
  for (int x : h) {
    if (x < 0 || x >= n_) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (int a : h) {
    if (!in[inv(a)]) return false;
    for (int b : h)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const IdSet& h) const {
  if (!is_subgroup(h)) return false;
  std::vector<char> in(n_, 0);
  for (int x : h) in[x] = 1;
  for (int g = 0; g < n_; ++g)
    for (int x : h)
      if (!in[mul(mul(g, x), inv(g))]) return false;
  return true;
}

bool FiniteGroup::is_central(const IdSet& h) const {
  for (int x : h)
    for (int g = 0; g < n_; ++g)
      if (!commute(g, x)) return false;
  return true;
}

std::vector<IdSet> FiniteGroup::cyclic_subgroups() const {
  std::set<IdSet> seen;
  for (int g = 0; g < n_; ++g) seen.insert(generated({g}));
  return {seen.begin(), seen.end()};
}

bool FiniteGroup::is_hamiltonian() const {
  for (const auto& c : cyclic_subgroups())
    if (!is_normal(c)) return false;
  return true;
}

IdSet GroupHom::kernel() const {
  IdSet k;
  for (int x = 0; x < source->order(); ++x)
    if (map[x] == 0) k.push_back(x);
  return k;
}

IdSet GroupHom::image() const {
  std::set<int> s(map.begin(), map.end());
  return {s.begin(), s.end()};
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source->order()) throw Error("hom: map size mismatch");
  for (int y : map)
    if (y < 0 || y >= target->order()) throw Error("hom: image out of range");
  if (map[0] != 0) throw Error("hom: identity not preserved");
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) throw Error("hom: not multiplicative");
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

GroupHom hom_from_generators(GroupPtr source, GroupPtr target, const std::vector<int>& gens,
                             const std::vector<int>& images) {
  if (gens.size() != images.size()) throw Error("hom: generator/image count mismatch");
  std::vector<int> map(source->order(), -1);
  map[0] = 0;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = source->mul(x, gens[i]);
      int fy = target->mul(map[x], images[i]);
      if (map[y] < 0) {
        map[y] = fy;
        todo.push_back(y);
      } else if (map[y] != fy) {
        throw Error("hom: generator images do not extend to a homomorphism");
      }
    }
  }
  if (std::count(map.begin(), map.end(), -1)) throw Error("hom: generators do not generate the source");
  return make_hom(std::move(source), std::move(target), std::move(map));
}

Section make_section(const GroupHom& of, std::vector<int> map) {
  if (static_cast<int>(map.size()) != of.target->order()) throw Error("section: size mismatch");
  if (map[0] != 0) throw Error("section: identity must map to identity");
  for (int g = 0; g < of.target->order(); ++g) {
    if (map[g] < 0 || map[g] >= of.source->order() || of(map[g]) != g)
      throw Error("section: not a right inverse at target element " + std::to_string(g));
  }
  return Section{of, std::move(map)};
}

Section least_section(const GroupHom& of) {
  std::vector<int> m(of.target->order(), -1);
  for (int x = 0; x < of.source->order(); ++x)
    if (m[of(x)] < 0) m[of(x)] = x;
  if (std::count(m.begin(), m.end(), -1)) throw Error("section: map is not surjective");
  return make_section(of, std::move(m));
}

std::optional<Preset> preset_from_name(const std::string& name) {
  if (name == "cyclic") return Preset::cyclic;
  if (name == "elementary_abelian_2") return Preset::elementary_abelian_2;
  if (name == "dihedral8") return Preset::dihedral8;
  if (name == "quaternion8") return Preset::quaternion8;
  if (name == "direct_product") return Preset::direct_product;
  return std::nullopt;
}

GroupPtr cyclic(int n) {
  if (n < 1 || n > FiniteGroup::kMaxOrder) throw Error("cyclic: order out of range");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    lab[a] = a == 0 ? "1" : a == 1 ? "c" : "c^" + std::to_string(a);
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(lab));
}

GroupPtr elementary_abelian_2(int k, std::vector<std::string> names) {
  if (k < 0 || k > 8) throw Error("elementary_abelian_2: rank out of range");
  if (names.empty()) {
    const char* base[] = {"g", "h"};
    for (int i = 0; i < k; ++i) names.push_back(i < 2 ? base[i] : "x" + std::to_string(i - 1));
  }
  if (static_cast<int>(names.size()) != k) throw Error("elementary_abelian_2: name count mismatch");
  int n = 1 << k;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = a ^ b;
    std::string s;
    for (int i = 0; i < k; ++i)
      if (a >> i & 1) s += names[i];
    lab[a] = s.empty() ? "1" : s;
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(lab));
}

GroupPtr dihedral8() {
  // (a^i b^j)(a^k b^l) = a^{i + (-1)^j k} b^{j+l}
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> lab(8);
  for (int x = 0; x < 8; ++x) {
    int i = x % 4, j = x / 4;
    for (int y = 0; y < 8; ++y) {
      int k = y % 4, l = y / 4;
      int e = ((i + (j ? -k : k)) % 4 + 4) % 4;
      t[x][y] = e + 4 * ((j + l) % 2);
    }
    std::string s = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
    if (j) s += "b";
    lab[x] = s.empty() ? "1" : s;
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(lab));
}

GroupPtr quaternion8() {
  // x^4 = 1, y^2 = x^2, y x y^-1 = x^-1
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> lab(8);
  for (int p = 0; p < 8; ++p) {
    int i = p % 4, j = p / 4;
    for (int q = 0; q < 8; ++q) {
      int k = q % 4, l = q / 4;
      int e = i + (j ? -k : k) + (j && l ? 2 : 0);
      t[p][q] = ((e % 4) + 4) % 4 + 4 * ((j + l) % 2);
    }
    std::string s = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    if (j) s += "y";
    lab[p] = s.empty() ? "1" : s;
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(lab));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int a = g.order(), b = h.order();
  if (a * b > FiniteGroup::kMaxOrder) throw CapExceeded("group-order", "direct_product: order above cap 256");
  int n = a * b;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[x][y] = g.mul(x % a, y % a) + a * h.mul(x / a, y / a);
    lab[x] = join_labels(g.label(x % a), h.label(x / a));
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(lab));
}

GroupPtr build_preset(const std::string& name, const std::vector<int>& params,
                      const std::vector<GroupPtr>& factors) {
  auto p = preset_from_name(name);
  if (!p) throw Error("unknown preset '" + name + "'");
  auto need = [&](size_t k) {
    if (params.size() != k) throw Error("preset '" + name + "': expected " + std::to_string(k) + " parameter(s)");
  };
  switch (*p) {
    case Preset::cyclic:
      need(1);
      return cyclic(params[0]);
    case Preset::elementary_abelian_2:
      need(1);
      return elementary_abelian_2(params[0]);
    case Preset::dihedral8:
      need(0);
      return dihedral8();
    case Preset::quaternion8:
      need(0);
      return quaternion8();
    case Preset::direct_product: {
      if (factors.size() < 2) throw Error("preset 'direct_product': needs at least two factors");
      GroupPtr acc = factors[0];
      for (size_t i = 1; i < factors.size(); ++i) acc = direct_product(*acc, *factors[i]);
      return acc;
    }
  }
  throw Error("unreachable preset");
}

Quotient quotient(GroupPtr g, const IdSet& n) {
  if (!g->is_subgroup(n)) throw Error("quotient: N is not a subgroup");
  if (!g->is_normal(n)) throw Error("quotient: N is not normal");
  int order = g->order();
  std::vector<int> coset(order, -1);
  std::vector<int> rep;
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    int c = static_cast<int>(rep.size());
    rep.push_back(x);
    for (int m : n) coset[g->mul(x, m)] = c;
  }
  int q = static_cast<int>(rep.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  std::vector<std::string> lab(q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) t[a][b] = coset[g->mul(rep[a], rep[b])];
    lab[a] = a == 0 ? "1" : "[" + g->label(rep[a]) + "]";
  }
  auto qg = std::make_shared<const FiniteGroup>(std::move(t), std::move(lab));
  return Quotient{qg, make_hom(g, qg, coset)};
}

Subgroup subgroup_as_group(const FiniteGroup& g, const IdSet& h) {
  if (!g.is_subgroup(h)) throw Error("subgroup: not a subgroup");
  std::vector<int> back(g.order(), -1);
  for (size_t i = 0; i < h.size(); ++i) back[h[i]] = static_cast<int>(i);
  int k = static_cast<int>(h.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> lab(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) t[a][b] = back[g.mul(h[a], h[b])];
    lab[a] = g.label(h[a]);
  }
  return Subgroup{std::make_shared<const FiniteGroup>(std::move(t), std::move(lab)), h};
}

}  // namespace twring
