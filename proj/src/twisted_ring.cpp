#include "twring/twisted_ring.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

namespace twring {

namespace mp = boost::multiprecision;
using BigInt = mp::cpp_int;
using BigRat = mp::cpp_rational;

TwRing::TwRing(GroupPtr g, Cocycle alpha, int conductor)
    : g_(std::move(g)), alpha_(std::move(alpha)), M_(conductor) {
  if (!conductor_supported(M_)) throw Error("ring: unsupported conductor " + std::to_string(M_));
  phi_ = euler_phi(M_);
  if (alpha_.group->order() != g_->order()) throw Error("ring: cocycle lives on a different group");
  if (root_order() % alpha_.m)
    throw Error("ring: cocycle values of order " + std::to_string(alpha_.m) + " are not in Z[zeta_" +
                std::to_string(M_) + "]");
  require_cocycle(alpha_, "ring");
  int n = g_->order();
  tw_.reserve(static_cast<size_t>(n) * n);
  sign_.resize(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      tw_.push_back(CycInt::root(M_, alpha_.m, alpha_.at(a, b)));
      if (phi_ == 1) sign_[a * n + b] = static_cast<int>(tw_.back()[0]);
    }
}

bool TwRing::same_as(const TwRing& o) const {
  if (this == &o) return true;
  if (M_ != o.M_ || g_->order() != o.g_->order()) return false;
  if (g_ != o.g_ && g_->table() != o.g_->table()) return false;
  return alpha_ == o.alpha_;
}

std::string TwRing::describe() const {
  std::string r = M_ <= 2 ? "Z" : "Z[zeta_" + std::to_string(M_) + "]";
  if (!alpha_.is_trivial_table()) r += "^alpha";
  return r + "[G], |G| = " + std::to_string(g_->order());
}

RingPtr make_ring(GroupPtr g, Cocycle alpha, int conductor) {
  return std::make_shared<const TwRing>(std::move(g), std::move(alpha), conductor);
}

RingPtr make_group_ring(GroupPtr g, int conductor) {
  auto c = trivial_cocycle(g);
  return make_ring(std::move(g), std::move(c), conductor);
}

// ---------------------------------------------------------------- elements

TwElement::TwElement(RingPtr r) : r_(std::move(r)) {
  c_.assign(r_->order(), CycInt(r_->conductor()));
}

TwElement::TwElement(RingPtr r, std::vector<CycInt> c) : r_(std::move(r)), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != r_->order()) throw Error("element: coefficient count mismatch");
  for (auto& x : c_)
    if (x.modulus() != r_->conductor()) x = x.lifted(r_->conductor());
}

TwElement TwElement::basis(RingPtr r, int g, std::int64_t coef) {
  TwElement e(std::move(r));
  e.c_[g] = CycInt(e.r_->conductor(), coef);
  return e;
}

TwElement TwElement::basis(RingPtr r, int g, const CycInt& coef) {
  TwElement e(std::move(r));
  e.c_[g] = coef.lifted(e.r_->conductor());
  return e;
}

TwElement TwElement::from_ints(RingPtr r, const std::vector<std::int64_t>& c) {
  TwElement e(std::move(r));
  if (static_cast<int>(c.size()) != e.r_->order()) throw Error("element: coefficient count mismatch");
  for (size_t g = 0; g < c.size(); ++g) e.c_[g] = CycInt(e.r_->conductor(), c[g]);
  return e;
}

TwElement TwElement::from_coords(RingPtr r, const std::vector<std::int64_t>& v) {
  TwElement e(std::move(r));
  int phi = e.r_->phi();
  if (static_cast<int>(v.size()) != e.r_->dim()) throw Error("element: coordinate count mismatch");
  for (int g = 0; g < e.r_->order(); ++g) {
    CycInt::Coeffs c{};
    for (int j = 0; j < phi; ++j) c[j] = v[g * phi + j];
    e.c_[g] = CycInt(e.r_->conductor(), c);
  }
  return e;
}

std::vector<std::int64_t> TwElement::coords() const {
  int phi = r_->phi();
  std::vector<std::int64_t> v(static_cast<size_t>(r_->dim()));
  for (int g = 0; g < r_->order(); ++g)
    for (int j = 0; j < phi; ++j) v[g * phi + j] = c_[g][j];
  return v;
}

bool TwElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycInt& x) { return x.is_zero(); });
}

bool TwElement::is_one() const {
  if (c_[0] != CycInt(r_->conductor(), 1)) return false;
  for (size_t g = 1; g < c_.size(); ++g)
    if (!c_[g].is_zero()) return false;
  return true;
}

IdSet TwElement::support() const {
  IdSet s;
  for (size_t g = 0; g < c_.size(); ++g)
    if (!c_[g].is_zero()) s.push_back(static_cast<int>(g));
  return s;
}

std::int64_t TwElement::max_abs() const {
  std::int64_t r = 0;
  for (const auto& x : c_) r = std::max(r, x.max_abs());
  return r;
}

namespace {
void same_ring(const TwElement& a, const TwElement& b) {
  if (!a.ring() || !b.ring()) throw Error("element: uninitialised ring");
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) throw Error("element: ring mismatch");
}
}  // namespace

TwElement& TwElement::operator+=(const TwElement& o) {
  same_ring(*this, o);
  for (size_t g = 0; g < c_.size(); ++g) c_[g] += o.c_[g];
  return *this;
}

TwElement& TwElement::operator-=(const TwElement& o) {
  same_ring(*this, o);
  for (size_t g = 0; g < c_.size(); ++g) c_[g] -= o.c_[g];
  return *this;
}

TwElement TwElement::operator-() const {
  TwElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TwElement TwElement::scaled(std::int64_t s) const {
  TwElement r = *this;
  for (auto& x : r.c_) x = x.scaled(s);
  return r;
}

TwElement TwElement::scaled(const CycInt& s) const {
  TwElement r = *this;
  for (auto& x : r.c_) x = x * s;
  return r;
}

TwElement operator*(const TwElement& a, const TwElement& b) {
  same_ring(a, b);
  const TwRing& R = *a.ring();
  const FiniteGroup& G = *R.group();
  int n = G.order();
  TwElement r(a.ring());
  if (R.over_z()) {
    std::vector<std::int64_t> acc(n, 0);
    for (int g = 0; g < n; ++g) {
      std::int64_t x = a.c_[g][0];
      if (!x) continue;
      for (int h = 0; h < n; ++h) {
        std::int64_t y = b.c_[h][0];
        if (!y) continue;
        int k = G.mul(g, h);
        std::int64_t p = mul_ck(x, y);
        acc[k] = R.sign(g, h) > 0 ? add_ck(acc[k], p) : sub_ck(acc[k], p);
      }
    }
    for (int g = 0; g < n; ++g) r.c_[g] = CycInt(R.conductor(), acc[g]);
    return r;
  }
  for (int g = 0; g < n; ++g) {
    if (a.c_[g].is_zero()) continue;
    for (int h = 0; h < n; ++h) {
      if (b.c_[h].is_zero()) continue;
      r.c_[G.mul(g, h)] += a.c_[g] * b.c_[h] * R.twist(g, h);
    }
  }
  return r;
}

bool operator==(const TwElement& a, const TwElement& b) {
  same_ring(a, b);
  for (size_t g = 0; g < a.c_.size(); ++g)
    if (a.c_[g] != b.c_[g]) return false;
  return true;
}

std::string TwElement::str() const {
  const auto& G = *r_->group();
  std::string s;
  for (int g = 0; g < G.order(); ++g) {
    const CycInt& x = c_[g];
    if (x.is_zero()) continue;
    std::string lab = "u_" + G.label(g);
    if (x.is_integer()) {
      std::int64_t v = x[0];
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      std::int64_t av = v < 0 ? -v : v;
      s += (av == 1 ? "" : std::to_string(av) + "*") + lab;
    } else {
      if (!s.empty()) s += " + ";
      s += "(" + x.str() + ")*" + lab;
    }
  }
  return s.empty() ? "0" : s;
}

TwElement tw_mul(const TwElement& x, const TwElement& y) { return x * y; }

TwElement tw_pow(const TwElement& x, long long k) {
  if (k < 0) throw Error("tw_pow: negative exponent");
  TwElement r = TwElement::one(x.ring()), b = x;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool divisible_by(const TwElement& x, std::int64_t d) {
  for (const auto& c : x.coeffs())
    if (!divisible_by(c, d)) return false;
  return true;
}

TwElement exact_div(const TwElement& x, std::int64_t d) {
  std::vector<CycInt> c;
  for (const auto& v : x.coeffs()) c.push_back(exact_div(v, d));
  return TwElement(x.ring(), std::move(c));
}

// ---------------------------------------------------------------- matrices

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw Error("matrix: size mismatch");
  IntMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      std::int64_t a = x(i, k);
      if (!a) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) = add_ck(r(i, j), mul_ck(a, y(k, j)));
    }
  return r;
}

namespace {

BigInt bareiss(const IntMatrix& m) {
  int n = m.n;
  if (n == 0) return 1;
  std::vector<BigInt> a(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };
  BigInt prev = 1;
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

}  // namespace

std::string determinant_str(const IntMatrix& m) { return bareiss(m).str(); }

int det_unit_sign(const IntMatrix& m) {
  BigInt d = bareiss(m);
  if (d == 1) return 1;
  if (d == -1) return -1;
  return 0;
}

IntMatrix regular_rep(const TwElement& x) {
  const RingPtr& R = x.ring();
  int n = R->order(), phi = R->phi(), dim = R->dim();
  IntMatrix M(dim);
  for (int g = 0; g < n; ++g)
    for (int j = 0; j < phi; ++j) {
      CycInt::Coeffs e{};  // zeta_M^j
      e[j] = 1;
      TwElement b = TwElement::basis(R, g, CycInt(R->conductor(), e));
      auto col = (x * b).coords();
      for (int i = 0; i < dim; ++i) M(i, g * phi + j) = col[i];
    }
  return M;
}

std::optional<TwElement> is_unit(const TwElement& x) {
  IntMatrix M = regular_rep(x);
  if (!det_unit_sign(M)) return std::nullopt;
  // solve M y = coords(1) over Q; the solution is integral since det = +-1
  int n = M.n;
  std::vector<BigRat> a(static_cast<size_t>(n) * (n + 1));
  auto at = [&](int i, int j) -> BigRat& { return a[static_cast<size_t>(i) * (n + 1) + j]; };
  auto rhs = TwElement::one(x.ring()).coords();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = M(i, j);
    at(i, n) = rhs[i];
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (at(p, k) == 0) ++p;
    if (p != k)
      for (int j = 0; j <= n; ++j) std::swap(at(k, j), at(p, j));
    for (int i = 0; i < n; ++i) {
      if (i == k || at(i, k) == 0) continue;
      BigRat f = at(i, k) / at(k, k);
      for (int j = k; j <= n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  std::vector<std::int64_t> y(n);
  for (int i = 0; i < n; ++i) {
    BigRat v = at(i, n) / at(i, i);
    if (mp::denominator(v) != 1) throw Error("is_unit: non-integral inverse for a determinant-one matrix");
    BigInt num = mp::numerator(v);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("is_unit: inverse coefficient exceeds int64");
    y[i] = static_cast<std::int64_t>(num);
  }
  TwElement inv = TwElement::from_coords(x.ring(), y);
  if (!(x * inv).is_one() || !(inv * x).is_one()) throw Error("is_unit: inverse check failed");
  return inv;
}

// ---------------------------------------------------------------- torsion

namespace {

using Poly = std::vector<BigInt>;  // low degree first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// exact division by a monic polynomial; returns nullopt if a remainder is left
std::optional<Poly> divide_monic(const Poly& a, const Poly& b) {
  if (a.size() < b.size()) return std::nullopt;
  Poly r = a, q(a.size() - b.size() + 1);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    BigInt c = r[i + b.size() - 1];
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  trim(q);
  return q;
}

Poly cyclotomic_poly(int k, std::map<int, Poly>& cache) {
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Poly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = *divide_monic(p, cyclotomic_poly(d, cache));
  cache[k] = p;
  return p;
}

// characteristic polynomial det(tI - M) by Faddeev-LeVerrier
Poly char_poly(const IntMatrix& m) {
  int n = m.n;
  std::vector<BigInt> A(m.a.begin(), m.a.end()), Mk(static_cast<size_t>(n) * n, 0);
  Poly c(n + 1);
  c[n] = 1;
  // M_1 = I ... iterate: M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  std::vector<BigInt> AM(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    // Mk <- A*Mk + c[n-k+1] I  (Mk starts at 0 so M_1 = I)
    std::vector<BigInt> next(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const BigInt& x = A[static_cast<size_t>(i) * n + l];
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) next[static_cast<size_t>(i) * n + j] += x * Mk[static_cast<size_t>(l) * n + j];
      }
    for (int i = 0; i < n; ++i) next[static_cast<size_t>(i) * n + i] += c[n - k + 1];
    Mk.swap(next);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[static_cast<size_t>(i) * n + l] * Mk[static_cast<size_t>(l) * n + i];
    c[n - k] = -tr / k;
  }
  return c;
}

}  // namespace

long long default_torsion_cap(int dim) {
  long long l = 1;
  const long long kMax = std::numeric_limits<long long>::max();
  for (int k = 1; k <= 2 * dim * dim + 2; ++k) {
    if (euler_phi(k) > dim) continue;
    long long g = std::gcd(l, static_cast<long long>(k));
    if (l / g > kMax / k) return kMax;
    l = l / g * k;
  }
  return l;
}

std::optional<long long> torsion_order(const TwElement& x, std::optional<long long> cap) {
  IntMatrix M = regular_rep(x);
  if (!det_unit_sign(M)) throw Error("torsion_order: element is not a unit");
  int dim = M.n;
  // eigenvalues must be roots of unity: char poly is a product of Phi_k, phi(k) <= dim
  Poly p = char_poly(M);
  std::map<int, Poly> cache;
  long long L = 1;
  for (int k = 1; k <= 2 * dim * dim + 2 && p.size() > 1; ++k) {
    if (euler_phi(k) > static_cast<int>(p.size()) - 1) continue;
    Poly ck = cyclotomic_poly(k, cache);
    bool used = false;
    while (auto q = divide_monic(p, ck)) {
      p = *q;
      used = true;
    }
    if (used) L = std::lcm(L, static_cast<long long>(k));
  }
  if (p.size() > 1) return std::nullopt;
  // diagonalisable iff x^L = 1
  try {
    if (!tw_pow(x, L).is_one()) return std::nullopt;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
  long long n = L;
  for (long long q = 2; q <= n; ++q) {
    if (L % q) continue;
    bool prime = true;
    for (long long d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    while (n % q == 0 && tw_pow(x, n / q).is_one()) n /= q;
  }
  if (cap && n > *cap) return std::nullopt;
  return n;
}

// ---------------------------------------------------------------- structure

std::map<int, IdSet> partition_by_self_twist(const TwRing& t) {
  const Cocycle& c = t.cocycle();
  int n = t.root_order();
  std::map<int, IdSet> out;
  for (int g = 0; g < t.order(); ++g) out[self_twist(c, g) * (n / c.m)].push_back(g);
  return out;
}

IdSet g_zero(const TwRing& t) {
  auto p = partition_by_self_twist(t);
  return p.count(0) ? p[0] : IdSet{};
}

ConjCharacter conj_character(const TwRing& t, int x) {
  const auto& G = *t.group();
  const Cocycle& c = t.cocycle();
  ConjCharacter r;
  r.centralizer = G.centralizer(x);
  Subgroup s = subgroup_as_group(G, r.centralizer);
  std::vector<int> vals;
  for (int g : r.centralizer) {
    int v = ((c.at(g, x) - c.at(x, g)) % c.m + c.m) % c.m;
    vals.push_back(v);
    if (v == 0) r.c_plus.push_back(g);
    else if (c.m % 2 == 0 && v == c.m / 2) r.c_minus.push_back(g);
  }
  r.chi = LinearCharacter{s.group, c.m, vals};
  require_character(r.chi);
  return r;
}

TwElement cyclic_sum(const RingPtr& t, int g) {
  const Cocycle& c = t->cocycle();
  int o = t->group()->element_order(g);
  RootOfUnity z(c.m, self_twist(c, g));
  long long ou = static_cast<long long>(o) * z.order();  // o(u_g)
  TwElement u = TwElement::basis(t, g), p = TwElement::one(t), s = TwElement::zero(t);
  for (long long i = 0; i < ou; ++i) {
    s += p;
    p = p * u;
  }
  return s;
}

}  // namespace twring
