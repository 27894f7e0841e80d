#include "twring/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

#include "twring/group.hpp"

namespace twring {

std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}
std::int64_t sub_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}
std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

namespace {

// Phi_m, low degree first, leading 1 omitted (all monic).
struct Cyclo {
  int m, phi;
  std::array<int, 8> low;
};
constexpr Cyclo kCyclo[] = {
    {1, 1, {-1}},
    {2, 1, {1}},
    {3, 2, {1, 1}},
    {4, 2, {1, 0}},
    {6, 2, {1, -1}},
    {8, 4, {1, 0, 0, 0}},
    {12, 4, {1, 0, -1, 0}},
    {24, 8, {1, 0, 0, 0, -1, 0, 0, 0}},
};

const Cyclo& cyclo(int m) {
  for (const auto& c : kCyclo)
    if (c.m == m) return c;
  throw Error("unsupported conductor " + std::to_string(m));
}

}  // namespace

bool conductor_supported(int m) {
  for (const auto& c : kCyclo)
    if (c.m == m) return true;
  return false;
}

int euler_phi(int m) {
  int r = m;
  for (int p = 2, x = m; p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    r -= r / p;
  }
  return r;
}

int roots_order(int m) { return m % 2 ? 2 * m : m; }

int conductor_for_roots(int n) {
  for (const auto& c : kCyclo)
    if (roots_order(c.m) % n == 0) return c.m;
  throw CapExceeded("conductor", "no supported conductor contains roots of unity of order " + std::to_string(n));
}

int lcm_conductor(int a, int b) {
  int l = std::lcm(a, b);
  if (l > kMaxConductor || !conductor_supported(l))
    throw CapExceeded("conductor", "conductor lcm(" + std::to_string(a) + "," + std::to_string(b) + ") unsupported");
  return l;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  int l = std::lcm(m, o.m);
  return {l, k * (l / m) + o.k * (l / o.m)};
}

int RootOfUnity::order() const { return m / std::gcd(m, k); }

bool RootOfUnity::operator==(const RootOfUnity& o) const {
  int l = std::lcm(m, o.m);
  return (k * (l / m)) % l == (o.k * (l / o.m)) % l;
}

CycInt::CycInt(int m, std::int64_t v) : m_(m), phi_(cyclo(m).phi) { c_[0] = v; }

CycInt::CycInt(int m, const Coeffs& c) : m_(m), phi_(cyclo(m).phi), c_(c) {
  for (int i = phi_; i < kMaxPhi; ++i)
    if (c_[i] != 0) throw Error("CycInt: coefficient beyond phi(m)");
}

namespace {

// Reduce a polynomial of degree < 2*phi modulo Phi_m into phi coefficients.
CycInt::Coeffs reduce(int m, std::array<std::int64_t, 2 * CycInt::kMaxPhi>& p) {
  const Cyclo& c = cyclo(m);
  for (int d = 2 * CycInt::kMaxPhi - 1; d >= c.phi; --d) {
    std::int64_t t = p[d];
    if (!t) continue;
    p[d] = 0;
    for (int i = 0; i < c.phi; ++i)
      if (c.low[i]) p[d - c.phi + i] = sub_ck(p[d - c.phi + i], mul_ck(t, c.low[i]));
  }
  CycInt::Coeffs out{};
  for (int i = 0; i < c.phi; ++i) out[i] = p[i];
  return out;
}

// x^e mod Phi_m for 0 <= e < 2*roots_order(m)
CycInt::Coeffs monomial(int m, int e) {
  const Cyclo& c = cyclo(m);
  CycInt::Coeffs r{};
  r[0] = 1;
  for (int s = 0; s < e; ++s) {
    std::array<std::int64_t, 2 * CycInt::kMaxPhi> p{};
    for (int i = 0; i < c.phi; ++i) p[i + 1] = r[i];
    r = reduce(m, p);
  }
  return r;
}

}  // namespace

CycInt CycInt::root(int m, int n, int k) {
  int ro = roots_order(m);
  if (n <= 0 || ro % n) throw Error("root of unity of order " + std::to_string(n) + " not in Z[zeta_" + std::to_string(m) + "]");
  k = ((k % n) + n) % n;
  int e = k * (ro / n);  // zeta_ro^e
  if (m % 2 == 0) return CycInt(m, monomial(m, e));
  // odd m: zeta_{2m} = -zeta_m^{(m+1)/2}
  int pe = (e * ((m + 1) / 2)) % m;
  CycInt r(m, monomial(m, pe));
  return e % 2 ? -r : r;
}

bool CycInt::is_zero() const {
  for (int i = 0; i < phi_; ++i)
    if (c_[i]) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (int i = 1; i < phi_; ++i)
    if (c_[i]) return false;
  return true;
}

std::int64_t CycInt::max_abs() const {
  std::int64_t r = 0;
  for (int i = 0; i < phi_; ++i) r = std::max(r, c_[i] < 0 ? -c_[i] : c_[i]);
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (o.m_ != m_) return *this = *this + o;
  for (int i = 0; i < phi_; ++i) c_[i] = add_ck(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (o.m_ != m_) return *this = *this - o;
  for (int i = 0; i < phi_; ++i) c_[i] = sub_ck(c_[i], o.c_[i]);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (int i = 0; i < phi_; ++i) r.c_[i] = sub_ck(0, c_[i]);
  return r;
}

CycInt CycInt::scaled(std::int64_t s) const {
  CycInt r = *this;
  for (int i = 0; i < phi_; ++i) r.c_[i] = mul_ck(c_[i], s);
  return r;
}

CycInt CycInt::lifted(int m) const {
  if (m == m_) return *this;
  if (phi_ == 1 && conductor_supported(m)) return CycInt(m, c_[0]);  // Z embeds everywhere
  if (m % m_) throw Error("CycInt: cannot lift conductor " + std::to_string(m_) + " to " + std::to_string(m));
  int step = m / m_;
  CycInt out(m);
  for (int i = 0; i < phi_; ++i) {
    if (!c_[i]) continue;
    out += CycInt(m, monomial(m, (i * step) % m)).scaled(c_[i]);
  }
  return out;
}

namespace {
int common(const CycInt& a, const CycInt& b) {
  if (a.modulus() == b.modulus()) return a.modulus();
  if (a.phi() == 1) return b.modulus();
  if (b.phi() == 1) return a.modulus();
  return lcm_conductor(a.modulus(), b.modulus());
}
}  // namespace

CycInt operator+(const CycInt& a, const CycInt& b) {
  int m = common(a, b);
  CycInt r = a.lifted(m);
  r += b.lifted(m);
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  int m = common(a, b);
  CycInt r = a.lifted(m);
  r -= b.lifted(m);
  return r;
}

CycInt operator*(const CycInt& a0, const CycInt& b0) {
  int m = common(a0, b0);
  const CycInt a = a0.lifted(m), b = b0.lifted(m);
  int phi = a.phi();
  if (phi == 1) return CycInt(m, mul_ck(a[0], b[0]));
  std::array<std::int64_t, 2 * CycInt::kMaxPhi> p{};
  for (int i = 0; i < phi; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < phi; ++j)
      if (b[j]) p[i + j] = add_ck(p[i + j], mul_ck(a[i], b[j]));
  }
  return CycInt(m, reduce(m, p));
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.modulus() == b.modulus()) {
    for (int i = 0; i < a.phi(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  int m = common(a, b);
  return a.lifted(m) == b.lifted(m);
}

std::string CycInt::str() const {
  if (phi_ == 1) return std::to_string(c_[0]);
  std::string s;
  for (int i = 0; i < phi_; ++i) {
    if (!c_[i]) continue;
    std::int64_t v = c_[i];
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    std::int64_t a = v < 0 ? -v : v;
    if (i == 0) s += std::to_string(a);
    else {
      if (a != 1) s += std::to_string(a) + "*";
      s += "z" + std::to_string(m_) + (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return s.empty() ? "0" : s;
}

bool divisible_by(const CycInt& a, std::int64_t d) {
  for (int i = 0; i < a.phi(); ++i)
    if (a[i] % d) return false;
  return true;
}

CycInt exact_div(const CycInt& a, std::int64_t d) {
  if (!divisible_by(a, d)) throw Error("exact_div: not divisible by " + std::to_string(d));
  CycInt::Coeffs c{};
  for (int i = 0; i < a.phi(); ++i) c[i] = a[i] / d;
  return CycInt(a.modulus(), c);
}

std::optional<RootOfUnity> is_root_of_unity(const CycInt& a) {
  int m = a.modulus();
  int lim = 2 * m * m;
  CycInt one(m, 1), x = a;
  for (int j = 1; j <= lim; ++j) {
    if (x == one) {
      // identify the exponent in the full root group of the ring
      int ro = roots_order(m);
      for (int k = 0; k < ro; ++k)
        if (CycInt::root(m, ro, k) == a) {
          RootOfUnity r(ro, k);
          return RootOfUnity(r.order(), k / (ro / r.order()));
        }
      return std::nullopt;
    }
    try {
      x = x * a;
    } catch (const std::overflow_error&) {
      return std::nullopt;  // powers of a root of unity stay bounded
    }
  }
  return std::nullopt;
}

CycInt galois_apply(const CycInt& a, int j) {
  int m = a.modulus();
  if (std::gcd(j, std::max(m, 1)) != 1 && m > 1) throw Error("galois_apply: gcd(j, m) != 1");
  if (a.phi() == 1) return a;
  int jj = ((j % m) + m) % m;
  CycInt r(m);
  for (int i = 0; i < a.phi(); ++i)
    if (a[i]) r += CycInt(m, monomial(m, (i * jj) % m)).scaled(a[i]);
  return r;
}

}  // namespace twring
