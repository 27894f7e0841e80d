#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twring/cocycle.hpp"
#include "twring/cyclotomic.hpp"
#include "twring/group.hpp"

namespace twring {

class TwRing;
using RingPtr = std::shared_ptr<const TwRing>;

// R^alpha[G] with R = Z[zeta_M].
class TwRing {
 public:
  TwRing(GroupPtr g, Cocycle alpha, int conductor);

  const GroupPtr& group() const { return g_; }
  const Cocycle& cocycle() const { return alpha_; }
  int conductor() const { return M_; }
  int phi() const { return phi_; }
  int order() const { return g_->order(); }
  int dim() const { return g_->order() * phi_; }  // Z-rank
  bool over_z() const { return phi_ == 1; }
  // Order of the roots of unity contained in R.
  int root_order() const { return roots_order(M_); }

  // alpha(g,h) as an element of R.
  const CycInt& twist(int g, int h) const { return tw_[g * g_->order() + h]; }
  int sign(int g, int h) const { return sign_[g * g_->order() + h]; }  // valid when over_z()

  bool same_as(const TwRing& o) const;
  std::string describe() const;

 private:
  GroupPtr g_;
  Cocycle alpha_;
  int M_, phi_;
  std::vector<CycInt> tw_;
  std::vector<int> sign_;
};

RingPtr make_ring(GroupPtr g, Cocycle alpha, int conductor = 1);
RingPtr make_group_ring(GroupPtr g, int conductor = 1);

class TwElement {
 public:
  TwElement() = default;
  explicit TwElement(RingPtr r);  // zero
  TwElement(RingPtr r, std::vector<CycInt> c);

  static TwElement zero(RingPtr r) { return TwElement(std::move(r)); }
  static TwElement one(RingPtr r) { return basis(std::move(r), 0); }
  static TwElement basis(RingPtr r, int g, std::int64_t coef = 1);
  static TwElement basis(RingPtr r, int g, const CycInt& coef);
  // Integer coefficients indexed by group element (any conductor).
  static TwElement from_ints(RingPtr r, const std::vector<std::int64_t>& c);
  // Coordinates in the Z-basis zeta^j u_g, index g*phi + j.
  static TwElement from_coords(RingPtr r, const std::vector<std::int64_t>& v);

  const RingPtr& ring() const { return r_; }
  const CycInt& operator[](int g) const { return c_[g]; }
  CycInt& operator[](int g) { return c_[g]; }
  const std::vector<CycInt>& coeffs() const { return c_; }
  std::vector<std::int64_t> coords() const;

  bool is_zero() const;
  bool is_one() const;
  IdSet support() const;
  std::int64_t max_abs() const;

  TwElement& operator+=(const TwElement& o);
  TwElement& operator-=(const TwElement& o);
  TwElement operator-() const;
  TwElement scaled(std::int64_t s) const;
  TwElement scaled(const CycInt& s) const;

  friend TwElement operator+(TwElement a, const TwElement& b) { return a += b; }
  friend TwElement operator-(TwElement a, const TwElement& b) { return a -= b; }
  friend TwElement operator*(const TwElement& a, const TwElement& b);
  friend bool operator==(const TwElement& a, const TwElement& b);
  friend bool operator!=(const TwElement& a, const TwElement& b) { return !(a == b); }

  std::string str() const;

 private:
  RingPtr r_;
  std::vector<CycInt> c_;
};

TwElement tw_mul(const TwElement& x, const TwElement& y);
TwElement tw_pow(const TwElement& x, long long k);  // k >= 0
bool divisible_by(const TwElement& x, std::int64_t d);
TwElement exact_div(const TwElement& x, std::int64_t d);

struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  explicit IntMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  std::int64_t& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  std::int64_t operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  static IntMatrix identity(int n);
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n == y.n && x.a == y.a; }
};

// Exact determinant by fraction-free (Bareiss) elimination, as a decimal string.
std::string determinant_str(const IntMatrix& m);
// 1, -1, or 0 meaning "neither +1 nor -1".
int det_unit_sign(const IntMatrix& m);

IntMatrix regular_rep(const TwElement& x);
std::optional<TwElement> is_unit(const TwElement& x);

// Least k with x^k = 1, if finite (and k <= cap when a cap is given).
// Throws if x is not a unit.
std::optional<long long> torsion_order(const TwElement& x, std::optional<long long> cap = std::nullopt);
// lcm{k : phi(k) <= dim}, saturating at INT64_MAX.
long long default_torsion_cap(int dim);

// j -> {g : u_g^{o(g)} = zeta_n^j}, n = root order of R.
std::map<int, IdSet> partition_by_self_twist(const TwRing& t);
IdSet g_zero(const TwRing& t);

struct ConjCharacter {
  IdSet centralizer;
  LinearCharacter chi;  // on subgroup_as_group(centralizer)
  IdSet c_plus, c_minus;
  bool alpha_regular() const { return c_minus.empty(); }
};
ConjCharacter conj_character(const TwRing& t, int x);

TwElement cyclic_sum(const RingPtr& t, int g);

}  // namespace twring
