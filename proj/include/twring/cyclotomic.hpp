#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace twring {

// Checked int64 arithmetic; throws std::overflow_error.
std::int64_t add_ck(std::int64_t a, std::int64_t b);
std::int64_t sub_ck(std::int64_t a, std::int64_t b);
std::int64_t mul_ck(std::int64_t a, std::int64_t b);

inline constexpr int kMaxConductor = 24;

bool conductor_supported(int m);
int euler_phi(int m);
// Order of the group of roots of unity in Z[zeta_m]: m if m even, else 2m.
int roots_order(int m);
// Smallest supported conductor whose ring contains mu_n.
int conductor_for_roots(int n);
int lcm_conductor(int a, int b);  // throws CapExceeded above the cap

struct RootOfUnity {
  int m = 1;
  int k = 0;

  RootOfUnity() = default;
  RootOfUnity(int m_, int k_) : m(m_), k(((k_ % m_) + m_) % m_) {}
  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const { return {m, -k}; }
  int order() const;
  bool operator==(const RootOfUnity& o) const;  // compares as complex numbers
};

// Element of Z[zeta_m] in the power basis modulo Phi_m.
class CycInt {
 public:
  static constexpr int kMaxPhi = 8;
  using Coeffs = std::array<std::int64_t, kMaxPhi>;

  CycInt() : CycInt(1) {}
  explicit CycInt(int m, std::int64_t v = 0);
  CycInt(int m, const Coeffs& c);

  // zeta_n^k inside Z[zeta_m]; n must divide roots_order(m).
  static CycInt root(int m, int n, int k);
  static CycInt root(int m, const RootOfUnity& r) { return root(m, r.m, r.k); }

  int modulus() const { return m_; }
  int phi() const { return phi_; }
  std::int64_t operator[](int i) const { return c_[i]; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_integer() const;  // lies in Z
  std::int64_t max_abs() const;

  // Same-ring fast paths.
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator-() const;
  CycInt scaled(std::int64_t s) const;

  CycInt lifted(int m) const;  // embed into Z[zeta_m], m a multiple

  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::string str() const;

 private:
  int m_, phi_;
  Coeffs c_{};
};

// Coefficientwise reduction helpers used by congruence predicates.
bool divisible_by(const CycInt& a, std::int64_t d);
CycInt exact_div(const CycInt& a, std::int64_t d);  // throws if not divisible

std::optional<RootOfUnity> is_root_of_unity(const CycInt& a);
CycInt galois_apply(const CycInt& a, int j);

}  // namespace twring
