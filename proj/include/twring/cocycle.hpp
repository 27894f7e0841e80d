#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twring/cyclotomic.hpp"
#include "twring/group.hpp"

namespace twring {

// alpha: G x G -> mu_m stored as exponents of zeta_m.
struct Cocycle {
  GroupPtr group;
  int m = 1;
  std::vector<int> table;  // n*n, row-major, values in [0, m)

  Cocycle() = default;
  Cocycle(GroupPtr g, int modulus, std::vector<int> t);
  Cocycle(GroupPtr g, int modulus, const std::vector<std::vector<int>>& t);

  int order_of_group() const { return group->order(); }
  int at(int g, int h) const { return table[g * group->order() + h]; }
  RootOfUnity value(int g, int h) const { return {m, at(g, h)}; }
  bool is_trivial_table() const;
  bool operator==(const Cocycle& o) const;  // equal as functions into C*
};

Cocycle trivial_cocycle(GroupPtr g, int m = 1);
// Re-express values in mu_L; L must be a multiple of c.m.
Cocycle with_modulus(const Cocycle& c, int L);
Cocycle cocycle_product(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_power(const Cocycle& c, int i);
int cocycle_order(const Cocycle& c);

struct CocycleReport {
  bool cocycle_ok = true;
  std::optional<std::array<int, 3>> violation;  // first failing (g,h,k)
  bool normalized = true;
  std::optional<int> unnormalized_at;
  bool ok() const { return cocycle_ok && normalized; }
};
CocycleReport validate_cocycle(const Cocycle& c);
// Throws Error with the failing triple when the table is not a normalized cocycle.
void require_cocycle(const Cocycle& c, const std::string& what);

// f given as roots of unity of modulus fm (exponents).
struct Cochain {
  int m = 1;
  std::vector<int> values;
};
Cocycle coboundary_twist(const Cocycle& c, const Cochain& f);
Cochain pointwise_inverse(const Cochain& f);

// Exhaustive search over f: G -> mu_m with f(1) = 1, lexicographic in
// (f(1), ..., f(n-1)); first witness with c2 = c1 * df is returned.
std::optional<Cochain> are_cohomologous(const Cocycle& c1, const Cocycle& c2, int m,
                                        long long cap = 10'000'000);

Cocycle inflate(const Cocycle& c, const GroupHom& proj);
struct Restriction {
  Cocycle cocycle;
  std::vector<int> embed;  // subgroup id -> ambient id
};
Restriction restrict_to(const Cocycle& c, const IdSet& h);

// u_g^{o(g)} = zeta_m^j; returns j.
int self_twist(const Cocycle& c, int g);
// Rescales u_g for odd-order g so that u_g^{o(g)} = 1 where mu_m allows it.
Cocycle normalize_odd_orders(const Cocycle& c);

// Symbols zeta^i u_g, zeta a generator of <im alpha>; id = i*|G| + g.
struct GAlpha {
  GroupPtr group;
  int o = 1;     // order of <im alpha>
  int step = 1;  // zeta = zeta_m^step
  GroupHom proj;  // zeta^i u_g -> g
};
GAlpha build_G_alpha(const Cocycle& c);

struct LinearCharacter {
  GroupPtr group;
  int m = 1;
  std::vector<int> values;  // exponents of zeta_m

  RootOfUnity operator()(int a) const { return {m, values[a]}; }
  bool is_trivial() const;
  int order() const;  // order in the dual group
};
LinearCharacter trivial_character(GroupPtr a, int m = 1);
// Throws if not a homomorphism into mu_m.
void require_character(const LinearCharacter& chi);

}  // namespace twring
