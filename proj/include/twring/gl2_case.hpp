#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twring/extension.hpp"
#include "twring/report.hpp"
#include "twring/twisted_ring.hpp"

namespace twring {

struct IntMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static IntMat2 identity() { return {}; }
  std::int64_t det() const;
  IntMat2 inverse() const;  // det must be +-1
  std::int64_t max_abs() const;
  bool in_dtilde() const;  // a = d, b = c mod 2
  IntMat2 mod(std::int64_t n) const;  // entries reduced into [0, n)
  std::string str() const;
  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

// ---- the C2 x C2 model ring ----

// C2^(2+n) = <g,h,x1..xn> with the cocycle of the matrix model on <g,h>
// (u_g^2 = u_h^2 = 1, [u_g,u_h] = -1) inflated; x_i central with square 1.
Cocycle alpha_relations(int n = 0);
// C2 x C2 with u_x^2 = u_y^2 = [u_x,u_y] = -1 (transgressed from Q8).
Cocycle q8_twist();
RingPtr c2c2_ring();  // Z^alpha[<g,h>], ids 1,g,h,gh = 0..3

IntMat2 phi_model(const TwElement& x);
std::optional<TwElement> phi_inverse(const IntMat2& m);  // nullopt outside D~
TwElement unit_v();  // 1 + u_h - u_gh
TwElement unit_w();  // 1 + u_h + u_gh

// ---- Sanov subgroup <W = (1 2;0 1), V = (1 0;2 1)> ----

// letters: 'V','W' and inverses 'v','w'
using SanovWord = std::string;
IntMat2 sanov_letter(char c);
IntMat2 sanov_evaluate(const SanovWord& w);
std::optional<SanovWord> sanov_membership(const IntMat2& m);
bool sanov_reduced(const SanovWord& w);

struct SanovScan {
  long long words = 0;
  long long round_trip_failures = 0;
  long long identity_collisions = 0;
};
SanovScan sanov_scan(int max_len);

// ---- U(Z^alpha[C2 x C2]) = F2 x| D8 ----

// Word over a = u_g, b = u_h, c = v, d = w (capitals are inverses).
std::string unit_word(const TwElement& u);
struct IndexAudit {
  long long index = 0;
  long long cosets_defined = 0;
  std::vector<std::string> generator_words;
};
// Todd-Coxeter on <x,y,v,w | x^2, y^2, (xy)^4, y v y^-1 = w, y w y^-1 = v,
// x v x^-1 = v^-1, x w x^-1 = w^-1>.
IndexAudit unit_index_audit(const std::vector<TwElement>& gens, long long cap = 2'000'000);
// Coset enumeration for a finite presentation; letters a..z with inverses A..Z.
long long todd_coxeter(int ngens, const std::vector<std::string>& relators, const std::vector<std::string>& subgroup,
                       long long cap, long long* defined = nullptr);
// Relators above, with v,w as generators 'c','d' and x,y as 'a','b'.
std::vector<std::string> unit_group_relators();

long long nielsen_schreier(long long rank, long long index);

// ---- congruence data at 2-power levels ----

struct CongruenceRow {
  int i;
  long long gl2_order;          // |GL2(Z/2^i)|
  long long image_order;        // [GL2(Z):Gamma(2^i)] = #{det = +-1 mod 2^i}
  long long paper_index;        // 6 or 3 * 2^{3i}
  long long gamma_step;         // [Gamma(2^i):Gamma(2^{i+1})]
  long long gamma_to_u;         // [Gamma(2^i):phi(U_i)]
  long long u_to_gamma_next;    // [phi(U_i):Gamma(2^{i+1})]
  long long u_step;             // [U_i:U_{i+1}]
};
CongruenceRow congruence_index(int i);
long long gl2_mod_order(int n);  // exhaustive

// ---- D8 x C2^n ----

struct D8Family {
  int n = 0;
  ExtensionData ext;
  PsiMap psi;
  TwElement b1, b2, b3;     // bicyclic units of Z[D8]
  TwElement v, w;           // in the target
  std::vector<TwElement> cokernel_candidates;  // v, then one per x_i
};
D8Family d8_family(int n);
TwElement d8_collapse_source(const D8Family& big, const D8Family& small, const TwElement& x);  // y_i -> 1
TwElement d8_collapse_target(const D8Family& big, const D8Family& small, const TwElement& x);  // x_i -> 1
bool d8_commutation_square(const D8Family& big, const D8Family& small);

Report c2c2_report();
Report congruence_report(int max_i);
Report d8_case_study(int n, bool scan = true);

}  // namespace twring
