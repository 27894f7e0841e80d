#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twring/twisted_ring.hpp"

namespace twring {

struct PsiMap;

struct FinitenessVerdict {
  bool finite = false;
  // abelian-exp4 | abelian-exp3 | abelian-exp6 | hamiltonian-2group |
  // trivial-cocycle-higman | infinite
  std::string case_name;
  std::map<int, int> histogram;  // element orders of G_alpha
  int galpha_order = 0;
  bool galpha_abelian = false;
  int field_conductor = 1;       // of the coefficient field
  std::string witness;
};

FinitenessVerdict decide_finiteness(const TwRing& t);

// Every unit whose Z-coordinates lie in [-bound, bound]; ordered by coordinates.
std::vector<TwElement> enumerate_units(const RingPtr& t, int bound);
// First unit of infinite order found scanning coordinates by increasing
// max-abs (then lexicographically), up to `bound`.
std::optional<TwElement> find_infinite_unit(const RingPtr& t, int bound = 1);
// Torsion units in [-bound, bound]^dim with identity coefficient not in {0, +-1}
// (over Z).  Empty means the scan supports Berman-Higman.
std::vector<TwElement> berman_higman_scan(const RingPtr& t, int bound = 1);

// Over Z: g with u_g^{o(g)} = 1 and h in C_g^-.
bool bicyclic_admissible(const TwRing& t, int g, int h);
std::vector<std::pair<int, int>> admissible_pairs(const TwRing& t);

struct BicyclicSpec {
  RingPtr ring;
  int g = 0;
  TwElement a, b;  // supp(b) inside C_g^-
};
// 1 + (o(g) - u~_g)(a + b/o(g)) u~_g
TwElement twisted_bicyclic(const BicyclicSpec& s);
TwElement bicyclic_increment(const BicyclicSpec& s);
// Both sides of (o(g) - u~_g) u_h u~_g = o(g) u_h u~_g.
bool rewriting_identity_holds(const RingPtr& t, int g, int h);

// f = F / d with f^2 = f in Q^alpha[G].
struct RationalIdempotent {
  TwElement num;
  std::int64_t den = 1;
};
struct GbicPair {
  TwElement left, right;  // b(x,f), b(f,x)
  std::int64_t n_f = 1;
};
GbicPair generalized_bicyclic(const RationalIdempotent& f, const TwElement& x);

struct GaloisTwist {
  RingPtr source, target;  // alpha, alpha^j
  int j = 1;
  TwElement operator()(const TwElement& x) const;
};
GaloisTwist galois_twist_iso(const RingPtr& t, int j);
bool galois_twist_multiplicative(const GaloisTwist& s);

// One-sided certificate: reducing mod 2 sends the image of U(Z Gamma) into
// the trivial units G of F_2 G whenever U(ZG) = +-G.
struct ParityCertificate {
  bool certified = false;
  bool identity_coefficient_odd = false;
  bool nontrivial_mod2 = false;
  std::vector<int> reduction;  // support of the mod-2 image
  std::string reason;
};
ParityCertificate parity_obstruction(const PsiMap& p, const TwElement& candidate);
// |<theta(S)> G / G| for certified candidates S; a lower bound on the size
// of the subgroup of the cokernel they generate.
long long parity_subgroup_order(const PsiMap& p, const std::vector<TwElement>& candidates);

}  // namespace twring
