#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twring/cocycle.hpp"
#include "twring/group.hpp"
#include "twring/twisted_ring.hpp"

namespace twring {

// 1 -> N -> Gamma -> G -> 1 with a fixed section mu.
struct ExtensionData {
  GroupPtr total;             // Gamma
  IdSet sub;                  // N as Gamma ids
  Subgroup normal;            // N as a group of its own
  std::vector<int> to_normal; // Gamma id -> N id, or -1
  GroupHom proj;              // lambda
  Section section;            // mu
  std::vector<int> alpha;     // alpha(g,h) = mu(g)mu(h)mu(gh)^-1, N ids
  std::vector<int> action;    // sigma_g(n) = mu(g) n mu(g)^-1, N ids, index g*|N| + n

  const GroupPtr& quotient() const { return proj.target; }
  int alpha_at(int g, int h) const { return alpha[g * quotient()->order() + h]; }
  int sigma(int g, int n) const { return action[g * normal.group->order() + n]; }
  bool central() const { return total->is_central(sub); }
  // gamma = n * mu(g); returns (N id of n, g)
  std::pair<int, int> decompose(int gamma) const;
};

// Quotient-based lambda; `transversal` lists one Gamma element per coset
// (any order, must contain the identity).  Default: least element per coset.
ExtensionData build_extension(GroupPtr gamma, const IdSet& n,
                              const std::optional<std::vector<int>>& transversal = std::nullopt);
// Explicit surjection lambda onto a given group; N = ker lambda.  `section`
// maps target ids to Gamma ids.
ExtensionData build_extension_from_hom(const GroupHom& lambda,
                                       const std::optional<std::vector<int>>& section = std::nullopt);

// T(chi)(g,h) = chi(alpha(g,h)); chi lives on ext.normal.group.
Cocycle transgress(const ExtensionData& ext, const LinearCharacter& chi);
bool character_invariant(const ExtensionData& ext, const LinearCharacter& chi);

struct PsiMap {
  ExtensionData ext;
  LinearCharacter chi;
  Cocycle beta;  // on G
  RingPtr source;  // R^{Inf beta}[Gamma]
  RingPtr target;  // R^{beta T(chi)}[G]
};

// Conductor 0 picks the smallest supported one holding all values.
PsiMap make_psi(const ExtensionData& ext, const LinearCharacter& chi,
                const std::optional<Cocycle>& beta = std::nullopt, int conductor = 0);
TwElement apply_psi(const PsiMap& p, const TwElement& x);
// Every pair of basis elements; returns the first failing pair if any.
std::optional<std::pair<int, int>> psi_multiplicativity_failure(const PsiMap& p);

std::vector<TwElement> kernel_basis(const PsiMap& p);
// Coefficients c_{a,g} (a != 1) with x = sum c (u_{a mu(g)} - chi(a) u_{mu(g)});
// nullopt when x is not in the kernel.  Ordered as kernel_basis.
std::optional<std::vector<CycInt>> decompose_kernel(const PsiMap& p, const TwElement& x);

std::vector<TwElement> torsion_kernel_units(const PsiMap& p);
// Torsion units x with psi(x) = 1, integer coefficients in [-bound, bound]
// on at most max_support basis elements.
std::vector<TwElement> kernel_torsion_scan(const PsiMap& p, int bound = 1, int max_support = 4);

struct KernelVerdict {
  bool finite;
  std::string clause;
};
KernelVerdict kernel_finiteness_predicate(const PsiMap& p);

std::vector<LinearCharacter> lin_characters(GroupPtr a, int m);
// Orbits (as index lists into chars) under chi^g(n) = chi(sigma_g(n)).
std::vector<std::vector<int>> orbit_space(const std::vector<LinearCharacter>& chars, const ExtensionData& ext);

struct Component {
  LinearCharacter chi;  // orbit representative
  int orbit_size;       // [F(chi):F]
  int field_conductor;  // of F(chi)
  Cocycle twist;        // beta * T(chi)
};
struct ComponentTable {
  std::vector<Component> rows;
  int lhs_dim;  // sum [F(chi):F] |G|
  int rhs_dim;  // |Gamma|
  bool identity_holds() const { return lhs_dim == rhs_dim; }
};
// F = Q(zeta_m); components of F^beta[Gamma] for central N.
ComponentTable component_table(const ExtensionData& ext, const std::optional<Cocycle>& beta, int m);

// d -> a_d for FA, A abelian, F = Q(zeta_m).
struct PerlisWalker {
  std::map<int, int> a;       // a_d
  std::map<int, int> degree;  // [F(zeta_d):F]
  int dim_sum;                // sum a_d [F(zeta_d):F]
};
PerlisWalker perlis_walker(const FiniteGroup& a, int m);
int field_conductor(int k);  // conductor of Q(zeta_k)
int field_degree(int k);     // [Q(zeta_k):Q]

}  // namespace twring
