#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twring/twisted_ring.hpp"

namespace twring {

// Z^alpha[G x C2^i], 0 <= i <= n, with alpha inflated from G.
// Element ids are g + |G| * bits, bit i-1 standing for x_i.
struct TowerContext {
  RingPtr base;
  int n = 0;
  std::vector<GroupPtr> groups;
  std::vector<RingPtr> rings;

  int level_of(const TwElement& x) const;
  int x_id(int i, int level) const;  // id of x_i inside level `level`
};

TowerContext make_tower(const RingPtr& base, int n);

// x_i -> 1 and x_i -> -1, from level i to level i-1.
TwElement tower_psi(const TowerContext& c, int i, const TwElement& x);
TwElement tower_phi(const TowerContext& c, int i, const TwElement& x);
// Inclusion of level `from` into level `to` >= from.
TwElement tower_embed(const TowerContext& c, const TwElement& x, int to);

struct SplitUnit {
  TwElement k, s;  // u = k * s, psi_i(k) = 1, s free of x_i
};
SplitUnit split_unit(const TowerContext& c, int i, const TwElement& u);
TwElement kernel_embed(const TowerContext& c, int i, const TwElement& k);

bool u_group_membership(const TowerContext& c, int k, int j, const TwElement& x);

struct USplit {
  TwElement a;  // in U_{k+1, j-1}
  TwElement b;  // in U_{k, j-1}
  TwElement lift;  // 1 + (1 - x_j)(a - 1)/2 at level j; x = lift * b
};
USplit u_split(const TowerContext& c, int k, int j, const TwElement& x);

struct SplitPart {
  int k;  // twist level of the part
  TwElement x;  // at level 0
};
// Recursive u_split down to level 0; 2^j parts ordered a-first.
std::vector<SplitPart> iterated_split(const TowerContext& c, int k, int j, const TwElement& x);

// Product of `length` random generators (trivial units and twisted bicyclic
// units) at the given level.
TwElement random_tower_unit(const TowerContext& c, int level, std::mt19937_64& rng, int length = 3);

}  // namespace twring
