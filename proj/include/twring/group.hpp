#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twring {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search or enumeration would exceed a configured limit.
struct CapExceeded : Error {
  std::string cap;
  CapExceeded(std::string which, const std::string& what) : Error(what), cap(std::move(which)) {}
};

using IdSet = std::vector<int>;  // sorted element ids

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Dense multiplication-table group; id 0 is the identity.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 256;

  // Validates closure, identity, inverses; associativity exhaustively for
  // order <= 64, otherwise on a deterministic sample.
  FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long k) const;
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int find_label(const std::string& s) const;  // -1 if absent
  std::vector<std::vector<int>> table() const;

  int element_order(int a) const { return orders_[a]; }
  std::map<int, int> order_histogram() const;
  int exponent() const;
  bool is_abelian() const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  IdSet centralizer(int x) const;
  IdSet center() const;
  IdSet generated(const std::vector<int>& gens) const;
  bool is_subgroup(const IdSet& h) const;
  bool is_normal(const IdSet& h) const;
  bool is_central(const IdSet& h) const;
  // Every subgroup normal; checked over cyclic subgroups (joins of normal
  // subgroups are normal, so this is exhaustive).
  bool is_hamiltonian() const;
  std::vector<IdSet> cyclic_subgroups() const;

 private:
  int n_;
  std::vector<int> mul_, inv_, orders_;
  std::vector<std::string> labels_;
};

struct GroupHom {
  GroupPtr source, target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  IdSet kernel() const;
  IdSet image() const;
  bool surjective() const { return static_cast<int>(image().size()) == target->order(); }
};

// Checks the homomorphism property exhaustively.
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> map);
// Extends generator images; throws if the assignment is not a homomorphism.
GroupHom hom_from_generators(GroupPtr source, GroupPtr target, const std::vector<int>& gens,
                             const std::vector<int>& images);

struct Section {
  GroupHom of;
  std::vector<int> map;  // target id -> source id

  int operator()(int g) const { return map[g]; }
};

Section make_section(const GroupHom& of, std::vector<int> map);
// Lexicographically least preimage per target element.
Section least_section(const GroupHom& of);

enum class Preset { cyclic, elementary_abelian_2, dihedral8, quaternion8, direct_product };

std::optional<Preset> preset_from_name(const std::string& name);

GroupPtr cyclic(int n);
// C2^k with ids as bitmasks; generator names from `names` (default g, h, x1, x2, ...).
GroupPtr elementary_abelian_2(int k, std::vector<std::string> names = {});
GroupPtr dihedral8();    // a^i b^j -> id i + 4j
GroupPtr quaternion8();  // x^i y^j -> id i + 4j, y^2 = x^2
// id (g, h) -> g + |G| * h
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);
GroupPtr build_preset(const std::string& name, const std::vector<int>& params,
                      const std::vector<GroupPtr>& factors = {});

struct Quotient {
  GroupPtr group;
  GroupHom proj;
};
// Cosets numbered by smallest representative.
Quotient quotient(GroupPtr g, const IdSet& n);

// The subgroup h as a group of its own, ids in increasing order of the
// ambient ids; embed[i] is the ambient id.
struct Subgroup {
  GroupPtr group;
  std::vector<int> embed;
};
Subgroup subgroup_as_group(const FiniteGroup& g, const IdSet& h);

}  // namespace twring
