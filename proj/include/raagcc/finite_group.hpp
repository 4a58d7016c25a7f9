#ifndef RAAGCC_FINITE_GROUP_HPP
#define RAAGCC_FINITE_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace raagcc {

using Perm = std::vector<int>;
// Subset of group elements, indexed by element.
using ElementSet = boost::dynamic_bitset<>;

struct GroupLimits {
  int validate_up_to = 200;
  int max_order = 5000;
};

// Finite group given by its multiplication table.
class FiniteGroup {
public:
  FiniteGroup() = default;
  static FiniteGroup from_table(std::vector<std::vector<int>> table, GroupLimits const &limits = {});
  // Closure of the generators. Element 0 is the identity; the rest are
  // found breadth first, so the numbering is deterministic.
  static FiniteGroup from_permutations(std::vector<Perm> const &gens, GroupLimits const &limits = {});

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  std::vector<std::vector<int>> const &table() const { return table_; }
  // Empty unless built from permutations.
  std::vector<Perm> const &permutations() const { return perms_; }
  int degree() const { return perms_.empty() ? 0 : static_cast<int>(perms_[0].size()); }

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet full_set() const { return ElementSet(order()).set(); }
  ElementSet set_of(std::vector<int> const &elements) const;

private:
  void finish();

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<Perm> perms_;
};

std::vector<int> members(ElementSet const &s);
// Orders by size, then by sorted members.
bool subset_less(ElementSet const &a, ElementSet const &b);

ElementSet generated_subgroup(FiniteGroup const &g, ElementSet const &gens);
bool is_subgroup(FiniteGroup const &g, ElementSet const &s);
bool is_normal(FiniteGroup const &g, ElementSet const &n);
// Product set {ab : a in A, b in B}.
ElementSet product_set(FiniteGroup const &g, ElementSet const &a, ElementSet const &b);
ElementSet left_coset(FiniteGroup const &g, int x, ElementSet const &h);

// All subgroups, sorted by subset_less. Needs order <= 200.
std::vector<ElementSet> all_subgroups(FiniteGroup const &g);
std::vector<ElementSet> normal_subgroups(FiniteGroup const &g);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // element of G -> coset index
};
Quotient quotient(FiniteGroup const &g, ElementSet const &n);
ElementSet image(Quotient const &q, ElementSet const &s);

struct Embedded {
  FiniteGroup group;
  std::vector<int> embedding;  // element of the subgroup -> element of G
};
Embedded as_group(FiniteGroup const &g, ElementSet const &h);

FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b);

FiniteGroup cyclic_group(int n);
// Order 2n.
FiniteGroup dihedral_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
// Order 4n; n = 2 is the quaternion group.
FiniteGroup dicyclic_group(int n);
// Acting on the nonzero vectors of F_q^n (q prime), vectors coded in base q.
FiniteGroup general_linear_group(int n, int q);
FiniteGroup special_linear_group(int n, int q);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
// Built-in table of groups up to the given order.
std::vector<NamedGroup> group_catalogue(int max_order);
FiniteGroup named_group(std::string const &name);

} // namespace raagcc

#endif // RAAGCC_FINITE_GROUP_HPP
