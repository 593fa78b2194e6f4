#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tambara {

using Elem = int;
using ElemMask = std::uint64_t;

inline constexpr int kMaxGroupOrder = 64;

struct Subgroup {
  ElemMask mask = 0;
  std::vector<Elem> elements;  // sorted

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem g) const { return (mask >> g) & 1U; }
  bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

namespace detail {
struct GroupData;
}

// Immutable handle; copies share the same validated table.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table);
  static FiniteGroup from_generators(std::string name, int degree,
                                     const std::vector<std::vector<int>>& generators);

  const std::string& name() const;
  int order() const;
  Elem identity() const;
  Elem mul(Elem a, Elem b) const;
  Elem inverse(Elem a) const;
  Elem conjugate(Elem g, Elem h) const;  // g h g^-1

  // Element indices of the generators a permutation group was built from.
  const std::vector<Elem>& generators() const;
  // Permutation realising each element, when built from generators.
  const std::vector<std::vector<int>>& permutations() const;

  // Every subgroup, ordered by (order, sorted elements). Ids index this list.
  const std::vector<Subgroup>& subgroup_list() const;
  int subgroup_count() const;
  const Subgroup& subgroup(int id) const;
  int subgroup_id(ElemMask mask) const;  // -1 when mask is not a subgroup
  int trivial_subgroup() const { return 0; }
  int whole_group() const { return subgroup_count() - 1; }
  bool is_subgroup_of(int h, int k) const;
  int intersect(int h, int k) const;
  int conjugate_subgroup(int h, Elem g) const;
  int class_of(int h) const;
  const std::vector<std::vector<int>>& conjugacy_classes() const;

  ElemMask conjugate_mask(ElemMask mask, Elem g) const;
  ElemMask closure(ElemMask seeds) const;

  bool operator==(const FiniteGroup& o) const;
  bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> d_;
};

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<int>> classes;  // subgroup ids per conjugacy class
};

SubgroupLattice subgroups(const FiniteGroup& g, int max_order = 24);
bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

// C1..C8 (any Cn with n <= 64), S3, D4, Q8.
FiniteGroup builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();
bool is_builtin_group(std::string_view name);

// Human-readable subgroup label such as "e", "G" or "<1,3>".
std::string subgroup_label(const FiniteGroup& g, int id);

}  // namespace tambara
