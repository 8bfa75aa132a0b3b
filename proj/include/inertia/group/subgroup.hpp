#pragma once

#include <vector>

#include "inertia/group/finite_group.hpp"

namespace inertia::group {

class Subgroup {
 public:
  // Smallest subgroup of `parent` containing `generators`.
  Subgroup(GroupPtr parent, std::vector<Index> generators);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  // Trusted: `elements` is a subgroup generated by `generators`.
  static Subgroup from_elements(GroupPtr parent, std::vector<Index> elements, std::vector<Index> generators);
  // Trusted: `elements` is a subgroup; a small generating set is chosen greedily.
  static Subgroup from_element_set(GroupPtr parent, std::vector<Index> elements);

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Index>& elements() const { return elements_; }  // ascending
  const std::vector<Index>& generators() const { return generators_; }
  bool contains(Index g) const { return member_[g]; }
  bool is_subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

  // Subgroup generated by this one and `extra`.
  Subgroup join(const std::vector<Index>& extra) const;

  // The subgroup as a standalone group over the same arithmetic.
  GroupPtr as_group() const;

 private:
  Subgroup() = default;
  void index_members();

  GroupPtr parent_;
  std::vector<Index> elements_;
  std::vector<Index> generators_;
  std::vector<bool> member_;
};

}  // namespace inertia::group
