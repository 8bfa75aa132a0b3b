#include "inertia/group/subgroup.hpp"

#include <algorithm>

#include "inertia/error.hpp"

namespace inertia::group {

namespace {

// Closure of `seed` (already closed, or just {identity}) under right
// multiplication by `gens`, appended in breadth-first order.
void close_under(const FiniteGroup& G, std::vector<Index>& elems, std::vector<bool>& member,
                 const std::vector<Index>& gens, std::size_t start) {
  for (std::size_t head = start; head < elems.size(); ++head) {
    for (Index g : gens) {
      Index x = G.mul(elems[head], g);
      if (!member[x]) {
        member[x] = true;
        elems.push_back(x);
      }
    }
  }
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<Index> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  const auto& G = *parent_;
  for (Index g : generators_)
    if (g >= G.order()) throw Error(Errc::NotInGroup, "generator index out of range");
  member_.assign(G.order(), false);
  member_[0] = true;
  elements_.push_back(0);
  close_under(G, elements_, member_, generators_, 0);
  std::sort(elements_.begin(), elements_.end());
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  Subgroup s;
  s.parent_ = parent;
  s.generators_ = parent->generators();
  s.elements_.resize(parent->order());
  for (Index i = 0; i < parent->order(); ++i) s.elements_[i] = i;
  s.member_.assign(parent->order(), true);
  return s;
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<Index> elements, std::vector<Index> generators) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.elements_ = std::move(elements);
  std::sort(s.elements_.begin(), s.elements_.end());
  s.generators_ = std::move(generators);
  s.index_members();
  return s;
}

Subgroup Subgroup::from_element_set(GroupPtr parent, std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup current = trivial(parent);
  for (Index x : elements) {
    if (current.order() == elements.size()) break;
    if (!current.contains(x)) current = current.join({x});
  }
  if (current.order() != elements.size()) throw Error(Errc::InvalidElement, "element set is not a subgroup");
  return current;
}

void Subgroup::index_members() {
  member_.assign(parent_->order(), false);
  for (Index e : elements_) member_[e] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(generators_.begin(), generators_.end(), [&](Index g) { return other.contains(g); });
}

Subgroup Subgroup::join(const std::vector<Index>& extra) const {
  Subgroup s;
  s.parent_ = parent_;
  s.generators_ = generators_;
  std::vector<Index> fresh;
  for (Index x : extra) {
    if (x >= parent_->order()) throw Error(Errc::NotInGroup, "element index out of range");
    if (!member_[x]) fresh.push_back(x);
  }
  if (fresh.empty()) return *this;
  s.generators_.insert(s.generators_.end(), fresh.begin(), fresh.end());
  s.member_ = member_;
  s.elements_ = elements_;
  // Existing elements are closed under the old generators; closing from the
  // start under all generators is simplest and still linear in the result.
  close_under(*parent_, s.elements_, s.member_, s.generators_, 0);
  std::sort(s.elements_.begin(), s.elements_.end());
  return s;
}

GroupPtr Subgroup::as_group() const {
  std::vector<GroupElement> elems;
  elems.reserve(elements_.size());
  for (Index e : elements_) elems.push_back(parent_->element(e));
  std::vector<Index> gens;
  for (Index g : generators_) {
    auto pos = std::lower_bound(elements_.begin(), elements_.end(), g) - elements_.begin();
    gens.push_back(static_cast<Index>(pos));
  }
  return FiniteGroup::from_closed_set(parent_->arithmetic_ptr(), std::move(elems), std::move(gens));
}

}  // namespace inertia::group
