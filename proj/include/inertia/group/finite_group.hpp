#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "inertia/group/element.hpp"

namespace inertia::group {

inline constexpr std::size_t kDefaultClosureBound = 200000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Explicit finite group.  Element 0 is the identity; the remaining
// elements appear in breadth-first order of right multiplication by the
// generators, so indices are reproducible for a fixed generator list.
class FiniteGroup {
 public:
  // Closure of `generators`; the arithmetic is inferred from the elements
  // (permutations or matrices only).
  static GroupPtr enumerate(const std::vector<GroupElement>& generators,
                            std::size_t bound = kDefaultClosureBound);
  static GroupPtr enumerate(ArithmeticPtr arithmetic, const std::vector<GroupElement>& generators,
                            std::size_t bound = kDefaultClosureBound);
  // Trusted: `elements` is closed, starts with the identity, and
  // `generators` (indices into it) generate it.
  static GroupPtr from_closed_set(ArithmeticPtr arithmetic, std::vector<GroupElement> elements,
                                  std::vector<Index> generators);

  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(Index i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::optional<Index> find(const GroupElement& g) const;
  Index index_of(const GroupElement& g) const;  // throws NotInGroup

  Index identity() const { return 0; }
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, std::int64_t k) const;
  Index conj(Index x, Index g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  Index commutator(Index x, Index y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  std::uint64_t element_order(Index a) const;

  const std::vector<Index>& generators() const { return generators_; }
  std::vector<GroupElement> generator_elements() const;
  const ElementArithmetic& arithmetic() const { return *arithmetic_; }
  const ArithmeticPtr& arithmetic_ptr() const { return arithmetic_; }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  void finish();

  static constexpr std::size_t kTableLimit = 256;

  ArithmeticPtr arithmetic_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, Index, ElementHash> index_;
  std::vector<Index> generators_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;  // full Cayley table for small groups
  mutable std::once_flag orders_once_;
  mutable std::vector<std::uint32_t> orders_;
};

}  // namespace inertia::group
