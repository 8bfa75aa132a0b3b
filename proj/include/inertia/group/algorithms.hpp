#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "inertia/group/homomorphism.hpp"

namespace inertia::group {

inline constexpr std::size_t kDefaultIndexBound = 10000;

// Invariant factors d1 | d2 | ... ; the trivial group has an empty list.
struct AbelianType {
  std::vector<std::uint64_t> factors;

  // Accepts any list of positive integers and normalises it to invariant
  // factors, e.g. {2, 3} -> {6}, {1} -> {}.
  static AbelianType from_factors(const std::vector<std::uint64_t>& any);
  std::uint64_t order() const;
  // Exponent of each prime in each cyclic factor: {p -> [k1 >= k2 >= ...]}.
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> primary_parts() const;
  bool operator==(const AbelianType&) const = default;
};

Subgroup subgroup_generated(const GroupPtr& G, const std::vector<GroupElement>& elems);
Subgroup normal_closure(const GroupPtr& G, const std::vector<GroupElement>& elems);
// Normal closure of `elems` under conjugation by `ambient` (elems need not lie in it).
Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<Index>& elems);

bool is_normal_in(const Subgroup& ambient, const Subgroup& N);
bool is_normal(const GroupPtr& G, const Subgroup& N);
bool is_p_group_order(std::uint64_t order, std::uint64_t p);
Subgroup conjugate_subgroup(const Subgroup& S, Index g);  // g^-1 S g

// Grows a p-subgroup one normalising p-element at a time, always taking the
// smallest element index that works, so the result is reproducible.
Subgroup sylow_p_subgroup(const GroupPtr& G, std::uint64_t p);
Subgroup sylow_p_subgroup(const Subgroup& S, std::uint64_t p);

// P^p [P, P] for a p-group; throws NotAPGroup.
Subgroup frattini_p_group(const GroupPtr& P, std::uint64_t p);
Subgroup frattini_p_group(const Subgroup& P, std::uint64_t p);
unsigned generator_rank_p_group(const GroupPtr& P, std::uint64_t p);
unsigned generator_rank_p_group(const Subgroup& P, std::uint64_t p);

struct Quotient {
  GroupPtr group;  // permutation group on the cosets
  Homomorphism projection;
};
Quotient quotient_group(const GroupPtr& G, const Subgroup& N);

// All D with I <= D <= G, sorted by (order, element set).
std::vector<Subgroup> intermediate_subgroups(const GroupPtr& G, const Subgroup& I,
                                             std::size_t index_bound = kDefaultIndexBound);

AbelianType abelian_invariants(const GroupPtr& G);

std::optional<Index> is_conjugate_subgroup(const GroupPtr& G, const Subgroup& A, const Subgroup& B);
// Conjugators restricted to `within` (e.g. a normaliser).
std::optional<Index> is_conjugate_subgroup_within(const Subgroup& within, const Subgroup& A, const Subgroup& B);

// Smallest k <= bound such that some k elements generate G; nullopt means
// above the bound.
std::optional<unsigned> minimal_generating_size(const GroupPtr& G, unsigned bound);

// One representative per conjugacy class, smallest index first.
std::vector<Index> conjugacy_class_representatives(const GroupPtr& G);

}  // namespace inertia::group
