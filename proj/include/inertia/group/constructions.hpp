#pragma once

#include <cstdint>
#include <vector>

#include "inertia/group/homomorphism.hpp"

namespace inertia::group {

GroupPtr cyclic_group(std::uint64_t n);
// Direct product of cyclic groups as permutations on disjoint cycles.
GroupPtr abelian_group(const std::vector<std::uint64_t>& factors);
GroupPtr symmetric_group(std::uint32_t n);

// N x| H.  `generator_action[k][i]` is the image of N->generators()[i] under
// the automorphism assigned to H->generators()[k].  Elements are
// ProductTuple{{n}, h} with (n1,h1)(n2,h2) = (n1 * w(h1)(n2), h1 h2).
// Throws NotAnAction when the data is not a homomorphism H -> Aut(N).
GroupPtr semidirect_product(GroupPtr N, GroupPtr H, const std::vector<std::vector<Index>>& generator_action,
                            std::size_t bound = kDefaultClosureBound);
GroupPtr direct_product(GroupPtr A, GroupPtr B, std::size_t bound = kDefaultClosureBound);

// C_p wr H = F_p[H] x| H with the regular action.  Generators: the base
// vector supported at the identity, then (0, h) for each generator h of H.
GroupPtr wreath_product_regular(std::uint32_t p, GroupPtr H, std::size_t bound = kDefaultClosureBound);

// Pairs (g1, g2) of the direct product with phi1(g1) = phi2(g2).
GroupPtr fiber_product(const Homomorphism& phi1, const Homomorphism& phi2, std::size_t bound = kDefaultClosureBound);

// Projections from a direct or fiber product onto its two factors.
Index first_component(const FiniteGroup& product, Index x);
Index second_component(const FiniteGroup& product, Index x);

// Group-valued mapping table: action[h][n] = w(h)(n) for all elements.
std::vector<std::vector<Index>> extend_action(const FiniteGroup& N, const FiniteGroup& H,
                                              const std::vector<std::vector<Index>>& generator_action);

}  // namespace inertia::group
