#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "inertia/group/algorithms.hpp"
#include "inertia/local/verdict.hpp"

namespace inertia::local {

using group::GroupPtr;
using group::Index;
using group::Subgroup;

// Searches tau over generators of I and sigma over D (smallest indices
// first) for tau^sigma = tau^p with <sigma, tau> = D, <tau> = I and
// sigma^f in <tau>.  Conjugation is tau^sigma = sigma^-1 tau sigma.
RealizabilityVerdict tame_realizable(const GroupPtr& D, const Subgroup& I, std::uint64_t p);

RealizabilityVerdict qp_realizable_odd(const GroupPtr& D, const Subgroup& I, std::uint64_t p);
RealizabilityVerdict q_realizable_odd(const GroupPtr& G, const Subgroup& I, std::uint64_t p,
                                      std::size_t index_bound = group::kDefaultIndexBound);

// Checks a local witness directly in D, working modulo I_p without forming
// the quotient.  D is generated by the witness's d_generators inside G.
// Returns an empty string on success, otherwise the first failed claim.
std::string validate_local_witness(const GroupPtr& G, const Subgroup& I, std::uint64_t p, const LocalWitness& w);

bool p_group_structure_check(const GroupPtr& D, const Subgroup& I, unsigned n, std::uint64_t p);
bool pro_odd_quotient_check(const GroupPtr& D, std::uint64_t p);

// For pi: G -> H, finds s, t in G with pi(s) = sigma, pi(t) = tau and
// t^s = t^p.
std::optional<std::pair<Index, Index>> lift_tame_generators(const group::Homomorphism& pi, Index sigma, Index tau,
                                                            std::uint64_t p);

}  // namespace inertia::local
