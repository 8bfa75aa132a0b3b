#pragma once

#include <cstdint>

#include "inertia/group/algorithms.hpp"
#include "inertia/local/verdict.hpp"

namespace inertia::local {

using group::AbelianType;

bool is_quotient_of_zp_units(const AbelianType& A, std::uint64_t p);

// (Z/p^n)^x for n >= 1.
AbelianType units_mod_prime_power(std::uint64_t p, unsigned n);

// Whether a group of type `sub` embeds in one of type `ambient`: for each
// prime the partition of `sub` must fit inside that of `ambient`.
bool embeds(const AbelianType& sub, const AbelianType& ambient);

RealizabilityVerdict abelian_realizable(const AbelianType& G, const AbelianType& I, std::uint64_t p);
AbelianWitness abelian_construction_witness(const AbelianType& G, const AbelianType& I, std::uint64_t p);

// Re-checks every claim of a witness from scratch; returns an empty string
// on success, otherwise the first failed claim.
std::string validate_abelian_witness(const AbelianType& G, const AbelianType& I, std::uint64_t p,
                                     const AbelianWitness& w);

}  // namespace inertia::local
