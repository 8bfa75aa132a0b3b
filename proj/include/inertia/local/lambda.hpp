#pragma once

// Metacyclic tame groups H and the tower Lambda_1(H), Lambda_2(H) = C_p wr H,
// Lambda(H) = their fiber product over H, with its inertia subgroup.

#include <cstdint>

#include "inertia/group/constructions.hpp"

namespace inertia::local {

using group::GroupPtr;
using group::Index;

// <t, s | t^e = 1, s^f = t^r, t^s = t^k> realised as a permutation group
// (right regular representation of the normal form s^j t^i).
struct Metacyclic {
  GroupPtr group;
  Index t = 0;
  Index s = 0;
  std::uint64_t e = 1, f = 1, r = 0, k = 1;
};

// Throws InconsistentParameters unless gcd(k, e) = 1, k^f = 1 mod e and
// r (k - 1) = 0 mod e, i.e. unless the presentation has order e f.
Metacyclic metacyclic_group(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t k);

// H = <tau, sigma | tau^e, sigma^f = tau^r, tau^sigma = tau^p> with gcd(e, p) = 1.
Metacyclic tame_group(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t p);
// Lambda_1 = <t, s | t^e, s^(fp) = t^(rp), t^s = t^p>.
Metacyclic lambda1(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t p);
GroupPtr lambda2(const GroupPtr& H, std::uint64_t p);

struct LambdaTower {
  Metacyclic H;
  Metacyclic lambda1;
  GroupPtr lambda2;
  group::Homomorphism phi1;  // Lambda_1 -> H, t -> tau, s -> sigma
  group::Homomorphism phi2;  // Lambda_2 -> H, projection to the acting part
  GroupPtr lambda;           // fiber product
  group::Subgroup inertia;   // pairs whose Lambda_1 part lies in <t>
};

LambdaTower lambda_fiber(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t p,
                         std::size_t bound = group::kDefaultClosureBound);

}  // namespace inertia::local
