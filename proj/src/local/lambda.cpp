#include "inertia/local/lambda.hpp"

#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::local {

using group::GroupElement;
using group::Permutation;

Metacyclic metacyclic_group(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t k) {
  if (e == 0 || f == 0) throw Error(Errc::InconsistentParameters, "e and f must be positive");
  if (nt::gcd(k % e, e) != 1 % e && e > 1)
    throw Error(Errc::InconsistentParameters, "gcd(k, e) != 1");
  if (nt::powmod(k, f, e) != 1 % e)
    throw Error(Errc::InconsistentParameters,
                std::to_string(k) + "^" + std::to_string(f) + " is not 1 mod " + std::to_string(e));
  if ((r % e) * ((k + e - 1) % e) % e != 0)
    throw Error(Errc::InconsistentParameters, "r (k - 1) is not 0 mod e");
  std::uint64_t n = e * f;
  if (n > (1u << 20)) throw Error(Errc::BoundExceeded, "metacyclic group too large");

  // s^j1 t^i1 * s^j2 t^i2 = s^(j1+j2) t^(i1 k^j2 + i2), folding s^f = t^r.
  auto idx = [e](std::uint64_t j, std::uint64_t i) { return static_cast<std::uint32_t>(j * e + i); };
  std::vector<std::uint64_t> kpow(f);
  for (std::uint64_t j = 0; j < f; ++j) kpow[j] = nt::powmod(k, j, e);
  auto right_mul = [&](std::uint64_t j2, std::uint64_t i2) {
    Permutation perm;
    perm.images.resize(n);
    for (std::uint64_t j1 = 0; j1 < f; ++j1)
      for (std::uint64_t i1 = 0; i1 < e; ++i1) {
        std::uint64_t j = j1 + j2;
        std::uint64_t i = (i1 * kpow[j2] + i2) % e;
        if (j >= f) {
          j -= f;
          i = (i + r) % e;
        }
        perm.images[idx(j1, i1)] = idx(j, i);
      }
    return perm;
  };
  Permutation t = right_mul(0, 1 % e);
  Permutation s = f > 1 ? right_mul(1, 0) : right_mul(0, r % e);
  auto G = group::FiniteGroup::enumerate(group::permutation_arithmetic(static_cast<std::uint32_t>(n)), {t, s});
  if (G->order() != n)
    throw Error(Errc::InconsistentParameters, "presentation collapses to order " + std::to_string(G->order()));
  Metacyclic M;
  M.group = G;
  M.t = G->index_of(t);
  M.s = G->index_of(s);
  M.e = e;
  M.f = f;
  M.r = r % e;
  M.k = k;
  return M;
}

Metacyclic tame_group(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  if (nt::gcd(e, p) != 1) throw Error(Errc::InconsistentParameters, "gcd(e, p) != 1");
  return metacyclic_group(e, f, r, p);
}

Metacyclic lambda1(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t p) {
  // The data of H must itself be consistent.
  tame_group(e, f, r, p);
  return metacyclic_group(e, f * p, r * p, p);
}

GroupPtr lambda2(const GroupPtr& H, std::uint64_t p) {
  return group::wreath_product_regular(static_cast<std::uint32_t>(p), H);
}

LambdaTower lambda_fiber(std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t p, std::size_t bound) {
  Metacyclic H = tame_group(e, f, r, p);
  Metacyclic L1 = lambda1(e, f, r, p);
  GroupPtr L2 = group::wreath_product_regular(static_cast<std::uint32_t>(p), H.group, bound);

  // Lambda_1's generators are (t, s) in that order.
  auto phi1 = group::Homomorphism::from_generator_images(L1.group, H.group, std::vector<Index>{H.t, H.s});
  std::vector<Index> images{H.group->identity()};
  for (Index h : H.group->generators()) images.push_back(h);
  auto phi2 = group::Homomorphism::from_generator_images(L2, H.group, images);

  GroupPtr L = group::fiber_product(phi1, phi2, bound);
  group::Subgroup T(L1.group, {L1.t});
  std::vector<Index> inertia;
  for (Index x = 0; x < L->order(); ++x)
    if (T.contains(group::first_component(*L, x))) inertia.push_back(x);
  auto I = group::Subgroup::from_element_set(L, std::move(inertia));
  return LambdaTower{H, L1, L2, std::move(phi1), std::move(phi2), L, std::move(I)};
}

}  // namespace inertia::local
