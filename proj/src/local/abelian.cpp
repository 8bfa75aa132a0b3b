#include "inertia/local/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::local {

std::string status_name(Status s) {
  switch (s) {
    case Status::Realizable: return "realizable";
    case Status::NotRealizable: return "not_realizable";
    case Status::OutOfRegime: return "out_of_regime";
  }
  return "unknown";
}

bool is_quotient_of_zp_units(const AbelianType& A, std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  const auto& d = A.factors;
  if (p == 2) {
    if (!group::is_p_group_order(A.order(), 2)) return false;
    return d.size() <= 1 || (d.size() == 2 && d[0] == 2);
  }
  if (d.size() > 1) return false;
  if (d.empty()) return true;
  std::uint64_t n = d[0];
  while (n % p == 0) n /= p;
  return (p - 1) % n == 0;
}

AbelianType units_mod_prime_power(std::uint64_t p, unsigned n) {
  if (n == 0) throw Error(Errc::InvalidParameters, "exponent must be positive");
  if (p == 2) {
    if (n == 1) return AbelianType{};
    if (n == 2) return AbelianType::from_factors({2});
    return AbelianType::from_factors({2, nt::prime_power(2, n - 2)});
  }
  return AbelianType::from_factors({p - 1, nt::prime_power(p, n - 1)});
}

bool embeds(const AbelianType& sub, const AbelianType& ambient) {
  auto amb = ambient.primary_parts();
  std::map<std::uint64_t, std::vector<unsigned>> parts(amb.begin(), amb.end());
  for (const auto& [p, lambda] : sub.primary_parts()) {
    auto it = parts.find(p);
    if (it == parts.end()) return false;
    const auto& mu = it->second;
    if (lambda.size() > mu.size()) return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] > mu[i]) return false;
  }
  return true;
}

AbelianWitness abelian_construction_witness(const AbelianType& G, const AbelianType& I, std::uint64_t p) {
  if (!is_quotient_of_zp_units(I, p))
    throw Error(Errc::InvalidParameters, "inertia type is not a quotient of the p-adic units");
  AbelianWitness w;
  // A finite abelian group is a quotient of U iff it embeds in U.
  w.n = 1;
  while (!embeds(I, units_mod_prime_power(p, static_cast<unsigned>(w.n)))) ++w.n;
  std::set<std::uint64_t> used;
  for (auto ni : G.factors) {
    std::uint64_t q = ni + 1;
    while (!(nt::is_prime(q) && q != p && !used.count(q))) q += ni;
    used.insert(q);
    w.primes.push_back(q);
    w.orders.push_back(ni);
  }
  return w;
}

RealizabilityVerdict abelian_realizable(const AbelianType& G, const AbelianType& I, std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  if (!embeds(I, G)) throw Error(Errc::NotASubgroupType, "I does not embed in G");
  RealizabilityVerdict v;
  if (!is_quotient_of_zp_units(I, p)) {
    v.status = Status::NotRealizable;
    v.reason = "I is not a quotient of Z_p^×";
    return v;
  }
  v.status = Status::Realizable;
  v.reason = I.factors.empty() ? "trivial inertia (unramified)" : "I is a quotient of Z_p^×";
  v.abelian = abelian_construction_witness(G, I, p);
  return v;
}

std::string validate_abelian_witness(const AbelianType& G, const AbelianType& I, std::uint64_t p,
                                     const AbelianWitness& w) {
  if (w.primes.size() != w.orders.size()) return "primes and orders differ in length";
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < w.primes.size(); ++i) {
    std::uint64_t q = w.primes[i];
    if (!nt::is_prime(q)) return std::to_string(q) + " is not prime";
    if (q == p) return "auxiliary prime equals p";
    if (!seen.insert(q).second) return "auxiliary primes are not distinct";
    if (w.orders[i] == 0 || (q - 1) % w.orders[i] != 0) return "order does not divide q - 1";
  }
  if (AbelianType::from_factors(w.orders) != G) return "factor orders do not rebuild G";
  if (w.n == 0 || !embeds(I, units_mod_prime_power(p, static_cast<unsigned>(w.n))))
    return "I is not a quotient of (Z/p^n)^x";
  return "";
}

}  // namespace inertia::local
