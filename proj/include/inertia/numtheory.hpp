#pragma once

// Machine-word number theory shared by every module.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace inertia::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
i64 mod(i64 a, i64 m);  // representative in [0, m)
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
std::optional<u64> inverse_mod(i64 a, u64 m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);
u64 next_prime(u64 n);  // smallest prime > n

std::vector<std::pair<u64, unsigned>> factor(u64 n);
std::vector<u64> divisors(u64 n);  // ascending
u64 euler_phi(u64 n);

u64 multiplicative_order(u64 a, u64 m);  // requires gcd(a, m) == 1
u64 primitive_root(u64 p);               // smallest generator of (Z/p)^x
u64 smallest_nonresidue(u64 p);          // p odd prime
int legendre(i64 a, u64 p);              // p odd prime, returns -1, 0, 1

// p-adic valuation of n > 0, and n with all factors p removed.
unsigned valuation(u64 n, u64 p);
u64 prime_power(u64 p, unsigned k);  // throws on overflow

}  // namespace inertia::nt
