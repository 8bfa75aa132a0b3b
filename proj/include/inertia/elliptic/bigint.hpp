#pragma once

// Exact integer and rational helpers on top of GMP.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace inertia::ec {

using Int = mpz_class;
using Rat = mpq_class;

// Prime factorisation of |n| (n != 0): trial division below 10^6, then
// Pollard rho.  Returned in ascending order.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

bool is_probable_prime(const Int& n);
unsigned valuation(const Int& n, const Int& p);  // n != 0
Int mod(const Int& x, const Int& m);             // in [0, m)
std::uint64_t to_u64(const Int& x);              // throws if it does not fit

// x mod m for a rational x; NonInvertibleDenominator when gcd(den, m) > 1.
std::uint64_t residue_of_rational(const Rat& x, std::uint64_t m);

// "num/den" or "num".
std::string to_string(const Rat& x);
Rat rat_from_string(const std::string& s);  // InvalidSpec on junk

}  // namespace inertia::ec
