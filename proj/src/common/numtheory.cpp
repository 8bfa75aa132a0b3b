#include "inertia/numtheory.hpp"

#include <algorithm>
#include <limits>

#include "inertia/error.hpp"

namespace inertia {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::NotAPGroup: return "NotAPGroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotASubgroupType: return "NotASubgroupType";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::InconsistentParameters: return "InconsistentParameters";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::BadReduction: return "BadReduction";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case Errc::PrecisionFailure: return "PrecisionFailure";
    case Errc::MultipleRoot: return "MultipleRoot";
    case Errc::BadOrSupersingular: return "BadOrSupersingular";
    case Errc::InconclusiveSurjectivity: return "InconclusiveSurjectivity";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::UnluckyUnit: return "UnluckyUnit";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace inertia

namespace inertia::nt {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

u64 gcd(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

std::optional<u64> inverse_mod(i64 a, u64 m) {
  if (m == 1) return 0;
  i64 r0 = static_cast<i64>(m), r1 = mod(a, static_cast<i64>(m));
  i64 s0 = 0, s1 = 1;
  while (r1) {
    i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  return static_cast<u64>(mod(s0, static_cast<i64>(m)));
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

namespace {

u64 rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> result;
  for (u64 p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1);
  }
  return result;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (auto [p, k] : factor(n)) {
    std::size_t count = divs.size();
    u64 pk = 1;
    for (unsigned i = 0; i < k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (auto [p, k] : factor(n)) result = result / p * (p - 1);
  return result;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (gcd(a % m, m) != 1) throw Error(Errc::InvalidParameters, "element not a unit");
  u64 order = euler_phi(m);
  for (auto [p, k] : factor(order)) {
    for (unsigned i = 0; i < k && powmod(a, order / p, m) == 1 % m; ++i) order /= p;
  }
  return order;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  auto fs = factor(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = std::all_of(fs.begin(), fs.end(),
                          [&](auto pf) { return powmod(g, (p - 1) / pf.first, p) != 1; });
    if (ok) return g;
  }
  throw Error(Errc::InvalidPrime, "no primitive root");
}

u64 smallest_nonresidue(u64 p) {
  for (u64 d = 2; d < p; ++d) {
    if (legendre(static_cast<i64>(d), p) == -1) return d;
  }
  throw Error(Errc::InvalidPrime, "no quadratic non-residue");
}

int legendre(i64 a, u64 p) {
  u64 r = static_cast<u64>(mod(a, static_cast<i64>(p)));
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 prime_power(u64 p, unsigned k) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > std::numeric_limits<u64>::max() / p) throw Error(Errc::BoundExceeded, "prime power overflow");
    r *= p;
  }
  return r;
}

}  // namespace inertia::nt
