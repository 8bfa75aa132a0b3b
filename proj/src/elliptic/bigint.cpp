#include "inertia/elliptic/bigint.hpp"

#include <algorithm>
#include <map>

#include "inertia/error.hpp"

namespace inertia::ec {

namespace {

Int rho_split(const Int& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) { return Int((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = rho_split(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

bool is_probable_prime(const Int& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n0) {
  if (n0 == 0) throw Error(Errc::InvalidParameters, "cannot factor 0");
  Int n = abs(n0);
  std::map<Int, unsigned> out;
  for (unsigned long d = 2; d < 1000000 && Int(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[Int(d)];
      n /= d;
    }
  }
  factor_into(n, out);
  return {out.begin(), out.end()};
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(Errc::InvalidParameters, "valuation of 0");
  Int m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

Int mod(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t to_u64(const Int& x) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) throw Error(Errc::BoundExceeded, "integer does not fit 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, x.get_mpz_t());
  return out;
}

std::uint64_t residue_of_rational(const Rat& x, std::uint64_t m) {
  Int M;
  mpz_import(M.get_mpz_t(), 1, -1, sizeof m, 0, 0, &m);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), M.get_mpz_t()) == 0)
    throw Error(Errc::NonInvertibleDenominator, "denominator of " + to_string(x) + " is not invertible mod " +
                                                    std::to_string(m));
  return to_u64(mod(x.get_num() * inv, M));
}

std::string to_string(const Rat& x) {
  Rat y = x;
  y.canonicalize();
  return y.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw Error(Errc::InvalidSpec, "not a rational number: '" + s + "'");
  if (r.get_den() == 0) throw Error(Errc::InvalidSpec, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace inertia::ec
