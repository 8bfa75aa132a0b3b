#include "inertia/elliptic/reduction.hpp"

#include <vector>

#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::ec {

namespace {

// v_l of a nonzero rational (may be negative).
long rat_valuation(const Rat& x, const Int& l) {
  if (x == 0) return 1 << 20;
  long v = 0;
  if (mpz_divisible_p(x.get_num().get_mpz_t(), l.get_mpz_t())) v += valuation(x.get_num(), l);
  if (mpz_divisible_p(x.get_den().get_mpz_t(), l.get_mpz_t())) v -= valuation(x.get_den(), l);
  return v;
}

bool l_integral(const std::array<Rat, 5>& a, const Int& l) {
  for (const auto& x : a)
    if (rat_valuation(x, l) < 0) return false;
  return true;
}

Rat pow_rat(const Int& l, int k) {
  Int m;
  mpz_pow_ui(m.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rat(1, 1) / Rat(m) : Rat(m);
}

// Change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
std::array<Rat, 5> transform(const std::array<Rat, 5>& a, const Rat& u, const Rat& r, const Rat& s, const Rat& t) {
  const Rat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  Rat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  std::array<Rat, 5> out{
      (a1 + 2 * s) / u,
      (a2 - s * a1 + 3 * r - s * s) / u2,
      (a3 + r * a1 + 2 * t) / u3,
      (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4,
      (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6,
  };
  for (auto& x : out) x.canonicalize();
  return out;
}

// Makes the model l-integral by scaling with u = l^-k.
std::array<Rat, 5> make_integral(std::array<Rat, 5> a, const Int& l) {
  while (!l_integral(a, l)) a = transform(a, Rat(1) / Rat(l), 0, 0, 0);
  return a;
}

}  // namespace

std::string reduction_name(ReductionType t) {
  switch (t) {
    case ReductionType::Ordinary:
      return "ordinary";
    case ReductionType::Supersingular:
      return "supersingular";
    case ReductionType::Bad:
      return "bad";
  }
  return "bad";
}

LocalModel local_minimal_model(const EllipticCurve& E, std::uint64_t ell) {
  if (ell == 2) throw Error(Errc::Unsupported, "reduction at 2 is not supported");
  if (!nt::is_prime(ell)) throw Error(Errc::InvalidPrime, std::to_string(ell) + " is not prime");
  Int l(std::to_string(ell));
  LocalModel M;
  M.ell = ell;

  if (ell >= 5) {
    Rat c4 = E.invariants().c4, c6 = E.invariants().c6;
    // Scale until l-integral, then strip l^4 | c4, l^6 | c6 pairs.
    while (rat_valuation(c4, l) < 0 || rat_valuation(c6, l) < 0) {
      c4 *= pow_rat(l, 4);
      c6 *= pow_rat(l, 6);
    }
    while (rat_valuation(c4, l) >= 4 && rat_valuation(c6, l) >= 6) {
      c4 /= pow_rat(l, 4);
      c6 /= pow_rat(l, 6);
    }
    M.a = {Rat(0), Rat(0), Rat(0), Rat(-27 * c4), Rat(-54 * c6)};
    Rat disc = (c4 * c4 * c4 - c6 * c6) / 1728;
    M.disc_valuation = static_cast<unsigned>(rat_valuation(disc, l));
    return M;
  }

  // l = 3: descale by u = 3 whenever some integral shift allows it.  r only
  // matters mod 9, s mod 3 and t mod 27 for the new model's integrality.
  std::array<Rat, 5> a = make_integral(E.a(), l);
  for (;;) {
    auto inv = curve_invariants(a);
    if (rat_valuation(inv.disc, l) < 12 || rat_valuation(inv.c4, l) < 4 || rat_valuation(inv.c6, l) < 6) break;
    bool found = false;
    for (int r = 0; r < 9 && !found; ++r)
      for (int s = 0; s < 3 && !found; ++s)
        for (int t = 0; t < 27 && !found; ++t) {
          auto b = transform(a, Rat(3), r, s, t);
          if (l_integral(b, l)) {
            a = b;
            found = true;
          }
        }
    if (!found) break;
  }
  M.a = a;
  M.disc_valuation = static_cast<unsigned>(rat_valuation(curve_invariants(a).disc, l));
  return M;
}

bool good_reduction(const EllipticCurve& E, std::uint64_t ell) {
  return local_minimal_model(E, ell).disc_valuation == 0;
}

ReductionData point_count(const EllipticCurve& E, std::uint64_t ell) {
  if (ell > kMaxPointCountPrime) throw Error(Errc::BoundExceeded, "point counting is capped at l <= 10^6");
  LocalModel M = local_minimal_model(E, ell);
  if (M.disc_valuation != 0) throw Error(Errc::BadReduction, "bad reduction at " + std::to_string(ell));

  std::uint64_t c[5];
  for (int i = 0; i < 5; ++i) c[i] = residue_of_rational(M.a[i], ell);
  std::vector<signed char> chi(ell, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y < ell; ++y) chi[y * y % ell] = 1;

  // y^2 + (a1 x + a3) y = f(x) has 1 + chi(disc) solutions in y.
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < ell; ++x) {
    std::uint64_t lin = (c[0] * x + c[2]) % ell;
    std::uint64_t f = (((x + c[1]) % ell * x + c[3]) % ell * x + c[4]) % ell;
    std::uint64_t d = (lin * lin + 4 * f) % ell;
    count += static_cast<std::uint64_t>(1 + chi[d]);
  }
  ReductionData R;
  R.ell = ell;
  R.good = true;
  R.count = count;
  R.a = static_cast<std::int64_t>(ell + 1) - static_cast<std::int64_t>(count);
  if (static_cast<std::uint64_t>(R.a * R.a) > 4 * ell)
    throw Error(Errc::CheckFailed, "Hasse bound violated at " + std::to_string(ell));
  R.type = R.a % static_cast<std::int64_t>(ell) == 0 ? ReductionType::Supersingular : ReductionType::Ordinary;
  return R;
}

}  // namespace inertia::ec
