#include "inertia/elliptic/construct.hpp"

#include "inertia/elliptic/canonical_lift.hpp"
#include "inertia/elliptic/reduction.hpp"
#include "inertia/elliptic/surjectivity.hpp"
#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::ec {

namespace {

constexpr unsigned kMaxShiftSteps = 10000;

Int to_int(std::uint64_t x) {
  Int z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return z;
}

Int inverse(const Int& x, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), mod(x, m).get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(Errc::UnluckyUnit, x.get_str() + " is not a unit mod " + m.get_str());
  return r;
}

// Smallest nonnegative x with x = r1 mod m1, x = r2 mod m2 (coprime moduli).
Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int t = mod((r2 - r1) * inverse(m1, m2), m2);
  return mod(r1 + m1 * t, m1 * m2);
}

void check_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  if (p <= 13) throw Error(Errc::InvalidParameters, "constructions need p > 13");
}

// Smallest prime q > 3 with q != +-1 mod p.
std::uint64_t auxiliary_prime(std::uint64_t p) {
  for (std::uint64_t q = 5;; q = nt::next_prime(q))
    if (q != p && q % p != 1 && q % p != p - 1) return q;
}

bool short_curve_ok(const Int& A, const Int& B) { return 4 * A * A * A + 27 * B * B != 0; }

// a with A + a p = -3 mod 3q, so -(A + a p)/3 is an integer = 1 mod q.
Int shift_a(const Int& A, std::uint64_t p, std::uint64_t q) {
  Int P = to_int(p), M = 3 * to_int(q);
  return mod((-3 - A) * inverse(P, M), M);
}

// Walks b = b0, b0 + step, ... until the curve is nonsingular and (p, j) is
// not exceptional.
EllipticCurve finish(ConstructionCertificate& c, const Int& Ashift, const Int& b0, const Int& step) {
  Int P = to_int(c.p);
  for (unsigned k = 0; k < kMaxShiftSteps; ++k) {
    Int b = b0 + step * k;
    Int Bshift = c.B + b * P;
    if (!short_curve_ok(Ashift, Bshift)) continue;
    EllipticCurve E = EllipticCurve::short_form(Rat(Ashift), Rat(Bshift));
    if (in_exception_set(c.p, E.j())) continue;
    c.b = b;
    return E;
  }
  throw Error(Errc::SearchExhausted, "no admissible b found");
}

}  // namespace

std::string construction_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::Supersingular:
      return "supersingular";
    case ConstructionKind::OrdinaryDiagonal:
      return "ordinary_diagonal";
    case ConstructionKind::OrdinaryNonDiagonal:
      return "ordinary_non_diagonal";
  }
  return "";
}

nlohmann::json ConstructionCertificate::to_json() const {
  nlohmann::json j{{"kind", construction_name(kind)},
                   {"p", p},
                   {"q", q},
                   {"seed", {{"A", A.get_str()}, {"B", B.get_str()}}},
                   {"shift", {{"a", a.get_str()}, {"b", b.get_str()}}}};
  if (j_target) j["j_target_mod_p2"] = *j_target;
  if (j_lift) j["j_lift_mod_p2"] = *j_lift;
  if (curve) {
    j["curve"] = curve->to_json();
    j["j"] = {{"num", curve->j().get_num().get_str()}, {"den", curve->j().get_den().get_str()}};
  }
  return j;
}

ConstructionCertificate construct_supersingular(std::uint64_t p) {
  check_prime(p);
  ConstructionCertificate c;
  c.kind = ConstructionKind::Supersingular;
  c.p = p;
  bool found = false;
  for (std::uint64_t A = 0; A < p && !found; ++A)
    for (std::uint64_t B = 0; B < p && !found; ++B) {
      if ((4 * A * A % p * A + 27 * B * B) % p == 0) continue;
      auto R = point_count(EllipticCurve::short_form(Rat(to_int(A)), Rat(to_int(B))), p);
      if (R.type == ReductionType::Supersingular) {
        c.A = to_int(A);
        c.B = to_int(B);
        found = true;
      }
    }
  if (!found) throw Error(Errc::SearchExhausted, "no supersingular curve over F_p");

  c.q = auxiliary_prime(p);
  c.a = shift_a(c.A, p, c.q);
  Int P = to_int(p), Q = to_int(c.q);
  Int Ashift = c.A + c.a * P;
  // B + b p = 2 mod q.
  Int b0 = mod((2 - c.B) * inverse(P, Q), Q);
  c.curve = finish(c, Ashift, b0, Q);
  return c;
}

ConstructionCertificate construct_ordinary(std::uint64_t p, bool diagonal) {
  check_prime(p);
  const std::uint64_t q = auxiliary_prime(p);
  Int P = to_int(p), Q = to_int(q), P2 = P * P;
  for (std::uint64_t A = 1; A < p; ++A)
    for (std::uint64_t B = 1; B < p; ++B) {
      if ((4 * A * A % p * A + 27 * B * B) % p == 0) continue;
      EllipticCurve seed = EllipticCurve::short_form(Rat(to_int(A)), Rat(to_int(B)));
      if (point_count(seed, p).type != ReductionType::Ordinary) continue;
      try {
        ConstructionCertificate c;
        c.kind = diagonal ? ConstructionKind::OrdinaryDiagonal : ConstructionKind::OrdinaryNonDiagonal;
        c.p = p;
        c.q = q;
        c.A = to_int(A);
        c.B = to_int(B);
        c.j_lift = canonical_lift_j(seed, p).j_lift;
        // j* = j-up, or another lift of the same residue mod p.
        Int jstar = to_int(*c.j_lift);
        if (!diagonal) jstar = mod(jstar + P, P2);
        c.j_target = to_u64(jstar);

        c.a = shift_a(c.A, p, q);
        Int Ashift = c.A + c.a * P;
        // (2^8 3^3 - 4 j*) A'^3 - 27 j* B^2 = n p.
        Int lhs = (6912 - 4 * jstar) * Ashift * Ashift * Ashift - 27 * jstar * c.B * c.B;
        if (mod(lhs, P) != 0) throw Error(Errc::CheckFailed, "j* does not reduce to the seed's j");
        Int n = lhs / P;
        // j_E = j* mod p^2 reduces to 54 j* B b = n mod p.
        Int b_mod_p = mod(n * inverse(54 * jstar * c.B, P), P);
        Int b_mod_q = mod((2 - c.B) * inverse(P, Q), Q);
        Int b0 = crt(b_mod_p, P, b_mod_q, Q);
        c.curve = finish(c, Ashift, b0, P * Q);
        return c;
      } catch (const Error& e) {
        if (e.code() != Errc::UnluckyUnit && e.code() != Errc::MultipleRoot) throw;
      }
    }
  throw Error(Errc::SearchExhausted, "no usable ordinary seed over F_p");
}

std::vector<std::string> validate_certificate(const ConstructionCertificate& c) {
  std::vector<std::string> fail;
  if (!c.curve) return {"no curve"};
  const EllipticCurve& E = *c.curve;
  const std::uint64_t p = c.p;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) fail.push_back(what);
  };
  try {
    auto R = point_count(E, p);
    if (c.kind == ConstructionKind::Supersingular) {
      check(R.type == ReductionType::Supersingular, "supersingular at p");
    } else {
      check(R.type == ReductionType::Ordinary, "ordinary at p");
      bool diag = gross_diagonalizable(E, p);
      check(diag == (c.kind == ConstructionKind::OrdinaryDiagonal), "gross flag matches the request");
    }
  } catch (const Error& e) {
    fail.push_back(std::string("reduction at p: ") + e.what());
  }
  Int Q = to_int(c.q);
  check(nt::is_prime(c.q) && c.q > 3, "q is a prime > 3");
  check(c.q % p != 1 && c.q % p != p - 1, "q != +-1 mod p");
  check(mpz_divisible_p(E.j().get_den().get_mpz_t(), Q.get_mpz_t()) != 0, "q divides the denominator of j");
  check(!in_exception_set(p, E.j()), "(p, j) outside the exceptional set");
  check(zywina_surjectivity(E, p).surjective(), "denominator criterion gives surjective");
  return fail;
}

}  // namespace inertia::ec
