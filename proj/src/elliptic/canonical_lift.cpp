#include "inertia/elliptic/canonical_lift.hpp"

#include "inertia/elliptic/class_polynomial.hpp"
#include "inertia/elliptic/reduction.hpp"
#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::ec {

namespace {

Int to_int(std::uint64_t x) {
  Int z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return z;
}

std::vector<Int> derivative(const std::vector<Int>& H) {
  std::vector<Int> out;
  for (std::size_t i = 1; i < H.size(); ++i) out.push_back(H[i] * static_cast<unsigned long>(i));
  return out;
}

}  // namespace

nlohmann::json CanonicalLiftResult::to_json() const {
  return {{"p", p},
          {"a_p", a_p},
          {"j_mod_p", j_bar},
          {"frobenius_disc", frobenius_disc},
          {"class_polynomial_disc", disc},
          {"conductor", conductor},
          {"class_number", degree},
          {"j_lift_mod_p2", j_lift}};
}

std::uint64_t eval_mod(const std::vector<Int>& H, std::uint64_t x, std::uint64_t m) {
  Int M = to_int(m), X = to_int(x), acc = 0;
  for (auto it = H.rbegin(); it != H.rend(); ++it) acc = mod(acc * X + *it, M);
  return to_u64(acc);
}

CanonicalLiftResult canonical_lift_j(const EllipticCurve& E, std::uint64_t p) {
  if (p < 3 || !nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");
  ReductionData R;
  try {
    R = point_count(E, p);
  } catch (const Error& e) {
    if (e.code() == Errc::BadReduction) throw Error(Errc::BadOrSupersingular, "bad reduction at " + std::to_string(p));
    throw;
  }
  if (R.type != ReductionType::Ordinary)
    throw Error(Errc::BadOrSupersingular, "supersingular reduction at " + std::to_string(p));

  CanonicalLiftResult out;
  out.p = p;
  out.a_p = R.a;
  out.j_bar = residue_of_rational(E.j(), p);
  out.frobenius_disc = R.a * R.a - 4 * static_cast<std::int64_t>(p);
  const std::uint64_t p2 = p * p;

  // The endomorphism ring of the reduction is the order of discriminant
  // (a_p^2 - 4p) / f^2 for some f; the matching class polynomial is the one
  // with j_bar as a root.
  for (std::uint64_t f = 1; static_cast<std::int64_t>(f * f) <= -out.frobenius_disc; ++f) {
    std::int64_t f2 = static_cast<std::int64_t>(f * f);
    if (out.frobenius_disc % f2 != 0) continue;
    std::int64_t D = out.frobenius_disc / f2;
    if (((D % 4) + 4) % 4 > 1) continue;
    auto H = hilbert_class_polynomial(D);
    if (eval_mod(H, out.j_bar, p) != 0) continue;
    auto dH = derivative(H);
    std::uint64_t slope = eval_mod(dH, out.j_bar, p);
    if (slope == 0)
      throw Error(Errc::MultipleRoot, "j mod p is a repeated root of H_" + std::to_string(D) + " mod p");
    // Newton step: j1 = j0 - H(j0) / H'(j0) mod p^2.
    std::uint64_t h = eval_mod(H, out.j_bar, p2);
    std::uint64_t inv = *nt::inverse_mod(eval_mod(dH, out.j_bar, p2), p2);
    std::uint64_t step = nt::mulmod(h, inv, p2);
    out.j_lift = (out.j_bar + p2 - step) % p2;
    out.disc = D;
    out.conductor = f;
    out.degree = H.size() - 1;
    if (eval_mod(H, out.j_lift, p2) != 0) throw Error(Errc::CheckFailed, "Hensel lift is not a root mod p^2");
    return out;
  }
  throw Error(Errc::CheckFailed, "no class polynomial of discriminant (a_p^2 - 4p)/f^2 vanishes at j mod p");
}

bool gross_diagonalizable(const EllipticCurve& E, std::uint64_t p) {
  auto lift = canonical_lift_j(E, p);
  return residue_of_rational(E.j(), p * p) == lift.j_lift;
}

gl2::InertiaCandidate inertia_image_weight2(const EllipticCurve& E, std::uint64_t p, std::uint64_t ell_bound) {
  auto R = point_count(E, p);
  auto S = surjectivity(E, p, ell_bound);
  if (!S.surjective())
    throw Error(Errc::InconclusiveSurjectivity, "surjectivity at " + std::to_string(p) + " not certified: " + S.reason);
  if (R.type == ReductionType::Supersingular) return gl2::InertiaCandidate::nonsplit(1);
  return gross_diagonalizable(E, p) ? gl2::InertiaCandidate::split(0, 1) : gl2::InertiaCandidate::wild(0, 1);
}

}  // namespace inertia::ec
