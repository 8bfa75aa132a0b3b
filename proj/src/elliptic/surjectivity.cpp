#include "inertia/elliptic/surjectivity.hpp"

#include <set>

#include "inertia/elliptic/reduction.hpp"
#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::ec {

namespace {

Int ipow(long b, unsigned long e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b), e);
  return (b < 0 && e % 2 == 1) ? Int(-out) : out;
}

const std::vector<std::pair<std::uint64_t, Rat>>& exception_set() {
  static const std::vector<std::pair<std::uint64_t, Rat>> S0 = [] {
    std::vector<std::pair<std::uint64_t, Rat>> s;
    s.emplace_back(17, Rat(-ipow(17, 2) * ipow(101, 2), 2));
    s.emplace_back(17, Rat(-17 * ipow(373, 3), ipow(2, 17)));
    s.emplace_back(37, Rat(-7 * ipow(11, 3)));
    s.emplace_back(37, Rat(-7 * ipow(137, 3) * ipow(2083, 3)));
    for (auto& [p, j] : s) j.canonicalize();
    return s;
  }();
  return S0;
}

}  // namespace

nlohmann::json SurjectivityVerdict::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : witnesses) w.push_back({{"eliminates", x.eliminates}, {"prime", x.prime}, {"detail", x.detail}});
  nlohmann::json j{{"status", status == SurjectivityStatus::Surjective ? "surjective" : "inconclusive"},
                   {"method", method == SurjectivityMethod::Zywina ? "zywina" : "sampling"},
                   {"witnesses", w}};
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

bool in_exception_set(std::uint64_t p, const Rat& j) {
  for (const auto& [q, jj] : exception_set())
    if (q == p && jj == j) return true;
  return false;
}

SurjectivityVerdict zywina_surjectivity(const EllipticCurve& E, std::uint64_t p) {
  SurjectivityVerdict v;
  v.method = SurjectivityMethod::Zywina;
  if (p <= 13 || !nt::is_prime(p)) {
    v.reason = "the denominator criterion needs a prime p > 13";
    return v;
  }
  if (in_exception_set(p, E.j())) {
    v.reason = "(p, j) is in the exceptional set";
    return v;
  }
  const Int& den = E.j().get_den();
  if (den == 1) {
    v.reason = "j is integral";
    return v;
  }
  for (const auto& [q, e] : factor_integer(den)) {
    Int r = mod(q, Int(std::to_string(p)));
    bool pm1 = r == 1 || r == Int(std::to_string(p - 1));
    if (!pm1 || e % p != 0) {
      v.status = SurjectivityStatus::Surjective;
      v.witnesses.push_back({"every proper subgroup", to_u64(q),
                             q.get_str() + "^" + std::to_string(e) + " divides the denominator of j" +
                                 (!pm1 ? ", not +-1 mod p" : ", exponent prime to p")});
      return v;
    }
  }
  v.reason = "every denominator prime is +-1 mod p with exponent divisible by p";
  return v;
}

SurjectivityVerdict sampling_surjectivity(const EllipticCurve& E, std::uint64_t p, std::uint64_t ell_bound) {
  SurjectivityVerdict v;
  v.method = SurjectivityMethod::Sampling;
  if (p < 3 || !nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");

  auto residue = [p](std::uint64_t x) { return x != 0 && nt::powmod(x, (p - 1) / 2, p) == 1; };
  // Exceptional projective images force u = t^2/d into this set.
  std::set<std::uint64_t> exceptional{0, 1 % p, 2 % p, 4 % p};
  for (std::uint64_t u = 0; u < p; ++u)
    if ((u * u + p * p - 3 * u + 1) % p == 0) exceptional.insert(u);
  // For p = 3 no proper subgroup has exceptional projective image: PGL_2(F_3)
  // is itself S_4 and A_4 does not embed in GL_2(F_3).
  bool need_exceptional = p >= 5;

  bool have_i = false, have_ii = false, have_iii = !need_exceptional, have_iv = false;
  std::uint64_t gen_order = 1;  // order of the subgroup of F_p^x generated so far
  std::vector<std::uint64_t> dets;
  for (std::uint64_t ell = 3; ell <= ell_bound; ell = nt::next_prime(ell)) {
    if (ell == p || !good_reduction(E, ell)) continue;
    auto R = point_count(E, ell);
    std::uint64_t t = static_cast<std::uint64_t>(((R.a % static_cast<std::int64_t>(p)) + p) % p);
    std::uint64_t d = ell % p;
    std::uint64_t disc = (t * t + 4 * p * p - 4 * d) % p;
    std::string detail = "t=" + std::to_string(t) + " d=" + std::to_string(d);
    if (!have_i && t != 0 && disc != 0 && !residue(disc)) {
      have_i = true;
      v.witnesses.push_back({"borel and split-cartan normaliser", ell, detail});
    }
    if (!have_ii && t != 0 && residue(disc)) {
      have_ii = true;
      v.witnesses.push_back({"nonsplit-cartan normaliser", ell, detail});
    }
    // A repeated eigenvalue +-1 with Frobenius not scalar has order divisible
    // by p, which no Cartan normaliser contains.  Frobenius = +-I would put
    // all of E[p] (or the twist's) in the F_l-points, so p^2 | l + 1 -+ a_l.
    // This is the only route at p = 3, where t != 0 never gives a square
    // nonzero discriminant.
    if (!have_ii && t != 0 && disc == 0 && (t == 2 % p || t == p - 2)) {
      std::int64_t sign = t == 2 % p ? 1 : -1;
      std::int64_t pts = static_cast<std::int64_t>(ell) + 1 - sign * R.a;
      if (pts % static_cast<std::int64_t>(p * p) != 0) {
        have_ii = true;
        v.witnesses.push_back({"nonsplit-cartan normaliser", ell,
                               detail + " non-scalar: " + std::to_string(pts) + " points on the " +
                                   (sign > 0 ? "curve" : "quadratic twist") + " not divisible by p^2"});
      }
    }
    if (!have_iii) {
      std::uint64_t u = t * t % p * nt::powmod(d, p - 2, p) % p;
      if (!exceptional.count(u)) {
        have_iii = true;
        v.witnesses.push_back({"exceptional projective image", ell, detail + " u=" + std::to_string(u)});
      }
    }
    if (!have_iv) {
      dets.push_back(d);
      std::uint64_t o = nt::multiplicative_order(d, p);
      std::uint64_t joined = nt::lcm(gen_order, o);  // F_p^x is cyclic
      if (joined != gen_order) gen_order = joined;
      if (gen_order == p - 1) {
        have_iv = true;
        std::string ds;
        for (auto x : dets) ds += (ds.empty() ? "" : ",") + std::to_string(x);
        v.witnesses.push_back({"determinant not onto", ell, "d values {" + ds + "} generate F_p^x"});
      }
    }
    if (have_i && have_ii && have_iii && have_iv) {
      v.status = SurjectivityStatus::Surjective;
      return v;
    }
  }
  std::vector<std::string> missing;
  if (!have_i) missing.push_back("(i)");
  if (!have_ii) missing.push_back("(ii)");
  if (!have_iii) missing.push_back("(iii)");
  if (!have_iv) missing.push_back("(iv)");
  v.reason = "no witness below " + std::to_string(ell_bound) + " for";
  for (const auto& m : missing) v.reason += " " + m;
  return v;
}

SurjectivityVerdict surjectivity(const EllipticCurve& E, std::uint64_t p, std::uint64_t ell_bound) {
  if (p > 13) {
    auto z = zywina_surjectivity(E, p);
    if (z.surjective()) return z;
  }
  return sampling_surjectivity(E, p, ell_bound);
}

}  // namespace inertia::ec
