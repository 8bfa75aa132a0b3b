#pragma once

// Certificates that the mod-p representation of E is onto GL_2(F_p).
// A "Surjective" verdict is a proof; "Inconclusive" proves nothing.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "inertia/elliptic/curve.hpp"

namespace inertia::ec {

enum class SurjectivityStatus { Surjective, Inconclusive };
enum class SurjectivityMethod { Zywina, Sampling };

struct SurjectivityWitness {
  std::string eliminates;  // class of proper subgroups ruled out
  std::uint64_t prime = 0;
  std::string detail;
};

struct SurjectivityVerdict {
  SurjectivityStatus status = SurjectivityStatus::Inconclusive;
  SurjectivityMethod method = SurjectivityMethod::Sampling;
  std::vector<SurjectivityWitness> witnesses;
  std::string reason;  // why Inconclusive, empty otherwise

  bool surjective() const { return status == SurjectivityStatus::Surjective; }
  nlohmann::json to_json() const;
};

// The exceptional pairs (p, j) of the denominator criterion.
bool in_exception_set(std::uint64_t p, const Rat& j);

// For p > 13: surjective unless every prime q^e exactly dividing the
// denominator of j has q = +-1 mod p and p | e, or (p, j) is exceptional.
SurjectivityVerdict zywina_surjectivity(const EllipticCurve& E, std::uint64_t p);

// Eliminates every maximal subgroup class from Frobenius traces and
// determinants at good primes l <= ell_bound, l != 2, p.
SurjectivityVerdict sampling_surjectivity(const EllipticCurve& E, std::uint64_t p, std::uint64_t ell_bound = 500);

// Zywina when p > 13, falling back to sampling.
SurjectivityVerdict surjectivity(const EllipticCurve& E, std::uint64_t p, std::uint64_t ell_bound = 500);

}  // namespace inertia::ec
