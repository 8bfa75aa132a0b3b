#pragma once

// Curves y^2 = x^3 + (A + a p) x + (B + b p) over Q with prescribed reduction
// at a prime p > 13 and a surjective mod-p representation, certified by the
// denominator criterion through an auxiliary prime q != +-1 mod p.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inertia/elliptic/curve.hpp"

namespace inertia::ec {

enum class ConstructionKind { Supersingular, OrdinaryDiagonal, OrdinaryNonDiagonal };
std::string construction_name(ConstructionKind k);

struct ConstructionCertificate {
  ConstructionKind kind = ConstructionKind::Supersingular;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Int A, B;  // seed coefficients
  Int a, b;  // shifts
  std::optional<std::uint64_t> j_target;  // j* mod p^2 (ordinary only)
  std::optional<std::uint64_t> j_lift;    // canonical lift of the seed (ordinary only)
  std::optional<EllipticCurve> curve;

  nlohmann::json to_json() const;
};

// Throws InvalidParameters unless p > 13 is prime; SearchExhausted as a guard.
ConstructionCertificate construct_supersingular(std::uint64_t p);
// UnluckyUnit seeds (54 j* B not a unit mod p) are skipped internally.
ConstructionCertificate construct_ordinary(std::uint64_t p, bool diagonal);

// Recomputes every claim from the curve alone; returns failed checks.
std::vector<std::string> validate_certificate(const ConstructionCertificate& c);

}  // namespace inertia::ec
