#pragma once

// Canonical lift of an ordinary j-invariant mod p^2 through the class
// polynomial of its endomorphism order, and the resulting inertia image of
// the mod-p representation.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "inertia/elliptic/curve.hpp"
#include "inertia/elliptic/surjectivity.hpp"
#include "inertia/gl2/candidates.hpp"

namespace inertia::ec {

struct CanonicalLiftResult {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
  std::uint64_t j_bar = 0;        // j_E mod p
  std::int64_t frobenius_disc = 0;  // a_p^2 - 4p
  std::int64_t disc = 0;          // discriminant of the class polynomial used
  std::uint64_t conductor = 1;    // disc = frobenius_disc / conductor^2
  std::uint64_t degree = 0;       // class number
  std::uint64_t j_lift = 0;       // j-up mod p^2

  nlohmann::json to_json() const;
};

// Residue of H at x mod m, and its derivative.
std::uint64_t eval_mod(const std::vector<Int>& H, std::uint64_t x, std::uint64_t m);

// Throws BadOrSupersingular, MultipleRoot, or CheckFailed if no order of
// discriminant a_p^2 - 4p / f^2 has j_bar as a root of its class polynomial.
CanonicalLiftResult canonical_lift_j(const EllipticCurve& E, std::uint64_t p);

// j_E = j-up mod p^2.
bool gross_diagonalizable(const EllipticCurve& E, std::uint64_t p);

// Weight-2 inertia image: nonsplit(1) if supersingular, split(0,1) if ordinary
// and diagonalizable, wild(0,1) otherwise.  Needs a surjectivity certificate.
gl2::InertiaCandidate inertia_image_weight2(const EllipticCurve& E, std::uint64_t p, std::uint64_t ell_bound = 500);

}  // namespace inertia::ec
