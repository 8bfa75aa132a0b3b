#pragma once

// Reduction of a curve at an odd prime l: a model that is minimal at l, good
// or bad reduction, and naive point counting over F_l.

#include <array>
#include <cstdint>
#include <string>

#include "inertia/elliptic/curve.hpp"

namespace inertia::ec {

inline constexpr std::uint64_t kMaxPointCountPrime = 1000000;

enum class ReductionType { Ordinary, Supersingular, Bad };
std::string reduction_name(ReductionType t);  // "ordinary", "supersingular", "bad"

// An l-integral model of E with minimal l-adic valuation of the discriminant.
// For l >= 5 this is the short model y^2 = x^3 - 27 c4 x - 54 c6 rescaled;
// for l = 3 it comes from a search over (r, s, t).
struct LocalModel {
  std::uint64_t ell = 0;
  std::array<Rat, 5> a;
  unsigned disc_valuation = 0;  // v_l of the model's discriminant
};
LocalModel local_minimal_model(const EllipticCurve& E, std::uint64_t ell);

// Unsupported at l = 2.
bool good_reduction(const EllipticCurve& E, std::uint64_t ell);

struct ReductionData {
  std::uint64_t ell = 0;
  bool good = false;
  std::uint64_t count = 0;  // #E(F_l) including the point at infinity
  std::int64_t a = 0;       // l + 1 - count
  ReductionType type = ReductionType::Bad;
};

// Throws BadReduction, Unsupported (l = 2), InvalidPrime, BoundExceeded.
ReductionData point_count(const EllipticCurve& E, std::uint64_t ell);

}  // namespace inertia::ec
