#pragma once

// Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.

#include <array>
#include <string>

#include <json.hpp>

#include "inertia/elliptic/bigint.hpp"

namespace inertia::ec {

struct CurveInvariants {
  Rat b2, b4, b6, b8, c4, c6, disc, j;
};

class EllipticCurve {
 public:
  // Throws SingularCurve when the discriminant vanishes.
  explicit EllipticCurve(std::array<Rat, 5> a);
  static EllipticCurve from_ints(long a1, long a2, long a3, long a4, long a6);
  // y^2 = x^3 + A x + B
  static EllipticCurve short_form(const Rat& A, const Rat& B);
  // {"a": [a1, a2, a3, a4, a6]} with integers or decimal strings.
  static EllipticCurve from_json(const nlohmann::json& j);

  const std::array<Rat, 5>& a() const { return a_; }
  const Rat& a1() const { return a_[0]; }
  const Rat& a2() const { return a_[1]; }
  const Rat& a3() const { return a_[2]; }
  const Rat& a4() const { return a_[3]; }
  const Rat& a6() const { return a_[4]; }
  const CurveInvariants& invariants() const { return inv_; }
  const Rat& j() const { return inv_.j; }
  const Rat& disc() const { return inv_.disc; }
  bool is_integral() const;

  nlohmann::json to_json() const;  // {"a": [strings]}
  std::string describe() const;    // "y^2 + xy + y = x^3 + x^2 - x"

 private:
  std::array<Rat, 5> a_;
  CurveInvariants inv_;
};

// Standard b/c formulas; SingularCurve when the discriminant is zero.
CurveInvariants curve_invariants(const std::array<Rat, 5>& a);

}  // namespace inertia::ec
