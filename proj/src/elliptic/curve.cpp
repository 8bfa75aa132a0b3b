#include "inertia/elliptic/curve.hpp"

#include "inertia/error.hpp"

namespace inertia::ec {

CurveInvariants curve_invariants(const std::array<Rat, 5>& a) {
  const Rat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  CurveInvariants v;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
  if (v.disc == 0) throw Error(Errc::SingularCurve, "discriminant is zero");
  v.j = v.c4 * v.c4 * v.c4 / v.disc;
  if (1728 * v.disc != v.c4 * v.c4 * v.c4 - v.c6 * v.c6)
    throw Error(Errc::CheckFailed, "1728 disc != c4^3 - c6^2");
  return v;
}

EllipticCurve::EllipticCurve(std::array<Rat, 5> a) : a_(std::move(a)) {
  for (auto& x : a_) x.canonicalize();
  inv_ = curve_invariants(a_);
}

EllipticCurve EllipticCurve::from_ints(long a1, long a2, long a3, long a4, long a6) {
  return EllipticCurve({Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6)});
}

EllipticCurve EllipticCurve::short_form(const Rat& A, const Rat& B) {
  return EllipticCurve({Rat(0), Rat(0), Rat(0), A, B});
}

EllipticCurve EllipticCurve::from_json(const nlohmann::json& j) {
  try {
    const auto& arr = j.at("a");
    if (!arr.is_array() || arr.size() != 5) throw Error(Errc::InvalidSpec, "\"a\" must list five coefficients");
    std::array<Rat, 5> a;
    for (std::size_t i = 0; i < 5; ++i) {
      if (arr[i].is_string())
        a[i] = rat_from_string(arr[i].get<std::string>());
      else if (arr[i].is_number_integer())
        a[i] = rat_from_string(std::to_string(arr[i].get<long long>()));
      else
        throw Error(Errc::InvalidSpec, "coefficients must be integers or decimal strings");
    }
    return EllipticCurve(a);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidSpec, e.what());
  }
}

bool EllipticCurve::is_integral() const {
  for (const auto& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

nlohmann::json EllipticCurve::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : a_) arr.push_back(to_string(x));
  return {{"a", arr}};
}

std::string EllipticCurve::describe() const {
  auto term = [](const Rat& c, const std::string& mono, bool first) -> std::string {
    if (c == 0) return "";
    std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Rat m = abs(c);
    std::string coef = (m == 1 && !mono.empty()) ? "" : to_string(m);
    return sign + coef + mono;
  };
  std::string lhs = "y^2" + term(a1(), "xy", false) + term(a3(), "y", false);
  std::string rhs = "x^3" + term(a2(), "x^2", false) + term(a4(), "x", false) + term(a6(), "", false);
  return lhs + " = " + rhs;
}

}  // namespace inertia::ec
