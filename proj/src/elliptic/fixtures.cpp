#include "inertia/elliptic/fixtures.hpp"

#include <algorithm>

namespace inertia::ec {

const std::vector<NamedCurve>& named_curves() {
  // 11.a2 is y^2 + y = x^3 - x^2 - 10x - 20 (the x is dropped in some prints).
  static const std::vector<NamedCurve> curves{
      {"11.a2", {0, -1, 1, -10, -20}},  {"14.a1", {1, 0, 1, -2731, -55146}}, {"14.a3", {1, 0, 1, -36, -70}},
      {"15.a1", {1, 1, 1, -2160, -39540}}, {"17.a1", {1, -1, 1, -91, -310}},  {"17.a2", {1, -1, 1, -6, -4}},
      {"19.a2", {0, 1, 1, -9, -15}},    {"54.a3", {1, -1, 0, 12, 8}},        {"56.b1", {0, -1, 0, -40, -84}},
      {"89.a1", {1, 1, 1, -1, 0}},
  };
  return curves;
}

std::optional<EllipticCurve> curve_by_label(const std::string& label) {
  std::string key = label;
  if (key.find('.') == std::string::npos) {
    auto pos = std::find_if(key.begin(), key.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
    if (pos != key.end()) key.insert(pos, '.');
  }
  for (const auto& c : named_curves())
    if (c.label == key) return EllipticCurve::from_ints(c.a[0], c.a[1], c.a[2], c.a[3], c.a[4]);
  return std::nullopt;
}

}  // namespace inertia::ec
