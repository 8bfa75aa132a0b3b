#pragma once

// Curves used by the tables, keyed by label ("89.a1", "11.a2", ...).

#include <optional>
#include <string>
#include <vector>

#include "inertia/elliptic/curve.hpp"

namespace inertia::ec {

struct NamedCurve {
  std::string label;
  long a[5];
};

const std::vector<NamedCurve>& named_curves();
std::optional<EllipticCurve> curve_by_label(const std::string& label);  // accepts "89a1" too

}  // namespace inertia::ec
