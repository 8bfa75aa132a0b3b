#pragma once

// Hilbert class polynomials H_D(X) for negative discriminants D.

#include <cstdint>
#include <vector>

#include "inertia/elliptic/bigint.hpp"

namespace inertia::ec {

struct QuadraticForm {
  std::int64_t a, b, c;
};

// Reduced primitive forms (a, b, c) of discriminant D = b^2 - 4ac < 0.
std::vector<QuadraticForm> reduced_forms(std::int64_t D);

// Integer coefficients, constant term first; degree = class number.
// InvalidParameters unless D < 0, D = 0 or 1 mod 4 and |D| <= 10^4.
// PrecisionFailure if rounding stays ambiguous after the retries.
std::vector<Int> hilbert_class_polynomial(std::int64_t D);

}  // namespace inertia::ec
