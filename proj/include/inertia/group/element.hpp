#pragma once

// Concrete group elements and the arithmetic that interprets them.
//
// Permutations use the "apply left factor first" convention:
// (a * b)[i] = b[a[i]].  Matrices multiply in the usual way.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace inertia::group {

using Index = std::uint32_t;

struct Permutation {
  std::vector<std::uint32_t> images;  // i -> images[i], 0-based
  bool operator==(const Permutation&) const = default;
};

// Row-major (a b; c d) with entries in [0, p).
struct MatrixGL2 {
  std::uint32_t p = 0;
  std::array<std::uint32_t, 4> m{};
  bool operator==(const MatrixGL2&) const = default;
};

// Pair-shaped element of a product construction.  `normal` holds the
// coordinates of the normal part: a single element index for direct and
// semidirect products, or the C_p exponent vector indexed by the acting
// group's elements for a regular wreath product.  `acting` is an element
// index of the acting (or second) factor.
struct ProductTuple {
  std::vector<std::uint32_t> normal;
  std::uint32_t acting = 0;
  bool operator==(const ProductTuple&) const = default;
};

using GroupElement = std::variant<Permutation, MatrixGL2, ProductTuple>;

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

enum class ElementKind { Permutation, Matrix, Tuple };
ElementKind kind_of(const GroupElement& g);

// Arithmetic backend for one family of elements.
class ElementArithmetic {
 public:
  virtual ~ElementArithmetic() = default;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& a) const = 0;
  virtual GroupElement identity() const = 0;
  // Throws KindMismatch or InvalidElement.
  virtual void validate(const GroupElement& a) const = 0;
  virtual nlohmann::json to_json(const GroupElement& a) const = 0;
  virtual GroupElement from_json(const nlohmann::json& j) const = 0;
  virtual std::string describe() const = 0;
};

using ArithmeticPtr = std::shared_ptr<const ElementArithmetic>;

ArithmeticPtr permutation_arithmetic(std::uint32_t degree);
ArithmeticPtr gl2_arithmetic(std::uint32_t p);

// Builds the arithmetic for plain permutations or matrices from a sample element.
ArithmeticPtr arithmetic_for(const GroupElement& sample);

Permutation identity_permutation(std::uint32_t degree);
// 1-based cycle notation helper, e.g. cycles(3, {{1,2,3}}).
Permutation from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);
MatrixGL2 matrix(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

}  // namespace inertia::group
