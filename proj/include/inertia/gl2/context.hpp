#pragma once

// GL_2(F_p) for a fixed odd prime, with canonical choices of a generator
// alpha of F_p^x (smallest primitive root) and a non-residue delta
// (smallest one), plus the standard Cartan, Borel and unipotent subgroups.

#include <cstdint>
#include <memory>
#include <mutex>

#include "inertia/group/subgroup.hpp"

namespace inertia::gl2 {

using group::GroupPtr;
using group::Index;
using group::MatrixGL2;
using group::Subgroup;

inline constexpr std::uint64_t kMaxEnumeratedPrime = 13;

class Gl2Context {
 public:
  // Throws InvalidPrime unless p is an odd prime.
  explicit Gl2Context(std::uint64_t p, std::uint64_t max_prime = kMaxEnumeratedPrime);

  std::uint64_t p() const { return p_; }
  std::uint64_t alpha() const { return alpha_; }
  std::uint64_t delta() const { return delta_; }

  MatrixGL2 mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const;
  MatrixGL2 diag(std::int64_t x, std::int64_t y) const { return mat(x, 0, 0, y); }
  MatrixGL2 unipotent_generator() const { return mat(1, 1, 0, 1); }
  std::uint64_t alpha_pow(std::int64_t k) const;  // alpha^k mod p, any sign of k

  // The whole group, enumerated on first use.  BoundExceeded above max_prime.
  const GroupPtr& group() const;
  Index index(const MatrixGL2& m) const { return group()->index_of(m); }

  Subgroup split_cartan() const;     // diagonal matrices
  Subgroup nonsplit_cartan() const;  // (x y; delta y x), (x, y) != (0, 0)
  Subgroup borel() const;            // upper triangular
  Subgroup unipotent() const;        // <(1 1; 0 1)>
  // Smallest-index element of order p^2 - 1 in the nonsplit Cartan.
  Index nonsplit_generator() const;

 private:
  std::uint64_t p_;
  std::uint64_t max_prime_;
  std::uint64_t alpha_;
  std::uint64_t delta_;
  mutable std::once_flag once_;
  mutable GroupPtr group_;
};

}  // namespace inertia::gl2
