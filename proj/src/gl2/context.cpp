#include "inertia/gl2/context.hpp"

#include "inertia/error.hpp"
#include "inertia/group/finite_group.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::gl2 {

Gl2Context::Gl2Context(std::uint64_t p, std::uint64_t max_prime) : p_(p), max_prime_(max_prime) {
  if (p < 3 || !nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");
  alpha_ = nt::primitive_root(p);
  delta_ = nt::smallest_nonresidue(p);
}

MatrixGL2 Gl2Context::mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const {
  return group::matrix(static_cast<std::uint32_t>(p_), a, b, c, d);
}

std::uint64_t Gl2Context::alpha_pow(std::int64_t k) const {
  std::int64_t n = static_cast<std::int64_t>(p_ - 1);
  return nt::powmod(alpha_, static_cast<std::uint64_t>(((k % n) + n) % n), p_);
}

const GroupPtr& Gl2Context::group() const {
  if (p_ > max_prime_)
    throw Error(Errc::BoundExceeded, "GL_2(F_" + std::to_string(p_) + ") is above the enumeration bound p <= " +
                                         std::to_string(max_prime_));
  std::call_once(once_, [this] {
    auto a = static_cast<std::int64_t>(alpha_);
    // (1 1; 0 1) and (0 -1; 1 0) generate SL_2; diag(alpha, 1) adds every determinant.
    group_ = group::FiniteGroup::enumerate(group::gl2_arithmetic(static_cast<std::uint32_t>(p_)),
                                           {mat(a, 0, 0, 1), unipotent_generator(), mat(0, -1, 1, 0)});
  });
  if (group_->order() != (p_ * p_ - 1) * (p_ * p_ - p_))
    throw Error(Errc::CheckFailed, "GL_2 generators produced the wrong order");
  return group_;
}

Subgroup Gl2Context::split_cartan() const {
  auto a = static_cast<std::int64_t>(alpha_);
  return Subgroup(group(), {index(diag(a, 1)), index(diag(1, a))});
}

Subgroup Gl2Context::nonsplit_cartan() const {
  std::vector<Index> elems;
  auto d = static_cast<std::int64_t>(delta_);
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(p_); ++x)
    for (std::int64_t y = 0; y < static_cast<std::int64_t>(p_); ++y)
      if (x != 0 || y != 0) elems.push_back(index(mat(x, y, d * y, x)));
  return Subgroup::from_element_set(group(), std::move(elems));
}

Subgroup Gl2Context::borel() const {
  auto a = static_cast<std::int64_t>(alpha_);
  return Subgroup(group(), {index(diag(a, 1)), index(diag(1, a)), index(unipotent_generator())});
}

Subgroup Gl2Context::unipotent() const { return Subgroup(group(), {index(unipotent_generator())}); }

Index Gl2Context::nonsplit_generator() const {
  const auto& G = *group();
  Subgroup C = nonsplit_cartan();
  for (Index x : C.elements())
    if (G.element_order(x) == p_ * p_ - 1) return x;
  throw Error(Errc::CheckFailed, "nonsplit Cartan is not cyclic");
}

}  // namespace inertia::gl2
