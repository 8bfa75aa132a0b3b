#include "inertia/group/homomorphism.hpp"

#include <limits>

#include "inertia/error.hpp"

namespace inertia::group {

Homomorphism Homomorphism::from_generator_images(GroupPtr source, GroupPtr target, std::vector<Index> images) {
  const auto& S = *source;
  const auto& T = *target;
  const auto& gens = S.generators();
  if (images.size() != gens.size())
    throw Error(Errc::NotAHomomorphism, "need one image per source generator");
  for (Index t : images)
    if (t >= T.order()) throw Error(Errc::NotInGroup, "image index out of range");

  constexpr Index kUnset = std::numeric_limits<Index>::max();
  std::vector<Index> map(S.order(), kUnset);
  std::vector<Index> queue{0};
  map[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index s = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Index s2 = S.mul(s, gens[k]);
      Index t2 = T.mul(map[s], images[k]);
      if (map[s2] == kUnset) {
        map[s2] = t2;
        queue.push_back(s2);
      } else if (map[s2] != t2) {
        throw Error(Errc::NotAHomomorphism, "generator assignment does not extend to a function");
      }
    }
  }
  Subgroup image(target, images);
  return Homomorphism(std::move(source), std::move(target), std::move(images), std::move(map), std::move(image));
}

Homomorphism Homomorphism::from_generator_images(GroupPtr source, GroupPtr target,
                                                 const std::vector<GroupElement>& images) {
  std::vector<Index> idx;
  for (const auto& g : images) idx.push_back(target->index_of(g));
  return from_generator_images(std::move(source), std::move(target), std::move(idx));
}

Homomorphism Homomorphism::identity(GroupPtr G) {
  auto gens = G->generators();
  return from_generator_images(G, G, gens);
}

Subgroup Homomorphism::image_of(const Subgroup& S) const {
  std::vector<Index> gens;
  for (Index g : S.generators()) gens.push_back(map_[g]);
  return Subgroup(target_, gens);
}

Subgroup Homomorphism::kernel() const {
  std::vector<Index> elems;
  for (Index x = 0; x < map_.size(); ++x)
    if (map_[x] == 0) elems.push_back(x);
  return Subgroup::from_element_set(source_, std::move(elems));
}

Subgroup Homomorphism::preimage(const Subgroup& T) const {
  std::vector<Index> elems;
  for (Index x = 0; x < map_.size(); ++x)
    if (T.contains(map_[x])) elems.push_back(x);
  return Subgroup::from_element_set(source_, std::move(elems));
}

}  // namespace inertia::group
