#pragma once

#include <vector>

#include "inertia/group/subgroup.hpp"

namespace inertia::group {

class Homomorphism {
 public:
  // `images[k]` is the image of source->generators()[k].  The assignment is
  // checked by walking the graph subgroup in source x target: it must
  // project bijectively onto the source.  Throws NotAHomomorphism.
  static Homomorphism from_generator_images(GroupPtr source, GroupPtr target, std::vector<Index> images);
  static Homomorphism from_generator_images(GroupPtr source, GroupPtr target,
                                            const std::vector<GroupElement>& images);
  static Homomorphism identity(GroupPtr G);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Index>& generator_images() const { return gen_images_; }
  Index apply(Index x) const { return map_[x]; }

  const Subgroup& image() const { return image_; }
  Subgroup image_of(const Subgroup& S) const;
  Subgroup kernel() const;
  Subgroup preimage(const Subgroup& T) const;
  bool is_surjective() const { return image_.order() == target_->order(); }

 private:
  Homomorphism(GroupPtr s, GroupPtr t, std::vector<Index> gi, std::vector<Index> map, Subgroup image)
      : source_(std::move(s)), target_(std::move(t)), gen_images_(std::move(gi)), map_(std::move(map)),
        image_(std::move(image)) {}

  GroupPtr source_, target_;
  std::vector<Index> gen_images_;
  std::vector<Index> map_;
  Subgroup image_;
};

}  // namespace inertia::group
