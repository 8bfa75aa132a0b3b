#pragma once

// The order-128 group G = C2^4 x| C8 behind the failure of the local-global
// principle for inertia at 2.  h generates C8 and acts on <a1,a2,a3,a4> by
// a1 -> a1, a2 -> a3, a3 -> a4, a4 -> a2 a3 a4.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "inertia/group/constructions.hpp"

namespace inertia::local {

struct CounterexampleGroup {
  group::GroupPtr G;
  group::Subgroup I;  // the normal C2^4
  std::vector<group::Index> a;  // a1..a4
  group::Index h = 0;
};

CounterexampleGroup build_counterexample_group();

struct CounterexampleReport {
  std::size_t group_order = 0;
  std::size_t inertia_order = 0;
  std::size_t quotient_order = 0;
  bool quotient_cyclic = false;
  std::size_t sylow2_order = 0;
  std::size_t frattini_index = 0;

  // Relator x^2 y^4 (y,z) under x -> a2 h^-2, y -> h, z -> a1 a2 a3.
  bool relator_trivial_inverse_first = false;  // (y,z) = y^-1 z^-1 y z
  bool relator_trivial_inverse_last = false;   // (y,z) = y z y^-1 z^-1
  bool images_generate = false;

  std::size_t wild_closure_order = 0;  // normal closure of {pi(x y^2), pi(z)}
  bool wild_closure_is_inertia = false;

  std::vector<std::size_t> intermediate_orders;
  std::vector<unsigned> intermediate_ranks;
  bool intermediates_are_preimages = false;
  std::vector<bool> generated_by_three;  // minimal_generating_size <= 3

  std::vector<std::string> failures;  // empty when every check passes

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Runs every check and records failures instead of throwing.
CounterexampleReport counterexample_report();
// Same, but throws CheckFailed naming the first failing item.
CounterexampleReport verify_local_global_counterexample();

}  // namespace inertia::local
