#include "inertia/group/group_spec.hpp"

#include "inertia/error.hpp"
#include "inertia/group/constructions.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::group {

namespace {

std::string kind_of_spec(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw Error(Errc::InvalidSpec, "group spec needs a string \"kind\"");
  return spec["kind"].get<std::string>();
}

}  // namespace

GroupPtr group_from_spec(const nlohmann::json& spec, std::size_t bound) {
  try {
    std::string kind = kind_of_spec(spec);
    if (kind == "perm") {
      auto degree = spec.at("degree").get<std::uint32_t>();
      if (degree == 0) throw Error(Errc::InvalidSpec, "degree must be positive");
      auto arith = permutation_arithmetic(degree);
      std::vector<GroupElement> gens;
      for (const auto& g : spec.at("generators")) gens.push_back(arith->from_json(g));
      if (gens.empty()) gens.push_back(identity_permutation(degree));
      return FiniteGroup::enumerate(arith, gens, bound);
    }
    if (kind == "gl2") {
      auto p = spec.at("p").get<std::uint32_t>();
      if (!nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not prime");
      auto arith = gl2_arithmetic(p);
      std::vector<GroupElement> gens;
      for (const auto& g : spec.at("generators")) gens.push_back(arith->from_json(g));
      if (gens.empty()) gens.push_back(arith->identity());
      return FiniteGroup::enumerate(arith, gens, bound);
    }
    if (kind == "abelian") {
      return abelian_group(spec.at("factors").get<std::vector<std::uint64_t>>());
    }
    if (kind == "semidirect") {
      auto N = group_from_spec(spec.at("normal"), bound);
      auto H = group_from_spec(spec.at("acting"), bound);
      const auto& act = spec.at("action");
      std::vector<std::vector<Index>> generator_action(H->generators().size());
      for (std::size_t k = 0; k < generator_action.size(); ++k) {
        nlohmann::json images;
        if (act.is_array())
          images = act.at(k);
        else
          images = act.at(std::to_string(k));
        for (const auto& e : images) generator_action[k].push_back(element_from_json(*N, e));
      }
      return semidirect_product(N, H, generator_action, bound);
    }
    throw Error(Errc::InvalidSpec, "unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidSpec, e.what());
  }
}

nlohmann::json element_to_json(const FiniteGroup& G, Index x) { return G.arithmetic().to_json(G.element(x)); }

Index element_from_json(const FiniteGroup& G, const nlohmann::json& j) {
  try {
    return G.index_of(G.arithmetic().from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidSpec, e.what());
  }
}

}  // namespace inertia::group
