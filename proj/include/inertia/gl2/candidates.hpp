#pragma once

// Inertia candidates in GL_2(F_p) up to conjugacy and the eigenform each one
// asks for.
//
//   SplitTame{a, b}  : <diag(alpha^(a+b), alpha^a)>
//   NonsplitTame{m}  : the subgroup of index m in the nonsplit Cartan
//   Wild{a, b}       : <diag(alpha^(a+b), alpha^a), (1 1; 0 1)>
//
// Exponents live mod p - 1 and b is stored in [1, p - 1]; b = p - 1 is the
// scalar case b = 0 and is flagged as an alias.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inertia/gl2/context.hpp"

namespace inertia::gl2 {

enum class CandidateKind { SplitTame, NonsplitTame, Wild };

struct InertiaCandidate {
  CandidateKind kind = CandidateKind::SplitTame;
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::uint64_t m = 0;        // NonsplitTame only
  bool scalar_alias = false;  // b = p - 1 standing in for b = 0

  static InertiaCandidate split(std::int64_t a, std::int64_t b) { return {CandidateKind::SplitTame, a, b, 0, false}; }
  static InertiaCandidate nonsplit(std::uint64_t m) { return {CandidateKind::NonsplitTame, 0, 0, m, false}; }
  static InertiaCandidate wild(std::int64_t a, std::int64_t b) { return {CandidateKind::Wild, a, b, 0, false}; }

  nlohmann::json to_json() const;
  static InertiaCandidate from_json(const nlohmann::json& j);  // InvalidSpec on bad input
  std::string describe() const;
  bool operator==(const InertiaCandidate&) const = default;
};

enum class Reduction { Ordinary, Supersingular };

struct ModularRequirement {
  std::uint64_t weight = 2;
  std::int64_t twist = 0;
  Reduction reduction = Reduction::Ordinary;
  bool diagonal = false;  // only meaningful for Ordinary

  nlohmann::json to_json() const;
  std::string describe() const;
  bool operator==(const ModularRequirement&) const = default;
};

// Reduces parameters to the lexicographically smallest (a, b) that gives the
// same subgroup up to conjugacy, with a in [0, p - 2] and b in [1, p - 1].
// Throws InvalidParameters on out-of-range data.
InertiaCandidate canonical_candidate(const Gl2Context& ctx, const InertiaCandidate& c);

Subgroup candidate_subgroup(const Gl2Context& ctx, const InertiaCandidate& c);

// All candidates up to conjugacy: split tame, then nonsplit tame (non-central
// only; central ones are split), then wild.
std::vector<InertiaCandidate> inertia_candidates(const Gl2Context& ctx);

struct Classification {
  InertiaCandidate candidate;
  Index conjugator;  // g with g^-1 S g = candidate_subgroup(candidate)
};
std::optional<Classification> classify_candidate(const Gl2Context& ctx, const Subgroup& S);

ModularRequirement candidate_requirement(const Gl2Context& ctx, const InertiaCandidate& c);

// Checks <diag(alpha^(a+b), alpha^a), diag(beta^a, beta^a) (1 1; 0 1)> equals
// Wild{a, b}, where beta = alpha^((p-1)/gcd(b, p-1)).
bool wrcase_group_identity_check(const Gl2Context& ctx, std::int64_t a, std::int64_t b);

}  // namespace inertia::gl2
