#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inertia/group/element.hpp"

namespace inertia::local {

enum class Status { Realizable, NotRealizable, OutOfRegime };

std::string status_name(Status s);  // "realizable", "not_realizable", "out_of_regime"

// sigma, tau live in the decomposition group D.  When the witness belongs to
// a quotient D/I_p they are lifts of the quotient generators.
struct TameWitness {
  group::GroupElement sigma;
  group::GroupElement tau;
  std::uint64_t e = 1;
  std::uint64_t f = 1;
  std::uint64_t r = 0;
  bool frobenius_congruence = true;  // p^f = 1 mod e
  bool twist_congruence = true;      // r (p - 1) = 0 mod e
};

struct WildWitness {
  group::GroupElement a;  // identity when I_p is trivial
};

struct LocalWitness {
  std::vector<group::GroupElement> d_generators;
  TameWitness tame;
  WildWitness wild;
};

struct AbelianWitness {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> orders;
};

struct RealizabilityVerdict {
  Status status = Status::NotRealizable;
  std::string reason;
  std::optional<LocalWitness> local;
  std::optional<AbelianWitness> abelian;

  bool realizable() const { return status == Status::Realizable; }
};

}  // namespace inertia::local
