#include <doctest.h>

#include <set>

#include "inertia/error.hpp"
#include "inertia/local/abelian.hpp"
#include "inertia/numtheory.hpp"
#include "support/oracles.hpp"

using namespace inertia;
using namespace inertia::local;

namespace {

AbelianType T(std::vector<std::uint64_t> f) { return AbelianType::from_factors(f); }

}  // namespace

TEST_CASE("is_quotient_of_zp_units examples") {
  CHECK(is_quotient_of_zp_units(T({4}), 5));
  CHECK_FALSE(is_quotient_of_zp_units(T({2, 2}), 5));
  CHECK(is_quotient_of_zp_units(T({2, 8}), 2));
  CHECK(is_quotient_of_zp_units(T({}), 7));
  CHECK(is_quotient_of_zp_units(T({12, 25}), 5) == false);
  CHECK(is_quotient_of_zp_units(T({100}), 5));
  CHECK_FALSE(is_quotient_of_zp_units(T({4, 4}), 2));
  CHECK_FALSE(is_quotient_of_zp_units(T({6}), 2));
}

// For odd p the truncation C_{p-1} x C_{p^4} sees every quotient of order
// <= 64 except those needing more than p^4; for p = 2 use C2 x C_{2^6} so
// that C64 is covered as well.
TEST_CASE("quotient test agrees with lattice enumeration") {
  auto types = oracle::abelian_types_up_to(64);
  CHECK(types.size() > 100);
  std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>> cases = {
      {3, {2, 81}}, {5, {4, 625}}, {7, {6, 2401}}, {13, {12, 28561}}, {2, {2, 64}}};
  for (const auto& [p, ms] : cases) {
    auto quotients = oracle::lattice_quotient_types(ms.first, ms.second);
    for (const auto& t : types)
      CHECK_MESSAGE(is_quotient_of_zp_units(t, p) == (quotients.count(t.factors) > 0), "p=", p, " type order ",
                    t.order());
  }
}

TEST_CASE("units_mod_prime_power") {
  CHECK(units_mod_prime_power(5, 1) == T({4}));
  CHECK(units_mod_prime_power(3, 3) == T({2, 9}));
  CHECK(units_mod_prime_power(2, 1) == T({}));
  CHECK(units_mod_prime_power(2, 5) == T({2, 8}));
  // Against a direct computation of (Z/m)^x.
  for (std::uint64_t m : {8u, 16u, 27u, 25u, 49u, 32u}) {
    std::vector<group::Permutation> gens;
    for (std::uint64_t u = 1; u < m; ++u) {
      if (nt::gcd(u, m) != 1) continue;
      group::Permutation perm;
      for (std::uint64_t x = 0; x < m; ++x) perm.images.push_back(static_cast<std::uint32_t>(x * u % m));
      gens.push_back(perm);
    }
    auto G = group::FiniteGroup::enumerate(std::vector<group::GroupElement>(gens.begin(), gens.end()));
    auto [q, k] = nt::factor(m).front();
    CHECK(group::abelian_invariants(G) == units_mod_prime_power(q, k));
  }
}

TEST_CASE("embeds agrees with subgroup enumeration") {
  for (auto factors : std::vector<std::vector<std::uint64_t>>{{2, 4}, {2, 2, 4}, {3, 9}, {4, 12}}) {
    auto G = group::abelian_group(factors);
    std::set<std::vector<std::uint64_t>> sub_types;
    for (const auto& S : oracle::all_subgroups(G)) sub_types.insert(group::abelian_invariants(S.as_group()).factors);
    for (const auto& t : oracle::abelian_types_up_to(G->order()))
      CHECK(embeds(t, T(factors)) == (sub_types.count(t.factors) > 0));
  }
}

TEST_CASE("abelian_realizable examples") {
  auto v = abelian_realizable(T({4, 4}), T({4}), 5);
  CHECK(v.realizable());
  REQUIRE(v.abelian);
  CHECK(validate_abelian_witness(T({4, 4}), T({4}), 5, *v.abelian) == "");
  auto n = abelian_realizable(T({2, 2}), T({2, 2}), 7);
  CHECK(n.status == Status::NotRealizable);
  CHECK(n.reason == "I is not a quotient of Z_p^×");
  CHECK(abelian_realizable(T({8}), T({}), 3).realizable());
  try {
    abelian_realizable(T({4}), T({2, 2}), 5);
    FAIL("expected NotASubgroupType");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotASubgroupType);
  }
}

TEST_CASE("construction witness examples") {
  auto w = abelian_construction_witness(T({4}), T({4}), 5);
  CHECK(w.n == 1);
  CHECK(w.primes == std::vector<std::uint64_t>{13});
  auto w3 = abelian_construction_witness(T({3}), T({}), 5);
  CHECK(w3.primes == std::vector<std::uint64_t>{7});
  auto w22 = abelian_construction_witness(T({2, 2}), T({2}), 5);
  CHECK(w22.n == 1);
  REQUIRE(w22.primes.size() == 2);
  CHECK(w22.primes[0] != w22.primes[1]);
  CHECK(validate_abelian_witness(T({2, 2}), T({2}), 5, w22) == "");
  // n is the smallest exponent with I a quotient of (Z/p^n)^x.
  CHECK(abelian_construction_witness(T({2, 9}), T({18}), 3).n == 3);
  CHECK(abelian_construction_witness(T({2, 16}), T({2, 16}), 2).n == 6);
}

TEST_CASE("every realizable verdict re-validates") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (const auto& G : oracle::abelian_types_up_to(36))
      for (const auto& I : oracle::abelian_types_up_to(G.order())) {
        if (!embeds(I, G)) continue;
        auto v = abelian_realizable(G, I, p);
        CHECK(v.realizable() == is_quotient_of_zp_units(I, p));
        if (v.realizable()) CHECK(validate_abelian_witness(G, I, p, *v.abelian) == "");
      }
  }
}

TEST_CASE("witness validation rejects tampering") {
  auto w = abelian_construction_witness(T({4, 4}), T({4}), 5);
  auto bad = w;
  bad.primes[1] = bad.primes[0];
  CHECK(validate_abelian_witness(T({4, 4}), T({4}), 5, bad) != "");
  bad = w;
  bad.primes[0] = 5;
  CHECK(validate_abelian_witness(T({4, 4}), T({4}), 5, bad) != "");
  bad = w;
  bad.primes[0] = 11;
  CHECK(validate_abelian_witness(T({4, 4}), T({4}), 5, bad) != "");
}
