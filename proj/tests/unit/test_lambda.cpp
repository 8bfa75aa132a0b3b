#include <doctest.h>

#include <algorithm>

#include "inertia/error.hpp"
#include "inertia/group/algorithms.hpp"
#include "inertia/local/lambda.hpp"
#include "inertia/numtheory.hpp"

using namespace inertia;
using namespace inertia::group;
using namespace inertia::local;

TEST_CASE("metacyclic presentations") {
  auto M = metacyclic_group(7, 3, 0, 2);
  CHECK(M.group->order() == 21);
  CHECK(M.group->element_order(M.t) == 7);
  CHECK(M.group->conj(M.t, M.s) == M.group->pow(M.t, 2));
  CHECK(M.group->pow(M.s, 3) == M.group->identity());
  auto Q = metacyclic_group(2, 2, 1, 1);  // C4
  CHECK(abelian_invariants(Q.group) == AbelianType{{4}});
  CHECK_THROWS_AS(metacyclic_group(7, 2, 0, 2), Error);  // 2^2 != 1 mod 7
  CHECK_THROWS_AS(metacyclic_group(6, 2, 0, 2), Error);  // gcd(2, 6) != 1
  CHECK_THROWS_AS(metacyclic_group(7, 3, 1, 2), Error);  // r (k - 1) != 0
}

TEST_CASE("lambda1 examples") {
  CHECK(lambda1(1, 1, 0, 3).group->order() == 3);
  CHECK(lambda1(3, 2, 0, 5).group->order() == 30);
  CHECK(lambda1(7, 3, 0, 2).group->order() == 42);
  auto L = lambda1(3, 2, 0, 5);
  CHECK(L.group->conj(L.t, L.s) == L.group->pow(L.t, 5));
  try {
    lambda1(3, 1, 0, 2);
    FAIL("expected InconsistentParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentParameters);
  }
}

TEST_CASE("lambda2 examples") {
  CHECK(lambda2(cyclic_group(1), 3)->order() == 3);
  CHECK(lambda2(cyclic_group(2), 3)->order() == 18);
  CHECK(lambda2(tame_group(3, 2, 0, 5).group, 3)->order() == 4374);
}

TEST_CASE("lambda fiber orders and inertia projections") {
  struct P {
    std::uint64_t e, f, r, p;
  };
  for (auto [e, f, r, p] : {P{1, 1, 0, 3}, P{3, 1, 0, 7}, P{3, 2, 0, 2}, P{1, 2, 0, 3}, P{2, 1, 0, 3},
                            P{1, 3, 0, 2}}) {
    CAPTURE(e);
    CAPTURE(f);
    CAPTURE(p);
    auto T = lambda_fiber(e, f, r, p);
    std::uint64_t ef = e * f;
    CHECK(T.H.group->order() == ef);
    CHECK(T.lambda1.group->order() == ef * p);
    CHECK(T.lambda2->order() == ef * nt::prime_power(p, static_cast<unsigned>(ef)));
    CHECK(T.lambda->order() == ef * nt::prime_power(p, static_cast<unsigned>(ef + 1)));
    CHECK(T.phi1.is_surjective());
    CHECK(T.phi2.is_surjective());
    CHECK(is_normal(T.lambda, T.inertia));

    // Projections of the inertia subgroup.
    std::vector<Index> first, second;
    for (Index x : T.inertia.elements()) {
      first.push_back(first_component(*T.lambda, x));
      second.push_back(second_component(*T.lambda, x));
    }
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end()), first.end());
    std::sort(second.begin(), second.end());
    second.erase(std::unique(second.begin(), second.end()), second.end());
    CHECK(first == Subgroup(T.lambda1.group, {T.lambda1.t}).elements());
    Subgroup tau(T.H.group, {T.H.t});
    CHECK(second == T.phi2.preimage(tau).elements());
  }
}

TEST_CASE("lambda fiber on the smallest case") {
  auto T = lambda_fiber(1, 1, 0, 3);
  CHECK(T.lambda->order() == 9);
  CHECK(T.lambda->order() / T.inertia.order() == 3);
  auto U = lambda_fiber(3, 1, 0, 7);
  CHECK(U.lambda->order() == 3 * 7 * 7 * 7 * 7);
}
