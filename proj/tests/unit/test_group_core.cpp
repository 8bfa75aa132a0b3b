#include <doctest.h>

#include <set>

#include "inertia/error.hpp"
#include "inertia/group/algorithms.hpp"
#include "inertia/group/constructions.hpp"
#include "inertia/group/group_spec.hpp"

using namespace inertia;
using namespace inertia::group;

namespace {

GroupPtr s3() { return FiniteGroup::enumerate({from_cycles(3, {{1, 2, 3}}), from_cycles(3, {{1, 2}})}); }

// Closure by repeated multiplication until nothing new appears.
std::size_t naive_closure_size(const std::vector<Permutation>& gens) {
  std::set<std::vector<std::uint32_t>> seen{identity_permutation(gens[0].images.size()).images};
  std::vector<std::vector<std::uint32_t>> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = g.images[x[i]];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

template <class E>
Errc code_of(E&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::CheckFailed;
}

}  // namespace

TEST_CASE("enumerate examples") {
  CHECK(FiniteGroup::enumerate({identity_permutation(3)})->order() == 1);
  CHECK(s3()->order() == 6);
  CHECK(FiniteGroup::enumerate({matrix(5, 2, 0, 0, 1), matrix(5, 1, 1, 0, 1)})->order() == 20);
  CHECK(FiniteGroup::enumerate({matrix(3, 0, 1, 1, 0), matrix(3, 1, 1, 0, 1), matrix(3, 2, 0, 0, 1)})->order() == 48);
}

TEST_CASE("enumerate agrees with a naive closure") {
  std::vector<std::vector<Permutation>> cases = {
      {from_cycles(5, {{1, 2, 3, 4, 5}}), from_cycles(5, {{1, 2}})},
      {from_cycles(6, {{1, 2, 3}}), from_cycles(6, {{4, 5}})},
      {from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}), from_cycles(8, {{1, 5}, {2, 8}, {3, 7}, {4, 6}})},
      {from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}}), from_cycles(7, {{2, 3, 5}, {4, 7, 6}})},
  };
  for (const auto& gens : cases) {
    std::vector<GroupElement> g(gens.begin(), gens.end());
    CHECK(FiniteGroup::enumerate(g)->order() == naive_closure_size(gens));
  }
}

TEST_CASE("enumerate errors") {
  CHECK(code_of([] { FiniteGroup::enumerate({from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}}), from_cycles(8, {{1, 2}})}, 1000); }) ==
        Errc::BoundExceeded);
  CHECK(code_of([] { FiniteGroup::enumerate({from_cycles(3, {{1, 2}}), matrix(3, 1, 1, 0, 1)}); }) == Errc::KindMismatch);
}

TEST_CASE("group table invariants") {
  auto G = FiniteGroup::enumerate({matrix(5, 2, 0, 0, 1), matrix(5, 1, 1, 0, 1)});
  CHECK(G->element(G->identity()) == GroupElement(matrix(5, 1, 0, 0, 1)));
  for (Index g : G->generators()) CHECK(g < G->order());
  for (Index a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == G->identity());
    CHECK(G->order() % G->element_order(a) == 0);
    for (Index b = 0; b < G->order(); b += 3) {
      auto prod = G->arithmetic().multiply(G->element(a), G->element(b));
      CHECK(G->element(G->mul(a, b)) == prod);
    }
  }
}

TEST_CASE("permutation convention applies the left factor first") {
  auto G = s3();
  Index a = G->index_of(from_cycles(3, {{1, 2}}));
  Index b = G->index_of(from_cycles(3, {{2, 3}}));
  auto ab = std::get<Permutation>(G->element(G->mul(a, b)));
  // 0 -> 1 under a, then 1 -> 2 under b.
  CHECK(ab.images[0] == 2);
}

TEST_CASE("subgroup_generated examples") {
  auto G = s3();
  CHECK(subgroup_generated(G, {}).order() == 1);
  CHECK(subgroup_generated(G, {from_cycles(3, {{1, 2, 3}})}).order() == 3);
  auto gl3 = FiniteGroup::enumerate({matrix(3, 0, 1, 1, 0), matrix(3, 1, 1, 0, 1), matrix(3, 2, 0, 0, 1)});
  auto Z = subgroup_generated(gl3, {matrix(3, 2, 0, 0, 2)});
  CHECK(Z.order() == 2);
  CHECK(code_of([&] { subgroup_generated(G, {from_cycles(4, {{1, 4}})}); }) != Errc::CheckFailed);
}

TEST_CASE("normal_closure examples") {
  auto G = s3();
  CHECK(normal_closure(G, {from_cycles(3, {{1, 2}})}).order() == 6);
  CHECK(normal_closure(G, {from_cycles(3, {{1, 2, 3}})}).order() == 3);
  auto A = abelian_group({4, 6});
  CHECK(normal_closure(A, {A->element(A->generators()[0])}).order() == 4);
}

TEST_CASE("Lagrange and normal closure properties on S5 subsets") {
  auto G = symmetric_group(5);
  for (Index x = 0; x < G->order(); x += 7)
    for (Index y = 1; y < G->order(); y += 29) {
      auto S = subgroup_generated(G, {G->element(x), G->element(y)});
      CHECK(G->order() % S.order() == 0);
      auto N = normal_closure(G, {G->element(x), G->element(y)});
      CHECK(is_normal(G, N));
      CHECK(S.is_subset_of(N));
    }
}

TEST_CASE("Subgroup closure and membership") {
  auto G = symmetric_group(4);
  Subgroup S(G, {G->index_of(from_cycles(4, {{1, 2, 3, 4}}))});
  CHECK(S.order() == 4);
  for (Index a : S.elements())
    for (Index b : S.elements()) CHECK(S.contains(G->mul(a, G->inv(b))));
  CHECK(S.join({G->index_of(from_cycles(4, {{1, 3}}))}).order() == 8);
  CHECK(S.as_group()->order() == 4);
}

TEST_CASE("homomorphism checks well-definedness") {
  auto C4 = cyclic_group(4);
  auto C2 = cyclic_group(2);
  auto hom = Homomorphism::from_generator_images(C4, C2, std::vector<Index>{C2->generators()[0]});
  CHECK(hom.kernel().order() == 2);
  CHECK(hom.is_surjective());
  auto C3 = cyclic_group(3);
  CHECK(code_of([&] { Homomorphism::from_generator_images(C4, C3, std::vector<Index>{C3->generators()[0]}); }) ==
        Errc::NotAHomomorphism);
}

TEST_CASE("group specs parse") {
  auto G = group_from_spec(nlohmann::json::parse(R"({"kind":"perm","degree":3,"generators":[[1,2,0],[1,0,2]]})"));
  CHECK(G->order() == 6);
  auto M = group_from_spec(nlohmann::json::parse(R"({"kind":"gl2","p":5,"generators":[[2,0,0,1],[1,1,0,1]]})"));
  CHECK(M->order() == 20);
  auto A = group_from_spec(nlohmann::json::parse(R"({"kind":"abelian","factors":[2,4]})"));
  CHECK(abelian_invariants(A) == AbelianType{{2, 4}});
  auto F = group_from_spec(nlohmann::json::parse(
      R"({"kind":"semidirect","normal":{"kind":"abelian","factors":[7]},"acting":{"kind":"abelian","factors":[3]},"action":{"0":[[2,3,4,5,6,0,1]]}})"));
  CHECK(F->order() == 21);
  CHECK_FALSE(F->is_abelian());
  CHECK_THROWS_AS(group_from_spec(nlohmann::json::parse(R"({"kind":"nope"})")), Error);
}
