#pragma once

// Brute-force reference computations used as oracles by the tests.  They
// share no code with the library beyond group multiplication.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "inertia/group/algorithms.hpp"
#include "inertia/group/constructions.hpp"
#include "inertia/local/lambda.hpp"

namespace oracle {

using inertia::group::AbelianType;
using inertia::group::GroupPtr;
using inertia::group::Index;
using inertia::group::Subgroup;

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Every abelian type of order <= max_order, each listed once.
inline std::vector<AbelianType> abelian_types_up_to(std::uint64_t max_order) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<AbelianType> out;
  // Non-increasing factor lists with each factor >= 2; normalise to
  // invariant factors and deduplicate.
  std::function<void(std::vector<std::uint64_t>&, std::uint64_t, std::uint64_t)> rec =
      [&](std::vector<std::uint64_t>& cur, std::uint64_t order, std::uint64_t maxf) {
        auto t = AbelianType::from_factors(cur);
        if (seen.insert(t.factors).second) out.push_back(t);
        for (std::uint64_t f = 2; f <= maxf && order * f <= max_order; ++f) {
          cur.push_back(f);
          rec(cur, order * f, f);
          cur.pop_back();
        }
      };
  std::vector<std::uint64_t> cur;
  rec(cur, 1, max_order);
  return out;
}

// Types of all quotients of Z/m1 x Z/m2, from the Hermite normal forms
// [[a, b], [0, d]] of lattices containing m1 Z x m2 Z.  The quotient type is
// read off the Smith form: d1 = gcd(a, b, d), d2 = a d / d1.
inline std::set<std::vector<std::uint64_t>> lattice_quotient_types(std::uint64_t m1, std::uint64_t m2) {
  std::set<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 1; a <= m1; ++a) {
    if (m1 % a) continue;
    for (std::uint64_t d = 1; d <= m2; ++d) {
      if (m2 % d) continue;
      for (std::uint64_t b = 0; b < d; ++b) {
        if (((m1 / a) * b) % d) continue;  // (m1, 0) must lie in the lattice
        std::uint64_t d1 = gcd(gcd(a, b), d);
        std::uint64_t d2 = a * d / d1;
        out.insert(AbelianType::from_factors({d1, d2}).factors);
      }
    }
  }
  return out;
}

// Every subgroup, by closing cyclic subgroups under joins.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup S) {
    if (seen.insert(S.elements()).second) subs.push_back(std::move(S));
  };
  for (Index x = 0; x < G->order(); ++x) add(Subgroup(G, {x}));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Index> gens = subs[i].generators();
      gens.insert(gens.end(), subs[j].generators().begin(), subs[j].generators().end());
      add(Subgroup(G, gens));
    }
  return subs;
}

// Intersection of the maximal subgroups.
inline std::vector<Index> frattini_by_maximal_subgroups(const GroupPtr& G) {
  auto subs = all_subgroups(G);
  std::vector<char> in(G->order(), 1);
  for (const auto& M : subs) {
    if (M.order() == G->order()) continue;
    bool maximal = std::none_of(subs.begin(), subs.end(), [&](const Subgroup& S) {
      return S.order() > M.order() && S.order() < G->order() && M.is_subset_of(S);
    });
    if (!maximal) continue;
    for (Index x = 0; x < G->order(); ++x)
      if (!M.contains(x)) in[x] = 0;
  }
  std::vector<Index> out;
  for (Index x = 0; x < G->order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Normal closures of single elements, plus the trivial subgroup.
inline std::vector<Subgroup> single_element_normal_closures(const GroupPtr& G) {
  std::vector<Subgroup> out{Subgroup::trivial(G)};
  std::set<std::vector<Index>> seen{out[0].elements()};
  for (Index x = 0; x < G->order(); ++x) {
    auto N = inertia::group::normal_closure_in(Subgroup::whole(G), {x});
    if (seen.insert(N.elements()).second) out.push_back(N);
  }
  return out;
}

// Odd-order groups of order <= 1000 used for property tests.
inline std::vector<GroupPtr> odd_group_corpus() {
  using namespace inertia::group;
  std::vector<GroupPtr> out;
  auto meta = [&](std::uint64_t e, std::uint64_t f, std::uint64_t r, std::uint64_t k) {
    out.push_back(inertia::local::metacyclic_group(e, f, r, k).group);
  };
  meta(7, 3, 0, 2);    // C7 x| C3
  meta(13, 3, 0, 3);   // C13 x| C3
  meta(19, 3, 0, 7);   // C19 x| C3
  meta(7, 9, 0, 2);    // C7 x| C9
  meta(9, 3, 0, 4);    // C9 x| C3
  meta(11, 5, 0, 3);   // C11 x| C5
  meta(31, 5, 0, 2);   // C31 x| C5
  meta(7, 3, 0, 1);    // C21
  meta(9, 9, 3, 1);    // abelian
  meta(27, 3, 0, 10);  // C27 x| C3
  meta(63, 3, 0, 4);   // C63 x| C3
  out.push_back(abelian_group({3, 3}));
  out.push_back(abelian_group({3, 9}));
  out.push_back(abelian_group({5, 15}));
  out.push_back(wreath_product_regular(3, cyclic_group(3)));  // order 81
  out.push_back(wreath_product_regular(5, cyclic_group(3)));  // order 375
  out.push_back(direct_product(out[0], cyclic_group(3)));     // order 63
  out.push_back(direct_product(out[0], cyclic_group(5)));     // order 105
  // Heisenberg group mod 3 as C3^2 x| C3.
  {
    auto N = abelian_group({3, 3});
    const auto& g = N->generators();
    out.push_back(semidirect_product(N, cyclic_group(3), {{N->mul(g[0], g[1]), g[1]}}));
  }
  // C7^2 x| C3 with the action diag(2, 4).
  {
    auto N = abelian_group({7, 7});
    const auto& g = N->generators();
    out.push_back(semidirect_product(N, cyclic_group(3), {{N->pow(g[0], 2), N->pow(g[1], 4)}}));
  }
  return out;
}

}  // namespace oracle
