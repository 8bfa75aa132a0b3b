#include "inertia/group/algorithms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "inertia/error.hpp"
#include "inertia/group/constructions.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::group {

AbelianType AbelianType::from_factors(const std::vector<std::uint64_t>& any) {
  std::map<std::uint64_t, std::vector<unsigned>> parts;
  for (auto d : any) {
    if (d == 0) throw Error(Errc::InvalidParameters, "factor 0 in abelian type");
    for (auto [p, k] : nt::factor(d)) parts[p].push_back(k);
  }
  std::size_t width = 0;
  for (auto& [p, ks] : parts) {
    std::sort(ks.rbegin(), ks.rend());
    width = std::max(width, ks.size());
  }
  // Largest invariant factor takes the largest power of each prime, etc.
  std::vector<std::uint64_t> factors(width, 1);
  for (auto& [p, ks] : parts)
    for (std::size_t i = 0; i < ks.size(); ++i) factors[i] *= nt::prime_power(p, ks[i]);
  std::reverse(factors.begin(), factors.end());
  return AbelianType{factors};
}

std::uint64_t AbelianType::order() const {
  std::uint64_t n = 1;
  for (auto d : factors) n *= d;
  return n;
}

std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> AbelianType::primary_parts() const {
  std::map<std::uint64_t, std::vector<unsigned>> parts;
  for (auto d : factors)
    for (auto [p, k] : nt::factor(d)) parts[p].push_back(k);
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> out;
  for (auto& [p, ks] : parts) {
    std::sort(ks.rbegin(), ks.rend());
    out.emplace_back(p, ks);
  }
  return out;
}

Subgroup subgroup_generated(const GroupPtr& G, const std::vector<GroupElement>& elems) {
  std::vector<Index> idx;
  for (const auto& e : elems) idx.push_back(G->index_of(e));
  return Subgroup(G, idx);
}

Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<Index>& elems) {
  const auto& G = *ambient.parent();
  Subgroup K(ambient.parent(), elems);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < K.generators().size(); ++i) {
      Index k = K.generators()[i];
      for (Index g : ambient.generators()) {
        Index c = G.conj(k, g);
        if (!K.contains(c)) {
          K = K.join({c});
          changed = true;
        }
      }
    }
  }
  return K;
}

Subgroup normal_closure(const GroupPtr& G, const std::vector<GroupElement>& elems) {
  std::vector<Index> idx;
  for (const auto& e : elems) idx.push_back(G->index_of(e));
  return normal_closure_in(Subgroup::whole(G), idx);
}

bool is_normal_in(const Subgroup& ambient, const Subgroup& N) {
  const auto& G = *ambient.parent();
  for (Index n : N.generators())
    for (Index g : ambient.generators())
      if (!N.contains(G.conj(n, g))) return false;
  return true;
}

bool is_normal(const GroupPtr& G, const Subgroup& N) { return is_normal_in(Subgroup::whole(G), N); }

bool is_p_group_order(std::uint64_t order, std::uint64_t p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

Subgroup conjugate_subgroup(const Subgroup& S, Index g) {
  const auto& G = *S.parent();
  std::vector<Index> gens;
  for (Index s : S.generators()) gens.push_back(G.conj(s, g));
  return Subgroup(S.parent(), gens);
}

Subgroup sylow_p_subgroup(const Subgroup& S, std::uint64_t p) {
  const auto& G = *S.parent();
  std::uint64_t target = nt::prime_power(p, nt::valuation(S.order(), p));
  Subgroup P = Subgroup::trivial(S.parent());
  while (P.order() < target) {
    bool grown = false;
    for (Index x : S.elements()) {
      if (P.contains(x) || !is_p_group_order(G.element_order(x), p)) continue;
      bool normalizes = std::all_of(P.generators().begin(), P.generators().end(),
                                    [&](Index g) { return P.contains(G.conj(g, x)); });
      if (!normalizes) continue;
      P = P.join({x});
      grown = true;
      break;
    }
    if (!grown) throw Error(Errc::CheckFailed, "Sylow growth stalled");
  }
  return P;
}

Subgroup sylow_p_subgroup(const GroupPtr& G, std::uint64_t p) { return sylow_p_subgroup(Subgroup::whole(G), p); }

Subgroup frattini_p_group(const Subgroup& P, std::uint64_t p) {
  if (!is_p_group_order(P.order(), p)) throw Error(Errc::NotAPGroup, "subgroup order is not a power of p");
  const auto& G = *P.parent();
  const auto& gens = P.generators();
  std::vector<Index> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(G.pow(gens[i], static_cast<std::int64_t>(p)));
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(G.commutator(gens[i], gens[j]));
  }
  return normal_closure_in(P, seeds);
}

Subgroup frattini_p_group(const GroupPtr& P, std::uint64_t p) { return frattini_p_group(Subgroup::whole(P), p); }

unsigned generator_rank_p_group(const Subgroup& P, std::uint64_t p) {
  Subgroup F = frattini_p_group(P, p);
  return nt::valuation(P.order() / F.order(), p);
}

unsigned generator_rank_p_group(const GroupPtr& P, std::uint64_t p) {
  return generator_rank_p_group(Subgroup::whole(P), p);
}

Quotient quotient_group(const GroupPtr& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw Error(Errc::NotNormal, "quotient by a non-normal subgroup");
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> coset(G->order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < G->order(); ++x) {
    if (coset[x] != kUnset) continue;
    Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index n : N.elements()) coset[G->mul(n, x)] = c;
  }
  auto degree = static_cast<std::uint32_t>(reps.size());
  std::vector<GroupElement> images;
  for (Index g : G->generators()) {
    Permutation perm;
    perm.images.resize(degree);
    for (Index c = 0; c < degree; ++c) perm.images[c] = coset[G->mul(reps[c], g)];
    images.push_back(std::move(perm));
  }
  std::vector<GroupElement> qgens = images;
  if (qgens.empty()) qgens.push_back(identity_permutation(degree));
  auto Q = FiniteGroup::enumerate(permutation_arithmetic(degree), qgens);
  auto proj = Homomorphism::from_generator_images(G, Q, images);
  return Quotient{Q, std::move(proj)};
}

std::vector<Subgroup> intermediate_subgroups(const GroupPtr& G, const Subgroup& I, std::size_t index_bound) {
  if (G->order() / I.order() > index_bound)
    throw Error(Errc::BoundExceeded, "index " + std::to_string(G->order() / I.order()) + " exceeds bound");
  std::set<std::vector<Index>> seen{I.elements()};
  std::vector<Subgroup> found{I};
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Subgroup D = found[head];
    std::vector<bool> covered(G->order(), false);
    for (Index d : D.elements()) covered[d] = true;
    for (Index g = 0; g < G->order(); ++g) {
      if (covered[g]) continue;
      // <D, g> = <D, gd> = <D, dg>: skip the rest of both cosets.
      for (Index d : D.elements()) {
        covered[G->mul(g, d)] = true;
        covered[G->mul(d, g)] = true;
      }
      Subgroup E = D.join({g});
      if (seen.insert(E.elements()).second) found.push_back(std::move(E));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

AbelianType abelian_invariants(const GroupPtr& G) {
  if (!G->is_abelian()) throw Error(Errc::NotAbelian, "abelian invariants of a non-abelian group");
  std::vector<std::uint64_t> prime_powers;
  for (auto [p, v] : nt::factor(G->order())) {
    // count[k] = #{x : x^(p^k) = 1}; the number of cyclic factors of
    // exponent >= k is log_p(count[k] / count[k-1]).
    std::vector<std::uint64_t> count(v + 1, 0);
    for (Index x = 0; x < G->order(); ++x) {
      std::uint64_t ord = G->element_order(x);
      if (!is_p_group_order(ord, p)) continue;
      unsigned e = nt::valuation(ord, p);
      for (unsigned k = e; k <= v; ++k) ++count[k];
    }
    std::vector<unsigned> at_least(v + 2, 0);
    for (unsigned k = 1; k <= v; ++k) at_least[k] = nt::valuation(count[k] / count[k - 1], p);
    for (unsigned k = 1; k <= v; ++k)
      for (unsigned c = at_least[k + 1]; c < at_least[k]; ++c) prime_powers.push_back(nt::prime_power(p, k));
  }
  return AbelianType::from_factors(prime_powers);
}

std::optional<Index> is_conjugate_subgroup_within(const Subgroup& within, const Subgroup& A, const Subgroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  const auto& G = *within.parent();
  for (Index g : within.elements()) {
    bool ok = std::all_of(A.generators().begin(), A.generators().end(),
                          [&](Index a) { return B.contains(G.conj(a, g)); });
    if (ok) return g;
  }
  return std::nullopt;
}

std::optional<Index> is_conjugate_subgroup(const GroupPtr& G, const Subgroup& A, const Subgroup& B) {
  return is_conjugate_subgroup_within(Subgroup::whole(G), A, B);
}

std::vector<Index> conjugacy_class_representatives(const GroupPtr& G) {
  std::vector<bool> seen(G->order(), false);
  std::vector<Index> reps;
  for (Index x = 0; x < G->order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    std::vector<Index> orbit{x};
    seen[x] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (Index g : G->generators()) {
        Index y = G->conj(orbit[head], g);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
  }
  return reps;
}

std::optional<unsigned> minimal_generating_size(const GroupPtr& G, unsigned bound) {
  if (G->order() == 1) return 0u;
  auto fs = nt::factor(G->order());
  if (fs.size() == 1) {
    unsigned r = generator_rank_p_group(G, fs.front().first);
    if (r <= bound) return r;
    return std::nullopt;
  }
  if (G->is_abelian()) {
    auto r = static_cast<unsigned>(abelian_invariants(G).factors.size());
    if (r <= bound) return r;
    return std::nullopt;
  }
  if (bound >= 1) {
    for (Index x = 0; x < G->order(); ++x)
      if (G->element_order(x) == G->order()) return 1u;
  }
  // The first element can be conjugated to a class representative; the
  // rest are taken in increasing index order.
  auto reps = conjugacy_class_representatives(G);
  std::function<bool(const Subgroup&, unsigned, Index)> extend = [&](const Subgroup& K, unsigned left,
                                                                      Index start) {
    if (K.order() == G->order()) return true;
    if (left == 0) return false;
    for (Index y = start; y < G->order(); ++y) {
      if (K.contains(y)) continue;
      if (extend(K.join({y}), left - 1, y + 1)) return true;
    }
    return false;
  };
  for (unsigned k = 2; k <= bound; ++k) {
    for (Index x : reps) {
      if (x == 0) continue;
      if (extend(Subgroup(G, {x}), k - 1, 1)) return k;
    }
  }
  return std::nullopt;
}

}  // namespace inertia::group
