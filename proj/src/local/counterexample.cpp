#include "inertia/local/counterexample.hpp"

#include "inertia/error.hpp"
#include "inertia/group/algorithms.hpp"

namespace inertia::local {

using group::Index;
using group::ProductTuple;
using group::Subgroup;

CounterexampleGroup build_counterexample_group() {
  auto N = group::abelian_group({2, 2, 2, 2});
  auto H = group::cyclic_group(8);
  const auto& ng = N->generators();
  Index a2a3a4 = N->mul(N->mul(ng[1], ng[2]), ng[3]);
  auto G = group::semidirect_product(N, H, {{ng[0], ng[2], ng[3], a2a3a4}});

  CounterexampleGroup out{G, Subgroup::trivial(G), {}, 0};
  for (Index n : ng) out.a.push_back(G->index_of(ProductTuple{{n}, 0}));
  out.h = G->index_of(ProductTuple{{0}, H->generators().front()});
  out.I = Subgroup(G, out.a);
  return out;
}

nlohmann::json CounterexampleReport::to_json() const {
  return {{"group_order", group_order},
          {"inertia_order", inertia_order},
          {"quotient_order", quotient_order},
          {"quotient_cyclic", quotient_cyclic},
          {"sylow2_order", sylow2_order},
          {"frattini_index", frattini_index},
          {"relator_trivial", {{"inverse_first", relator_trivial_inverse_first},
                               {"inverse_last", relator_trivial_inverse_last}}},
          {"images_generate", images_generate},
          {"wild_closure_order", wild_closure_order},
          {"wild_closure_is_inertia", wild_closure_is_inertia},
          {"intermediate_orders", intermediate_orders},
          {"intermediate_ranks", intermediate_ranks},
          {"intermediates_are_preimages", intermediates_are_preimages},
          {"generated_by_three", generated_by_three},
          {"failures", failures}};
}

CounterexampleReport counterexample_report() {
  auto C = build_counterexample_group();
  const auto& G = *C.G;
  CounterexampleReport rep;
  auto fail = [&](bool ok, const std::string& what) {
    if (!ok) rep.failures.push_back(what);
  };

  rep.group_order = G.order();
  rep.inertia_order = C.I.order();
  fail(rep.group_order == 128, "|G| = 128");
  fail(rep.inertia_order == 16, "|I| = 16");
  fail(group::is_normal(C.G, C.I), "I normal in G");

  auto quotient = group::quotient_group(C.G, C.I);
  rep.quotient_order = quotient.group->order();
  for (Index q = 0; q < quotient.group->order(); ++q)
    if (quotient.group->element_order(q) == quotient.group->order()) rep.quotient_cyclic = true;
  fail(rep.quotient_order == 8 && rep.quotient_cyclic, "G/I cyclic of order 8");

  rep.sylow2_order = group::sylow_p_subgroup(C.G, 2).order();
  rep.frattini_index = G.order() / group::frattini_p_group(C.G, 2).order();

  // x -> a2 h^-2, y -> h, z -> a1 a2 a3.
  Index x = G.mul(C.a[1], G.pow(C.h, -2));
  Index y = C.h;
  Index z = G.mul(G.mul(C.a[0], C.a[1]), C.a[2]);
  Index head = G.mul(G.pow(x, 2), G.pow(y, 4));
  Index comm_first = G.mul(G.mul(G.inv(y), G.inv(z)), G.mul(y, z));
  Index comm_last = G.mul(G.mul(y, z), G.mul(G.inv(y), G.inv(z)));
  rep.relator_trivial_inverse_first = G.mul(head, comm_first) == G.identity();
  rep.relator_trivial_inverse_last = G.mul(head, comm_last) == G.identity();
  fail(rep.relator_trivial_inverse_first || rep.relator_trivial_inverse_last,
       "relator x^2 y^4 (y,z) maps to 1 under some commutator convention");
  rep.images_generate = Subgroup(C.G, {x, y, z}).order() == G.order();
  fail(rep.images_generate, "images of x, y, z generate G");

  Index xy2 = G.mul(x, G.pow(y, 2));
  Subgroup wild = group::normal_closure_in(Subgroup::whole(C.G), {xy2, z});
  rep.wild_closure_order = wild.order();
  rep.wild_closure_is_inertia = wild == C.I;
  fail(rep.wild_closure_is_inertia, "normal closure of {pi(x y^2), pi(z)} equals I");

  auto Ds = group::intermediate_subgroups(C.G, C.I);
  // Preimages of the subgroups of G/I.
  std::vector<std::vector<Index>> preimages;
  for (const auto& S : group::intermediate_subgroups(quotient.group, Subgroup::trivial(quotient.group)))
    preimages.push_back(quotient.projection.preimage(S).elements());
  rep.intermediates_are_preimages = Ds.size() == preimages.size();
  for (const auto& D : Ds) {
    rep.intermediate_orders.push_back(D.order());
    rep.intermediate_ranks.push_back(group::generator_rank_p_group(D, 2));
    rep.generated_by_three.push_back(group::minimal_generating_size(D.as_group(), 3).has_value());
    bool found = false;
    for (const auto& pre : preimages) found = found || pre == D.elements();
    rep.intermediates_are_preimages = rep.intermediates_are_preimages && found;
  }
  fail(Ds.size() == 4, "exactly four intermediate subgroups");
  fail(rep.intermediates_are_preimages, "intermediate subgroups are the preimages of subgroups of C8");
  unsigned small = 0;
  for (std::size_t i = 0; i < Ds.size(); ++i)
    if (rep.generated_by_three[i]) ++small;
  fail(small == 1 && !Ds.empty() && rep.generated_by_three.back() && rep.intermediate_ranks.back() == 3,
       "only D = G has generator rank <= 3");
  return rep;
}

CounterexampleReport verify_local_global_counterexample() {
  auto rep = counterexample_report();
  if (!rep.ok()) throw Error(Errc::CheckFailed, rep.failures.front());
  return rep;
}

}  // namespace inertia::local
