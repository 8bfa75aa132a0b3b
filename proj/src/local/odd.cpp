#include "inertia/local/odd.hpp"

#include <algorithm>
#include <map>

#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::local {

namespace {

// Maps I (a subgroup of some group) into D by element value.
Subgroup transport(const Subgroup& I, const GroupPtr& D) {
  std::vector<Index> gens;
  for (Index g : I.generators()) gens.push_back(D->index_of(I.parent()->element(g)));
  return Subgroup(D, gens);
}

std::uint64_t discrete_log(const group::FiniteGroup& D, Index base, Index target, std::uint64_t order) {
  Index x = D.identity();
  for (std::uint64_t k = 0; k < order; ++k) {
    if (x == target) return k;
    x = D.mul(x, base);
  }
  throw Error(Errc::CheckFailed, "element not in the cyclic subgroup");
}

RealizabilityVerdict negative(std::string reason) {
  RealizabilityVerdict v;
  v.status = Status::NotRealizable;
  v.reason = std::move(reason);
  return v;
}

void require_odd(const group::FiniteGroup& G) {
  if (G.order() % 2 == 0) throw Error(Errc::EvenOrder, "group of even order " + std::to_string(G.order()));
}

}  // namespace

RealizabilityVerdict tame_realizable(const GroupPtr& D, const Subgroup& I, std::uint64_t p) {
  const auto& G = *D;
  std::uint64_t e = I.order();
  if (nt::gcd(e, p) != 1) return negative("|I| is divisible by p");
  if (G.order() % e != 0) return negative("|I| does not divide |D|");
  std::uint64_t f = G.order() / e;

  for (Index tau : I.elements()) {
    if (G.element_order(tau) != e) continue;
    Index tau_p = G.pow(tau, static_cast<std::int64_t>(p % e));
    for (Index sigma = 0; sigma < G.order(); ++sigma) {
      if (G.conj(tau, sigma) != tau_p) continue;
      Index sigma_f = G.pow(sigma, static_cast<std::int64_t>(f));
      if (!I.contains(sigma_f)) continue;
      if (Subgroup(D, {sigma, tau}).order() != G.order()) continue;

      RealizabilityVerdict v;
      v.status = Status::Realizable;
      v.reason = I.order() == 1 ? "unramified: D is cyclic" : "tame presentation found";
      LocalWitness w;
      w.d_generators = G.generator_elements();
      w.tame.sigma = G.element(sigma);
      w.tame.tau = G.element(tau);
      w.tame.e = e;
      w.tame.f = f;
      w.tame.r = discrete_log(G, tau, sigma_f, e);
      w.tame.frobenius_congruence = nt::powmod(p, f, e) == 1 % e;
      w.tame.twist_congruence = (w.tame.r * ((p - 1) % e)) % e == 0;
      w.wild.a = G.element(G.identity());
      v.local = std::move(w);
      return v;
    }
  }
  if (I.order() > 1 && std::none_of(I.elements().begin(), I.elements().end(),
                                    [&](Index x) { return G.element_order(x) == e; }))
    return negative("I is not cyclic");
  return negative("no pair (sigma, tau) satisfies the tame relations");
}

RealizabilityVerdict qp_realizable_odd(const GroupPtr& D, const Subgroup& I, std::uint64_t p) {
  require_odd(*D);
  if (!nt::is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  if (!group::is_normal(D, I)) return negative("I is not normal in D");

  Subgroup Ip = group::sylow_p_subgroup(I, p);
  if (!group::is_normal_in(I, Ip)) return negative("I has no normal Sylow p-subgroup");
  if (!group::is_normal(D, Ip)) return negative("I_p is not normal in D");

  auto quotient = group::quotient_group(D, Ip);
  Subgroup Ibar = quotient.projection.image_of(I);
  auto tame = tame_realizable(quotient.group, Ibar, p);
  if (!tame.realizable()) return negative("tame condition fails: " + tame.reason);

  std::optional<Index> wild;
  for (Index a : Ip.elements()) {
    if (group::normal_closure_in(Subgroup::whole(D), {a}) == Ip) {
      wild = a;
      break;
    }
  }
  if (!wild) return negative("wild condition fails: I_p is not the normal closure of one element");

  // Lift the quotient generators to D (smallest preimages).
  const auto& Q = *quotient.group;
  Index sigma_bar = Q.index_of(tame.local->tame.sigma);
  Index tau_bar = Q.index_of(tame.local->tame.tau);
  std::optional<Index> sigma, tau;
  for (Index x = 0; x < D->order() && !(sigma && tau); ++x) {
    Index y = quotient.projection.apply(x);
    if (!sigma && y == sigma_bar) sigma = x;
    if (!tau && y == tau_bar) tau = x;
  }

  RealizabilityVerdict v;
  v.status = Status::Realizable;
  v.reason = Ip.order() == 1 ? "tame condition holds and I_p is trivial"
                             : "tame and wild conditions hold";
  LocalWitness w;
  w.d_generators = D->generator_elements();
  w.tame = tame.local->tame;
  w.tame.sigma = D->element(*sigma);
  w.tame.tau = D->element(*tau);
  w.wild.a = D->element(*wild);
  v.local = std::move(w);
  return v;
}

RealizabilityVerdict q_realizable_odd(const GroupPtr& G, const Subgroup& I, std::uint64_t p,
                                      std::size_t index_bound) {
  require_odd(*G);
  for (const auto& D : group::intermediate_subgroups(G, I, index_bound)) {
    GroupPtr Dg = D.as_group();
    auto v = qp_realizable_odd(Dg, transport(I, Dg), p);
    if (v.realizable()) {
      v.reason += "; D of order " + std::to_string(D.order());
      return v;
    }
  }
  return negative("no intermediate subgroup D is Q_p-realizable with inertia I");
}

std::string validate_local_witness(const GroupPtr& G, const Subgroup& I, std::uint64_t p, const LocalWitness& w) {
  const auto& A = *G;
  std::vector<Index> dgens;
  for (const auto& g : w.d_generators) {
    auto idx = A.find(g);
    if (!idx) return "D generator not in G";
    dgens.push_back(*idx);
  }
  Subgroup D(G, dgens);
  if (!I.is_subset_of(D)) return "I is not contained in D";
  if (!group::is_normal_in(D, I)) return "I is not normal in D";

  Subgroup Ip = group::sylow_p_subgroup(I, p);
  if (!group::is_normal_in(I, Ip)) return "I_p is not normal in I";
  if (!group::is_normal_in(D, Ip)) return "I_p is not normal in D";

  auto sigma = A.find(w.tame.sigma), tau = A.find(w.tame.tau), a = A.find(w.wild.a);
  if (!sigma || !tau || !a) return "witness element not in G";
  if (!D.contains(*sigma) || !D.contains(*tau)) return "sigma or tau not in D";

  auto in_ip = [&](Index x) { return Ip.contains(x); };
  std::uint64_t e = w.tame.e, f = w.tame.f, r = w.tame.r;
  if (e == 0 || f == 0) return "e and f must be positive";
  if (nt::gcd(e, p) != 1) return "gcd(e, p) != 1";
  // Order of tau modulo I_p is exactly e.
  if (!in_ip(A.pow(*tau, static_cast<std::int64_t>(e)))) return "tau^e not in I_p";
  for (auto [q, k] : nt::factor(e))
    if (in_ip(A.pow(*tau, static_cast<std::int64_t>(e / q)))) return "tau has order smaller than e modulo I_p";
  // tau^sigma = tau^p modulo I_p.
  Index lhs = A.conj(*tau, *sigma);
  Index rhs = A.pow(*tau, static_cast<std::int64_t>(p));
  if (!in_ip(A.mul(A.inv(lhs), rhs))) return "tau^sigma != tau^p modulo I_p";
  // sigma^f = tau^r modulo I_p.
  Index sf = A.pow(*sigma, static_cast<std::int64_t>(f));
  Index tr = A.pow(*tau, static_cast<std::int64_t>(r));
  if (!in_ip(A.mul(A.inv(sf), tr))) return "sigma^f != tau^r modulo I_p";
  // Generation statements.
  std::vector<Index> st{*sigma, *tau};
  std::vector<Index> ipg = Ip.generators();
  std::vector<Index> all = st;
  all.insert(all.end(), ipg.begin(), ipg.end());
  if (Subgroup(G, all).order() != D.order()) return "<sigma, tau, I_p> != D";
  std::vector<Index> tip{*tau};
  tip.insert(tip.end(), ipg.begin(), ipg.end());
  if (!(Subgroup(G, tip) == I)) return "<tau, I_p> != I";
  if (D.order() != e * f * Ip.order()) return "|D/I_p| != e f";
  // Wild part.
  if (!Ip.contains(*a)) return "a is not in I_p";
  if (!(group::normal_closure_in(D, {*a}) == Ip)) return "normal closure of a in D is not I_p";
  return "";
}

bool p_group_structure_check(const GroupPtr& D, const Subgroup& I, unsigned n, std::uint64_t p) {
  if (!group::is_p_group_order(D->order(), p)) throw Error(Errc::NotAPGroup, "D is not a p-group");
  if (!group::is_normal(D, I)) throw Error(Errc::NotNormal, "I is not normal in D");
  const auto& G = *D;
  Subgroup whole = Subgroup::whole(D);

  // Tuples x_1..x_n from I (non-decreasing indices) whose normal closure is I.
  std::vector<std::vector<Index>> tuples;
  std::vector<Index> cur;
  auto collect = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == n) {
      if (group::normal_closure_in(whole, cur) == I) tuples.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < I.elements().size(); ++k) {
      cur.push_back(I.elements()[k]);
      self(self, k);
      cur.pop_back();
    }
  };
  collect(collect, 0);
  if (tuples.empty()) return false;

  for (Index sigma = 0; sigma < G.order(); ++sigma) {
    if (I.join({sigma}).order() != G.order()) continue;
    for (const auto& t : tuples) {
      std::vector<Index> gens = t;
      gens.push_back(sigma);
      if (Subgroup(D, gens).order() == G.order()) return true;
    }
  }
  return false;
}

bool pro_odd_quotient_check(const GroupPtr& D, std::uint64_t p) {
  require_odd(*D);
  const auto& G = *D;
  std::map<std::vector<Index>, bool> tried;
  for (Index t = 0; t < G.order(); ++t) {
    if (nt::gcd(G.element_order(t), p) != 1) continue;
    Index tp = G.pow(t, static_cast<std::int64_t>(p));
    for (Index s = 0; s < G.order(); ++s) {
      if (G.conj(t, s) != tp) continue;
      Subgroup st(D, {s, t});
      for (Index a = 0; a < G.order(); ++a) {
        if (!group::is_p_group_order(G.element_order(a), p)) continue;
        if (st.join({a}).order() != G.order()) continue;
        Subgroup I = group::normal_closure_in(Subgroup::whole(D), {a, t});
        auto [it, fresh] = tried.emplace(I.elements(), false);
        if (fresh) it->second = qp_realizable_odd(D, I, p).realizable();
        if (it->second) return true;
      }
    }
  }
  return false;
}

std::optional<std::pair<Index, Index>> lift_tame_generators(const group::Homomorphism& pi, Index sigma, Index tau,
                                                            std::uint64_t p) {
  const auto& G = *pi.source();
  std::vector<Index> sigmas, taus;
  for (Index x = 0; x < G.order(); ++x) {
    if (pi.apply(x) == sigma) sigmas.push_back(x);
    if (pi.apply(x) == tau) taus.push_back(x);
  }
  for (Index t : taus) {
    Index tp = G.pow(t, static_cast<std::int64_t>(p));
    for (Index s : sigmas)
      if (G.conj(t, s) == tp) return std::make_pair(s, t);
  }
  return std::nullopt;
}

}  // namespace inertia::local
