#include "inertia/gl2/candidates.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "inertia/error.hpp"
#include "inertia/group/algorithms.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::gl2 {

namespace {

using Key = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

std::int64_t reduce(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

// The cyclic subgroup of (Z/n)^2 generated by (u, v), as a sorted list.
Key cyclic_key(std::uint64_t u, std::uint64_t v, std::uint64_t n) {
  Key out;
  std::uint64_t x = 0, y = 0;
  do {
    out.emplace_back(x, y);
    x = (x + u) % n;
    y = (y + v) % n;
  } while (x != 0 || y != 0);
  std::sort(out.begin(), out.end());
  return out;
}

Key swapped(Key k) {
  for (auto& [x, y] : k) std::swap(x, y);
  std::sort(k.begin(), k.end());
  return k;
}

Key diagonal_key(const Gl2Context& ctx, std::int64_t a, std::int64_t b, bool allow_swap) {
  auto n = static_cast<std::int64_t>(ctx.p() - 1);
  Key k = cyclic_key(reduce(a + b, n), reduce(a, n), n);
  if (allow_swap) k = std::min(k, swapped(k));
  return k;
}

void check_b(const Gl2Context& ctx, const InertiaCandidate& c) {
  auto p = static_cast<std::int64_t>(ctx.p());
  if (c.kind == CandidateKind::Wild && (c.b < 1 || c.b > p - 1))
    throw Error(Errc::InvalidParameters, "wild candidate needs 1 <= b <= p - 1");
  if (c.kind == CandidateKind::SplitTame && c.b < 0)
    throw Error(Errc::InvalidParameters, "split candidate needs b >= 0");
  if (c.kind == CandidateKind::NonsplitTame) {
    std::uint64_t N = ctx.p() * ctx.p() - 1;
    if (c.m < 1 || c.m > N || N % c.m != 0)
      throw Error(Errc::InvalidParameters, "nonsplit index must divide p^2 - 1");
  }
}

// First (a, b) in lexicographic order for every diagonal key.
std::map<Key, std::pair<std::int64_t, std::int64_t>> canonical_table(const Gl2Context& ctx, bool allow_swap) {
  auto n = static_cast<std::int64_t>(ctx.p() - 1);
  std::map<Key, std::pair<std::int64_t, std::int64_t>> table;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 1; b <= n; ++b) table.emplace(diagonal_key(ctx, a, b, allow_swap), std::make_pair(a, b));
  return table;
}

std::vector<std::uint64_t> order_profile(const Subgroup& S) {
  std::vector<std::uint64_t> out;
  for (Index x : S.elements()) out.push_back(S.parent()->element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

nlohmann::json InertiaCandidate::to_json() const {
  switch (kind) {
    case CandidateKind::SplitTame:
      return {{"kind", "split"}, {"a", a}, {"b", b}};
    case CandidateKind::NonsplitTame:
      return {{"kind", "nonsplit"}, {"index", m}};
    case CandidateKind::Wild:
      return {{"kind", "wild"}, {"a", a}, {"b", b}};
  }
  return {};
}

InertiaCandidate InertiaCandidate::from_json(const nlohmann::json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "split") return split(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
    if (kind == "wild") return wild(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
    if (kind == "nonsplit") return nonsplit(j.at("index").get<std::uint64_t>());
    throw Error(Errc::InvalidSpec, "unknown candidate kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidSpec, e.what());
  }
}

std::string InertiaCandidate::describe() const {
  switch (kind) {
    case CandidateKind::SplitTame:
      return "split(" + std::to_string(a) + "," + std::to_string(b) + ")" + (scalar_alias ? " [scalar]" : "");
    case CandidateKind::NonsplitTame:
      return "nonsplit(index " + std::to_string(m) + ")";
    case CandidateKind::Wild:
      return "wild(" + std::to_string(a) + "," + std::to_string(b) + ")" + (scalar_alias ? " [scalar]" : "");
  }
  return {};
}

nlohmann::json ModularRequirement::to_json() const {
  nlohmann::json j{{"weight", weight},
                   {"twist", twist},
                   {"reduction", reduction == Reduction::Ordinary ? "ordinary" : "supersingular"}};
  if (reduction == Reduction::Ordinary) j["diagonal"] = diagonal;
  return j;
}

std::string ModularRequirement::describe() const {
  std::string s = "weight " + std::to_string(weight) + ", twist chi^" + std::to_string(twist) + ", ";
  if (reduction == Reduction::Supersingular) return s + "supersingular";
  return s + "ordinary, " + (diagonal ? "diagonal" : "non-diagonal") + " on inertia";
}

InertiaCandidate canonical_candidate(const Gl2Context& ctx, const InertiaCandidate& c) {
  check_b(ctx, c);
  if (c.kind == CandidateKind::NonsplitTame) return InertiaCandidate::nonsplit(c.m);
  bool split = c.kind == CandidateKind::SplitTame;
  auto table = canonical_table(ctx, split);
  auto [a, b] = table.at(diagonal_key(ctx, c.a, c.b, split));
  InertiaCandidate out = split ? InertiaCandidate::split(a, b) : InertiaCandidate::wild(a, b);
  out.scalar_alias = b == static_cast<std::int64_t>(ctx.p() - 1);
  return out;
}

Subgroup candidate_subgroup(const Gl2Context& ctx, const InertiaCandidate& c) {
  check_b(ctx, c);
  const auto& G = ctx.group();
  switch (c.kind) {
    case CandidateKind::SplitTame:
      return Subgroup(G, {ctx.index(ctx.diag(ctx.alpha_pow(c.a + c.b), ctx.alpha_pow(c.a)))});
    case CandidateKind::NonsplitTame:
      return Subgroup(G, {G->pow(ctx.nonsplit_generator(), static_cast<std::int64_t>(c.m))});
    case CandidateKind::Wild:
      return Subgroup(G, {ctx.index(ctx.diag(ctx.alpha_pow(c.a + c.b), ctx.alpha_pow(c.a))),
                          ctx.index(ctx.unipotent_generator())});
  }
  throw Error(Errc::InvalidParameters, "unknown candidate kind");
}

std::vector<InertiaCandidate> inertia_candidates(const Gl2Context& ctx) {
  const std::int64_t n = static_cast<std::int64_t>(ctx.p() - 1);
  std::vector<InertiaCandidate> out;

  // Cyclic diagonal subgroups match up to conjugacy exactly when their
  // exponent sets match up to swapping the eigenvalues.
  std::set<Key> seen;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 1; b <= n; ++b)
      if (seen.insert(diagonal_key(ctx, a, b, true)).second) {
        auto c = InertiaCandidate::split(a, b);
        c.scalar_alias = b == n;
        out.push_back(c);
      }

  // Subgroups of index m in the nonsplit Cartan; (p+1) | m means central,
  // which the split list already covers.
  const std::uint64_t p = ctx.p();
  for (std::uint64_t m : nt::divisors(p * p - 1))
    if (m % (p + 1) != 0) out.push_back(InertiaCandidate::nonsplit(m));

  // Wild: distinct subgroups first, then explicit conjugacy testing.  Any
  // conjugator fixes the unique subgroup of order p, so it lies in the Borel.
  Subgroup borel = ctx.borel();
  std::vector<std::pair<InertiaCandidate, Subgroup>> wild;
  std::set<Key> seen_wild;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 1; b <= n; ++b) {
      if (!seen_wild.insert(diagonal_key(ctx, a, b, false)).second) continue;
      auto c = InertiaCandidate::wild(a, b);
      c.scalar_alias = b == n;
      Subgroup S = candidate_subgroup(ctx, c);
      bool duplicate = std::any_of(wild.begin(), wild.end(), [&](const auto& w) {
        return group::is_conjugate_subgroup_within(borel, S, w.second).has_value();
      });
      if (!duplicate) wild.emplace_back(c, std::move(S));
    }
  for (auto& w : wild) out.push_back(w.first);
  return out;
}

std::optional<Classification> classify_candidate(const Gl2Context& ctx, const Subgroup& S) {
  const auto& G = ctx.group();
  if (S.parent() != G) {
    // Re-index into the context's group.
    std::vector<Index> gens;
    for (Index g : S.generators()) gens.push_back(ctx.index(std::get<MatrixGL2>(S.parent()->element(g))));
    return classify_candidate(ctx, Subgroup(G, gens));
  }
  auto profile = order_profile(S);
  for (const auto& c : inertia_candidates(ctx)) {
    Subgroup T = candidate_subgroup(ctx, c);
    if (T.order() != S.order() || order_profile(T) != profile) continue;
    if (auto g = group::is_conjugate_subgroup(G, S, T)) return Classification{c, *g};
  }
  return std::nullopt;
}

ModularRequirement candidate_requirement(const Gl2Context& ctx, const InertiaCandidate& c) {
  check_b(ctx, c);
  const std::int64_t p = static_cast<std::int64_t>(ctx.p());
  if (c.kind == CandidateKind::NonsplitTame) {
    auto m = static_cast<std::int64_t>(c.m);
    if (m % (p + 1) == 0) {
      // Central: the scalars alpha^k with k = m / (p + 1).
      return candidate_requirement(ctx, InertiaCandidate::split(m / (p + 1), p - 1));
    }
    std::int64_t a = (m - 1) / (p + 1);
    std::int64_t b = m - a * (p + 1);
    if (a < 0 || a > p || b < 1 || b > p) throw Error(Errc::InvalidParameters, "index out of range");
    return {static_cast<std::uint64_t>(b + 1), a, Reduction::Supersingular, false};
  }
  InertiaCandidate k = canonical_candidate(ctx, c);
  return {static_cast<std::uint64_t>(k.b + 1), k.a, Reduction::Ordinary, c.kind == CandidateKind::SplitTame};
}

bool wrcase_group_identity_check(const Gl2Context& ctx, std::int64_t a, std::int64_t b) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (b < 1 || b > p - 1) throw Error(Errc::InvalidParameters, "need 1 <= b <= p - 1");
  std::int64_t beta_exp = (p - 1) / static_cast<std::int64_t>(nt::gcd(static_cast<std::uint64_t>(b), ctx.p() - 1));
  std::uint64_t beta_a = ctx.alpha_pow(beta_exp * a);
  const auto& G = *ctx.group();
  Index h = ctx.index(ctx.diag(ctx.alpha_pow(a + b), ctx.alpha_pow(a)));
  Index g = G.mul(ctx.index(ctx.diag(beta_a, beta_a)), ctx.index(ctx.unipotent_generator()));
  return Subgroup(ctx.group(), {h, g}) == candidate_subgroup(ctx, InertiaCandidate::wild(a, b));
}

}  // namespace inertia::gl2
