#include "inertia/group/constructions.hpp"

#include <numeric>

#include "inertia/error.hpp"

namespace inertia::group {

namespace {

const ProductTuple& tuple(const GroupElement& g) { return std::get<ProductTuple>(g); }

void require_tuple(const GroupElement& g) {
  if (!std::holds_alternative<ProductTuple>(g)) throw Error(Errc::KindMismatch, "expected a product tuple");
}

// Componentwise pairs; also the ambient arithmetic of fiber products.
class DirectArithmetic final : public ElementArithmetic {
 public:
  DirectArithmetic(GroupPtr A, GroupPtr B) : A_(std::move(A)), B_(std::move(B)) {}

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& a = tuple(x);
    const auto& b = tuple(y);
    return ProductTuple{{A_->mul(a.normal[0], b.normal[0])}, B_->mul(a.acting, b.acting)};
  }
  GroupElement inverse(const GroupElement& x) const override {
    const auto& a = tuple(x);
    return ProductTuple{{A_->inv(a.normal[0])}, B_->inv(a.acting)};
  }
  GroupElement identity() const override { return ProductTuple{{0}, 0}; }
  void validate(const GroupElement& x) const override {
    require_tuple(x);
    const auto& a = tuple(x);
    if (a.normal.size() != 1 || a.normal[0] >= A_->order() || a.acting >= B_->order())
      throw Error(Errc::InvalidElement, "tuple part outside its factor");
  }
  nlohmann::json to_json(const GroupElement& x) const override {
    const auto& a = tuple(x);
    return {{"normal", A_->arithmetic().to_json(A_->element(a.normal[0]))},
            {"acting", B_->arithmetic().to_json(B_->element(a.acting))}};
  }
  GroupElement from_json(const nlohmann::json& j) const override {
    Index n = A_->index_of(A_->arithmetic().from_json(j.at("normal")));
    Index h = B_->index_of(B_->arithmetic().from_json(j.at("acting")));
    return ProductTuple{{n}, h};
  }
  std::string describe() const override {
    return "direct(" + A_->arithmetic().describe() + "," + B_->arithmetic().describe() + ")";
  }

 private:
  GroupPtr A_, B_;
};

class SemidirectArithmetic final : public ElementArithmetic {
 public:
  SemidirectArithmetic(GroupPtr N, GroupPtr H, std::vector<std::vector<Index>> action)
      : N_(std::move(N)), H_(std::move(H)), act_(std::move(action)) {}

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& a = tuple(x);
    const auto& b = tuple(y);
    return ProductTuple{{N_->mul(a.normal[0], act_[a.acting][b.normal[0]])}, H_->mul(a.acting, b.acting)};
  }
  GroupElement inverse(const GroupElement& x) const override {
    const auto& a = tuple(x);
    Index hinv = H_->inv(a.acting);
    return ProductTuple{{act_[hinv][N_->inv(a.normal[0])]}, hinv};
  }
  GroupElement identity() const override { return ProductTuple{{0}, 0}; }
  void validate(const GroupElement& x) const override {
    require_tuple(x);
    const auto& a = tuple(x);
    if (a.normal.size() != 1 || a.normal[0] >= N_->order() || a.acting >= H_->order())
      throw Error(Errc::InvalidElement, "tuple part outside its factor");
  }
  nlohmann::json to_json(const GroupElement& x) const override {
    const auto& a = tuple(x);
    return {{"normal", N_->arithmetic().to_json(N_->element(a.normal[0]))},
            {"acting", H_->arithmetic().to_json(H_->element(a.acting))}};
  }
  GroupElement from_json(const nlohmann::json& j) const override {
    Index n = N_->index_of(N_->arithmetic().from_json(j.at("normal")));
    Index h = H_->index_of(H_->arithmetic().from_json(j.at("acting")));
    return ProductTuple{{n}, h};
  }
  std::string describe() const override {
    return "semidirect(" + N_->arithmetic().describe() + "," + H_->arithmetic().describe() + ")";
  }

 private:
  GroupPtr N_, H_;
  std::vector<std::vector<Index>> act_;
};

class WreathArithmetic final : public ElementArithmetic {
 public:
  WreathArithmetic(std::uint32_t p, GroupPtr H) : p_(p), H_(std::move(H)) {
    std::size_t n = H_->order();
    shift_.assign(n, std::vector<Index>(n));
    for (Index h = 0; h < n; ++h)
      for (Index y = 0; y < n; ++y) shift_[h][y] = H_->mul(H_->inv(h), y);
  }

  // (f1, h1)(f2, h2) = (f1 + h1.f2, h1 h2) with (h.f)(y) = f(h^-1 y).
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& a = tuple(x);
    const auto& b = tuple(y);
    ProductTuple r{a.normal, H_->mul(a.acting, b.acting)};
    const auto& s = shift_[a.acting];
    for (std::size_t i = 0; i < r.normal.size(); ++i) r.normal[i] = (r.normal[i] + b.normal[s[i]]) % p_;
    return r;
  }
  // (f, h)^-1 = (-(h^-1.f), h^-1)
  GroupElement inverse(const GroupElement& x) const override {
    const auto& a = tuple(x);
    Index hinv = H_->inv(a.acting);
    ProductTuple r{std::vector<std::uint32_t>(a.normal.size()), hinv};
    const auto& s = shift_[hinv];
    for (std::size_t i = 0; i < r.normal.size(); ++i) r.normal[i] = (p_ - a.normal[s[i]]) % p_;
    return r;
  }
  GroupElement identity() const override {
    return ProductTuple{std::vector<std::uint32_t>(H_->order(), 0), 0};
  }
  void validate(const GroupElement& x) const override {
    require_tuple(x);
    const auto& a = tuple(x);
    if (a.normal.size() != H_->order() || a.acting >= H_->order())
      throw Error(Errc::InvalidElement, "wreath tuple has the wrong shape");
    for (auto v : a.normal)
      if (v >= p_) throw Error(Errc::InvalidElement, "exponent not reduced mod p");
  }
  nlohmann::json to_json(const GroupElement& x) const override {
    const auto& a = tuple(x);
    return {{"base", a.normal}, {"acting", H_->arithmetic().to_json(H_->element(a.acting))}};
  }
  GroupElement from_json(const nlohmann::json& j) const override {
    ProductTuple r{j.at("base").get<std::vector<std::uint32_t>>(),
                   H_->index_of(H_->arithmetic().from_json(j.at("acting")))};
    validate(r);
    return r;
  }
  std::string describe() const override {
    return "wreath(" + std::to_string(p_) + "," + H_->arithmetic().describe() + ")";
  }

 private:
  std::uint32_t p_;
  GroupPtr H_;
  std::vector<std::vector<Index>> shift_;
};

}  // namespace

GroupPtr abelian_group(const std::vector<std::uint64_t>& factors) {
  std::uint64_t degree = 0;
  for (auto d : factors) {
    if (d == 0) throw Error(Errc::InvalidParameters, "cyclic factor of order 0");
    if (d > 1) degree += d;
  }
  if (degree > (1u << 20)) throw Error(Errc::BoundExceeded, "abelian group degree too large");
  if (degree == 0) return FiniteGroup::enumerate({identity_permutation(1)});
  std::vector<GroupElement> gens;
  std::uint32_t offset = 0;
  for (auto d : factors) {
    if (d == 1) continue;
    Permutation g = identity_permutation(static_cast<std::uint32_t>(degree));
    for (std::uint32_t i = 0; i < d; ++i) g.images[offset + i] = offset + static_cast<std::uint32_t>((i + 1) % d);
    gens.push_back(std::move(g));
    offset += static_cast<std::uint32_t>(d);
  }
  return FiniteGroup::enumerate(gens);
}

GroupPtr cyclic_group(std::uint64_t n) { return abelian_group({n}); }

GroupPtr symmetric_group(std::uint32_t n) {
  if (n <= 1) return FiniteGroup::enumerate({identity_permutation(1)});
  std::vector<std::uint32_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1u);
  return FiniteGroup::enumerate({from_cycles(n, {cycle}), from_cycles(n, {{1, 2}})});
}

std::vector<std::vector<Index>> extend_action(const FiniteGroup& N, const FiniteGroup& H,
                                              const std::vector<std::vector<Index>>& generator_action) {
  const auto& hg = H.generators();
  const auto& ng = N.generators();
  if (generator_action.size() != hg.size())
    throw Error(Errc::NotAnAction, "need an automorphism for every generator of H");

  // Extend each generator's assignment to a full endomorphism of N by
  // walking N's Cayley graph, then check it is bijective.
  std::vector<std::vector<Index>> gen_maps;
  for (const auto& images : generator_action) {
    if (images.size() != ng.size()) throw Error(Errc::NotAnAction, "need an image for every generator of N");
    std::vector<Index> map(N.order(), static_cast<Index>(-1));
    map[0] = 0;
    std::vector<Index> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Index x = queue[head];
      for (std::size_t i = 0; i < ng.size(); ++i) {
        Index y = N.mul(x, ng[i]);
        Index fy = N.mul(map[x], images[i]);
        if (map[y] == static_cast<Index>(-1)) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          throw Error(Errc::NotAnAction, "generator images do not define an endomorphism of N");
        }
      }
    }
    std::vector<bool> hit(N.order(), false);
    for (Index v : map) hit[v] = true;
    for (bool b : hit)
      if (!b) throw Error(Errc::NotAnAction, "assigned endomorphism is not bijective");
    gen_maps.push_back(std::move(map));
  }

  // w(h g) = w(h) o w(g); every edge of H's Cayley graph is checked.
  std::vector<std::vector<Index>> act(H.order());
  act[0].resize(N.order());
  std::iota(act[0].begin(), act[0].end(), Index{0});
  std::vector<Index> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index h = queue[head];
    for (std::size_t k = 0; k < hg.size(); ++k) {
      Index h2 = H.mul(h, hg[k]);
      std::vector<Index> composed(N.order());
      for (Index n = 0; n < N.order(); ++n) composed[n] = act[h][gen_maps[k][n]];
      if (act[h2].empty()) {
        act[h2] = std::move(composed);
        queue.push_back(h2);
      } else if (act[h2] != composed) {
        throw Error(Errc::NotAnAction, "assignment does not extend to a homomorphism H -> Aut(N)");
      }
    }
  }
  return act;
}

GroupPtr semidirect_product(GroupPtr N, GroupPtr H, const std::vector<std::vector<Index>>& generator_action,
                            std::size_t bound) {
  auto act = extend_action(*N, *H, generator_action);
  auto arith = std::make_shared<SemidirectArithmetic>(N, H, std::move(act));
  std::vector<GroupElement> gens;
  for (Index n : N->generators()) gens.push_back(ProductTuple{{n}, 0});
  for (Index h : H->generators()) gens.push_back(ProductTuple{{0}, h});
  if (N->order() * H->order() > bound) throw Error(Errc::BoundExceeded, "semidirect product too large");
  auto G = FiniteGroup::enumerate(arith, gens, bound);
  if (G->order() != N->order() * H->order())
    throw Error(Errc::NotAnAction, "semidirect product has unexpected order");
  return G;
}

GroupPtr direct_product(GroupPtr A, GroupPtr B, std::size_t bound) {
  if (A->order() * B->order() > bound) throw Error(Errc::BoundExceeded, "direct product too large");
  auto arith = std::make_shared<DirectArithmetic>(A, B);
  std::vector<GroupElement> gens;
  for (Index a : A->generators()) gens.push_back(ProductTuple{{a}, 0});
  for (Index b : B->generators()) gens.push_back(ProductTuple{{0}, b});
  return FiniteGroup::enumerate(arith, gens, bound);
}

GroupPtr wreath_product_regular(std::uint32_t p, GroupPtr H, std::size_t bound) {
  std::size_t n = H->order();
  // p^n * n must stay within the bound.
  double size = static_cast<double>(n);
  for (std::size_t i = 0; i < n && size <= static_cast<double>(bound); ++i) size *= p;
  if (size > static_cast<double>(bound)) throw Error(Errc::BoundExceeded, "wreath product too large");
  auto arith = std::make_shared<WreathArithmetic>(p, H);
  std::vector<GroupElement> gens;
  std::vector<std::uint32_t> base(n, 0);
  base[0] = 1;
  gens.push_back(ProductTuple{base, 0});
  for (Index h : H->generators()) gens.push_back(ProductTuple{std::vector<std::uint32_t>(n, 0), h});
  return FiniteGroup::enumerate(arith, gens, bound);
}

GroupPtr fiber_product(const Homomorphism& phi1, const Homomorphism& phi2, std::size_t bound) {
  const auto& H1 = *phi1.target();
  const auto& H2 = *phi2.target();
  if (phi1.target() != phi2.target() && H1.elements() != H2.elements())
    throw Error(Errc::TargetMismatch, "homomorphisms have different targets");
  if (!phi1.is_surjective() || !phi2.is_surjective())
    throw Error(Errc::TargetMismatch, "fiber product needs surjective maps");
  const auto& G1 = phi1.source();
  const auto& G2 = phi2.source();

  std::vector<std::vector<Index>> fiber(H1.order());
  for (Index b = 0; b < G2->order(); ++b) fiber[phi2.apply(b)].push_back(b);
  std::size_t expected = 0;
  for (Index a = 0; a < G1->order(); ++a) expected += fiber[phi1.apply(a)].size();
  if (expected > bound) throw Error(Errc::BoundExceeded, "fiber product too large");

  std::vector<GroupElement> gens;
  for (Index g : G1->generators()) gens.push_back(ProductTuple{{g}, fiber[phi1.apply(g)].front()});
  Subgroup kernel = phi2.kernel();
  for (Index k : kernel.generators()) gens.push_back(ProductTuple{{0}, k});
  auto arith = std::make_shared<DirectArithmetic>(G1, G2);
  auto F = FiniteGroup::enumerate(arith, gens, bound);
  if (F->order() != expected) throw Error(Errc::CheckFailed, "fiber product closure has unexpected order");
  return F;
}

Index first_component(const FiniteGroup& product, Index x) { return tuple(product.element(x)).normal.at(0); }
Index second_component(const FiniteGroup& product, Index x) { return tuple(product.element(x)).acting; }

}  // namespace inertia::group
