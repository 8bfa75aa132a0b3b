#include "inertia/group/finite_group.hpp"

#include <deque>

#include "inertia/error.hpp"

namespace inertia::group {

GroupPtr FiniteGroup::enumerate(const std::vector<GroupElement>& generators, std::size_t bound) {
  if (generators.empty())
    throw Error(Errc::KindMismatch, "cannot infer the element kind of an empty generator list");
  return enumerate(arithmetic_for(generators.front()), generators, bound);
}

GroupPtr FiniteGroup::enumerate(ArithmeticPtr arithmetic, const std::vector<GroupElement>& generators,
                                std::size_t bound) {
  for (const auto& g : generators) arithmetic->validate(g);

  std::shared_ptr<FiniteGroup> G(new FiniteGroup());
  G->arithmetic_ = std::move(arithmetic);
  G->elements_.push_back(G->arithmetic_->identity());
  G->index_.emplace(G->elements_.front(), 0);

  // Breadth-first closure under right multiplication by generators.
  std::vector<GroupElement> gens = generators;
  for (std::size_t head = 0; head < G->elements_.size(); ++head) {
    for (const auto& g : gens) {
      GroupElement prod = G->arithmetic_->multiply(G->elements_[head], g);
      if (G->index_.find(prod) != G->index_.end()) continue;
      if (G->elements_.size() >= bound)
        throw Error(Errc::BoundExceeded, "closure exceeds " + std::to_string(bound) + " elements");
      G->index_.emplace(prod, static_cast<Index>(G->elements_.size()));
      G->elements_.push_back(std::move(prod));
    }
  }
  for (const auto& g : gens) G->generators_.push_back(G->index_.at(g));
  G->finish();
  return G;
}

GroupPtr FiniteGroup::from_closed_set(ArithmeticPtr arithmetic, std::vector<GroupElement> elements,
                                      std::vector<Index> generators) {
  std::shared_ptr<FiniteGroup> G(new FiniteGroup());
  G->arithmetic_ = std::move(arithmetic);
  G->elements_ = std::move(elements);
  G->index_.reserve(G->elements_.size());
  for (Index i = 0; i < G->elements_.size(); ++i) G->index_.emplace(G->elements_[i], i);
  G->generators_ = std::move(generators);
  G->finish();
  return G;
}

void FiniteGroup::finish() {
  std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        table_[a * n + b] = index_.at(arithmetic_->multiply(elements_[a], elements_[b]));
  }
  inverse_.resize(n);
  for (Index a = 0; a < n; ++a) inverse_[a] = index_.at(arithmetic_->inverse(elements_[a]));
}

std::optional<Index> FiniteGroup::find(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw Error(Errc::NotInGroup, "element is not in the group");
  return it->second;
}

Index FiniteGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(arithmetic_->multiply(elements_[a], elements_[b]));
}

Index FiniteGroup::pow(Index a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<std::int64_t>(element_order(a));
  Index result = identity(), base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Index a) const {
  std::call_once(orders_once_, [this] {
    orders_.assign(elements_.size(), 0);
    orders_[0] = 1;
    for (Index g = 1; g < elements_.size(); ++g) {
      if (orders_[g]) continue;
      // Walk the cyclic subgroup once and assign orders to all its powers.
      std::vector<Index> powers{g};
      Index x = g;
      while (x != 0) {
        x = mul(x, g);
        if (x != 0) powers.push_back(x);
      }
      std::uint32_t n = static_cast<std::uint32_t>(powers.size() + 1);
      for (std::uint32_t k = 1; k < n; ++k) {
        if (!orders_[powers[k - 1]]) {
          std::uint32_t a = k, b = n;
          while (b) {
            std::uint32_t t = a % b;
            a = b;
            b = t;
          }
          orders_[powers[k - 1]] = n / a;
        }
      }
    }
  });
  return orders_[a];
}

std::vector<GroupElement> FiniteGroup::generator_elements() const {
  std::vector<GroupElement> out;
  for (Index g : generators_) out.push_back(elements_[g]);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (mul(generators_[i], generators_[j]) != mul(generators_[j], generators_[i])) return false;
  return true;
}

}  // namespace inertia::group
