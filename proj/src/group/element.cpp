#include "inertia/group/element.hpp"

#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::group {

namespace {

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

class PermutationArithmetic final : public ElementArithmetic {
 public:
  explicit PermutationArithmetic(std::uint32_t degree) : degree_(degree) {}

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    const auto& pa = std::get<Permutation>(a).images;
    const auto& pb = std::get<Permutation>(b).images;
    Permutation r;
    r.images.resize(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) r.images[i] = pb[pa[i]];
    return r;
  }

  GroupElement inverse(const GroupElement& a) const override {
    const auto& pa = std::get<Permutation>(a).images;
    Permutation r;
    r.images.resize(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) r.images[pa[i]] = i;
    return r;
  }

  GroupElement identity() const override { return identity_permutation(degree_); }

  void validate(const GroupElement& a) const override {
    if (!std::holds_alternative<Permutation>(a))
      throw Error(Errc::KindMismatch, "expected a permutation");
    const auto& im = std::get<Permutation>(a).images;
    if (im.size() != degree_)
      throw Error(Errc::KindMismatch, "permutation degree " + std::to_string(im.size()) +
                                          " differs from " + std::to_string(degree_));
    std::vector<bool> seen(degree_, false);
    for (auto v : im) {
      if (v >= degree_ || seen[v]) throw Error(Errc::InvalidElement, "images do not form a bijection");
      seen[v] = true;
    }
  }

  nlohmann::json to_json(const GroupElement& a) const override {
    return std::get<Permutation>(a).images;
  }

  GroupElement from_json(const nlohmann::json& j) const override {
    if (!j.is_array()) throw Error(Errc::InvalidSpec, "permutation must be an image array");
    Permutation p;
    for (const auto& v : j) p.images.push_back(v.get<std::uint32_t>());
    validate(p);
    return p;
  }

  std::string describe() const override { return "perm(" + std::to_string(degree_) + ")"; }

 private:
  std::uint32_t degree_;
};

class Gl2Arithmetic final : public ElementArithmetic {
 public:
  explicit Gl2Arithmetic(std::uint32_t p) : p_(p) {}

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    const auto& x = std::get<MatrixGL2>(a).m;
    const auto& y = std::get<MatrixGL2>(b).m;
    std::uint64_t p = p_;
    MatrixGL2 r{p_, {}};
    r.m[0] = static_cast<std::uint32_t>((std::uint64_t(x[0]) * y[0] + std::uint64_t(x[1]) * y[2]) % p);
    r.m[1] = static_cast<std::uint32_t>((std::uint64_t(x[0]) * y[1] + std::uint64_t(x[1]) * y[3]) % p);
    r.m[2] = static_cast<std::uint32_t>((std::uint64_t(x[2]) * y[0] + std::uint64_t(x[3]) * y[2]) % p);
    r.m[3] = static_cast<std::uint32_t>((std::uint64_t(x[2]) * y[1] + std::uint64_t(x[3]) * y[3]) % p);
    return r;
  }

  GroupElement inverse(const GroupElement& a) const override {
    const auto& x = std::get<MatrixGL2>(a).m;
    std::int64_t det = (std::int64_t(x[0]) * x[3] - std::int64_t(x[1]) * x[2]);
    auto inv = nt::inverse_mod(det, p_);
    if (!inv) throw Error(Errc::InvalidElement, "singular matrix");
    std::int64_t d = static_cast<std::int64_t>(*inv);
    return matrix(p_, x[3] * d, -std::int64_t(x[1]) * d, -std::int64_t(x[2]) * d, x[0] * d);
  }

  GroupElement identity() const override { return matrix(p_, 1, 0, 0, 1); }

  void validate(const GroupElement& a) const override {
    if (!std::holds_alternative<MatrixGL2>(a)) throw Error(Errc::KindMismatch, "expected a matrix");
    const auto& x = std::get<MatrixGL2>(a);
    if (x.p != p_) throw Error(Errc::KindMismatch, "matrix modulus differs");
    for (auto v : x.m)
      if (v >= p_) throw Error(Errc::InvalidElement, "matrix entry not reduced");
    std::int64_t det = nt::mod(std::int64_t(x.m[0]) * x.m[3] - std::int64_t(x.m[1]) * x.m[2], p_);
    if (det == 0) throw Error(Errc::InvalidElement, "singular matrix");
  }

  nlohmann::json to_json(const GroupElement& a) const override {
    const auto& x = std::get<MatrixGL2>(a).m;
    return nlohmann::json::array({x[0], x[1], x[2], x[3]});
  }

  GroupElement from_json(const nlohmann::json& j) const override {
    if (!j.is_array() || j.size() != 4) throw Error(Errc::InvalidSpec, "matrix must be [a,b,c,d]");
    auto e = matrix(p_, j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
                    j[3].get<std::int64_t>());
    validate(e);
    return e;
  }

  std::string describe() const override { return "gl2(" + std::to_string(p_) + ")"; }

 private:
  std::uint32_t p_;
};

}  // namespace

std::size_t ElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t seed = g.index();
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          for (auto v : e.images) hash_mix(seed, v);
        } else if constexpr (std::is_same_v<T, MatrixGL2>) {
          hash_mix(seed, e.p);
          for (auto v : e.m) hash_mix(seed, v);
        } else {
          for (auto v : e.normal) hash_mix(seed, v);
          hash_mix(seed, e.acting);
        }
      },
      g);
  return seed;
}

ElementKind kind_of(const GroupElement& g) {
  switch (g.index()) {
    case 0: return ElementKind::Permutation;
    case 1: return ElementKind::Matrix;
    default: return ElementKind::Tuple;
  }
}

ArithmeticPtr permutation_arithmetic(std::uint32_t degree) {
  return std::make_shared<PermutationArithmetic>(degree);
}

ArithmeticPtr gl2_arithmetic(std::uint32_t p) { return std::make_shared<Gl2Arithmetic>(p); }

ArithmeticPtr arithmetic_for(const GroupElement& sample) {
  if (auto* perm = std::get_if<Permutation>(&sample))
    return permutation_arithmetic(static_cast<std::uint32_t>(perm->images.size()));
  if (auto* mat = std::get_if<MatrixGL2>(&sample)) return gl2_arithmetic(mat->p);
  throw Error(Errc::KindMismatch, "product tuples need the arithmetic of their construction");
}

Permutation identity_permutation(std::uint32_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

Permutation from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p = identity_permutation(degree);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::uint32_t from = c[i] - 1, to = c[(i + 1) % c.size()] - 1;
      if (from >= degree || to >= degree) throw Error(Errc::InvalidElement, "cycle point out of range");
      p.images[from] = to;
    }
  }
  return p;
}

MatrixGL2 matrix(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  auto r = [p](std::int64_t v) { return static_cast<std::uint32_t>(nt::mod(v, p)); };
  return MatrixGL2{p, {r(a), r(b), r(c), r(d)}};
}

}  // namespace inertia::group
