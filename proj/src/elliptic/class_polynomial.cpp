#include "inertia/elliptic/class_polynomial.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "inertia/error.hpp"
#include "inertia/numtheory.hpp"

namespace inertia::ec {

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Cx {
  Real re, im;
};
Cx operator+(const Cx& x, const Cx& y) { return {x.re + y.re, x.im + y.im}; }
Cx operator-(const Cx& x, const Cx& y) { return {x.re - y.re, x.im - y.im}; }
Cx operator*(const Cx& x, const Cx& y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }
Cx operator/(const Cx& x, const Cx& y) {
  Real n = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

// j(tau) = E4^3 / Delta with q = exp(2 pi i tau), Delta = q prod (1 - q^n)^24
// taken from the pentagonal series of the eta product.
Cx j_invariant(const Cx& tau, unsigned bits) {
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Real mod = exp(-two_pi * tau.im);
  Real arg = two_pi * tau.re;
  Cx q{mod * cos(arg), mod * sin(arg)};
  Real eps = pow(Real(2), -static_cast<int>(bits) - 16);

  Cx e4{1, 0}, qn = q;
  for (std::uint64_t n = 1; abs(qn.re) + abs(qn.im) > eps * 1e-6 || n < 3; ++n) {
    std::uint64_t s3 = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) s3 += d * d * d;
    Real c = 240 * Real(s3);
    e4 = e4 + Cx{c * qn.re, c * qn.im};
    qn = qn * q;
  }
  // sum over k of (-1)^k q^(k(3k-1)/2), k in Z
  auto qpow = [&](std::uint64_t e) {
    Cx out{1, 0}, b = q;
    for (; e; e >>= 1, b = b * b)
      if (e & 1) out = out * b;
    return out;
  };
  Cx eta{1, 0};
  for (std::int64_t k = 1;; ++k) {
    Cx t1 = qpow(static_cast<std::uint64_t>(k * (3 * k - 1) / 2));
    Cx t2 = qpow(static_cast<std::uint64_t>(k * (3 * k + 1) / 2));
    Cx t = t1 + t2;
    eta = (k % 2) ? eta - t : eta + t;
    if (abs(t1.re) + abs(t1.im) < eps * 1e-6) break;
  }
  Cx eta2 = eta * eta, eta4 = eta2 * eta2, eta8 = eta4 * eta4, eta16 = eta8 * eta8;
  Cx delta = q * (eta16 * eta8);
  return (e4 * e4 * e4) / delta;
}

std::vector<Int> compute(std::int64_t D, const std::vector<QuadraticForm>& forms, unsigned bits, bool& ok) {
  Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 10);
  Real sqrtD = sqrt(Real(-D));
  std::vector<Cx> poly{{Real(1), Real(0)}};  // constant term first
  for (const auto& f : forms) {
    Cx tau{Real(-f.b) / (2 * f.a), sqrtD / (2 * f.a)};
    Cx j = j_invariant(tau, bits);
    std::vector<Cx> next(poly.size() + 1, Cx{Real(0), Real(0)});
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * j;
    }
    poly = std::move(next);
  }
  ok = true;
  std::vector<Int> out;
  for (const auto& c : poly) {
    Real r = round(c.re);
    if (abs(c.re - r) > Real(0.01) || abs(c.im) > Real(0.01)) ok = false;
    Int z;
    mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    out.push_back(z);
  }
  return out;
}

}  // namespace

std::vector<QuadraticForm> reduced_forms(std::int64_t D) {
  std::vector<QuadraticForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - D) % 2 + 2) % 2 != 0) continue;
      std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (nt::gcd(nt::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b < 0 ? -b : b)),
                  static_cast<std::uint64_t>(c)) != 1)
        continue;
      out.push_back({a, b, c});
    }
  return out;
}

std::vector<Int> hilbert_class_polynomial(std::int64_t D) {
  if (D >= 0 || ((D % 4) + 4) % 4 > 1 || D < -10000)
    throw Error(Errc::InvalidParameters, "need a negative discriminant D = 0, 1 mod 4 with |D| <= 10^4");
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(D); it != cache.end()) return it->second;

  auto forms = reduced_forms(D);
  // log2 of the largest coefficient is about sum of pi sqrt|D| / (a ln 2).
  double size = 0;
  for (const auto& f : forms) size += M_PI * std::sqrt(static_cast<double>(-D)) / f.a / std::log(2.0);
  unsigned bits = static_cast<unsigned>(size) + 64 + 8 * static_cast<unsigned>(forms.size());
  for (int attempt = 0; attempt < 5; ++attempt, bits *= 2) {
    bool ok = false;
    auto H = compute(D, forms, bits, ok);
    if (ok) {
      cache.emplace(D, H);
      return H;
    }
  }
  throw Error(Errc::PrecisionFailure, "rounding of H_" + std::to_string(D) + " stayed ambiguous");
}

}  // namespace inertia::ec
