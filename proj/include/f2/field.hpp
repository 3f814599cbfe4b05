#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2/error.hpp"

namespace f2 {

namespace detail {

inline bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first, no
// trailing zeros (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  if (m == 0 || modulus.back() != 1) return false;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// GF(p^m) with elements encoded as integers 0..q-1: e = sum c_i p^i where
/// c_i is the coefficient of x^i modulo the defining polynomial. Integer order
/// is lexicographic order on (c_{m-1}, ..., c_0), which fixes the labelling
/// of points in every group built on top of a field.
class FiniteField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  FiniteField() = default;

  /// The field of order p^m using the built-in modulus table, or the
  /// lexicographically first irreducible polynomial when q is not tabulated.
  FiniteField(std::uint32_t p, std::uint32_t m) : FiniteField(p, m, default_modulus(p, m)) {}

  /// Explicit monic modulus, coefficients lowest degree first.
  FiniteField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
      : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!detail::is_small_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw DomainError("field degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxOrder) throw DomainError("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != m + 1u) throw DomainError("modulus must have degree m");
    for (auto c : modulus_)
      if (c >= p) throw DomainError("modulus coefficient out of range");
    if (!detail::is_irreducible(modulus_, p)) throw DomainError("modulus is reducible");
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// A generator of the multiplicative group.
  Element primitive_element() const noexcept { return generator_; }

  /// Elements in encoding order 0..q-1.
  std::vector<Element> elements() const {
    std::vector<Element> out(q_);
    for (Element e = 0; e < q_; ++e) out[e] = e;
    return out;
  }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element add(Element a, Element b) const {
    Element result = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      result += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return result;
  }

  Element neg(Element a) const {
    Element result = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      result += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return result;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  Element inv(Element a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
  }

  /// g^k for the fixed primitive element g.
  Element exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// Discrete logarithm base the primitive element; a must be nonzero.
  std::uint32_t log(Element a) const {
    if (a == 0) throw DomainError("log of zero");
    return log_[a];
  }

  /// e^(p^k), the k-th power of the Frobenius automorphism.
  Element frobenius(Element e, std::uint32_t k = 1) const {
    std::uint64_t exponent = 1;
    for (std::uint32_t i = 0; i < k % m_; ++i) exponent *= p_;
    return pow(e, exponent);
  }

  std::uint32_t multiplicative_order(Element a) const {
    if (a == 0) throw DomainError("zero has no multiplicative order");
    std::uint32_t k = 1;
    for (Element x = a; x != 1; x = mul(x, a)) ++k;
    return k;
  }

  /// Squares: the even powers of the primitive element (and zero). In
  /// characteristic 2 every element is a square.
  bool is_square(Element e) const {
    if (e == 0 || p_ == 2) return true;
    return log_[e] % 2 == 0;
  }

  /// Element from its coefficient vector (lowest degree first).
  Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
    Element result = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      result += (i < coeffs.size() ? coeffs[i] % p_ : 0) * scale;
      scale *= p_;
    }
    return result;
  }

  std::vector<std::uint32_t> coefficients(Element e) const {
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      out[i] = e % p_;
      e /= p_;
    }
    return out;
  }

  /// Built-in moduli for the field orders the group constructions use.
  static std::optional<std::vector<std::uint32_t>> tabulated_modulus(std::uint32_t p, std::uint32_t m) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}}, {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},    {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},       {{7, 1}, {4, 1}},          {{7, 2}, {3, 6, 1}},
        {{11, 1}, {9, 1}},         {{13, 1}, {11, 1}},        {{17, 1}, {14, 1}},
        {{19, 1}, {17, 1}},        {{23, 1}, {18, 1}},        {{29, 1}, {27, 1}},
        {{31, 1}, {28, 1}},        {{59, 1}, {57, 1}},
    };
    auto it = table.find({p, m});
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
    if (auto tab = tabulated_modulus(p, m)) return *tab;
    if (!detail::is_small_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw DomainError("field degree must be positive");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      count *= p;
      if (count > kMaxOrder) throw DomainError("field order exceeds 2^16");
    }
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> poly(m + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        poly[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      poly[m] = 1;
      if (detail::is_irreducible(poly, p)) return poly;
    }
    throw DomainError("no irreducible polynomial found");
  }

 private:
  Element mul_slow(Element a, Element b) const {
    detail::Poly pa = coefficients(a), pb = coefficients(b);
    detail::Poly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
    auto r = detail::poly_mod(prod, modulus_, p_);
    return from_coefficients(r);
  }

  std::uint32_t slow_order(Element a) const {
    std::uint32_t k = 1;
    for (Element x = a; x != 1; x = mul_slow(x, a)) ++k;
    return k;
  }

  void build_tables() {
    // Prefer the class of x (the root of the modulus for m = 1).
    Element candidate = m_ == 1 ? (p_ - modulus_[0]) % p_ : p_;
    if (q_ == 2) candidate = 1;
    if (candidate == 0 || slow_order(candidate) != q_ - 1) {
      candidate = 0;
      for (Element e = 1; e < q_; ++e)
        if (slow_order(e) == q_ - 1) {
          candidate = e;
          break;
        }
    }
    generator_ = candidate;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Element x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = mul_slow(x, generator_);
    }
  }

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 1;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// Prime-power decomposition q = p^m, or nullopt.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1u);
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

inline FiniteField field_of_order(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  return FiniteField(pp->first, pp->second);
}

/// The projective line F u {inf}: element e is point e + 1 and infinity is
/// point q + 1.
struct ProjectivePoint {
  bool infinite = false;
  FiniteField::Element value = 0;

  unsigned index(const FiniteField& f) const { return infinite ? f.order() + 1 : value + 1; }

  static ProjectivePoint from_index(const FiniteField& f, unsigned index) {
    if (index < 1 || index > f.order() + 1) throw DomainError("projective point index out of range");
    if (index == f.order() + 1) return {true, 0};
    return {false, index - 1};
  }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

}  // namespace f2
