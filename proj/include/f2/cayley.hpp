#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "f2/error.hpp"
#include "f2/group.hpp"
#include "f2/perm.hpp"

namespace f2 {

/// A finite group given by its multiplication table. Element 0 is the
/// identity. When built from a permutation group, element i is the i-th
/// element in lexicographic order of image arrays, and these indices are the
/// bit positions used by subgroup bitsets.
class CayleyTable {
 public:
  using Index = std::uint16_t;
  static constexpr std::size_t kMaxOrder = 65535;

  CayleyTable() = default;

  /// From a complete table: mul[a * n + b] = a * b. Validates identity at 0,
  /// Latin-square rows/columns; associativity is the caller's contract.
  CayleyTable(std::size_t n, std::vector<Index> mul) : n_(n), mul_(std::move(mul)) {
    if (n == 0 || n > kMaxOrder) throw DomainError("Cayley table order out of range");
    if (mul_.size() != n * n) throw DomainError("Cayley table has wrong size");
    for (std::size_t a = 0; a < n; ++a)
      if (at(0, a) != a || at(a, 0) != a) throw DomainError("element 0 is not the identity");
    finish();
  }

  /// Multiplication table of an enumerated permutation group, with elements
  /// in the given order (which must start with the identity).
  static CayleyTable from_elements(const std::vector<Permutation>& elements) {
    const std::size_t n = elements.size();
    if (n == 0 || n > kMaxOrder) throw DomainError("element table size out of range");
    if (!elements[0].is_identity()) throw DomainError("element table must start with the identity");
    std::unordered_map<Permutation, Index, PermutationHash> index;
    index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Index>(i));
    std::vector<Index> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(elements[a] * elements[b]);
        if (it == index.end()) throw AssertionFailure("element table is not closed under composition");
        mul[a * n + b] = it->second;
      }
    CayleyTable t(n, std::move(mul));
    t.elements_ = elements;
    return t;
  }

  static CayleyTable from_group(const PermGroup& g, std::uint64_t cap) { return from_elements(g.enumerate(cap)); }

  std::size_t order() const noexcept { return n_; }
  Index mul(std::size_t a, std::size_t b) const noexcept { return mul_[a * n_ + b]; }
  Index inverse(std::size_t a) const noexcept { return inv_[a]; }
  std::uint32_t element_order(std::size_t a) const noexcept { return orders_[a]; }
  const std::vector<std::uint32_t>& element_orders() const noexcept { return orders_; }

  /// Permutation elements, when built from a permutation group.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool has_elements() const noexcept { return !elements_.empty(); }

  Index power(std::size_t a, std::uint64_t e) const {
    Index result = 0;
    Index base = static_cast<Index>(a);
    while (e) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_associative() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
  }

  /// FNV-1a over the table; identifies a canonical element table.
  std::uint64_t fingerprint_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(n_);
    for (const auto& e : elements_)
      for (auto x : e.images0()) mix(x);
    for (Index x : mul_) mix(x);
    return h;
  }

 private:
  Index at(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }

  void finish() {
    inv_.assign(n_, 0);
    std::vector<bool> seen_inv(n_, false);
    for (std::size_t a = 0; a < n_; ++a) {
      std::vector<bool> row(n_, false), col(n_, false);
      for (std::size_t b = 0; b < n_; ++b) {
        Index r = at(a, b), c = at(b, a);
        if (r >= n_ || c >= n_ || row[r] || col[c]) throw DomainError("multiplication table is not a Latin square");
        row[r] = col[c] = true;
        if (r == 0) inv_[a] = static_cast<Index>(b);
      }
    }
    orders_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      std::uint32_t k = 1;
      for (Index x = static_cast<Index>(a); x != 0; x = at(x, a)) ++k;
      orders_[a] = k;
    }
  }

  std::size_t n_ = 0;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<std::uint32_t> orders_;
  std::vector<Permutation> elements_;
};

/// Phi_h : x -> h x on the points {1..|H|}, where element index i is point i+1.
inline Permutation left_multiplication(const CayleyTable& h, std::size_t element) {
  std::vector<Permutation::Point> images(h.order());
  for (std::size_t x = 0; x < h.order(); ++x) images[x] = h.mul(element, x);
  return Permutation::from_images0(std::move(images));
}

/// Greedy generating set: repeatedly adds the element of largest order (then
/// smallest index) not yet in the generated subgroup.
inline std::vector<std::size_t> greedy_generators(const CayleyTable& h) {
  const std::size_t n = h.order();
  std::vector<std::size_t> by_order(n);
  std::iota(by_order.begin(), by_order.end(), std::size_t{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return h.element_order(a) > h.element_order(b); });
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<std::size_t> members{0}, gens;
  for (std::size_t cand : by_order) {
    if (in[cand]) continue;
    gens.push_back(cand);
    // Re-close: the members list stays closed under right multiplication by gens.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t g : gens) {
        std::size_t y = h.mul(members[i], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    if (members.size() == n) break;
  }
  return gens;
}

/// The left-regular representation of an abstract group as a permutation
/// group of degree |H|. Generated by Phi_h for a greedy generating set of H.
inline PermGroup left_regular_embedding(const CayleyTable& h) {
  std::vector<Permutation> gens;
  for (std::size_t g : greedy_generators(h)) gens.push_back(left_multiplication(h, g));
  return PermGroup(static_cast<unsigned>(h.order()), std::move(gens));
}

/// Metacyclic normal form <x, y | x^m = 1, y^k = x^t, y^-1 x y = x^r>.
/// Elements x^a y^b (0 <= a < m, 0 <= b < k) are indexed a + m b.
/// Requires r^k = 1 (mod m) and r t = t (mod m).
inline CayleyTable metacyclic_table(std::uint64_t m, std::uint64_t k, std::uint64_t r, std::uint64_t t) {
  if (m == 0 || k == 0 || m * k > CayleyTable::kMaxOrder) throw DomainError("metacyclic order out of range");
  r %= m;
  t %= m;
  auto pow_mod = [m](std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1 % m;
    b %= m;
    while (e) {
      if (e & 1u) acc = acc * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return acc;
  };
  if (pow_mod(r, k) != 1 % m) throw DomainError("metacyclic: r^k must be 1 mod m");
  if ((r * t) % m != t) throw DomainError("metacyclic: x^t must commute with y");
  // y x y^-1 = x^s with s = r^-1 mod m.
  std::uint64_t s = 0;
  for (std::uint64_t c = 0; c < m; ++c)
    if ((c * r) % m == 1 % m) {
      s = c;
      break;
    }
  if (m == 1) s = 0;
  std::vector<std::uint64_t> s_pow(k);
  for (std::uint64_t b = 0; b < k; ++b) s_pow[b] = pow_mod(s, b);
  const std::size_t n = static_cast<std::size_t>(m * k);
  std::vector<CayleyTable::Index> mul(n * n);
  for (std::uint64_t a1 = 0; a1 < m; ++a1)
    for (std::uint64_t b1 = 0; b1 < k; ++b1)
      for (std::uint64_t a2 = 0; a2 < m; ++a2)
        for (std::uint64_t b2 = 0; b2 < k; ++b2) {
          std::uint64_t a = (a1 + a2 * s_pow[b1]) % m;
          std::uint64_t b = b1 + b2;
          if (b >= k) {
            b -= k;
            a = (a + t) % m;
          }
          mul[(a1 + m * b1) * n + (a2 + m * b2)] = static_cast<CayleyTable::Index>(a + m * b);
        }
  return CayleyTable(n, std::move(mul));
}

}  // namespace f2
