#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "f2/cayley.hpp"
#include "f2/constructions.hpp"
#include "f2/error.hpp"
#include "f2/group.hpp"
#include "f2/lattice.hpp"

namespace f2 {

/// Necessary conditions for isomorphism; unequal fingerprints certify
/// non-isomorphic groups.
struct IsoFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::uint32_t, std::size_t> order_histogram;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::uint64_t exponent = 1;

  auto operator<=>(const IsoFingerprint&) const = default;

  /// Stable text form, used for ordering and hashing.
  std::string serialize() const {
    std::ostringstream out;
    out << order << (abelian ? 'a' : 'n') << ':' << center_order << ':' << derived_order << ':' << exponent << ':';
    for (auto [o, c] : order_histogram) out << o << '^' << c << ',';
    return out.str();
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : serialize()) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// The table of a subgroup, its members renumbered in increasing parent
/// index (so the identity stays at 0).
inline CayleyTable subgroup_table(const CayleyTable& parent, const SubgroupSet& s) {
  const auto members = s.members();
  const std::size_t n = members.size();
  std::vector<CayleyTable::Index> local(parent.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<CayleyTable::Index>(i);
  std::vector<CayleyTable::Index> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = local[parent.mul(members[a], members[b])];
  return CayleyTable(n, std::move(mul));
}

inline IsoFingerprint fingerprint(const CayleyTable& t) {
  IsoFingerprint f;
  const std::size_t n = t.order();
  f.order = n;
  f.abelian = t.is_abelian();
  for (auto o : t.element_orders()) {
    ++f.order_histogram[o];
    f.exponent = std::lcm(f.exponent, std::uint64_t{o});
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b) central = t.mul(a, b) == t.mul(b, a);
    f.center_order += central;
  }
  if (f.abelian) {
    f.derived_order = 1;
  } else {
    SubgroupSet d(n);
    d.insert(0);
    std::vector<SubgroupSet::Index> comms;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto c = t.mul(t.mul(t.inverse(a), t.inverse(b)), t.mul(a, b));
        if (d.insert(c)) comms.push_back(c);
      }
    // Close under products.
    auto members = d.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto c : comms) {
        auto y = t.mul(members[i], c);
        if (d.insert(y)) members.push_back(y);
      }
    f.derived_order = d.order();
  }
  return f;
}

/// Abstract isomorphism test: maps a greedy generating sequence of A onto
/// order-compatible tuples of B, extending the partial map over the Cayley
/// graph at each step and rejecting on inconsistency or non-injectivity.
inline bool is_isomorphic(const CayleyTable& a, const CayleyTable& b, const IsoFingerprint* fa = nullptr,
                          const IsoFingerprint* fb = nullptr) {
  if (a.order() != b.order()) return false;
  {
    IsoFingerprint ta, tb;
    if (!fa) fa = &(ta = fingerprint(a));
    if (!fb) fb = &(tb = fingerprint(b));
    if (!(*fa == *fb)) return false;
  }
  const std::size_t n = a.order();
  if (n == 1) return true;
  const auto gens = greedy_generators(a);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 1; y < n; ++y)
      if (b.element_order(y) == a.element_order(gens[i])) candidates[i].push_back(y);

  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> image(gens.size());

  // Builds the map on ⟨gens[0..depth]⟩; returns false on a conflict.
  std::vector<std::size_t> phi(n), seen_stamp(n), used_stamp(n);
  std::size_t stamp = 0;
  auto extend = [&](std::size_t depth) {
    ++stamp;
    std::fill(phi.begin(), phi.end(), kUnset);
    phi[0] = 0;
    used_stamp[0] = stamp;
    std::vector<std::size_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto x = queue[q];
      for (std::size_t j = 0; j <= depth; ++j) {
        const auto y = a.mul(gens[j], x);
        const auto py = b.mul(image[j], phi[x]);
        if (phi[y] == kUnset) {
          if (used_stamp[py] == stamp) return false;
          used_stamp[py] = stamp;
          phi[y] = py;
          queue.push_back(y);
        } else if (phi[y] != py) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) return true;
    for (auto c : candidates[depth]) {
      image[depth] = c;
      if (extend(depth) && search(depth + 1)) return true;
    }
    return false;
  };
  return search(0);
}

inline bool is_isomorphic(const CayleyTable& parent, const SubgroupSet& h, const SubgroupSet& k) {
  if (h.order() != k.order()) return false;
  return is_isomorphic(subgroup_table(parent, h), subgroup_table(parent, k));
}

// ------------------------------------------------------------------- naming

namespace detail {

struct CatalogTable {
  const CatalogEntry* entry;
  CayleyTable table;
  IsoFingerprint fp;
};

inline const std::vector<CatalogTable>& catalog_tables() {
  static const std::vector<CatalogTable> tables = [] {
    std::vector<CatalogTable> out;
    for (const auto& e : full_catalog()) {
      auto t = CayleyTable::from_group(e.group(), 64);
      auto fp = fingerprint(t);
      out.push_back({&e, std::move(t), std::move(fp)});
    }
    return out;
  }();
  return tables;
}

/// Invariant factors of an abelian group, largest first.
inline std::vector<std::uint64_t> abelian_invariants(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<std::uint64_t> factors;
  std::size_t m = n;
  std::vector<std::vector<std::uint64_t>> per_prime;
  for (std::uint64_t p = 2; m > 1; ++p) {
    if (m % p) continue;
    unsigned alpha = 0;
    while (m % p == 0) {
      m /= p;
      ++alpha;
    }
    // s[k] = log_p #{x : x^(p^k) = 1}
    std::vector<unsigned> s{0};
    std::uint64_t pk = 1;
    for (unsigned k = 1; s.back() < alpha; ++k) {
      pk *= p;
      std::size_t count = 0;
      for (auto o : t.element_orders()) count += pk % o == 0;
      unsigned e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      s.push_back(e);
    }
    // Number of cyclic factors of order >= p^k is s[k] - s[k-1].
    std::vector<std::uint64_t> powers;
    for (std::size_t k = s.size() - 1; k >= 1; --k) {
      const unsigned at_least_k = s[k] - s[k - 1];
      const unsigned at_least_k1 = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      std::uint64_t q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= p;
      for (unsigned c = 0; c < at_least_k - at_least_k1; ++c) powers.push_back(q);
    }
    per_prime.push_back(std::move(powers));
  }
  for (std::size_t i = 0;; ++i) {
    std::uint64_t f = 1;
    bool any = false;
    for (const auto& pw : per_prime)
      if (i < pw.size()) {
        f *= pw[i];
        any = true;
      }
    if (!any) break;
    factors.push_back(f);
  }
  return factors;
}

inline bool is_dihedral(const CayleyTable& t, const IsoFingerprint& fp) {
  if (t.order() < 6 || t.order() % 2) return false;
  auto d = metacyclic_table(t.order() / 2, 2, t.order() / 2 - 1, 0);
  return is_isomorphic(t, d, &fp, nullptr);
}

}  // namespace detail

/// A readable name for an abstract group: the catalog name up to order 31,
/// otherwise Zn / abelian invariants / Dn / A5, else "G<order>_<hash>".
inline std::string group_name(const CayleyTable& t, const IsoFingerprint& fp) {
  if (t.order() <= kCatalogMaxOrder) {
    for (const auto& c : detail::catalog_tables())
      if (c.table.order() == t.order() && c.fp == fp && is_isomorphic(t, c.table, &fp, &c.fp)) return c.entry->name;
    throw AssertionFailure("catalog has no group isomorphic to an order-" + std::to_string(t.order()) + " group");
  }
  if (fp.abelian) {
    std::string s;
    for (auto f : detail::abelian_invariants(t)) s += (s.empty() ? "Z" : "xZ") + std::to_string(f);
    return s;
  }
  if (detail::is_dihedral(t, fp)) return "D" + std::to_string(t.order());
  if (t.order() == 60 && fp.derived_order == 60) return "A5";
  std::ostringstream out;
  out << "G" << t.order() << "_" << std::hex << (fp.hash() & 0xffffffu);
  return out.str();
}

// ------------------------------------------------------------------- census

/// An unordered subgroup pair (h, k) with |h| <= |k|, as lattice indices.
struct ExactFactorization {
  std::size_t h = 0;
  std::size_t k = 0;
};

/// All exact factorizations with both factors proper and nontrivial.
inline std::vector<ExactFactorization> exact_factorizations(const Lattice& lat) {
  std::vector<ExactFactorization> out;
  const std::size_t n = lat.table().order();
  const auto& subs = lat.subgroups();
  for (const auto& [a, hs] : lat.by_order()) {
    if (a <= 1 || a >= n || n % a) continue;
    const std::size_t b = n / a;
    if (b < a) break;
    const auto ks = lat.of_order(b);
    for (std::size_t hi = 0; hi < hs.size(); ++hi)
      for (std::size_t ki = (a == b ? hi + 1 : 0); ki < ks.size(); ++ki)
        if (subs[hs[hi]].intersection_size(subs[ks[ki]], 1) == 1) out.push_back({hs[hi], ks[ki]});
  }
  return out;
}

/// Re-checks the defining predicates: |H||K| = |G|, H ∩ K = {1}, both proper.
inline void assert_exact(const Lattice& lat, const ExactFactorization& f) {
  const auto& h = lat.subgroups()[f.h];
  const auto& k = lat.subgroups()[f.k];
  const auto n = lat.table().order();
  if (h.order() * k.order() != n) throw AssertionFailure("exact pair with |H||K| != |G|");
  if (h.intersection_size(k) != 1 || !h.contains(0)) throw AssertionFailure("exact pair with nontrivial intersection");
  if (h.order() <= 1 || k.order() <= 1) throw AssertionFailure("exact pair with a trivial factor");
  // |HK| = |G| directly.
  SubgroupSet prod(n);
  for (auto x : h.members())
    for (auto y : k.members()) prod.insert(lat.table().mul(x, y));
  if (prod.order() != n) throw AssertionFailure("exact pair whose product is not the whole group");
}

struct FactorizationClass {
  std::string h_name;
  std::string k_name;
  std::size_t h_class = 0;  // abstract class ids, h_class <= k_class
  std::size_t k_class = 0;
  std::size_t multiplicity = 0;
  ExactFactorization representative;
};

struct AbstractClass {
  std::string name;
  IsoFingerprint fp;
  std::size_t order = 0;
};

struct Census {
  std::size_t group_order = 0;
  std::size_t lattice_size = 0;
  std::size_t raw_pairs = 0;
  std::vector<AbstractClass> abstract_classes;
  std::vector<FactorizationClass> classes;

  std::size_t f2() const noexcept { return classes.size(); }
};

/// Classifies exact factorizations up to isomorphism of the unordered pair.
inline Census classify(const Lattice& lat, const std::vector<ExactFactorization>& pairs) {
  Census c;
  c.group_order = lat.table().order();
  c.lattice_size = lat.size();
  c.raw_pairs = pairs.size();

  // Abstract class of each subgroup that occurs in a pair.
  struct Rep {
    CayleyTable table;
    IsoFingerprint fp;
  };
  std::vector<Rep> reps;
  std::map<std::size_t, std::size_t> class_of;
  auto classify_subgroup = [&](std::size_t idx) {
    auto it = class_of.find(idx);
    if (it != class_of.end()) return it->second;
    auto t = subgroup_table(lat.table(), lat.subgroups()[idx]);
    auto fp = fingerprint(t);
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (reps[r].fp == fp && is_isomorphic(t, reps[r].table, &fp, &reps[r].fp)) return class_of[idx] = r;
    reps.push_back({std::move(t), std::move(fp)});
    return class_of[idx] = reps.size() - 1;
  };
  std::map<std::pair<std::size_t, std::size_t>, FactorizationClass> by_pair;
  for (const auto& f : pairs) {
    assert_exact(lat, f);
    auto a = classify_subgroup(f.h), b = classify_subgroup(f.k);
    if (a > b) std::swap(a, b);
    auto [it, fresh] = by_pair.try_emplace({a, b});
    if (fresh) it->second.representative = f;
    ++it->second.multiplicity;
  }

  // Canonical class numbering: by (fingerprint text, name).
  std::vector<AbstractClass> abstract;
  for (const auto& r : reps) abstract.push_back({group_name(r.table, r.fp), r.fp, r.table.order()});
  std::vector<std::size_t> perm(abstract.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    const auto& ax = abstract[x];
    const auto& ay = abstract[y];
    if (ax.order != ay.order) return ax.order < ay.order;
    auto sx = ax.fp.serialize(), sy = ay.fp.serialize();
    if (sx != sy) return sx < sy;
    return ax.name < ay.name;
  });
  std::vector<std::size_t> rank(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;
  for (auto p : perm) c.abstract_classes.push_back(abstract[p]);
  // Disambiguate colliding names (distinct classes with equal generic names).
  std::map<std::string, int> seen_names;
  for (auto& a : c.abstract_classes) {
    int k = seen_names[a.name]++;
    if (k) a.name += "#" + std::to_string(k + 1);
  }

  for (auto& [key, fc] : by_pair) {
    auto a = rank[key.first], b = rank[key.second];
    if (a > b) std::swap(a, b);
    fc.h_class = a;
    fc.k_class = b;
    fc.h_name = c.abstract_classes[a].name;
    fc.k_name = c.abstract_classes[b].name;
    c.classes.push_back(fc);
  }
  std::sort(c.classes.begin(), c.classes.end(), [](const FactorizationClass& x, const FactorizationClass& y) {
    return std::pair(x.h_class, x.k_class) < std::pair(y.h_class, y.k_class);
  });
  return c;
}

inline Census census(const Lattice& lat) { return classify(lat, exact_factorizations(lat)); }

/// f2 by brute force: enumerate, build the lattice, classify.
inline Census f2_bruteforce(const PermGroup& g, std::uint64_t cap = kDefaultCap, unsigned jobs = 1) {
  return census(all_subgroups(g, cap, jobs));
}

// ------------------------------------------------------ exact pair, chain-based

struct ExactPairReport {
  Order order_g = 0;
  Order order_h = 0;
  bool parity_ok = false;
  bool product_ok = false;
  bool intersection_trivial = false;
  std::optional<Permutation> witness;  // a nonidentity common element

  bool exact() const noexcept { return parity_ok && product_ok && intersection_trivial; }
};

/// Decides whether A_n = G H exactly, for G, H inside S_n given by
/// generators: both even, |G||H| = n!/2, and G ∩ H = {1} (the smaller
/// group is enumerated and sifted through the larger's chain).
inline ExactPairReport verify_exact_pair(const PermGroup& g, const PermGroup& h, unsigned ambient_degree,
                                         std::uint64_t cap = 200000) {
  if (g.degree() != ambient_degree || h.degree() != ambient_degree)
    throw DomainError("verify_exact_pair: factor degree differs from the ambient degree");
  ExactPairReport r;
  r.order_g = g.order();
  r.order_h = h.order();
  r.parity_ok = g.is_even() && h.is_even();
  r.product_ok = r.order_g * r.order_h == alternating_order(ambient_degree);
  const bool g_small = r.order_g <= r.order_h;
  const PermGroup& small = g_small ? g : h;
  const PermGroup& large = g_small ? h : g;
  if (small.order() > cap) throw CapExceeded("smaller factor (order " + to_string(small.order()) + ")", cap);
  std::size_t common = 0;
  small.for_each_element([&](const Permutation& x) {
    if (!x.is_identity() && large.contains(x)) {
      ++common;
      if (!r.witness || x < *r.witness) r.witness = x;
    }
  });
  r.intersection_trivial = common == 0;
  return r;
}

}  // namespace f2
