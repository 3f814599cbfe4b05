#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <memory>
#include <thread>
#include <unordered_map>
#include <vector>

#include "f2/cayley.hpp"
#include "f2/error.hpp"

namespace f2 {

/// A subgroup of an enumerated group, as a bitset over the parent's element
/// indices. `gens` is a generating set (element indices) used by joins.
class SubgroupSet {
 public:
  using Index = CayleyTable::Index;

  SubgroupSet() = default;
  explicit SubgroupSet(std::size_t parent_order) : words_((parent_order + 63) / 64, 0), size_(parent_order) {}

  std::size_t parent_order() const noexcept { return size_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  const std::vector<Index>& generators() const noexcept { return gens_; }

  bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  /// Sets bit i; returns true when it was not set before.
  bool insert(std::size_t i) noexcept {
    auto& w = words_[i >> 6];
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (w & m) return false;
    w |= m;
    ++order_;
    return true;
  }

  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(order_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<Index>(w * 64 + std::countr_zero(bits)));
    return out;
  }

  /// |H ∩ K|, stopping early once `limit` is exceeded.
  std::size_t intersection_size(const SubgroupSet& other, std::size_t limit = SIZE_MAX) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      n += std::popcount(words_[w] & other.words_[w]);
      if (n > limit) return n;
    }
    return n;
  }

  SubgroupSet intersection(const SubgroupSet& other) const {
    SubgroupSet out(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] = words_[w] & other.words_[w];
      out.order_ += std::popcount(out.words_[w]);
    }
    return out;
  }

  bool is_subset_of(const SubgroupSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  std::uint64_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return h;
  }

  bool operator==(const SubgroupSet& o) const noexcept { return words_ == o.words_; }

  /// Canonical order: by subgroup order, then by bit content (lowest index
  /// first decides).
  bool operator<(const SubgroupSet& o) const noexcept {
    if (order_ != o.order_) return order_ < o.order_;
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != o.words_[w]) {
        const std::uint64_t diff = words_[w] ^ o.words_[w];
        const std::uint64_t low = diff & (~diff + 1);
        return (words_[w] & low) != 0;
      }
    return false;
  }

  void set_generators(std::vector<Index> gens) { gens_ = std::move(gens); }

  /// Closure check against the table: identity present, closed under
  /// products and inverses.
  bool is_subgroup_of(const CayleyTable& t) const {
    if (size_ != t.order() || !contains(0)) return false;
    auto m = members();
    if (t.order() % m.size() != 0) return false;
    for (auto a : m) {
      if (!contains(t.inverse(a))) return false;
      for (auto b : m)
        if (!contains(t.mul(a, b))) return false;
    }
    return true;
  }

  static SubgroupSet from_words(std::size_t parent_order, std::vector<std::uint64_t> words) {
    SubgroupSet s(parent_order);
    if (words.size() != s.words_.size()) throw DomainError("subgroup bitset has wrong length");
    s.words_ = std::move(words);
    for (auto w : s.words_) s.order_ += std::popcount(w);
    return s;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::vector<Index> gens_;
  std::size_t size_ = 0;
  std::size_t order_ = 0;
};

struct SubgroupSetHash {
  std::size_t operator()(const SubgroupSet& s) const noexcept { return static_cast<std::size_t>(s.hash()); }
};

/// ⟨g⟩ as a subgroup.
inline SubgroupSet cyclic_subgroup(const CayleyTable& t, std::size_t g) {
  SubgroupSet s(t.order());
  s.insert(0);
  for (std::size_t x = g; x != 0; x = t.mul(x, g)) s.insert(x);
  if (g != 0) s.set_generators({static_cast<SubgroupSet::Index>(g)});
  return s;
}

inline SubgroupSet trivial_subgroup(const CayleyTable& t) {
  SubgroupSet s(t.order());
  s.insert(0);
  return s;
}

inline SubgroupSet full_subgroup(const CayleyTable& t) {
  SubgroupSet s(t.order());
  for (std::size_t i = 0; i < t.order(); ++i) s.insert(i);
  s.set_generators([&] {
    std::vector<SubgroupSet::Index> g;
    for (auto i : greedy_generators(t)) g.push_back(static_cast<SubgroupSet::Index>(i));
    return g;
  }());
  return s;
}

/// Distinct cyclic subgroups, in canonical order.
inline std::vector<SubgroupSet> cyclic_subgroups(const CayleyTable& t) {
  std::vector<SubgroupSet> out;
  std::vector<bool> covered(t.order(), false);
  // A generator of ⟨g⟩ is any g^k with gcd(k, |g|) = 1; mark those as seen.
  for (std::size_t g = 0; g < t.order(); ++g) {
    if (covered[g]) continue;
    auto s = cyclic_subgroup(t, g);
    const auto n = t.element_order(g);
    std::size_t x = g;
    for (std::uint32_t k = 1; k <= n; ++k, x = t.mul(x, g))
      if (std::gcd(k, n) == 1) covered[x] = true;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::size_t smallest_prime_factor(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

/// The subgroup generated by H's generators and the extra elements, by a
/// breadth-first search over left cosets xH. Once the candidate exceeds
/// |G| / p_min it must be all of G.
inline SubgroupSet join_with(const CayleyTable& t, const SubgroupSet& h, const std::vector<SubgroupSet::Index>& extra,
                             const SubgroupSet* full) {
  std::vector<SubgroupSet::Index> gens = h.generators();
  for (auto e : extra)
    if (!h.contains(e)) gens.push_back(e);
  if (gens.size() == h.generators().size()) return h;
  const std::size_t n = t.order();
  const std::size_t bound = n / smallest_prime_factor(n);
  const auto h_members = h.members();
  SubgroupSet j = h;
  std::vector<SubgroupSet::Index> reps{0};
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (auto s : gens) {
      const auto y = t.mul(s, reps[r]);
      if (j.contains(y)) continue;
      for (auto m : h_members) j.insert(t.mul(y, m));
      if (full && j.order() > bound) return *full;
      reps.push_back(y);
    }
  j.set_generators(std::move(gens));
  return j;
}

}  // namespace detail

/// Smallest subgroup containing H and K.
inline SubgroupSet join(const CayleyTable& t, const SubgroupSet& h, const SubgroupSet& k) {
  if (h.parent_order() != t.order() || k.parent_order() != t.order())
    throw DomainError("join: subgroups belong to different parents");
  std::vector<SubgroupSet::Index> extra = k.generators();
  if (extra.empty() && k.order() > 1) {
    for (auto m : k.members())
      if (m) extra.push_back(m);
  }
  if (h.generators().empty() && h.order() > 1) {
    // Rebuild H from its members so the coset search has generators.
    auto base = trivial_subgroup(t);
    std::vector<SubgroupSet::Index> all;
    for (auto m : h.members())
      if (m) all.push_back(m);
    auto rebuilt = detail::join_with(t, base, all, nullptr);
    return detail::join_with(t, rebuilt, extra, nullptr);
  }
  return detail::join_with(t, h, extra, nullptr);
}

/// Every subgroup of an enumerated group.
class Lattice {
 public:
  Lattice() = default;

  Lattice(std::shared_ptr<const CayleyTable> table, std::vector<SubgroupSet> subgroups)
      : table_(std::move(table)), subgroups_(std::move(subgroups)) {
    std::sort(subgroups_.begin(), subgroups_.end());
    for (std::size_t i = 0; i < subgroups_.size(); ++i) by_order_[subgroups_[i].order()].push_back(i);
  }

  const CayleyTable& table() const { return *table_; }
  std::shared_ptr<const CayleyTable> table_ptr() const { return table_; }
  const std::vector<SubgroupSet>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const std::map<std::size_t, std::vector<std::size_t>>& by_order() const noexcept { return by_order_; }

  std::vector<std::size_t> of_order(std::size_t n) const {
    auto it = by_order_.find(n);
    return it == by_order_.end() ? std::vector<std::size_t>{} : it->second;
  }

  /// Index of a subgroup with exactly these bits, if present.
  std::optional<std::size_t> find(const SubgroupSet& s) const {
    auto it = by_order_.find(s.order());
    if (it == by_order_.end()) return std::nullopt;
    auto lo = std::lower_bound(it->second.begin(), it->second.end(), s,
                               [&](std::size_t i, const SubgroupSet& x) { return subgroups_[i] < x; });
    if (lo != it->second.end() && subgroups_[*lo] == s) return *lo;
    return std::nullopt;
  }

  /// Lagrange and closure checks on every member; throws AssertionFailure.
  void assert_consistent(bool full_closure_check = false) const {
    const auto n = table_->order();
    for (const auto& s : subgroups_) {
      if (!s.contains(0)) throw AssertionFailure("lattice member misses the identity");
      if (n % s.order() != 0) throw AssertionFailure("lattice member violates Lagrange");
      if (full_closure_check && !s.is_subgroup_of(*table_)) throw AssertionFailure("lattice member is not closed");
    }
  }

 private:
  std::shared_ptr<const CayleyTable> table_;
  std::vector<SubgroupSet> subgroups_;
  std::map<std::size_t, std::vector<std::size_t>> by_order_;
};

inline constexpr std::uint64_t kDefaultCap = 1100;

/// All subgroups: the closure of the cyclic subgroups under joins with
/// cyclic subgroups of prime-power order. Every subgroup is generated by
/// its prime-power elements, so the closure is complete. Work is split over
/// `jobs` threads per round; the result does not depend on `jobs`.
inline Lattice all_subgroups(std::shared_ptr<const CayleyTable> table, unsigned jobs = 1) {
  const CayleyTable& t = *table;
  const auto full = full_subgroup(t);
  auto cyclic = cyclic_subgroups(t);

  std::vector<SubgroupSet::Index> pp_gens;
  for (const auto& c : cyclic) {
    if (c.order() == 1) continue;
    std::size_t n = c.order(), p = detail::smallest_prime_factor(n);
    while (n % p == 0) n /= p;
    if (n == 1) pp_gens.push_back(c.generators()[0]);
  }

  std::unordered_map<SubgroupSet, char, SubgroupSetHash> seen;
  std::vector<SubgroupSet> all;
  auto add = [&](SubgroupSet s) {
    if (seen.emplace(s, 0).second) {
      all.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add(trivial_subgroup(t));
  add(full);
  std::vector<SubgroupSet> frontier;
  for (auto& c : cyclic)
    if (add(c)) frontier.push_back(c);

  jobs = std::max(1u, jobs);
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::vector<SubgroupSet>> found(frontier.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < frontier.size(); i += step) {
        const auto& h = frontier[i];
        std::unordered_map<SubgroupSet, char, SubgroupSetHash> local;
        for (auto g : pp_gens) {
          if (h.contains(g)) continue;
          auto j = detail::join_with(t, h, {g}, &full);
          if (j.order() == t.order()) continue;
          if (local.emplace(j, 0).second) found[i].push_back(std::move(j));
        }
      }
    };
    if (jobs == 1 || frontier.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(frontier.size()));
      for (unsigned w = 0; w < n; ++w) pool.emplace_back(work, w, n);
      for (auto& th : pool) th.join();
    }
    std::vector<SubgroupSet> next;
    for (auto& list : found)
      for (auto& s : list)
        if (add(s)) next.push_back(std::move(s));
    frontier = std::move(next);
  }
  return Lattice(std::move(table), std::move(all));
}

/// Lattice of a permutation group, enumerating it under the cap.
inline Lattice all_subgroups(const PermGroup& g, std::uint64_t cap = kDefaultCap, unsigned jobs = 1) {
  auto table = std::make_shared<const CayleyTable>(CayleyTable::from_group(g, cap));
  return all_subgroups(std::move(table), jobs);
}

}  // namespace f2
