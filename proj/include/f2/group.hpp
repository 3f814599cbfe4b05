#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "f2/error.hpp"
#include "f2/order.hpp"
#include "f2/perm.hpp"

namespace f2 {

/// Stabilizer chain (base and strong generating set) built with the
/// deterministic Schreier-Sims algorithm. Transversals are stored explicitly
/// together with their inverses; degrees in this library stay small enough
/// that Schreier vectors are not worth the indirection.
class StabChain {
 public:
  using Point = Permutation::Point;

  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;         // indices into strong generators
    std::vector<Point> orbit;              // orbit of base, discovery order
    std::vector<std::int32_t> orbit_pos;   // point -> index in orbit, or -1
    std::vector<Permutation> transversal;  // transversal[j](base) = orbit[j]
    std::vector<Permutation> inverse_transversal;
    std::vector<std::size_t> checked;      // per orbit point: gens verified so far
  };

  StabChain() = default;

  StabChain(unsigned degree, const std::vector<Permutation>& generators) : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw DomainError("generator degree " + std::to_string(g.degree()) + " differs from group degree " +
                          std::to_string(degree));
      if (!g.is_identity() && std::find(strong_.begin(), strong_.end(), g) == strong_.end()) {
        strong_.push_back(g);
        strong_inv_.push_back(g.inverse());
      }
    }
    build();
  }

  unsigned degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }

  std::vector<unsigned> base() const {
    std::vector<unsigned> out;
    for (const auto& level : levels_) out.push_back(level.base + 1u);
    return out;
  }

  /// Product of the basic orbit lengths.
  Order order() const {
    Order result = 1;
    for (const auto& level : levels_) result *= level.orbit.size();
    return result;
  }

  /// Sifts g starting at level `from`. Returns the residue and the level at
  /// which sifting stopped (length() when every level was passed).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& level = levels_[l];
      const Point beta = g.at0(level.base);
      const std::int32_t pos = level.orbit_pos[beta];
      if (pos < 0) return {std::move(g), l};
      g = level.inverse_transversal[static_cast<std::size_t>(pos)] * g;
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_)
      throw DomainError("degree mismatch: permutation of degree " + std::to_string(g.degree()) +
                        " tested against group of degree " + std::to_string(degree_));
    auto [residue, level] = strip(g);
    return level == levels_.size() && residue.is_identity();
  }

  /// Calls f(element) for every group element, as products of transversal
  /// elements u0 * u1 * ... * u_{k-1}.
  template <typename F>
  void for_each_element(F&& f) const {
    Permutation prefix = Permutation::identity(degree_);
    walk(0, prefix, f);
  }

 private:
  template <typename F>
  void walk(std::size_t l, const Permutation& prefix, F& f) const {
    if (l == levels_.size()) {
      f(prefix);
      return;
    }
    for (const auto& u : levels_[l].transversal) walk(l + 1, prefix * u, f);
  }

  bool fixes_base_prefix(const Permutation& g, std::size_t count) const {
    for (std::size_t l = 0; l < count; ++l)
      if (g.at0(levels_[l].base) != levels_[l].base) return false;
    return true;
  }

  void add_level(Point base) {
    Level level;
    level.base = base;
    level.orbit_pos.assign(degree_, -1);
    level.orbit.push_back(base);
    level.orbit_pos[base] = 0;
    level.transversal.push_back(Permutation::identity(degree_));
    level.inverse_transversal.push_back(Permutation::identity(degree_));
    level.checked.push_back(0);
    levels_.push_back(std::move(level));
  }

  void extend_orbit(Level& level) {
    for (std::size_t j = 0; j < level.orbit.size(); ++j) {
      const Point x = level.orbit[j];
      for (std::size_t gi : level.gens) {
        const Point y = strong_[gi].at0(x);
        if (level.orbit_pos[y] >= 0) continue;
        level.orbit_pos[y] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(y);
        level.transversal.push_back(strong_[gi] * level.transversal[j]);
        level.inverse_transversal.push_back(level.inverse_transversal[j] * strong_inv_[gi]);
        level.checked.push_back(0);
      }
    }
  }

  void build() {
    if (strong_.empty()) return;
    for (const auto& g : strong_)
      if (fixes_base_prefix(g, levels_.size())) add_level(static_cast<Point>(g.first_moved_point() - 1));
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      for (std::size_t gi = 0; gi < strong_.size(); ++gi)
        if (fixes_base_prefix(strong_[gi], l)) levels_[l].gens.push_back(gi);
      extend_orbit(levels_[l]);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool extended = false;
      Level* level = &levels_[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; !extended && j < level->orbit.size(); ++j) {
        const Point beta = level->orbit[j];
        while (level->checked[j] < level->gens.size()) {
          const std::size_t gi = level->gens[level->checked[j]];
          const Point gamma = strong_[gi].at0(beta);
          const auto gpos = static_cast<std::size_t>(level->orbit_pos[gamma]);
          Permutation schreier = level->inverse_transversal[gpos] * strong_[gi] * level->transversal[j];
          auto [residue, stop] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (stop == levels_.size() && residue.is_identity()) {
            ++level->checked[j];
            continue;
          }
          if (stop == levels_.size()) add_level(static_cast<Point>(residue.first_moved_point() - 1));
          strong_inv_.push_back(residue.inverse());
          strong_.push_back(std::move(residue));
          const std::size_t new_index = strong_.size() - 1;
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
            levels_[l].gens.push_back(new_index);
            extend_orbit(levels_[l]);
          }
          i = static_cast<std::ptrdiff_t>(stop);
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
  }

  unsigned degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

/// Transitivity data for the natural action on {1..degree}.
struct ActionReport {
  bool transitive = false;
  std::map<unsigned, bool> k_transitive;
  std::map<unsigned, bool> sharply_k;
  bool primitive = false;
  /// A nontrivial block containing point 1 when transitive but imprimitive.
  std::vector<unsigned> block;

  /// Largest k <= max_k with k_transitive[k], or 0.
  unsigned transitivity_degree() const {
    unsigned best = 0;
    for (auto [k, ok] : k_transitive)
      if (ok) best = std::max(best, k);
    return best;
  }
};

/// A finitely generated permutation group. The stabilizer chain is computed
/// once on first use and shared between copies.
class PermGroup {
 public:
  PermGroup() = default;

  PermGroup(unsigned degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (degree == 0) throw DomainError("group degree must be positive");
    for (const auto& g : generators_)
      if (g.degree() != degree)
        throw DomainError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                          ", expected " + std::to_string(degree));
  }

  /// Generators in cycle notation, e.g. {"(1,2,3,4,5)", "(2,5)(3,4)"}.
  static PermGroup from_cycles(unsigned degree, const std::vector<std::string>& generators) {
    std::vector<Permutation> gens;
    for (const auto& s : generators) gens.push_back(Permutation::parse(s, degree));
    return PermGroup(degree, std::move(gens));
  }

  unsigned degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabChain& chain() const {
    std::call_once(cache_->once, [this] { cache_->chain = StabChain(degree_, generators_); });
    return cache_->chain;
  }

  Order order() const { return chain().order(); }

  bool contains(const Permutation& p) const { return chain().contains(p); }

  /// True when every generator (hence every element) is an even permutation.
  bool is_even() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Permutation& g) { return g.is_even(); });
  }

  template <typename F>
  void for_each_element(F&& f) const {
    chain().for_each_element(std::forward<F>(f));
  }

  /// All elements in lexicographic order of their image arrays. The identity
  /// is always first.
  std::vector<Permutation> enumerate(std::uint64_t cap) const {
    const Order n = order();
    if (n > cap) throw CapExceeded("group of order " + to_string(n), cap);
    std::vector<Permutation> elements;
    elements.reserve(static_cast<std::size_t>(n));
    for_each_element([&](const Permutation& g) { elements.push_back(g); });
    std::sort(elements.begin(), elements.end());
    return elements;
  }

  std::vector<unsigned> orbit(unsigned point) const {
    if (point < 1 || point > degree_) throw DomainError("point outside the group's domain");
    std::vector<bool> seen(degree_, false);
    std::vector<unsigned> out{point};
    seen[point - 1] = true;
    for (std::size_t j = 0; j < out.size(); ++j)
      for (const auto& g : generators_) {
        unsigned y = g(out[j]);
        if (!seen[y - 1]) {
          seen[y - 1] = true;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<unsigned>> orbits() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(degree_, false);
    for (unsigned x = 1; x <= degree_; ++x) {
      if (seen[x - 1]) continue;
      auto o = orbit(x);
      for (unsigned y : o) seen[y - 1] = true;
      out.push_back(std::move(o));
    }
    return out;
  }

  bool is_transitive() const { return orbit(1).size() == degree_; }

  /// The finest block system in which `a` and `b` share a block; returns the
  /// block of point a. Union-find closure under the generators.
  std::vector<unsigned> minimal_block(unsigned a, unsigned b) const {
    std::vector<unsigned> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](unsigned x, unsigned y) {
      x = find(x);
      y = find(y);
      if (x == y) return false;
      if (x > y) std::swap(x, y);
      parent[y] = x;
      return true;
    };
    unite(a - 1, b - 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : generators_)
        for (unsigned x = 0; x < degree_; ++x) changed |= unite(g.at0(x), g.at0(find(x)));
    }
    std::vector<unsigned> block;
    const unsigned root = find(a - 1);
    for (unsigned x = 0; x < degree_; ++x)
      if (find(x) == root) block.push_back(x + 1);
    return block;
  }

  /// k-transitivity by orbit counting on ordered k-tuples of distinct points,
  /// stopping at the first k that fails; sharpness additionally requires
  /// order = d(d-1)...(d-k+1). Primitivity via minimal block systems.
  ActionReport action_report(unsigned max_k) const {
    if (max_k > degree_) throw DomainError("max_k exceeds the degree");
    ActionReport report;
    report.transitive = is_transitive();
    const Order n = order();
    bool still = true;
    for (unsigned k = 1; k <= max_k; ++k) {
      still = still && tuple_orbit_is_full(k);
      report.k_transitive[k] = still;
      report.sharply_k[k] = still && n == falling_factorial(degree_, k);
    }
    if (report.transitive) {
      report.primitive = true;
      for (unsigned x = 2; x <= degree_ && report.primitive; ++x) {
        auto block = minimal_block(1, x);
        if (block.size() < degree_) {
          report.primitive = false;
          report.block = std::move(block);
        }
      }
    }
    return report;
  }

 private:
  bool tuple_orbit_is_full(unsigned k) const {
    const Order target = falling_factorial(degree_, k);
    if (target == 0) return false;
    // Tuples are encoded in base `degree`.
    auto encode = [&](const std::vector<unsigned>& t) {
      std::uint64_t code = 0;
      for (unsigned x : t) code = code * degree_ + x;
      return code;
    };
    std::vector<unsigned> start(k);
    std::iota(start.begin(), start.end(), 0u);
    std::unordered_set<std::uint64_t> seen{encode(start)};
    std::vector<std::vector<unsigned>> frontier{start};
    std::vector<unsigned> image(k);
    while (!frontier.empty() && seen.size() < target) {
      std::vector<std::vector<unsigned>> next;
      for (const auto& t : frontier)
        for (const auto& g : generators_) {
          for (unsigned i = 0; i < k; ++i) image[i] = g.at0(t[i]);
          if (seen.insert(encode(image)).second) next.push_back(image);
        }
      frontier = std::move(next);
    }
    return seen.size() == target;
  }

  struct Cache {
    std::once_flag once;
    StabChain chain;
  };

  unsigned degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Elements common to G and H: enumerates the smaller group and sifts each
/// element through the larger group's chain. Sorted lexicographically.
inline std::vector<Permutation> intersect_small(const PermGroup& g, const PermGroup& h, std::uint64_t cap) {
  if (g.degree() != h.degree()) throw DomainError("intersect_small: degree mismatch");
  const bool g_small = g.order() <= h.order();
  const PermGroup& small = g_small ? g : h;
  const PermGroup& large = g_small ? h : g;
  if (small.order() > cap) throw CapExceeded("both factors (smaller order " + to_string(small.order()) + ")", cap);
  std::vector<Permutation> common;
  small.for_each_element([&](const Permutation& x) {
    if (large.contains(x)) common.push_back(x);
  });
  std::sort(common.begin(), common.end());
  return common;
}

inline PermGroup symmetric_group(unsigned n) {
  if (n == 1) return PermGroup(1, {});
  std::vector<unsigned> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1u);
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cycle})});
}

/// A_n on {1..n}, generated by the 3-cycles (1,2,i).
inline PermGroup alternating_group(unsigned n) {
  std::vector<Permutation> gens;
  for (unsigned i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  return PermGroup(std::max(1u, n), std::move(gens));
}

/// A_n acting on the first n points of {1..degree}.
inline PermGroup alternating_group_on_prefix(unsigned n, unsigned degree) {
  std::vector<Permutation> gens;
  for (unsigned i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(degree, {{1, 2, i}}));
  return PermGroup(degree, std::move(gens));
}

}  // namespace f2
