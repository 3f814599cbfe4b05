#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "f2/error.hpp"

namespace f2 {

enum class Parity { even, odd };

inline Parity operator*(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// A bijection of the points {1, ..., degree}.
///
/// Images are stored 0-based; the public point-level API is 1-based, matching
/// the cycle notation "(1,2,3)(4,5)". Composition follows function notation:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  using Point = std::uint16_t;
  static constexpr unsigned kMaxDegree = 65535;

  Permutation() = default;

  static Permutation identity(unsigned degree) {
    check_degree(degree);
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// From 1-based images: images[i-1] is the image of point i.
  static Permutation from_images(std::span<const unsigned> images) {
    check_degree(static_cast<unsigned>(images.size()));
    Permutation p;
    p.images_.reserve(images.size());
    std::vector<bool> seen(images.size(), false);
    for (unsigned img : images) {
      if (img < 1 || img > images.size() || seen[img - 1])
        throw DomainError("images do not form a bijection of {1.." +
                          std::to_string(images.size()) + "}");
      seen[img - 1] = true;
      p.images_.push_back(static_cast<Point>(img - 1));
    }
    return p;
  }

  /// From 0-based images, unchecked. Internal fast path for the group code.
  static Permutation from_images0(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  static Permutation from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (unsigned x : cycle) {
        if (x < 1 || x > degree)
          throw DomainError("point " + std::to_string(x) + " outside {1.." +
                            std::to_string(degree) + "}");
        if (used[x - 1]) throw DomainError("point " + std::to_string(x) + " repeated in cycles");
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p.images_[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
    }
    return p;
  }

  /// Parses cycle notation such as "(1,2,3)(4,5)", "(1 2 3)(4 5)" or "()".
  /// With degree == 0 the degree is the largest point mentioned (at least 1).
  static Permutation parse(std::string_view text, unsigned degree = 0) {
    std::vector<std::vector<unsigned>> cycles;
    unsigned max_point = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
        ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
      ++i;
      std::vector<unsigned> cycle;
      bool need_number = false;
      while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
        if (text[i] == ')') {
          if (need_number) throw ParseError("dangling ',' in \"" + std::string(text) + "\"");
          ++i;
          break;
        }
        if (text[i] == ',') {
          if (cycle.empty() || need_number) throw ParseError("misplaced ',' in \"" + std::string(text) + "\"");
          need_number = true;
          ++i;
          continue;
        }
        if (text[i] < '0' || text[i] > '9')
          throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in \"" +
                           std::string(text) + "\"");
        unsigned long value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + static_cast<unsigned>(text[i] - '0');
          if (value > kMaxDegree) throw ParseError("point too large in \"" + std::string(text) + "\"");
          ++i;
        }
        if (value == 0) throw ParseError("points are 1-based in \"" + std::string(text) + "\"");
        cycle.push_back(static_cast<unsigned>(value));
        max_point = std::max<unsigned>(max_point, static_cast<unsigned>(value));
        need_number = false;
      }
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    if (degree == 0) degree = std::max(1u, max_point);
    if (max_point > degree)
      throw ParseError("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(degree));
    try {
      return from_cycles(degree, cycles);
    } catch (const DomainError& e) {
      throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
    }
  }

  unsigned degree() const noexcept { return static_cast<unsigned>(images_.size()); }

  /// Image of a 1-based point.
  unsigned operator()(unsigned point) const { return images_.at(point - 1) + 1u; }

  /// 0-based image, unchecked.
  Point at0(std::size_t point) const noexcept { return images_[point]; }

  std::span<const Point> images0() const noexcept { return images_; }

  /// 1-based image array.
  std::vector<unsigned> images() const {
    std::vector<unsigned> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1u;
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
    return p;
  }

  /// Disjoint nontrivial cycles, each starting at its smallest point, ordered
  /// by that point. Fixed points are omitted.
  std::vector<std::vector<unsigned>> cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      std::vector<unsigned> cycle;
      for (std::size_t x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cycle.push_back(static_cast<unsigned>(x + 1));
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Cycle lengths including fixed points (length 1), sorted descending.
  std::vector<unsigned> cycle_type() const {
    std::vector<unsigned> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      unsigned len = 0;
      for (std::size_t x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  std::vector<unsigned> support() const {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) out.push_back(static_cast<unsigned>(i + 1));
    return out;
  }

  /// Cardinality of the support.
  unsigned element_degree() const {
    unsigned n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] != i;
    return n;
  }

  /// Smallest moved point (1-based), or 0 for the identity.
  unsigned first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return static_cast<unsigned>(i + 1);
    return 0;
  }

  Parity parity() const {
    // A cycle of length L contributes L - 1 transpositions.
    std::size_t transpositions = 0;
    for (unsigned len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
  }

  bool is_even() const { return parity() == Parity::even; }

  /// lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (unsigned len : cycle_type()) result = std::lcm(result, std::uint64_t{len});
    return result;
  }

  /// Embeds into a larger degree by adding fixed points.
  Permutation padded(unsigned new_degree) const {
    if (new_degree < degree())
      throw DomainError("cannot pad degree " + std::to_string(degree()) + " down to " +
                        std::to_string(new_degree));
    check_degree(new_degree);
    Permutation p = *this;
    for (unsigned i = degree(); i < new_degree; ++i) p.images_.push_back(static_cast<Point>(i));
    return p;
  }

  /// Relabels point i as i + offset inside a permutation of degree new_degree.
  Permutation shifted(unsigned offset, unsigned new_degree) const {
    if (offset + degree() > new_degree) throw DomainError("shifted permutation does not fit");
    Permutation p = identity(new_degree);
    for (std::size_t i = 0; i < images_.size(); ++i)
      p.images_[i + offset] = static_cast<Point>(images_[i] + offset);
    return p;
  }

  /// Cycle notation with commas; the identity prints as "()".
  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cycle : cs) {
      out.push_back('(');
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(cycle[i]);
      }
      out.push_back(')');
    }
    return out;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : images_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(), b.images_.begin(),
                                                  b.images_.end());
  }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw DomainError("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                        std::to_string(b.degree()));
    Permutation p;
    p.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
    return p;
  }

 private:
  static void check_degree(unsigned degree) {
    if (degree == 0 || degree > kMaxDegree)
      throw DomainError("degree must be in 1.." + std::to_string(kMaxDegree));
  }

  std::vector<Point> images_;
};

/// result(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

inline Permutation power(const Permutation& p, std::uint64_t exponent) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// Parses a list of generators separated by ';' (catalog format) or by
/// top-level commas between cycles, e.g. "(1,2,3),(1,2)".
inline std::vector<Permutation> parse_generator_list(std::string_view text, unsigned degree) {
  std::vector<Permutation> gens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ';' || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ';' || c == ',')) break;
      ++i;
    }
    gens.push_back(Permutation::parse(text.substr(start, i - start), degree));
  }
  return gens;
}

}  // namespace f2
