#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "f2/catalog_data.hpp"
#include "f2/cayley.hpp"
#include "f2/error.hpp"
#include "f2/field.hpp"
#include "f2/group.hpp"
#include "f2/perm.hpp"

namespace f2 {

enum class Family {
  cyclic,
  abelian,
  dihedral,
  generalized_quaternion,
  semidihedral,
  modular_p,
  alternating,
  symmetric,
  psl2,
  pgl2,
  pgammal2,
  lf,
  mq,
  agl1,
  agammal1,
  asl1,
  agl32,
  catalog_entry,
};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::abelian: return "abelian";
    case Family::dihedral: return "dihedral";
    case Family::generalized_quaternion: return "generalized_quaternion";
    case Family::semidihedral: return "semidihedral";
    case Family::modular_p: return "modular_p";
    case Family::alternating: return "alternating";
    case Family::symmetric: return "symmetric";
    case Family::psl2: return "psl2";
    case Family::pgl2: return "pgl2";
    case Family::pgammal2: return "pgammal2";
    case Family::lf: return "lf";
    case Family::mq: return "mq";
    case Family::agl1: return "agl1";
    case Family::agammal1: return "agammal1";
    case Family::asl1: return "asl1";
    case Family::agl32: return "agl32";
    case Family::catalog_entry: return "catalog_entry";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Family::catalog_entry); ++i) {
    auto f = static_cast<Family>(i);
    if (s == to_string(f)) return f;
  }
  if (s == "quaternion") return Family::generalized_quaternion;
  if (s == "modular") return Family::modular_p;
  return std::nullopt;
}

namespace detail {

inline bool is_power_of(std::uint64_t value, std::uint64_t base, unsigned* exponent = nullptr) {
  unsigned e = 0;
  if (value == 0 || base < 2) return false;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (exponent) *exponent = e;
  return value == 1;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

/// A named group family instance. Parameters:
///   cyclic {n}; abelian {n1, n2, ...} (direct product of cyclic factors);
///   dihedral {2n} (group order, D_{2n}); generalized_quaternion {2^n};
///   semidihedral {2^n}; modular_p {p, n} (order p^n); alternating {n};
///   symmetric {n}; psl2/pgl2/pgammal2/lf/mq/agl1/agammal1/asl1 {q};
///   agl32 {}; catalog_entry {order, position within that order}.
struct FamilySpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;

  void validate() const {
    auto need = [&](std::size_t n) {
      if (params.size() != n)
        throw DomainError(std::string(to_string(family)) + " expects " + std::to_string(n) + " parameter(s)");
    };
    auto need_prime_power = [&](std::uint64_t q) {
      if (!prime_power(q)) throw DomainError(std::string(to_string(family)) + ": q = " + std::to_string(q) + " is not a prime power");
    };
    unsigned e = 0;
    switch (family) {
      case Family::cyclic:
        need(1);
        if (params[0] < 1) throw DomainError("cyclic requires n >= 1");
        break;
      case Family::abelian:
        if (params.empty()) throw DomainError("abelian requires at least one factor");
        for (auto n : params)
          if (n < 1) throw DomainError("abelian factors must be positive");
        break;
      case Family::dihedral:
        need(1);
        if (params[0] < 2 || params[0] % 2) throw DomainError("dihedral requires an even order >= 2");
        break;
      case Family::generalized_quaternion:
        need(1);
        if (!detail::is_power_of(params[0], 2, &e) || e < 3)
          throw DomainError("generalized_quaternion requires order 2^n with n >= 3");
        break;
      case Family::semidihedral:
        need(1);
        if (!detail::is_power_of(params[0], 2, &e) || e < 3)
          throw DomainError("semidihedral requires order 2^n with n >= 3");
        break;
      case Family::modular_p:
        need(2);
        if (params[0] == 2 || !detail::is_small_prime(params[0]))
          throw DomainError("modular_p requires an odd prime p");
        if (params[1] < 3) throw DomainError("modular_p requires n >= 3");
        break;
      case Family::alternating:
      case Family::symmetric:
        need(1);
        if (params[0] < 1) throw DomainError("degree must be positive");
        break;
      case Family::psl2:
      case Family::pgl2:
      case Family::pgammal2:
      case Family::lf:
      case Family::agl1:
      case Family::agammal1:
      case Family::asl1:
        need(1);
        need_prime_power(params[0]);
        break;
      case Family::mq: {
        need(1);
        auto pp = prime_power(params[0]);
        if (!pp || pp->first == 2 || pp->second % 2)
          throw DomainError("mq requires q = p^(2k) with p odd");
        break;
      }
      case Family::agl32:
        need(0);
        break;
      case Family::catalog_entry:
        need(2);
        break;
    }
  }

  /// Expected group order (0 when not known in closed form).
  std::uint64_t expected_order() const {
    validate();
    auto q = params.empty() ? 0 : params[0];
    auto pp = params.empty() ? std::nullopt : prime_power(q);
    switch (family) {
      case Family::cyclic: return params[0];
      case Family::abelian: {
        std::uint64_t n = 1;
        for (auto f : params) n *= f;
        return n;
      }
      case Family::dihedral:
      case Family::generalized_quaternion:
      case Family::semidihedral: return params[0];
      case Family::modular_p: return detail::ipow(params[0], static_cast<unsigned>(params[1]));
      case Family::alternating: return params[0] < 2 ? 1 : to_u64(factorial(static_cast<unsigned>(params[0])) / 2);
      case Family::symmetric: return to_u64(factorial(static_cast<unsigned>(params[0])));
      case Family::psl2: return q * (q * q - 1) / (q % 2 ? 2 : 1);
      case Family::pgl2:
      case Family::lf:
      case Family::mq: return q * (q * q - 1);
      case Family::pgammal2: return pp->second * q * (q * q - 1);
      case Family::agl1: return q * (q - 1);
      case Family::agammal1: return pp->second * q * (q - 1);
      case Family::asl1: return q % 2 ? q * (q - 1) / 2 : (q == 2 ? 1 : q * (q - 1));
      case Family::agl32: return 1344;
      case Family::catalog_entry: return params[0];
    }
    return 0;
  }

  /// Short display name, e.g. "D20", "Q16", "PSL(2,7)".
  std::string name() const {
    auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
    switch (family) {
      case Family::cyclic: return "Z" + p(0);
      case Family::abelian: {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "xZ" : "Z") + p(i);
        return s;
      }
      case Family::dihedral: return "D" + p(0);
      case Family::generalized_quaternion: return "Q" + p(0);
      case Family::semidihedral: return "SD" + p(0);
      case Family::modular_p: return "M(" + p(0) + "^" + p(1) + ")";
      case Family::alternating: return "A" + p(0);
      case Family::symmetric: return "S" + p(0);
      case Family::psl2: return "PSL(2," + p(0) + ")";
      case Family::pgl2: return "PGL(2," + p(0) + ")";
      case Family::pgammal2: return "PGammaL(2," + p(0) + ")";
      case Family::lf: return "LF(" + p(0) + ")";
      case Family::mq: return "M_" + p(0);
      case Family::agl1: return "AGL(1," + p(0) + ")";
      case Family::agammal1: return "AGammaL(1," + p(0) + ")";
      case Family::asl1: return "ASL(1," + p(0) + ")";
      case Family::agl32: return "AGL(3,2)";
      case Family::catalog_entry: return "catalog(" + p(0) + "," + p(1) + ")";
    }
    return "?";
  }
};

// ----------------------------------------------------------- projective line

/// x -> (a x^s + b) / (c x^s + d) on the projective line, s = Frobenius^k.
struct FractionalMap {
  FiniteField::Element a = 1, b = 0, c = 0, d = 1;
  std::uint32_t frobenius_power = 0;

  ProjectivePoint apply(const FiniteField& f, ProjectivePoint x) const {
    if (x.infinite) {
      if (c == 0) return {true, 0};
      return {false, f.div(a, c)};
    }
    const auto xs = f.frobenius(x.value, frobenius_power);
    const auto den = f.add(f.mul(c, xs), d);
    if (den == 0) return {true, 0};
    return {false, f.div(f.add(f.mul(a, xs), b), den)};
  }

  Permutation as_permutation(const FiniteField& f) const {
    const unsigned n = f.order() + 1;
    std::vector<unsigned> images(n);
    for (unsigned i = 1; i <= n; ++i) images[i - 1] = apply(f, ProjectivePoint::from_index(f, i)).index(f);
    return Permutation::from_images(images);
  }
};

/// x -> a x^s + b on the field points {1..q}, s = Frobenius^k.
inline Permutation affine_permutation(const FiniteField& f, FiniteField::Element a, FiniteField::Element b,
                                      std::uint32_t frobenius_power = 0) {
  std::vector<unsigned> images(f.order());
  for (FiniteField::Element x = 0; x < f.order(); ++x)
    images[x] = f.add(f.mul(a, f.frobenius(x, frobenius_power)), b) + 1;
  return Permutation::from_images(images);
}

namespace detail {

inline std::vector<Permutation> projective_translations(const FiniteField& f) {
  std::vector<Permutation> out;
  FiniteField::Element basis = 1;
  for (std::uint32_t i = 0; i < f.degree(); ++i, basis *= f.characteristic())
    out.push_back(FractionalMap{1, basis, 0, 1, 0}.as_permutation(f));
  return out;
}

inline std::vector<Permutation> psl2_generators(const FiniteField& f) {
  auto gens = projective_translations(f);
  const auto z = f.primitive_element();
  gens.push_back(FractionalMap{f.mul(z, z), 0, 0, 1, 0}.as_permutation(f));
  gens.push_back(FractionalMap{0, f.neg(1), 1, 0, 0}.as_permutation(f));
  return gens;
}

inline std::vector<Permutation> affine_translations(const FiniteField& f) {
  std::vector<Permutation> out;
  FiniteField::Element basis = 1;
  for (std::uint32_t i = 0; i < f.degree(); ++i, basis *= f.characteristic())
    out.push_back(affine_permutation(f, 1, basis));
  return out;
}

}  // namespace detail

/// PSL(2,q) on the q+1 points of the projective line.
inline PermGroup psl2(std::uint64_t q) {
  auto f = field_of_order(q);
  return PermGroup(f.order() + 1, detail::psl2_generators(f));
}

/// PGL(2,q): all fractional linear maps.
inline PermGroup pgl2(std::uint64_t q) {
  auto f = field_of_order(q);
  auto gens = detail::psl2_generators(f);
  gens.push_back(FractionalMap{f.primitive_element(), 0, 0, 1, 0}.as_permutation(f));
  return PermGroup(f.order() + 1, std::move(gens));
}

/// LF(q), realized as the full fractional linear group PGL(2,q).
inline PermGroup lf(std::uint64_t q) { return pgl2(q); }

/// PGammaL(2,q): fractional semilinear maps.
inline PermGroup pgammal2(std::uint64_t q) {
  auto f = field_of_order(q);
  auto gens = detail::psl2_generators(f);
  gens.push_back(FractionalMap{f.primitive_element(), 0, 0, 1, 0}.as_permutation(f));
  if (f.degree() > 1) gens.push_back(FractionalMap{1, 0, 0, 1, 1}.as_permutation(f));
  return PermGroup(f.order() + 1, std::move(gens));
}

/// M_q for q = p^(2k), p odd: linear maps of square determinant together
/// with sigma-semilinear maps of non-square determinant, sigma the involutory
/// field automorphism x -> x^(p^k).
inline PermGroup mq(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp || pp->first == 2 || pp->second % 2) throw DomainError("mq requires q = p^(2k) with p odd");
  auto f = field_of_order(q);
  auto gens = detail::psl2_generators(f);
  gens.push_back(FractionalMap{f.primitive_element(), 0, 0, 1, pp->second / 2}.as_permutation(f));
  return PermGroup(f.order() + 1, std::move(gens));
}

/// AGL(1,q) on the q field points.
inline PermGroup agl1(std::uint64_t q) {
  auto f = field_of_order(q);
  auto gens = detail::affine_translations(f);
  gens.push_back(affine_permutation(f, f.primitive_element(), 0));
  return PermGroup(f.order(), std::move(gens));
}

inline PermGroup agammal1(std::uint64_t q) {
  auto f = field_of_order(q);
  auto gens = detail::affine_translations(f);
  gens.push_back(affine_permutation(f, f.primitive_element(), 0));
  if (f.degree() > 1) gens.push_back(affine_permutation(f, 1, 0, 1));
  return PermGroup(f.order(), std::move(gens));
}

/// ASL(1,q): the even permutations of AGL(1,q). For odd q these are the maps
/// x -> a x + b with a a nonzero square; for even q >= 4 all of AGL(1,q).
inline PermGroup asl1(std::uint64_t q) {
  auto f = field_of_order(q);
  if (q == 2) return PermGroup(2, {});
  auto gens = detail::affine_translations(f);
  const auto z = f.primitive_element();
  gens.push_back(affine_permutation(f, f.characteristic() == 2 ? z : f.mul(z, z), 0));
  return PermGroup(f.order(), std::move(gens));
}

/// AGL(3,2) on the 8 vectors of GF(2)^3; vector v (bit i = coordinate i) is
/// point v + 1.
inline PermGroup agl32() {
  std::vector<Permutation> gens;
  auto from_map = [](auto fn) {
    std::vector<unsigned> images(8);
    for (unsigned v = 0; v < 8; ++v) images[v] = fn(v) + 1;
    return Permutation::from_images(images);
  };
  for (unsigned i = 0; i < 3; ++i) gens.push_back(from_map([i](unsigned v) { return v ^ (1u << i); }));
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      if (i != j) gens.push_back(from_map([i, j](unsigned v) { return v ^ (((v >> j) & 1u) << i); }));
  return PermGroup(8, std::move(gens));
}

/// The translation subgroup of AGL(3,2).
inline PermGroup agl32_translations() {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i) {
    std::vector<unsigned> images(8);
    for (unsigned v = 0; v < 8; ++v) images[v] = (v ^ (1u << i)) + 1;
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(8, std::move(gens));
}

// ------------------------------------------------------------ abstract families

/// Table for a family given by a metacyclic presentation, or nullopt.
inline std::optional<CayleyTable> presentation_table(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::dihedral: return metacyclic_table(p[0] / 2, 2, p[0] / 2 - 1, 0);
    case Family::generalized_quaternion: return metacyclic_table(p[0] / 2, 2, p[0] / 2 - 1, p[0] / 4);
    case Family::semidihedral: return metacyclic_table(p[0] / 2, 2, p[0] / 4 - 1, 0);
    case Family::modular_p: {
      const auto order = detail::ipow(p[0], static_cast<unsigned>(p[1]));
      return metacyclic_table(order / p[0], p[0], 1 + order / (p[0] * p[0]), 0);
    }
    default: return std::nullopt;
  }
}

inline PermGroup cyclic_group(std::uint64_t n) {
  if (n == 1) return PermGroup(1, {});
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = i + 1;
  return PermGroup(static_cast<unsigned>(n), {Permutation::from_cycles(static_cast<unsigned>(n), {cycle})});
}

/// Direct product of cyclic groups acting on disjoint blocks of points.
inline PermGroup abelian_group(const std::vector<std::uint64_t>& factors) {
  unsigned degree = 0;
  for (auto f : factors) degree += static_cast<unsigned>(f);
  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (auto f : factors) {
    if (f > 1) {
      std::vector<unsigned> cycle(f);
      for (unsigned i = 0; i < f; ++i) cycle[i] = offset + i + 1;
      gens.push_back(Permutation::from_cycles(degree, {cycle}));
    }
    offset += static_cast<unsigned>(f);
  }
  return PermGroup(std::max(1u, degree), std::move(gens));
}

// ------------------------------------------------------------------- catalog

struct CatalogEntry {
  std::uint64_t order = 0;
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generators;

  PermGroup group() const { return PermGroup::from_cycles(degree, generators); }
};

/// Parses the catalog format: one entry per line, `order|name|degree|gen;gen;...`,
/// '#' starts a comment line.
inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto bar = line.find('|', start);
      fields.push_back(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() != 4) throw ParseError("catalog line " + std::to_string(line_no) + ": expected 4 fields");
    CatalogEntry e;
    try {
      e.order = std::stoull(fields[0]);
      e.degree = static_cast<unsigned>(std::stoul(fields[2]));
    } catch (const std::exception&) {
      throw ParseError("catalog line " + std::to_string(line_no) + ": bad number");
    }
    e.name = fields[1];
    if (e.name.empty()) throw ParseError("catalog line " + std::to_string(line_no) + ": empty name");
    std::size_t gs = 0;
    const std::string& gens = fields[3];
    while (gs < gens.size()) {
      auto semi = gens.find(';', gs);
      auto g = gens.substr(gs, semi == std::string::npos ? std::string::npos : semi - gs);
      if (!g.empty()) {
        Permutation::parse(g, e.degree);  // validate
        e.generators.push_back(g);
      }
      if (semi == std::string::npos) break;
      gs = semi + 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string format_catalog_entry(const CatalogEntry& e) {
  std::string s = std::to_string(e.order) + "|" + e.name + "|" + std::to_string(e.degree) + "|";
  for (std::size_t i = 0; i < e.generators.size(); ++i) s += (i ? ";" : "") + e.generators[i];
  return s;
}

/// The embedded catalog of all groups of order 1..31.
inline const std::vector<CatalogEntry>& full_catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(detail::kCatalogText);
  return entries;
}

inline constexpr std::uint64_t kCatalogMaxOrder = 31;

/// Catalog entries of one order, in file order.
inline std::vector<CatalogEntry> catalog(std::uint64_t order) {
  if (order < 1 || order > kCatalogMaxOrder)
    throw DomainError("catalog covers orders 1.." + std::to_string(kCatalogMaxOrder));
  std::vector<CatalogEntry> out;
  for (const auto& e : full_catalog())
    if (e.order == order) out.push_back(e);
  return out;
}

inline std::optional<CatalogEntry> catalog_lookup(std::uint64_t order, std::string_view name) {
  for (const auto& e : catalog(order))
    if (e.name == name) return e;
  return std::nullopt;
}

// --------------------------------------------------------------------- build

/// Faithful permutation representation of a family instance. Metacyclic
/// presentations are realized through their left-regular action.
inline PermGroup build(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::cyclic: return cyclic_group(p[0]);
    case Family::abelian: return abelian_group(p);
    case Family::dihedral:
    case Family::generalized_quaternion:
    case Family::semidihedral:
    case Family::modular_p: return left_regular_embedding(*presentation_table(spec));
    case Family::alternating: return alternating_group(static_cast<unsigned>(p[0]));
    case Family::symmetric: return symmetric_group(static_cast<unsigned>(p[0]));
    case Family::psl2: return psl2(p[0]);
    case Family::pgl2: return pgl2(p[0]);
    case Family::lf: return lf(p[0]);
    case Family::pgammal2: return pgammal2(p[0]);
    case Family::mq: return mq(p[0]);
    case Family::agl1: return agl1(p[0]);
    case Family::agammal1: return agammal1(p[0]);
    case Family::asl1: return asl1(p[0]);
    case Family::agl32: return agl32();
    case Family::catalog_entry: {
      auto entries = catalog(p[0]);
      if (p[1] >= entries.size()) throw DomainError("catalog position out of range");
      return entries[p[1]].group();
    }
  }
  throw DomainError("unknown family");
}

}  // namespace f2
