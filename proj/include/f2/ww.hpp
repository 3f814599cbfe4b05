#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2/census.hpp"
#include "f2/closed_forms.hpp"
#include "f2/constructions.hpp"
#include "f2/error.hpp"
#include "f2/group.hpp"

namespace f2 {

/// Enumeration limit for the smaller factor in A_n = G H checks. Row 3
/// enumerates PGammaL(2,32), of order 163680.
inline constexpr std::uint64_t kExactPairCap = 200000;

/// One row of the table of exact factorizations A_n = G H with H^Gamma the
/// full symmetric group on Gamma, or the exceptional Z15 * AGL(3,2).
struct WWRow {
  std::string row_id;  // "1".."8" or "item3"
  unsigned n = 0;      // |Omega|
  unsigned k = 0;      // |Delta|
  std::optional<std::uint64_t> q;
  FamilySpec g_spec;
  std::vector<std::string> g_generators;  // overrides g_spec when nonempty
  std::optional<FamilySpec> h_spec;       // overrides h_generators when set
  std::vector<std::string> h_generators;
  std::vector<std::string> notes;

  unsigned gamma_size() const noexcept { return n - k; }

  std::string g_name() const { return g_generators.empty() ? g_spec.name() : "Z15"; }

  PermGroup g_group() const {
    if (!g_generators.empty()) return PermGroup::from_cycles(n, g_generators);
    return build(g_spec);
  }

  PermGroup h_group() const {
    if (h_spec) return build(*h_spec);
    return PermGroup::from_cycles(n, h_generators);
  }
};

namespace detail {

inline std::string cycle_1_to(unsigned last) {
  std::string s = "(";
  for (unsigned i = 1; i <= last; ++i) s += (i > 1 ? "," : "") + std::to_string(i);
  return s + ")";
}

inline std::string range_cycle(unsigned first, unsigned last) {
  std::string s = "(";
  for (unsigned i = first; i <= last; ++i) s += (i > first ? "," : "") + std::to_string(i);
  return s + ")";
}

}  // namespace detail

/// The fixed rows 1-6, rows 7 and 8 for each q in q_list, and item3.
inline std::vector<WWRow> ww_rows(const std::vector<std::uint64_t>& q_list) {
  for (auto q : q_list) {
    if (q % 4 != 3) throw DomainError("rows 7 and 8 require q = 3 mod 4 (got " + std::to_string(q) + ")");
    if (!prime_power(q)) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  }
  const std::string h9a = "(1,2,3,4,5)(6,7,8)", h9b = "(1,2)(6,7)";
  const std::string h33a = detail::cycle_1_to(29) + "(30,31,32)", h33b = "(1,2)(30,31)";
  std::vector<WWRow> rows;
  rows.push_back({"1", 9, 4, std::nullopt, {Family::psl2, {8}}, {}, std::nullopt, {h9a, h9b}, {}});
  rows.push_back({"2", 9, 4, std::nullopt, {Family::pgammal2, {8}}, {}, std::nullopt, {"(1,2,3,4,5)", h9b}, {}});
  rows.push_back({"3", 33, 4, std::nullopt, {Family::pgammal2, {32}}, {}, std::nullopt, {h33a, h33b}, {}});
  rows.push_back({"4", 8, 3, std::nullopt, {Family::agl1, {8}}, {}, std::nullopt, {h9a, h9b},
                  {"H generators printed identically to row 1"}});
  rows.push_back({"5", 8, 3, std::nullopt, {Family::agammal1, {8}}, {}, std::nullopt, {"(1,2,3,4,5)", h9b}, {}});
  rows.push_back({"6", 32, 3, std::nullopt, {Family::agammal1, {32}}, {}, std::nullopt, {h33a, h33b}, {}});
  for (auto q : q_list) {
    const auto qi = static_cast<unsigned>(q);
    const std::string a = detail::cycle_1_to(qi - 2);
    const std::string b = "(1,2)(" + std::to_string(qi - 1) + "," + std::to_string(qi) + ")";
    rows.push_back({"7", qi + 1, 3, q, {Family::psl2, {q}}, {}, std::nullopt, {a, b}, {}});
    rows.push_back({"8", qi, 2, q, {Family::asl1, {q}}, {}, std::nullopt, {a, b}, {}});
  }
  rows.push_back({"item3", 8, 3, std::nullopt, {Family::cyclic, {15}}, {"(1,2,3)(4,5,6,7,8)"},
                  FamilySpec{Family::agl32, {}}, {}, {}});
  return rows;
}

inline WWRow ww_row(const std::string& id, std::optional<std::uint64_t> q = std::nullopt) {
  if (id == "7" || id == "8") {
    if (!q) throw DomainError("row " + id + " needs --q");
    for (auto& r : ww_rows({*q}))
      if (r.row_id == id) return r;
  }
  if (q) throw DomainError("row " + id + " takes no q");
  for (auto& r : ww_rows({}))
    if (r.row_id == id) return r;
  throw DomainError("unknown row '" + id + "'");
}

struct WWReport {
  std::string row_id;
  std::optional<std::uint64_t> q;
  unsigned n = 0;
  unsigned k = 0;
  std::string g_name;
  Order order_g = 0;
  Order order_h = 0;
  bool product_ok = false;
  bool parity_ok = false;
  bool intersection_trivial = false;
  bool exact = false;
  unsigned transitivity = 0;        // largest k' <= k with G k'-transitive
  bool sharply_k_claim = false;     // G sharply k-transitive for the row's k
  std::vector<std::string> anomalies;
};

inline WWReport verify_row(const WWRow& row) {
  WWReport r;
  r.row_id = row.row_id;
  r.q = row.q;
  r.n = row.n;
  r.k = row.k;
  r.g_name = row.g_name();
  const auto g = row.g_group();
  const auto h = row.h_group();
  auto pair = verify_exact_pair(g, h, row.n, kExactPairCap);
  r.order_g = pair.order_g;
  r.order_h = pair.order_h;
  r.product_ok = pair.product_ok;
  r.parity_ok = pair.parity_ok;
  r.intersection_trivial = pair.intersection_trivial;
  r.exact = pair.exact();
  auto action = g.action_report(row.k);
  r.transitivity = action.transitivity_degree();
  r.sharply_k_claim = action.sharply_k.at(row.k);
  r.anomalies = row.notes;
  if (!r.sharply_k_claim && row.row_id != "item3")
    r.anomalies.push_back("G is not sharply " + std::to_string(row.k) + "-transitive (transitivity degree " +
                          std::to_string(r.transitivity) + ")");
  return r;
}

// ------------------------------------------------- sharply 3-transitive witnesses

struct A2mCandidate {
  std::string name;
  Order order = 0;
  bool sharply_3 = false;
  bool in_alternating = false;
  bool product_ok = false;
  bool intersection_trivial = false;
  bool exact = false;
};

struct A2mReport {
  std::uint64_t m = 0;
  unsigned degree = 0;
  std::uint64_t q = 0;  // 2m - 1
  unsigned r = 0;       // 2m - 1 = prime^r
  Order order_h = 0;    // |A_{2m-3}|
  std::vector<A2mCandidate> candidates;
  PiecewiseResult formula;

  std::size_t exact_count() const {
    std::size_t c = 0;
    for (const auto& x : candidates) c += x.exact;
    return c;
  }
};

/// Sharply 3-transitive candidates G on 2m points against H = A_{2m-3} on
/// points 1..2m-3: LF(q) read as PGL(2,q) and as PSL(2,q), and M_q when q is
/// an even power of an odd prime.
inline A2mReport prop_a2m_witness(std::uint64_t m) {
  if (m % 2 == 0 || m < 3) throw DomainError("prop_a2m_witness requires m odd, m >= 3");
  if (2 * m > 14) throw DomainError("prop_a2m_witness verifies only 2m <= 14");
  A2mReport rep;
  rep.m = m;
  rep.degree = static_cast<unsigned>(2 * m);
  rep.q = 2 * m - 1;
  auto pp = nt::as_prime_power(rep.q);
  if (!pp) throw DomainError("2m - 1 = " + std::to_string(rep.q) + " is not a prime power");
  rep.r = pp->second;
  rep.formula = f2_alternating_2m(m);
  const auto h = alternating_group_on_prefix(rep.degree - 3, rep.degree);
  rep.order_h = h.order();
  std::vector<std::pair<std::string, PermGroup>> groups = {
      {"LF(" + std::to_string(rep.q) + ")=PGL(2," + std::to_string(rep.q) + ")", pgl2(rep.q)},
      {"PSL(2," + std::to_string(rep.q) + ")", psl2(rep.q)}};
  if (pp->first != 2 && pp->second % 2 == 0) groups.push_back({"M_" + std::to_string(rep.q), mq(rep.q)});
  for (auto& [name, g] : groups) {
    A2mCandidate c;
    c.name = name;
    c.order = g.order();
    c.sharply_3 = g.action_report(3).sharply_k.at(3);
    bool all_even = true;
    g.for_each_element([&](const Permutation& x) { all_even = all_even && x.is_even(); });
    c.in_alternating = all_even;
    auto pair = verify_exact_pair(g, h, rep.degree, kExactPairCap);
    c.product_ok = pair.product_ok;
    c.intersection_trivial = pair.intersection_trivial;
    c.exact = c.in_alternating && pair.exact();
    rep.candidates.push_back(std::move(c));
  }
  return rep;
}

}  // namespace f2
