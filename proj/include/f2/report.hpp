#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "f2/cache.hpp"
#include "f2/census.hpp"
#include "f2/closed_forms.hpp"
#include "f2/constructions.hpp"
#include "f2/ww.hpp"

namespace f2 {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, jsonl };

inline std::optional<Format> format_from_string(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "jsonl") return Format::jsonl;
  return std::nullopt;
}

struct RunConfig {
  std::uint64_t cap = kDefaultCap;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir = default_cache_dir();
  bool use_cache = true;
  Format format = Format::text;
  bool timing = false;

  void validate() const {
    if (cap < 60) throw DomainError("cap must be at least 60");
    if (jobs < 1) throw DomainError("jobs must be at least 1");
  }

  std::unique_ptr<LatticeCache> make_cache() const {
    if (!use_cache || !cache_dir) return nullptr;
    return std::make_unique<LatticeCache>(*cache_dir);
  }
};

/// Applies f to every item on a pool of `jobs` threads; results keep the
/// input order. The first exception (by item index) is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F f) {
  using R = decltype(f(items.front()));
  std::vector<std::optional<R>> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        out[i].emplace(f(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> result;
  result.reserve(items.size());
  for (auto& o : out) result.push_back(std::move(*o));
  return result;
}

// --------------------------------------------------------------------- brute

struct NamedGroup {
  std::string name;
  PermGroup group;
};

struct GroupResult {
  std::string group;
  Census census;
  double elapsed_ms = 0;
};

inline GroupResult run_census(const NamedGroup& g, const RunConfig& cfg, const LatticeCache* cache,
                              unsigned lattice_jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  if (g.group.order() > cfg.cap)
    throw CapExceeded(g.name + " (order " + to_string(g.group.order()) + ")", cfg.cap);
  auto table = std::make_shared<const CayleyTable>(CayleyTable::from_group(g.group, cfg.cap));
  auto lat = cached_lattice(std::move(table), cache, lattice_jobs);
  lat.assert_consistent();
  GroupResult r{g.name, census(lat), 0};
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline Json census_json(const GroupResult& r, bool timing = false) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.census.group_order;
  j["f2"] = r.census.f2();
  Json classes = Json::array();
  for (const auto& c : r.census.classes)
    classes.push_back({{"h_name", c.h_name}, {"k_name", c.k_name}, {"multiplicity", c.multiplicity}});
  j["classes"] = classes;
  j["raw_pairs"] = r.census.raw_pairs;
  if (timing) j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
  return j;
}

inline std::string census_text(const GroupResult& r) {
  std::ostringstream out;
  out << "group " << r.group << " (order " << r.census.group_order << ", " << r.census.lattice_size
      << " subgroups)\n";
  out << "f2 = " << r.census.f2() << "\n";
  out << "raw exact pairs = " << r.census.raw_pairs << "\n";
  for (const auto& c : r.census.classes)
    out << "  " << c.h_name << " * " << c.k_name << "  (" << c.multiplicity << " pair"
        << (c.multiplicity == 1 ? "" : "s") << ")\n";
  return out.str();
}

/// Family spec from command-line parameters: dihedral n is D_{2n},
/// quaternion and semidihedral n have order 2^n, modular p n has order p^n.
inline FamilySpec cli_family_spec(Family f, const std::vector<std::uint64_t>& p) {
  auto one = [&] {
    if (p.size() != 1) throw DomainError(std::string(to_string(f)) + " takes one parameter");
    return p[0];
  };
  switch (f) {
    case Family::dihedral: return {f, {2 * one()}};
    case Family::generalized_quaternion:
    case Family::semidihedral: {
      auto n = one();
      if (n > 16) throw DomainError("exponent too large");
      return {f, {std::uint64_t{1} << n}};
    }
    default: return {f, p};
  }
}

// ------------------------------------------------------------------- formula

struct FormulaOutput {
  std::string family;
  std::vector<std::uint64_t> params;
  Json value;  // integer, string (big or symbolic) or null
  std::string case_label;
  Json extra = Json::object();
};

inline FormulaOutput cmd_formula(const std::string& family, const std::vector<std::uint64_t>& p) {
  FormulaOutput out{family, p, nullptr, "", Json::object()};
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw DomainError(family + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto set = [&](const PiecewiseResult& r) {
    out.value = r.value;
    out.case_label = r.case_label;
  };
  if (family == "cyclic") {
    need(1);
    set(f2_cyclic(p[0]));
  } else if (family == "abelian") {
    if (p.empty()) throw DomainError("abelian takes the cyclic factor orders");
    auto r = f2_abelian(AbelianType::from_factors(p));
    out.value = r.value;
    out.case_label = "(2^(omega(n)-1) - 1) * prod_p (2^(t(p)-1) - 1)";
    if (r.cyclic_value) {
      out.extra["cyclic_theorem_value"] = *r.cyclic_value;
      out.extra["discrepancy"] = r.discrepancy;
    }
  } else if (family == "dihedral") {
    need(1);
    set(f2_dihedral(p[0]));
  } else if (family == "quaternion" || family == "generalized_quaternion") {
    need(1);
    set(f2_quaternion(static_cast<unsigned>(p[0])));
  } else if (family == "semidihedral") {
    need(1);
    set(f2_semidihedral(static_cast<unsigned>(p[0])));
  } else if (family == "modular" || family == "modular_p") {
    need(2);
    set(f2_modular(p[0], static_cast<unsigned>(p[1])));
  } else if (family == "psl2") {
    need(2);
    set(f2_psl2(p[0], static_cast<unsigned>(p[1])));
  } else if (family == "a2m" || family == "alternating_2m") {
    need(1);
    set(f2_alternating_2m(p[0]));
  } else if (family == "omega") {
    need(1);
    out.value = omega(p[0]);
    out.case_label = "distinct prime divisors";
  } else if (family == "zsigmondy") {
    need(2);
    auto l = zsigmondy_prime(p[0], static_cast<unsigned>(p[1]));
    out.value = l ? Json(*l) : Json(nullptr);
    out.case_label = l ? "least primitive prime divisor of p^(2n)-1" : "no primitive prime divisor";
  } else if (family == "a2n_lower") {
    need(1);
    out.value = to_string(a2n_lower_bound(static_cast<unsigned>(p[0])));
    out.case_label = "ceil(2^((2/27) n^2 (n-6)))";
  } else if (family == "gnu_lower") {
    need(1);
    out.value = gnu_lower_bound(static_cast<unsigned>(p[0]));
    out.case_label = "gnu(2^n) - 1";
  } else if (family == "a2n_upper") {
    need(1);
    auto e = a2n_upper_exponent(static_cast<unsigned>(p[0]));
    out.value = e.text;
    out.case_label = "symbolic exponent, O-constant unspecified";
    out.extra["main_term"] = e.main_term;
    out.extra["residual_order"] = e.residual_order;
  } else if (family == "mersenne") {
    need(1);
    out.value = mersenne_k3_predicate(static_cast<unsigned>(p[0]));
    out.case_label = "2^n - 1 prime";
  } else {
    throw DomainError("unknown formula family '" + family + "'");
  }
  return out;
}

inline Json formula_json(const FormulaOutput& f) {
  Json j{{"family", f.family}, {"params", f.params}, {"value", f.value}, {"case", f.case_label}};
  for (auto& [k, v] : f.extra.items()) j[k] = v;
  return j;
}

inline std::string formula_text(const FormulaOutput& f) {
  std::ostringstream out;
  out << (f.value.is_string() ? f.value.get<std::string>() : f.value.dump()) << "\t" << f.case_label;
  for (auto& [k, v] : f.extra.items()) out << "\t" << k << "=" << v.dump();
  return out.str() + "\n";
}

// --------------------------------------------------------------------- table

struct TableRow {
  std::uint64_t order = 0;
  std::uint64_t gnu = 0;
  std::uint64_t sum = 0;
  std::vector<std::pair<std::string, std::size_t>> groups;
  std::optional<PrintedTableRow> printed;
  std::string diff;
};

struct Discrepancy {
  std::uint64_t order;
  std::string field;
  std::uint64_t oracle;
  std::uint64_t printed;
};

inline std::vector<TableRow> cmd_table(std::uint64_t max_order, const RunConfig& cfg) {
  cfg.validate();
  if (max_order < 1 || max_order > kCatalogMaxOrder)
    throw DomainError("table covers orders 1.." + std::to_string(kCatalogMaxOrder));
  std::vector<NamedGroup> work;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    auto entries = catalog(n);
    if (entries.size() != gnu_reference(n).value_or(0))
      throw Error("catalog incomplete for order " + std::to_string(n));
    for (const auto& e : entries) work.push_back({e.name, e.group()});
  }
  auto cache = cfg.make_cache();
  auto results = parallel_map(work, cfg.jobs, [&](const NamedGroup& g) { return run_census(g, cfg, cache.get()); });
  std::vector<TableRow> rows;
  std::size_t i = 0;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    TableRow row;
    row.order = n;
    row.gnu = catalog(n).size();
    for (std::size_t c = 0; c < row.gnu; ++c, ++i) {
      row.groups.emplace_back(results[i].group, results[i].census.f2());
      row.sum += results[i].census.f2();
    }
    row.printed = printed_table_row(n);
    if (!row.printed) {
      row.diff = "no-printed-row";
    } else {
      std::string d;
      if (row.printed->gnu != row.gnu) d = "gnu";
      if (row.printed->sum != row.sum) d += d.empty() ? "sum" : "+sum";
      row.diff = d.empty() ? "match" : d;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<Discrepancy> table_discrepancies(const std::vector<TableRow>& rows) {
  std::vector<Discrepancy> out;
  for (const auto& r : rows) {
    if (!r.printed) continue;
    if (r.printed->gnu != r.gnu) out.push_back({r.order, "gnu", r.gnu, r.printed->gnu});
    if (r.printed->sum != r.sum) out.push_back({r.order, "sum_f2", r.sum, r.printed->sum});
  }
  return out;
}

inline std::string render_table(const std::vector<TableRow>& rows, Format fmt) {
  std::ostringstream out;
  const auto disc = table_discrepancies(rows);
  auto opt = [](const std::optional<PrintedTableRow>& p, bool sum) {
    return p ? std::to_string(sum ? p->sum : p->gnu) : std::string();
  };
  switch (fmt) {
    case Format::csv:
      out << "order,gnu,sum_f2,printed_gnu,printed_sum,diff\n";
      for (const auto& r : rows)
        out << r.order << "," << r.gnu << "," << r.sum << "," << opt(r.printed, false) << "," << opt(r.printed, true)
            << "," << r.diff << "\n";
      break;
    case Format::jsonl:
      for (const auto& r : rows) {
        Json groups = Json::array();
        for (const auto& [name, v] : r.groups) groups.push_back({{"name", name}, {"f2", v}});
        Json j{{"order", r.order}, {"gnu", r.gnu}, {"sum_f2", r.sum}};
        j["printed_gnu"] = r.printed ? Json(r.printed->gnu) : Json(nullptr);
        j["printed_sum"] = r.printed ? Json(r.printed->sum) : Json(nullptr);
        j["diff"] = r.diff;
        j["groups"] = groups;
        out << j.dump() << "\n";
      }
      for (const auto& d : disc)
        out << Json{{"discrepancy",
                     {{"order", d.order}, {"field", d.field}, {"oracle", d.oracle}, {"printed", d.printed},
                      {"source", kPrintedTableSource}}}}
                   .dump()
            << "\n";
      break;
    case Format::text:
      out << std::left << std::setw(7) << "order" << std::setw(5) << "gnu" << std::setw(8) << "sum_f2"
          << std::setw(11) << "printed_gnu" << std::setw(11) << "printed_sum" << "diff\n";
      for (const auto& r : rows)
        out << std::setw(7) << r.order << std::setw(5) << r.gnu << std::setw(8) << r.sum << std::setw(11)
            << opt(r.printed, false) << std::setw(11) << opt(r.printed, true) << r.diff << "\n";
      out << "\nDISCREPANCIES (" << kPrintedTableSource << ")\n";
      if (disc.empty()) out << "  none\n";
      for (const auto& d : disc)
        out << "  order " << d.order << ": " << d.field << " oracle " << d.oracle << ", printed " << d.printed << "\n";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------- conjecture

struct ConjectureRow {
  std::uint64_t order;
  std::uint64_t sum;
  bool is_prime;
  bool is_power_of_two;
  std::string verdict;  // holds, fails, n/a (sum 0)
};

inline std::vector<ConjectureRow> conjecture_rows(const std::vector<TableRow>& table) {
  std::vector<ConjectureRow> out;
  for (const auto& r : table) {
    ConjectureRow c{r.order, r.sum, nt::is_prime(r.sum), is_power_of_two(r.sum), ""};
    c.verdict = r.sum == 0 ? "n/a" : (c.is_prime || c.is_power_of_two ? "holds" : "fails");
    out.push_back(c);
  }
  return out;
}

inline std::optional<std::uint64_t> first_failing_order(const std::vector<ConjectureRow>& rows) {
  for (const auto& r : rows)
    if (r.verdict == "fails") return r.order;
  return std::nullopt;
}

inline std::string render_conjecture(const std::vector<ConjectureRow>& rows, Format fmt) {
  std::ostringstream out;
  const auto first = first_failing_order(rows);
  switch (fmt) {
    case Format::csv:
      out << "order,sum_f2,is_prime,is_power_of_two,verdict\n";
      for (const auto& r : rows)
        out << r.order << "," << r.sum << "," << r.is_prime << "," << r.is_power_of_two << "," << r.verdict << "\n";
      break;
    case Format::jsonl:
      for (const auto& r : rows)
        out << Json{{"order", r.order},
                    {"sum_f2", r.sum},
                    {"is_prime", r.is_prime},
                    {"is_power_of_two", r.is_power_of_two},
                    {"verdict", r.verdict}}
                   .dump()
            << "\n";
      out << Json{{"summary", {{"first_failing_order", first ? Json(*first) : Json(nullptr)}}}}.dump() << "\n";
      break;
    case Format::text:
      out << std::left << std::setw(7) << "order" << std::setw(8) << "sum_f2" << std::setw(7) << "prime"
          << std::setw(7) << "pow2" << "verdict\n";
      for (const auto& r : rows)
        out << std::setw(7) << r.order << std::setw(8) << r.sum << std::setw(7) << (r.is_prime ? "yes" : "no")
            << std::setw(7) << (r.is_power_of_two ? "yes" : "no") << r.verdict << "\n";
      out << "\nfirst failing order: " << (first ? std::to_string(*first) : std::string("none")) << "\n";
      break;
  }
  return out.str();
}

// ------------------------------------------------------------------ verify-ww

inline Json ww_json(const WWReport& r) {
  Json j;
  j["row_id"] = r.row_id;
  j["n"] = r.n;
  j["order_g"] = to_string(r.order_g);
  j["order_h"] = to_string(r.order_h);
  j["product_ok"] = r.product_ok;
  j["parity_ok"] = r.parity_ok;
  j["intersection_trivial"] = r.intersection_trivial;
  j["exact"] = r.exact;
  j["q"] = r.q ? Json(*r.q) : Json(nullptr);
  j["k"] = r.k;
  j["g"] = r.g_name;
  j["transitivity"] = r.transitivity;
  j["sharply_k_claim"] = r.sharply_k_claim;
  j["anomalies"] = r.anomalies;
  return j;
}

inline std::string ww_text(const WWReport& r) {
  std::ostringstream out;
  out << "row " << r.row_id;
  if (r.q) out << " (q = " << *r.q << ")";
  out << ": A" << r.n << " = " << r.g_name << " * H  |G| = " << to_string(r.order_g) << ", |H| = " << to_string(r.order_h)
      << "\n  product " << (r.product_ok ? "ok" : "FAIL") << ", parity " << (r.parity_ok ? "ok" : "FAIL")
      << ", intersection " << (r.intersection_trivial ? "trivial" : "NONTRIVIAL") << " -> "
      << (r.exact ? "exact" : "NOT exact") << "\n";
  for (const auto& a : r.anomalies) out << "  note: " << a << "\n";
  return out.str();
}

/// A_6 = PSL(2,9): the oracle against the two printed values.
struct A6Adjudication {
  std::size_t oracle = 0;
  std::int64_t psl2_claim = 0;
  std::int64_t a2m_claim = 0;
  std::string supports;
};

inline A6Adjudication adjudicate_a6(const RunConfig& cfg) {
  A6Adjudication a;
  auto cache = cfg.make_cache();
  a.oracle = run_census({"A6", alternating_group(6)}, cfg, cache.get(), cfg.jobs).census.f2();
  a.psl2_claim = f2_psl2(3, 2).value;
  a.a2m_claim = f2_alternating_2m(3).value;
  const bool p = static_cast<std::int64_t>(a.oracle) == a.psl2_claim;
  const bool m = static_cast<std::int64_t>(a.oracle) == a.a2m_claim;
  a.supports = p && m ? "both" : p ? "psl2 (q = 9)" : m ? "alternating 2m (m = 3)" : "neither";
  return a;
}

inline Json a2m_json(const A2mReport& r, const std::optional<A6Adjudication>& adj) {
  Json j;
  j["m"] = r.m;
  j["degree"] = r.degree;
  j["q"] = r.q;
  j["r"] = r.r;
  j["order_h"] = to_string(r.order_h);
  j["formula"] = r.formula.value;
  j["formula_case"] = r.formula.case_label;
  Json cands = Json::array();
  for (const auto& c : r.candidates)
    cands.push_back({{"g", c.name},
                     {"order_g", to_string(c.order)},
                     {"sharply_3", c.sharply_3},
                     {"in_alternating", c.in_alternating},
                     {"product_ok", c.product_ok},
                     {"intersection_trivial", c.intersection_trivial},
                     {"exact", c.exact}});
  j["candidates"] = cands;
  j["exact_candidates"] = r.exact_count();
  if (adj)
    j["oracle"] = {{"f2", adj->oracle},
                   {"psl2_claim", adj->psl2_claim},
                   {"a2m_claim", adj->a2m_claim},
                   {"supports", adj->supports}};
  return j;
}

inline std::string a2m_text(const A2mReport& r, const std::optional<A6Adjudication>& adj) {
  std::ostringstream out;
  out << "A" << r.degree << " (m = " << r.m << "), 2m-1 = " << r.q << ", H = A" << (r.degree - 3) << " of order "
      << to_string(r.order_h) << "\n";
  out << "  formula value " << r.formula.value << " [" << r.formula.case_label << "]\n";
  for (const auto& c : r.candidates)
    out << "  " << c.name << ": order " << to_string(c.order) << ", sharply 3-transitive "
        << (c.sharply_3 ? "yes" : "no") << ", inside A" << r.degree << " " << (c.in_alternating ? "yes" : "no")
        << ", product " << (c.product_ok ? "ok" : "wrong") << ", intersection "
        << (c.intersection_trivial ? "trivial" : "nontrivial") << " -> " << (c.exact ? "exact" : "not exact") << "\n";
  out << "  exact candidates: " << r.exact_count() << "\n";
  if (adj)
    out << "  oracle f2(A6) = " << adj->oracle << "; psl2 value " << adj->psl2_claim << ", alternating value "
        << adj->a2m_claim << "; oracle supports: " << adj->supports << "\n";
  return out.str();
}

}  // namespace f2
