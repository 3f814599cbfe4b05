// f2: exact factorization counts by brute force and by closed forms.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "f2/f2.hpp"

namespace {

using namespace f2;

int run_formula(const std::string& family, const std::vector<std::uint64_t>& params, const RunConfig& cfg) {
  auto r = cmd_formula(family, params);
  if (cfg.format == Format::text)
    std::cout << formula_text(r);
  else
    std::cout << formula_json(r).dump() << "\n";
  return 0;
}

std::vector<NamedGroup> brute_targets(const std::string& family, const std::vector<std::uint64_t>& params,
                                      std::optional<std::uint64_t> catalog_order, const std::string& name) {
  std::vector<NamedGroup> out;
  if (catalog_order) {
    if (!family.empty()) throw DomainError("use either --family or --catalog");
    for (const auto& e : catalog(*catalog_order))
      if (name.empty() || e.name == name) out.push_back({e.name, e.group()});
    if (out.empty()) throw DomainError("no catalog group named '" + name + "' of order " + std::to_string(*catalog_order));
    return out;
  }
  if (family.empty()) throw DomainError("brute needs --family or --catalog");
  auto f = family_from_string(family);
  if (!f || *f == Family::catalog_entry) throw DomainError("unknown family '" + family + "'");
  auto spec = cli_family_spec(*f, params);
  out.push_back({spec.name(), build(spec)});
  return out;
}

int run_brute(const std::vector<NamedGroup>& targets, const RunConfig& cfg) {
  auto cache = cfg.make_cache();
  const unsigned lattice_jobs = targets.size() == 1 ? cfg.jobs : 1;
  auto results = parallel_map(targets, targets.size() == 1 ? 1 : cfg.jobs,
                              [&](const NamedGroup& g) { return run_census(g, cfg, cache.get(), lattice_jobs); });
  for (const auto& r : results) {
    if (cfg.format == Format::text)
      std::cout << census_text(r);
    else if (cfg.format == Format::csv)
      std::cout << r.group << "," << r.census.group_order << "," << r.census.f2() << "," << r.census.raw_pairs << "\n";
    else
      std::cout << census_json(r, cfg.timing).dump() << "\n";
  }
  return 0;
}

int run_verify_ww(const std::string& row, const std::vector<std::uint64_t>& qs, std::optional<std::uint64_t> a2m,
                  const RunConfig& cfg) {
  if (a2m) {
    auto rep = prop_a2m_witness(*a2m);
    std::optional<A6Adjudication> adj;
    if (*a2m == 3) adj = adjudicate_a6(cfg);
    if (cfg.format == Format::text)
      std::cout << a2m_text(rep, adj);
    else
      std::cout << a2m_json(rep, adj).dump() << "\n";
    return 0;
  }
  std::vector<WWRow> rows;
  if (row.empty() || row == "all") {
    rows = ww_rows(qs.empty() ? std::vector<std::uint64_t>{7, 11} : qs);
  } else if (row == "7" || row == "8") {
    if (qs.empty()) throw DomainError("row " + row + " needs --q");
    for (auto q : qs) rows.push_back(ww_row(row, q));
  } else {
    if (!qs.empty()) throw DomainError("row " + row + " takes no --q");
    rows.push_back(ww_row(row));
  }
  auto reports = parallel_map(rows, cfg.jobs, [](const WWRow& r) { return verify_row(r); });
  bool all_exact = true;
  for (const auto& r : reports) {
    all_exact = all_exact && r.exact;
    if (cfg.format == Format::text)
      std::cout << ww_text(r);
    else
      std::cout << ww_json(r).dump() << "\n";
  }
  return all_exact ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorization counts f2(G): brute force over subgroup lattices and closed forms"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--cap", cfg.cap, "enumeration cap (group order limit)")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  app.add_option("--format", format, "text, csv or jsonl")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "lattice cache directory (default $F2_CACHE_DIR or ~/.cache/f2)");
  app.add_flag("--no-cache", no_cache, "do not read or write the lattice cache");
  app.add_flag("--timing", cfg.timing, "add elapsed_ms to jsonl records");

  auto* formula = app.add_subcommand("formula", "closed-form value: formula <family> <params...>");
  std::string formula_family;
  std::vector<std::uint64_t> formula_params;
  formula->add_option("family", formula_family,
                      "cyclic, abelian, dihedral, quaternion, semidihedral, modular, psl2, a2m, omega, zsigmondy, "
                      "a2n_lower, gnu_lower, a2n_upper, mersenne")
      ->required();
  formula->add_option("params", formula_params, "integer parameters");

  auto* brute = app.add_subcommand("brute", "f2 by subgroup-lattice enumeration");
  std::string family;
  std::vector<std::uint64_t> params;
  std::optional<std::uint64_t> catalog_order;
  std::string catalog_name;
  brute->add_option("--family", family, "group family (dihedral n = D_2n; quaternion/semidihedral n = order 2^n)");
  brute->add_option("--param", params, "family parameter (repeatable)");
  brute->add_option("--catalog", catalog_order, "catalog order (1..31)");
  brute->add_option("--name", catalog_name, "catalog group name");

  auto* table = app.add_subcommand("table", "per-order sums of f2 over the catalog, with the printed values");
  std::uint64_t table_max = 31;
  table->add_option("--max-order", table_max)->capture_default_str();

  auto* conjecture = app.add_subcommand("conjecture", "is each per-order sum prime or a power of two?");
  std::uint64_t conj_max = 31;
  conjecture->add_option("--max-order", conj_max)->capture_default_str();

  auto* verify = app.add_subcommand("verify-ww", "verify the alternating-group factorization table");
  std::string row;
  std::vector<std::uint64_t> qs;
  std::optional<std::uint64_t> a2m;
  verify->add_option("--row", row, "1..8, item3 or all");
  verify->add_option("--q", qs, "q for rows 7 and 8 (q = 3 mod 4)");
  verify->add_option("--a2m", a2m, "sharply 3-transitive witnesses for A_2m, m odd");

  CLI11_PARSE(app, argc, argv);

  try {
    auto fmt = format_from_string(format);
    if (!fmt) throw DomainError("unknown format '" + format + "'");
    cfg.format = *fmt;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    cfg.use_cache = !no_cache;
    cfg.validate();

    if (*formula) return run_formula(formula_family, formula_params, cfg);
    if (*brute) return run_brute(brute_targets(family, params, catalog_order, catalog_name), cfg);
    if (*table) {
      std::cout << render_table(cmd_table(table_max, cfg), cfg.format);
      return 0;
    }
    if (*conjecture) {
      std::cout << render_conjecture(conjecture_rows(cmd_table(conj_max, cfg)), cfg.format);
      return 0;
    }
    if (*verify) return run_verify_ww(row, qs, a2m, cfg);
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failure: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "; raise --cap to enumerate larger groups\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
