#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>

#include "f2/report.hpp"

namespace {

f2::RunConfig config(unsigned jobs = 1) {
  f2::RunConfig cfg;
  cfg.use_cache = false;
  cfg.jobs = jobs;
  return cfg;
}

std::filesystem::path temp_dir(const std::string& tag) {
  auto p = std::filesystem::temp_directory_path() / ("f2-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  return p;
}

struct CliResult {
  int status;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string cmd = std::string(F2_CLI_PATH) + " --no-cache " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
  int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Table, CsvSmallOrders) {
  auto rows = f2::cmd_table(8, config());
  EXPECT_EQ(f2::render_table(rows, f2::Format::csv),
            "order,gnu,sum_f2,printed_gnu,printed_sum,diff\n"
            "1,1,0,,,no-printed-row\n"
            "2,1,0,1,0,match\n"
            "3,1,0,1,0,match\n"
            "4,2,1,2,1,match\n"
            "5,1,0,1,0,match\n"
            "6,2,2,2,2,match\n"
            "7,1,0,1,0,match\n"
            "8,5,4,5,4,match\n");
}

TEST(Table, ContestedRows) {
  auto rows = f2::cmd_table(31, config(4));
  std::map<std::uint64_t, std::string> diff;
  for (const auto& r : rows) diff[r.order] = r.diff;
  for (std::uint64_t n : {4, 6, 8, 9, 10, 12, 14, 15}) EXPECT_EQ(diff[n], "match") << n;
  EXPECT_EQ(diff[16], "sum");
  EXPECT_EQ(diff[18], "sum");
  EXPECT_EQ(diff[24], "gnu+sum");
  EXPECT_EQ(diff[25], "sum");
  EXPECT_EQ(diff[30], "sum");
  EXPECT_EQ(rows[23].sum, 48u);
  EXPECT_EQ(rows[15].sum, 24u);
  auto conj = f2::conjecture_rows(rows);
  EXPECT_EQ(f2::first_failing_order(conj), 16u);
  EXPECT_EQ(conj[3].verdict, "holds");
  EXPECT_EQ(conj[1].verdict, "n/a");
}

TEST(Table, CacheDoesNotChangeOutput) {
  auto dir = temp_dir("cache");
  auto cfg = config(2);
  cfg.use_cache = true;
  cfg.cache_dir = dir;
  auto cold = f2::render_table(f2::cmd_table(20, cfg), f2::Format::jsonl);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  auto warm = f2::render_table(f2::cmd_table(20, cfg), f2::Format::jsonl);
  auto none = f2::render_table(f2::cmd_table(20, config()), f2::Format::jsonl);
  EXPECT_EQ(cold, warm);
  EXPECT_EQ(cold, none);
  std::filesystem::remove_all(dir);
}

TEST(Cache, RejectsCorruptFile) {
  auto dir = temp_dir("corrupt");
  f2::LatticeCache cache(dir);
  auto table = std::make_shared<const f2::CayleyTable>(f2::CayleyTable::from_group(f2::alternating_group(4), 100));
  auto lat = f2::cached_lattice(table, &cache);
  ASSERT_TRUE(cache.load(table).has_value());
  EXPECT_EQ(cache.load(table)->size(), lat.size());
  {
    std::ofstream out(cache.path_for(*table));
    out << "f2-lattice-1\norder 12\ncount 3\nzz\n";
  }
  EXPECT_FALSE(cache.load(table).has_value());
  EXPECT_EQ(f2::cached_lattice(table, &cache).size(), 10u);
  std::filesystem::remove_all(dir);
}

TEST(Census, JsonHasNoTimingByDefault) {
  auto r = f2::run_census({"D20", f2::build({f2::Family::dihedral, {20}})}, config(), nullptr);
  auto j = f2::census_json(r);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_EQ(j["f2"], 3);
  EXPECT_TRUE(f2::census_json(r, true).contains("elapsed_ms"));
}

TEST(Census, CapExceeded) {
  auto cfg = config();
  cfg.cap = 100;
  EXPECT_THROW(f2::run_census({"A6", f2::alternating_group(6)}, cfg, nullptr), f2::CapExceeded);
}

TEST(Formula, Outputs) {
  EXPECT_EQ(f2::formula_json(f2::cmd_formula("cyclic", {30}))["value"], 3);
  EXPECT_EQ(f2::formula_json(f2::cmd_formula("dihedral", {10}))["value"], 3);
  EXPECT_EQ(f2::formula_json(f2::cmd_formula("psl2", {7, 1}))["value"], 2);
  EXPECT_EQ(f2::formula_json(f2::cmd_formula("omega", {30}))["value"], 3);
  EXPECT_THROW(f2::cmd_formula("cyclic", {}), f2::DomainError);
  EXPECT_THROW(f2::cmd_formula("nonsense", {3}), f2::DomainError);
}

TEST(Determinism, JobsDoNotChangeOutput) {
  auto one = f2::render_table(f2::cmd_table(24, config(1)), f2::Format::jsonl);
  auto four = f2::render_table(f2::cmd_table(24, config(4)), f2::Format::jsonl);
  EXPECT_EQ(one, four);
}

TEST(ParallelMap, KeepsOrderAndRethrows) {
  std::vector<int> xs(100);
  std::iota(xs.begin(), xs.end(), 0);
  auto ys = f2::parallel_map(xs, 8, [](int x) { return x * x; });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(ys[i], i * i);
  EXPECT_THROW(f2::parallel_map(xs, 4,
                                [](int x) {
                                  if (x == 50) throw f2::DomainError("x");
                                  return x;
                                }),
               f2::DomainError);
}

TEST(Cli, ExitCodes) {
  auto ok = cli("--format jsonl brute --family dihedral --param 10");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("\"f2\":3"), std::string::npos);
  EXPECT_EQ(cli("formula cyclic 15").status, 0);
  EXPECT_EQ(cli("formula cyclic 1").status, 1);
  EXPECT_EQ(cli("--cap 100 brute --family alternating --param 6").status, 1);
  EXPECT_EQ(cli("verify-ww --row 7 --q 5").status, 1);
  EXPECT_EQ(cli("verify-ww --row 1").status, 0);
  EXPECT_NE(cli("bogus").status, 0);
}

TEST(Cli, JsonlIsDeterministic) {
  const std::string args = "--format jsonl brute --catalog 16";
  auto a = cli("--jobs 1 " + args);
  auto b = cli("--jobs 4 " + args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}
