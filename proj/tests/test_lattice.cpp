#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>

#include "f2/constructions.hpp"
#include "f2/lattice.hpp"

using f2::CayleyTable;
using f2::Family;
using f2::SubgroupSet;

namespace {

std::shared_ptr<const CayleyTable> table_of(const f2::PermGroup& g) {
  return std::make_shared<const CayleyTable>(CayleyTable::from_group(g, 2000));
}

std::size_t divisor_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST(Lattice, CyclicSubgroupExamples) {
  EXPECT_EQ(f2::cyclic_subgroups(*table_of(f2::cyclic_group(12))).size(), 6u);
  auto q8 = f2::presentation_table({Family::generalized_quaternion, {8}});
  EXPECT_EQ(f2::cyclic_subgroups(*q8).size(), 5u);
  EXPECT_EQ(f2::cyclic_subgroups(*table_of(f2::symmetric_group(3))).size(), 5u);
}

TEST(Lattice, JoinExamples) {
  auto s3 = f2::symmetric_group(3);
  auto t = table_of(s3);
  const auto& elems = t->elements();
  auto idx = [&](const char* cyc) {
    auto p = f2::Permutation::parse(cyc, 3);
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  auto a = f2::cyclic_subgroup(*t, idx("(1,2)"));
  auto b = f2::cyclic_subgroup(*t, idx("(1,2,3)"));
  EXPECT_EQ(f2::join(*t, a, a), a);
  EXPECT_EQ(f2::join(*t, a, b).order(), 6u);
  EXPECT_EQ(f2::join(*t, f2::trivial_subgroup(*t), b), b);
  EXPECT_EQ(f2::join(*t, b, f2::trivial_subgroup(*t)), b);
}

TEST(Lattice, AllSubgroupsExamples) {
  auto d8 = f2::all_subgroups(f2::build({Family::dihedral, {8}}));
  EXPECT_EQ(d8.size(), 10u);
  EXPECT_EQ(f2::all_subgroups(f2::cyclic_group(7)).size(), 2u);
  auto psl = f2::all_subgroups(f2::psl2(7));
  std::set<std::size_t> orders;
  for (const auto& s : psl.subgroups()) orders.insert(s.order());
  EXPECT_EQ(orders, (std::set<std::size_t>{1, 2, 3, 4, 6, 7, 8, 12, 21, 24, 168}));
  EXPECT_EQ(psl.size(), 179u);  // known subgroup count of PSL(2,7)
  EXPECT_THROW(f2::all_subgroups(f2::alternating_group(8)), f2::CapExceeded);
}

TEST(Lattice, KnownSubgroupCounts) {
  EXPECT_EQ(f2::all_subgroups(f2::symmetric_group(4)).size(), 30u);
  EXPECT_EQ(f2::all_subgroups(f2::alternating_group(4)).size(), 10u);
  EXPECT_EQ(f2::all_subgroups(f2::alternating_group(5)).size(), 59u);
  EXPECT_EQ(f2::all_subgroups(f2::abelian_group({2, 2, 2})).size(), 16u);
}

TEST(LatticeProperty, CyclicDivisorCount) {
  for (std::size_t n = 1; n <= 200; ++n)
    EXPECT_EQ(f2::all_subgroups(f2::cyclic_group(n)).size(), divisor_count(n)) << n;
}

TEST(LatticeProperty, LagrangeClosureAndIntersection) {
  std::vector<f2::PermGroup> groups = {f2::symmetric_group(4), f2::alternating_group(5),
                                       f2::build({Family::dihedral, {24}}), f2::abelian_group({4, 2, 2}),
                                       f2::build({Family::semidihedral, {16}}), f2::agl1(5)};
  for (const auto& e : f2::catalog(24)) groups.push_back(e.group());
  for (const auto& g : groups) {
    auto lat = f2::all_subgroups(g);
    lat.assert_consistent(true);
    if (lat.table().order() > 60) continue;
    for (const auto& h : lat.subgroups())
      for (const auto& k : lat.subgroups()) ASSERT_TRUE(lat.find(h.intersection(k)).has_value());
  }
}

TEST(LatticeProperty, SampledIntersectionAndConjugation) {
  std::mt19937 rng(5);
  auto lat = f2::all_subgroups(f2::psl2(11));
  const auto& t = lat.table();
  const auto& subs = lat.subgroups();
  for (int trial = 0; trial < 300; ++trial) {
    const auto& h = subs[rng() % subs.size()];
    const auto& k = subs[rng() % subs.size()];
    ASSERT_TRUE(lat.find(h.intersection(k)).has_value());
    const std::size_t g = rng() % t.order();
    SubgroupSet conj(t.order());
    for (auto m : h.members()) conj.insert(t.mul(t.mul(g, m), t.inverse(g)));
    ASSERT_TRUE(lat.find(conj).has_value());
  }
}

TEST(LatticeProperty, JobsDoNotChangeResult) {
  auto t = table_of(f2::psl2(8));
  auto a = f2::all_subgroups(t, 1), b = f2::all_subgroups(t, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.subgroups()[i], b.subgroups()[i]);
}
