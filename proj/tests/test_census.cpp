#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "f2/census.hpp"
#include "f2/closed_forms.hpp"

using f2::Family;

namespace {

f2::Census brute(const f2::PermGroup& g) { return f2::f2_bruteforce(g); }

f2::Census brute(const f2::FamilySpec& s) { return brute(f2::build(s)); }

std::vector<std::pair<std::string, std::string>> class_names(const f2::Census& c) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : c.classes) out.emplace_back(k.h_name, k.k_name);
  return out;
}

}  // namespace

TEST(Census, A4HasOneClass) {
  auto c = brute(f2::alternating_group(4));
  ASSERT_EQ(c.f2(), 1u);
  EXPECT_EQ(class_names(c)[0], (std::pair<std::string, std::string>{"Z3", "Z2xZ2"}));
}

TEST(Census, QuaternionAndPrimeHaveNone) {
  EXPECT_EQ(brute({Family::generalized_quaternion, {8}}).raw_pairs, 0u);
  EXPECT_EQ(brute(f2::cyclic_group(13)).raw_pairs, 0u);
}

TEST(Census, D20) {
  auto c = brute({Family::dihedral, {20}});
  EXPECT_EQ(c.f2(), 3u);
  auto names = class_names(c);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::pair<std::string, std::string>>{{"Z2", "D10"}, {"Z2", "Z10"}, {"Z2xZ2", "Z5"}}));
}

TEST(Census, Psl2_11AndSd16) {
  EXPECT_EQ(brute(f2::psl2(11)).f2(), 3u);
  EXPECT_EQ(brute({Family::semidihedral, {16}}).f2(), 2u);
}

TEST(Census, D8HasTwoClasses) {
  auto c = brute({Family::dihedral, {8}});
  EXPECT_EQ(c.f2(), 2u);
}

TEST(Census, MultiplicitiesSumToRawPairs) {
  for (const auto& e : f2::catalog(24)) {
    auto c = brute(e.group());
    std::size_t total = 0;
    for (const auto& k : c.classes) total += k.multiplicity;
    EXPECT_EQ(total, c.raw_pairs) << e.name;
  }
}

TEST(Census, PairsSatisfyDefinition) {
  auto lat = f2::all_subgroups(f2::psl2(7));
  for (const auto& f : f2::exact_factorizations(lat)) {
    const auto& h = lat.subgroups()[f.h];
    const auto& k = lat.subgroups()[f.k];
    EXPECT_EQ(h.order() * k.order(), 168u);
    EXPECT_EQ(h.intersection_size(k), 1u);
    EXPECT_NO_THROW(f2::assert_exact(lat, f));
  }
}

TEST(Census, SwappingFactorsKeepsClasses) {
  std::mt19937 rng(3);
  auto lat = f2::all_subgroups(f2::build({Family::dihedral, {24}}));
  auto pairs = f2::exact_factorizations(lat);
  auto base = f2::classify(lat, pairs);
  for (int t = 0; t < 5; ++t) {
    auto shuffled = pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& p : shuffled)
      if (rng() % 2) std::swap(p.h, p.k);
    auto again = f2::classify(lat, shuffled);
    ASSERT_EQ(again.f2(), base.f2());
    for (std::size_t i = 0; i < base.classes.size(); ++i) {
      EXPECT_EQ(again.classes[i].h_name, base.classes[i].h_name);
      EXPECT_EQ(again.classes[i].k_name, base.classes[i].k_name);
      EXPECT_EQ(again.classes[i].multiplicity, base.classes[i].multiplicity);
    }
  }
}

TEST(Isomorphism, Examples) {
  auto z4 = f2::CayleyTable::from_group(f2::cyclic_group(4), 10);
  auto v4 = f2::CayleyTable::from_group(f2::abelian_group({2, 2}), 10);
  EXPECT_FALSE(f2::is_isomorphic(z4, v4));
  auto d8 = *f2::presentation_table({Family::dihedral, {8}});
  auto q8 = *f2::presentation_table({Family::generalized_quaternion, {8}});
  EXPECT_FALSE(f2::is_isomorphic(d8, q8));
  // The two Klein subgroups of D8.
  auto t = std::make_shared<const f2::CayleyTable>(d8);
  auto lat = f2::all_subgroups(t);
  std::vector<f2::SubgroupSet> kleins;
  for (auto i : lat.of_order(4)) {
    auto st = f2::subgroup_table(d8, lat.subgroups()[i]);
    bool all_small = true;
    for (auto o : st.element_orders()) all_small = all_small && o <= 2;
    if (all_small) kleins.push_back(lat.subgroups()[i]);
  }
  ASSERT_EQ(kleins.size(), 2u);
  EXPECT_TRUE(f2::is_isomorphic(d8, kleins[0], kleins[1]));
}

TEST(Isomorphism, AgreesWithCatalogIdentity) {
  // Every catalog group is isomorphic to itself under a relabeled table
  // (regular representation) and to no other entry of its order.
  for (std::uint64_t n : {8, 12, 16, 18, 24, 27}) {
    auto entries = f2::catalog(n);
    std::vector<f2::CayleyTable> tables;
    for (const auto& e : entries) tables.push_back(f2::CayleyTable::from_group(e.group(), 64));
    for (std::size_t i = 0; i < tables.size(); ++i) {
      auto regular = f2::CayleyTable::from_group(f2::left_regular_embedding(tables[i]), 64);
      EXPECT_TRUE(f2::is_isomorphic(tables[i], regular)) << entries[i].name;
      for (std::size_t j = i + 1; j < tables.size(); ++j)
        EXPECT_FALSE(f2::is_isomorphic(tables[i], tables[j])) << entries[i].name << " vs " << entries[j].name;
    }
  }
}

TEST(Isomorphism, CatalogPairwiseNonIsomorphic) {
  for (std::uint64_t n = 1; n <= f2::kCatalogMaxOrder; ++n) {
    auto entries = f2::catalog(n);
    ASSERT_EQ(entries.size(), *f2::gnu_reference(n)) << n;
    std::vector<f2::CayleyTable> tables;
    for (const auto& e : entries) tables.push_back(f2::CayleyTable::from_group(e.group(), 64));
    for (std::size_t i = 0; i < tables.size(); ++i)
      for (std::size_t j = i + 1; j < tables.size(); ++j)
        EXPECT_FALSE(f2::is_isomorphic(tables[i], tables[j])) << entries[i].name << " vs " << entries[j].name;
  }
}

TEST(Naming, LargeGroups) {
  auto name = [](const f2::PermGroup& g) {
    auto t = f2::CayleyTable::from_group(g, 200);
    return f2::group_name(t, f2::fingerprint(t));
  };
  EXPECT_EQ(name(f2::cyclic_group(35)), "Z35");
  EXPECT_EQ(name(f2::abelian_group({6, 6})), "Z6xZ6");
  EXPECT_EQ(name(f2::abelian_group({4, 2, 2, 2, 3})), "Z12xZ2xZ2xZ2");
  EXPECT_EQ(name(f2::build({Family::dihedral, {40}})), "D40");
  EXPECT_EQ(name(f2::alternating_group(5)), "A5");
}

TEST(VerifyExactPair, Examples) {
  auto h = f2::PermGroup::from_cycles(8, {"(1,2,3,4,5)", "(1,2)(6,7)"});
  auto r = f2::verify_exact_pair(f2::psl2(7), h, 8);
  EXPECT_TRUE(r.exact());
  auto z15 = f2::PermGroup::from_cycles(8, {"(1,2,3)(4,5,6,7,8)"});
  EXPECT_TRUE(f2::verify_exact_pair(z15, f2::agl32(), 8).exact());
  auto a5 = f2::alternating_group(5);
  auto bad = f2::verify_exact_pair(a5, a5, 5);
  EXPECT_FALSE(bad.exact());
  EXPECT_FALSE(bad.intersection_trivial);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_TRUE(a5.contains(*bad.witness));
}

// Oracle agreement with the closed forms.

TEST(OracleAgreement, CyclicUpTo200) {
  for (std::uint64_t n = 2; n <= 200; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(brute(f2::cyclic_group(n)).f2()), f2::f2_cyclic(n).value) << n;
}

TEST(OracleAgreement, DihedralUpTo100) {
  for (std::uint64_t n = 3; n <= 100; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(brute({Family::dihedral, {2 * n}}).f2()), f2::f2_dihedral(n).value) << n;
}

TEST(OracleAgreement, PGroupConstants) {
  for (unsigned n = 3; n <= 6; ++n) EXPECT_EQ(brute({Family::generalized_quaternion, {1ull << n}}).f2(), 0u) << n;
  for (unsigned n = 4; n <= 6; ++n) EXPECT_EQ(brute({Family::semidihedral, {1ull << n}}).f2(), 2u) << n;
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 3}, {3, 4}, {5, 3}, {7, 3}})
    EXPECT_EQ(brute({Family::modular_p, {p, n}}).f2(), 1u) << p << "^" << n;
}

TEST(OracleAgreement, Psl2SmallQ) {
  // PSL(2,2) = S3 and PSL(2,3) = A4.
  auto s3 = f2::CayleyTable::from_group(f2::psl2(2), 10);
  EXPECT_TRUE(f2::is_isomorphic(s3, f2::CayleyTable::from_group(f2::symmetric_group(3), 10)));
  auto a4 = f2::CayleyTable::from_group(f2::psl2(3), 20);
  EXPECT_TRUE(f2::is_isomorphic(a4, f2::CayleyTable::from_group(f2::alternating_group(4), 20)));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    auto pp = *f2::prime_power(q);
    EXPECT_EQ(static_cast<std::int64_t>(brute(f2::psl2(q)).f2()), f2::f2_psl2(pp.first, pp.second).value) << q;
  }
}

TEST(OracleAgreement, AbelianFormulaIsOnlyDiffed) {
  // The product formula vanishes on Z6 and Z2xZ2; the oracle does not.
  EXPECT_EQ(f2::f2_abelian(f2::AbelianType::from_factors({6})).value, 0);
  EXPECT_EQ(brute(f2::cyclic_group(6)).f2(), 1u);
  EXPECT_EQ(f2::f2_abelian(f2::AbelianType::from_factors({2, 2})).value, 0);
  EXPECT_EQ(brute(f2::abelian_group({2, 2})).f2(), 1u);
}
