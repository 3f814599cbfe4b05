#include <gtest/gtest.h>

#include <map>

#include "f2/cayley.hpp"
#include "f2/constructions.hpp"

using f2::Family;
using f2::FamilySpec;
using f2::Permutation;
using f2::PermGroup;

namespace {

std::size_t center_order(const f2::CayleyTable& t) {
  std::size_t c = 0;
  for (std::size_t a = 0; a < t.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < t.order() && central; ++b) central = t.mul(a, b) == t.mul(b, a);
    c += central;
  }
  return c;
}

}  // namespace

TEST(Build, OrdersMatchDeclared) {
  std::vector<FamilySpec> specs = {
      {Family::cyclic, {12}},        {Family::abelian, {4, 2, 3}}, {Family::dihedral, {18}},
      {Family::dihedral, {2}},       {Family::generalized_quaternion, {16}},
      {Family::semidihedral, {32}},  {Family::modular_p, {3, 3}},  {Family::modular_p, {5, 3}},
      {Family::alternating, {6}},    {Family::symmetric, {5}},     {Family::psl2, {8}},
      {Family::pgl2, {5}},           {Family::pgammal2, {9}},      {Family::lf, {7}},
      {Family::mq, {9}},             {Family::agl1, {9}},          {Family::agammal1, {8}},
      {Family::asl1, {11}},          {Family::asl1, {8}},          {Family::agl32, {}},
      {Family::catalog_entry, {24, 3}}};
  for (const auto& s : specs) EXPECT_EQ(f2::build(s).order(), s.expected_order()) << s.name();
}

TEST(Build, DihedralRelation) {
  auto t = *f2::presentation_table({Family::dihedral, {18}});
  auto g = f2::left_regular_embedding(t);
  EXPECT_EQ(g.order(), 18u);
  // x = index 1, y = index m = 9
  auto r = f2::left_multiplication(t, 1), s = f2::left_multiplication(t, 9);
  EXPECT_EQ(r * s, s * r.inverse());
  EXPECT_TRUE(f2::power(r, 9).is_identity());
  EXPECT_TRUE((s * s).is_identity());
}

TEST(Build, QuaternionUniqueInvolution) {
  auto t = *f2::presentation_table({Family::generalized_quaternion, {16}});
  std::size_t involutions = 0, which = 0;
  for (std::size_t i = 0; i < t.order(); ++i)
    if (t.element_order(i) == 2) {
      ++involutions;
      which = i;
    }
  EXPECT_EQ(involutions, 1u);
  auto b = t.power(8, 1);  // y
  EXPECT_EQ(t.mul(b, b), which);
  // b a b^-1 = a^-1
  EXPECT_EQ(t.mul(t.mul(b, 1), t.inverse(b)), t.inverse(1));
}

TEST(Build, SemidihedralCenterAndRelation) {
  auto t = *f2::presentation_table({Family::semidihedral, {16}});
  EXPECT_TRUE(t.is_associative());
  EXPECT_EQ(center_order(t), 2u);
  // y^-1 x y = x^(a-1), a = 4
  const std::size_t x = 1, y = 8;
  EXPECT_EQ(t.mul(t.mul(t.inverse(y), x), y), t.power(x, 3));
  std::map<std::uint32_t, int> hist;
  for (auto o : t.element_orders()) ++hist[o];
  EXPECT_EQ(hist[2], 5);  // D16 has 9, Q16 has 1, SD16 has 5
}

TEST(Build, ModularRelation) {
  auto t = *f2::presentation_table({Family::modular_p, {3, 3}});
  const std::size_t x = 1, y = 9;
  EXPECT_EQ(t.mul(t.mul(t.inverse(y), x), y), t.power(x, 4));
  EXPECT_FALSE(t.is_abelian());
}

TEST(Build, InvalidParams) {
  EXPECT_THROW(f2::build({Family::modular_p, {2, 4}}), f2::DomainError);
  EXPECT_THROW(f2::build({Family::semidihedral, {4}}), f2::DomainError);
  EXPECT_THROW(f2::build({Family::psl2, {6}}), f2::DomainError);
  EXPECT_THROW(f2::build({Family::mq, {25 * 5}}), f2::DomainError);
  EXPECT_THROW(f2::build({Family::mq, {4}}), f2::DomainError);
}

TEST(Projective, Orders) {
  EXPECT_EQ(f2::psl2(7).order(), 168u);
  EXPECT_EQ(f2::psl2(9).order(), 360u);
  EXPECT_EQ(f2::pgammal2(32).order(), 163680u);
  EXPECT_EQ(f2::pgammal2(32).degree(), 33u);
  EXPECT_TRUE(f2::pgl2(7).action_report(3).sharply_k.at(3));
  EXPECT_TRUE(f2::psl2(7).action_report(2).k_transitive.at(2));
}

TEST(Projective, Chain) {
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    auto s = f2::psl2(q), g = f2::pgl2(q), gg = f2::pgammal2(q);
    for (const auto& x : s.generators()) EXPECT_TRUE(g.contains(x));
    for (const auto& x : g.generators()) EXPECT_TRUE(gg.contains(x));
  }
}

TEST(Mq, SharplyThreeTransitive) {
  auto m9 = f2::mq(9);
  EXPECT_EQ(m9.order(), 720u);
  EXPECT_TRUE(m9.action_report(3).sharply_k.at(3));
  auto p9 = f2::pgl2(9);
  bool differs = false;
  for (const auto& x : m9.generators()) differs |= !p9.contains(x);
  EXPECT_TRUE(differs);
  auto m25 = f2::mq(25);
  EXPECT_EQ(m25.order(), 15600u);
  EXPECT_EQ(m25.degree(), 26u);
  EXPECT_TRUE(m25.action_report(3).sharply_k.at(3));
}

TEST(Affine, Orders) {
  auto a8 = f2::agl1(8);
  EXPECT_EQ(a8.order(), 56u);
  EXPECT_TRUE(a8.action_report(2).sharply_k.at(2));
  EXPECT_EQ(f2::agammal1(32).order(), 4960u);
  auto s7 = f2::asl1(7);
  EXPECT_EQ(s7.order(), 21u);
  s7.for_each_element([](const Permutation& x) { EXPECT_TRUE(x.is_even()); });
}

TEST(Affine, AslIsEvenPart) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    auto g = f2::agl1(q), s = f2::asl1(q);
    std::size_t even = 0;
    g.for_each_element([&](const Permutation& x) {
      if (x.is_even()) {
        ++even;
        EXPECT_TRUE(s.contains(x)) << q;
      }
    });
    EXPECT_EQ(f2::Order(even), s.order()) << q;
  }
}

TEST(Affine, Agl32) {
  auto g = f2::agl32();
  EXPECT_EQ(g.order(), 1344u);
  EXPECT_TRUE(g.action_report(2).k_transitive.at(2));
  auto t = f2::agl32_translations();
  EXPECT_EQ(t.order(), 8u);
  t.for_each_element([](const Permutation& x) { EXPECT_LE(x.order(), 2u); });
}

TEST(Catalog, CountsAndNames) {
  auto c8 = f2::catalog(8);
  ASSERT_EQ(c8.size(), 5u);
  std::set<std::string> names;
  for (const auto& e : c8) names.insert(e.name);
  EXPECT_EQ(names, (std::set<std::string>{"Z8", "Z4xZ2", "Z2xZ2xZ2", "D8", "Q8"}));
  EXPECT_EQ(f2::catalog(16).size(), 14u);
  EXPECT_EQ(f2::catalog(24).size(), 15u);
  EXPECT_EQ(f2::catalog(1).size(), 1u);
  EXPECT_THROW(f2::catalog(32), f2::DomainError);
  EXPECT_THROW(f2::catalog(0), f2::DomainError);
}

TEST(Catalog, ParseRoundTrip) {
  for (const auto& e : f2::full_catalog()) {
    auto again = f2::parse_catalog(f2::format_catalog_entry(e));
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(again[0].name, e.name);
    EXPECT_EQ(again[0].generators, e.generators);
  }
  EXPECT_THROW(f2::parse_catalog("4|Z4|4"), f2::ParseError);
  EXPECT_THROW(f2::parse_catalog("4|Z4|4|(1,5)"), f2::ParseError);
  EXPECT_EQ(f2::parse_catalog("# comment\n\n2|Z2|2|(1,2)\n").size(), 1u);
}
