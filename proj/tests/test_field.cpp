#include <gtest/gtest.h>

#include <set>

#include "f2/field.hpp"

using f2::FiniteField;

TEST(Field, Gf8PrimitiveOrder) {
  FiniteField f(2, 3);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(f.multiplicative_order(2), 7u);  // the class of x
}

TEST(Field, Gf9FrobeniusInvolution) {
  FiniteField f(3, 2);
  bool nontrivial = false;
  for (auto e : f.elements()) {
    EXPECT_EQ(f.frobenius(f.frobenius(e, 1), 1), e);
    nontrivial |= f.frobenius(e, 1) != e;
  }
  EXPECT_TRUE(nontrivial);
}

TEST(Field, Gf5Inverse) {
  FiniteField f(5, 1);
  EXPECT_EQ(f.inv(2), 3u);
  EXPECT_THROW(f.inv(0), f2::DomainError);
}

TEST(Field, Squares) {
  FiniteField f5(5, 1);
  EXPECT_TRUE(f5.is_square(4));
  EXPECT_FALSE(f5.is_square(2));
  FiniteField f9(3, 2);
  auto g = f9.primitive_element();
  EXPECT_FALSE(f9.is_square(g));
  EXPECT_TRUE(f9.is_square(f9.mul(g, g)));
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(FiniteField(4, 1), f2::DomainError);
  EXPECT_THROW(FiniteField(2, 2, {1, 0, 1}), f2::DomainError);  // x^2 + 1 = (x+1)^2
  EXPECT_THROW(FiniteField(2, 17), f2::DomainError);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, Hold) {
  auto [p, m] = GetParam();
  FiniteField f(p, m);
  const auto q = f.order();
  auto elems = f.elements();
  ASSERT_EQ(elems.size(), q);
  EXPECT_EQ(std::set<std::uint32_t>(elems.begin(), elems.end()).size(), q);
  std::size_t squares = 0;
  for (auto a : elems) {
    EXPECT_EQ(f.frobenius(a, 1), f.pow(a, p));
    EXPECT_EQ(f.frobenius(a, m), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    // p-fold sum vanishes: the additive group is elementary abelian.
    std::uint32_t s = 0;
    for (unsigned i = 0; i < p; ++i) s = f.add(s, a);
    EXPECT_EQ(s, 0u);
    if (a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      squares += f.is_square(a);
    }
    for (auto b : elems) {
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
      EXPECT_EQ(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
    }
  }
  EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1);
  if (p != 2) {
    EXPECT_EQ(squares, (q - 1) / 2);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{2u, 5u}, std::pair{3u, 2u}, std::pair{5u, 1u},
                                           std::pair{5u, 2u}, std::pair{7u, 1u}, std::pair{13u, 1u},
                                           std::pair{3u, 3u}));

TEST(Field, ProjectiveIndexing) {
  FiniteField f(2, 3);
  for (unsigned i = 1; i <= 9; ++i) EXPECT_EQ(f2::ProjectivePoint::from_index(f, i).index(f), i);
  EXPECT_TRUE(f2::ProjectivePoint::from_index(f, 9).infinite);
}

TEST(Field, PrimePower) {
  EXPECT_EQ(f2::prime_power(32), (std::pair<std::uint32_t, std::uint32_t>{2, 5}));
  EXPECT_FALSE(f2::prime_power(12));
  EXPECT_FALSE(f2::prime_power(1));
}
