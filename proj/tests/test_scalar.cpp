#include <gtest/gtest.h>

#include "pdnf/exponent.hpp"
#include "pdnf/scalar.hpp"
#include "support.hpp"

using namespace pdnf;
using pdnf::testing::q;

TEST(Scalar, RationalsAreCanonical) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Scalar, GaussianArithmetic) {
  const Scalar a(q(1, 2), q(1));
  const Scalar b(q(3), q(-2));
  EXPECT_EQ(a * b, Scalar(q(3, 2) + 2, q(-1) + 3));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(Scalar::i().pow(4), Scalar(1));
  EXPECT_EQ(Scalar::i().pow(-1), -Scalar::i());
  EXPECT_EQ(Scalar(q(1, 2)).pow(-3), Scalar(8));
  EXPECT_EQ(a.norm2(), q(5, 4));
  EXPECT_THROW(a / Scalar(0), std::domain_error);
}

TEST(Scalar, Rendering) {
  EXPECT_EQ(Scalar(q(-3, 4)).str(), "-3/4");
  EXPECT_EQ(Scalar(q(1), q(-2)).str(), "1-2i");
  EXPECT_EQ(Scalar(q(0), q(1, 3)).str(), "1/3i");
}

TEST(Scalar, ExactRoots) {
  EXPECT_EQ(exact_root(q(8, 27), 3), q(2, 3));
  EXPECT_FALSE(exact_root(q(2), 2).has_value());
  EXPECT_FALSE(exact_root(q(-4), 2).has_value());
  EXPECT_EQ(rational_pow(q(2, 3), -2), q(9, 4));
}

TEST(Exponent, PackingAndOrder) {
  const Exponent a{2, 0, 1};
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(a[0], 2);
  EXPECT_EQ(a[2], 1);
  EXPECT_EQ((a + Exponent{0, 1, 0}), (Exponent{2, 1, 1}));
  EXPECT_EQ(Exponent::from_packed(3, a.packed()), a);
  EXPECT_THROW((Exponent{1, 0} - Exponent{0, 1}), std::invalid_argument);
  GradedLex less;
  EXPECT_TRUE(less(Exponent{1, 0}, Exponent{2, 0}));
  EXPECT_TRUE(less(Exponent{2, 0}, Exponent{1, 1}));
  EXPECT_TRUE(less(Exponent{1, 1}, Exponent{0, 2}));
}

TEST(Exponent, DegreeRangeEnumeration) {
  const auto all = exponents_in_degree_range(3, 2, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), (Exponent{2, 0, 0}));
  EXPECT_EQ(all[1], (Exponent{1, 1, 0}));
  EXPECT_EQ(all.back(), (Exponent{0, 0, 2}));
  GradedLex less;
  const auto many = exponents_in_degree_range(3, 0, 6);
  EXPECT_EQ(many.size(), 84u);  // C(9,3)
  for (std::size_t i = 1; i < many.size(); ++i) EXPECT_TRUE(less(many[i - 1], many[i]));
}
