#include "bihilbert/monomial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

namespace bihilbert {
namespace {

using testing::part;

TEST(TMonomial, Cases) {
  EXPECT_EQ(t_monomial(2, 3, {2, 3}), (BiMonomial{1, 1, 2, 1}));
  EXPECT_EQ(t_monomial(1, 1, {0, 0}), (BiMonomial{0, 0, 0, 0}));
  EXPECT_EQ(t_monomial(0, 2, {3, 3}), std::nullopt);
  EXPECT_EQ(t_monomial(2, 0, {3, 3}), std::nullopt);
  EXPECT_EQ(t_monomial(1, 2, {0, 3}), (BiMonomial{0, 0, 1, 2}));  // pure y-part
  EXPECT_EQ(t_monomial(3, 1, {4, 0}), (BiMonomial{2, 2, 0, 0}));  // pure x-part
  EXPECT_THROW(t_monomial(4, 1, {2, 2}), Error);
  EXPECT_THROW(t_monomial(1, 4, {2, 2}), Error);
}

TEST(TMonomial, DistinctIndicesGiveDistinctMonomials) {
  for (std::uint32_t a = 0; a <= 4; ++a) {
    for (std::uint32_t b = 0; b <= 4; ++b) {
      std::set<BiMonomial> seen;
      for (std::uint32_t p = 1; p <= a + 1; ++p) {
        for (std::uint32_t q = 1; q <= b + 1; ++q) {
          auto m = t_monomial(p, q, {a, b});
          ASSERT_TRUE(m);
          EXPECT_EQ(m->degree(), (BiDegree{a, b}));
          EXPECT_TRUE(seen.insert(*m).second);
        }
      }
      EXPECT_EQ(seen.size(), box_size(a, b));
    }
  }
}

TEST(MonomialSet, FerrersDiagram) {
  // Diagram of (3,3,2,1,0) at bidegree (2,4): row i (x1 exponent) holds the
  // y1 exponents j = 0..3, 0..2, 0..1.
  std::set<BiMonomial> expected;
  const std::vector<std::uint32_t> row_lengths{4, 3, 2};
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = 0; j < row_lengths[i]; ++j) expected.insert({i, 2 - i, j, 4 - j});
  }
  auto got = monomial_set_of(part(3, {3, 3, 2, 1, 0}));
  EXPECT_EQ(got.size(), 9u);
  EXPECT_EQ(got, expected);

  EXPECT_TRUE(monomial_set_of(SidedPartition::zero({3, 4})).empty());
  auto all = monomials_of_degree({2, 3});
  EXPECT_EQ(monomial_set_of(SidedPartition::full({3, 4})), std::set<BiMonomial>(all.begin(), all.end()));
  EXPECT_THROW(monomial_set_of(SidedPartition::make({0, 0}, {})), PartitionError);
}

TEST(Bilex, Examples) {
  // generators of the ideal minimally generated in bidegree (2,3)
  std::set<BiMonomial> gens{{1, 1, 2, 1}, {1, 1, 3, 0}, {2, 0, 2, 1}, {2, 0, 3, 0}};
  EXPECT_TRUE(is_bilex(gens, {2, 3}));
  EXPECT_TRUE(is_bilex({}, {2, 3}));
  auto all = monomials_of_degree({2, 3});
  EXPECT_TRUE(is_bilex(std::set<BiMonomial>(all.begin(), all.end()), {2, 3}));
  EXPECT_FALSE(is_bilex({{0, 2, 0, 3}}, {2, 3}));
  EXPECT_FALSE(is_bilex({{1, 1, 2, 1}}, {2, 3}));
  EXPECT_THROW(is_bilex({{1, 1, 2, 1}, {1, 0, 0, 0}}, {2, 3}), Error);
}

class DictionaryProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{testing::kDefaultSeed};

  SidedPartition random_alpha() {
    std::uniform_int_distribution<std::uint32_t> d(0, 4);
    return testing::random_partition(rng, sides_of({d(rng), d(rng)}));
  }

  static std::set<BiMonomial> complement(const std::set<BiMonomial>& s, BiDegree at) {
    std::set<BiMonomial> out;
    for (const auto& m : monomials_of_degree(at)) {
      if (!s.contains(m)) out.insert(m);
    }
    return out;
  }
};

TEST_F(DictionaryProperties, CardinalityIsWeight) {
  for (int n = 0; n < 300; ++n) {
    auto a = random_alpha();
    EXPECT_EQ(monomial_set_of(a).size(), a.weight());
  }
}

TEST_F(DictionaryProperties, InjectiveAndMonotone) {
  for (int n = 0; n < 300; ++n) {
    auto a = random_alpha();
    auto b = testing::random_partition(rng, a.sides());
    auto ma = monomial_set_of(a), mb = monomial_set_of(b);
    EXPECT_EQ(a == b, ma == mb);
    auto lo = meet(a, b);
    auto ml = monomial_set_of(lo);
    EXPECT_TRUE(std::includes(ma.begin(), ma.end(), ml.begin(), ml.end()));
    EXPECT_TRUE(std::includes(mb.begin(), mb.end(), ml.begin(), ml.end()));
  }
}

TEST_F(DictionaryProperties, ComplementIsBilexAndSetIsReverseBilex) {
  for (int n = 0; n < 300; ++n) {
    auto a = random_alpha();
    const BiDegree at{a.sides().width - 1, a.sides().length - 1};
    auto m = monomial_set_of(a);
    EXPECT_TRUE(is_bilex(complement(m, at), at)) << to_string(a);
    EXPECT_TRUE(is_bilex(m, at, VarOrder::reversed())) << to_string(a);
  }
}

TEST(MonomialText, FormatAndParse) {
  EXPECT_EQ(to_string(BiMonomial{2, 0, 1, 3}), "x1^2 y1 y2^3");
  EXPECT_EQ(to_string(BiMonomial{}), "1");
  EXPECT_EQ(to_exponent_string(BiMonomial{2, 0, 1, 3}), "2 0 1 3");
  EXPECT_EQ(parse_monomial("x1^2 y1 y2^3"), (BiMonomial{2, 0, 1, 3}));
  EXPECT_EQ(parse_monomial("  2 0 1 3 "), (BiMonomial{2, 0, 1, 3}));
  EXPECT_EQ(parse_monomial("1"), BiMonomial{});
  EXPECT_EQ(parse_monomial("x1*x2*x1"), (BiMonomial{2, 1, 0, 0}));
  try {
    parse_monomial("x1 z3", 7);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_monomial("1 2 3"), ParseError);
  EXPECT_THROW(parse_monomial("x1^"), ParseError);
  EXPECT_THROW(parse_monomial(""), ParseError);
}

}  // namespace
}  // namespace bihilbert
