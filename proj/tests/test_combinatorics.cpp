#include <gtest/gtest.h>

#include "coinv/combinatorics.hpp"
#include "oracles.hpp"

using namespace coinv;

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{2, 1, 1}), (Partition{3, 1}));
}

TEST(Conjugate, Involution) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(PartitionType, TrailingZerosIgnoredByEquality) {
  EXPECT_EQ((Partition{3, 1, 0, 0}), (Partition{3, 1}));
  EXPECT_EQ((Partition{3, 1}).padded(4).stored_length(), 4u);
  EXPECT_THROW(Partition({1, 2}), precondition_error);
  EXPECT_THROW((Partition{2, 1, 1}).padded(2), precondition_error);
}

TEST(Dominance, Examples) {
  EXPECT_EQ(dominance_compare(Partition{2, 2}, Partition{3, 1}), Order::Less);
  EXPECT_EQ(dominance_compare(Partition{3, 3}, Partition{4, 1, 1}), Order::Incomparable);
  EXPECT_EQ(dominance_compare(Partition{4, 3, 1}, Partition{4, 3, 1}), Order::Equal);
  EXPECT_EQ(dominance_compare(Partition{3, 1}, Partition{2, 2}), Order::Greater);
  EXPECT_THROW(dominance_compare(Partition{2}, Partition{1}), precondition_error);
}

TEST(Dominance, PartialOrderExhaustive) {
  for (int d = 0; d <= 8; ++d) {
    auto ps = partitions_of(d);
    for (const auto& a : ps) {
      EXPECT_EQ(dominance_compare(a, a), Order::Equal);
      for (const auto& b : ps) {
        Order ab = dominance_compare(a, b), ba = dominance_compare(b, a);
        if (ab == Order::Less) EXPECT_EQ(ba, Order::Greater);
        if (ab == Order::Equal) EXPECT_EQ(a, b);
        if (ab == Order::Incomparable) EXPECT_EQ(ba, Order::Incomparable);
        if (ab != Order::Less) continue;
        for (const auto& c : ps)
          if (dominance_compare(b, c) == Order::Less) EXPECT_EQ(dominance_compare(a, c), Order::Less);
      }
    }
  }
}

TEST(PartitionDescents, Examples) {
  EXPECT_EQ(partition_descents(Partition{3, 2, 2, 1, 0}), (DescentSet{1, 3, 4}));
  EXPECT_EQ(partition_descents(Partition{5, 5, 3, 3, 1, 1, 1, 0}), (DescentSet{2, 4, 7}));
  // floors by 2: (4,2,2,2,1,1,0)
  EXPECT_EQ(partition_descents(Partition{9, 5, 5, 4, 3, 2, 0}, 2, 3, 7), (DescentSet{4, 6}));
  EXPECT_THROW(partition_descents(Partition{3, 2}, 1, 2, 5), precondition_error);
  EXPECT_THROW(partition_descents(Partition{3, 2}, 1, 0, 1), precondition_error);
}

TEST(ClassifyPartition, Examples) {
  EXPECT_TRUE(classify_partition(Partition{5, 3, 2, 2, 1, 1, 1, 0}, 8, 6, 1).is_exponent_of_descent_monomial);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_FALSE(classify_partition(Partition{k}, n, k, 1).is_nk_partition);
  EXPECT_TRUE(classify_partition(Partition{9, 5, 5, 4, 3, 2, 0}, 7, 5, 2).is_exponent_of_descent_monomial);
  auto f = classify_partition(Partition{2, 1, 0}, 3, 3, 1);
  EXPECT_TRUE(f.is_nk_partition);
  EXPECT_TRUE(f.is_r_descent_partition);
  EXPECT_FALSE(classify_partition(Partition{3, 1, 0}, 3, 3, 1).is_r_descent_partition);
  EXPECT_FALSE(classify_partition(Partition{1, 1, 1, 1}, 3, 3, 1).is_nk_partition);
}

TEST(PermDescents, Examples) {
  auto sigma = Permutation::from_digits("31427865");
  auto s = perm_descents(sigma);
  EXPECT_EQ(s.descents, (DescentSet{1, 3, 6, 7}));
  EXPECT_EQ(s.d, (std::vector<int>{4, 3, 3, 2, 2, 2, 1, 0}));
  EXPECT_EQ(s.descents.restricted(2, 6), (DescentSet{3, 6}));
  auto id = perm_descents(Permutation::identity(6));
  EXPECT_TRUE(id.descents.empty());
  EXPECT_EQ(id.inv, 0);
  EXPECT_EQ(id.d, std::vector<int>(6, 0));
  EXPECT_THROW(Permutation({1, 1}), precondition_error);
}

TEST(PermDescents, SuffixCountsExhaustive) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_permutations(n)) {
      auto s = perm_descents(p);
      for (int i = 1; i <= n; ++i) {
        EXPECT_EQ(s.d[static_cast<std::size_t>(i - 1)], s.descents.restricted(i, n).size());
        if (i < n) {
          int step = s.d[static_cast<std::size_t>(i - 1)] - s.d[static_cast<std::size_t>(i)];
          EXPECT_TRUE(step == 0 || step == 1);
        }
      }
      EXPECT_EQ(s.inv == 0, p == Permutation::identity(n));
    }
}

TEST(ColoredDescents, Examples) {
  ColoredPermutation g(Permutation{3, 5, 4, 6, 1, 2}, {0, 2, 2, 0, 1, 1}, 3);
  EXPECT_EQ(colored_descents(g).descents, (DescentSet{1, 2, 4}));

  auto sigma = Permutation::from_digits("31427865");
  EXPECT_EQ(colored_descents(ColoredPermutation::uncolored(sigma)).descents, perm_descents(sigma).descents);

  ColoredPermutation h(Permutation{1, 2}, {2, 1}, 3);
  auto s = colored_descents(h);
  EXPECT_TRUE(s.descents.empty());
  EXPECT_EQ(s.d, (std::vector<int>{0, 0}));
  EXPECT_EQ(s.f, (std::vector<int>{2, 1}));
}

TEST(ColoredDescents, ColorsReducedModR) {
  ColoredPermutation g(Permutation{2, 1}, {5, -1}, 3);
  EXPECT_EQ(g.colors(), (std::vector<int>{2, 2}));
}

TEST(ColoredDescents, FVectorShape) {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r) {
      for (const auto& g : all_colored_permutations(n, r)) {
        auto s = colored_descents(g);
        for (int i = 1; i < n; ++i) {
          int gap = s.f[static_cast<std::size_t>(i - 1)] - s.f[static_cast<std::size_t>(i)];
          EXPECT_GE(gap, 0);
          EXPECT_LE(gap, r);
        }
        EXPECT_EQ(s.f.back(), g.color(n));
        EXPECT_LT(s.f.back(), r);
      }
    }
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(2, 1), (QPolynomial{1, 1}));
  EXPECT_EQ(q_binomial(4, 2), QPolynomial(oracle_ref::partitions_in_box(2, 2)));
  EXPECT_EQ(q_binomial(4, 2), (QPolynomial{1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(7, 0), (QPolynomial{1}));
  EXPECT_TRUE(q_binomial(2, 3).is_zero());
}

TEST(QBinomial, Properties) {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= a; ++b) {
      QPolynomial p = q_binomial(a, b);
      EXPECT_EQ(p, QPolynomial(oracle_ref::partitions_in_box(b, a - b)));
      EXPECT_EQ(p.at_one(), oracle_ref::binomial(a, b));
      auto c = p.coefficients();
      for (auto v : c) EXPECT_GE(v, 0);
      EXPECT_TRUE(std::equal(c.begin(), c.end(), c.rbegin()));
    }
}

TEST(QPolynomialType, Arithmetic) {
  QPolynomial a{1, 1};
  EXPECT_EQ(a * a, (QPolynomial{1, 2, 1}));
  EXPECT_EQ(a.substitute_power(2), (QPolynomial{1, 0, 1}));
  EXPECT_EQ(a.shifted(2), (QPolynomial{0, 0, 1, 1}));
  EXPECT_EQ((QPolynomial{1, 0, 0}).degree(), 0);
  EXPECT_EQ((QPolynomial{1, 3, 0, 2}).to_string(), "1+3q+2q^3");
}

TEST(DescentPartitionFromSet, Examples) {
  EXPECT_EQ(descent_partition_from_set(DescentSet{2, 4}, 8), (Partition{2, 2, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(descent_partition_from_set(DescentSet{}, 5).stored_length(), 5u);
  EXPECT_TRUE(descent_partition_from_set(DescentSet{}, 5).is_zero());
  EXPECT_EQ(descent_partition_from_set(DescentSet{1, 2, 3}, 4), (Partition{3, 2, 1, 0}));
  EXPECT_THROW(descent_partition_from_set(DescentSet{4}, 4), precondition_error);
}

TEST(DescentPartitionFromSet, InverseOfDescents) {
  for (int n = 1; n <= 8; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      DescentSet s = DescentSet::from_mask(mask << 1);
      Partition p = descent_partition_from_set(s, n);
      EXPECT_TRUE(classify_partition(p, n, n, 1).is_r_descent_partition);
      EXPECT_EQ(partition_descents(p), s);
      EXPECT_EQ(descent_partition_from_set(partition_descents(p), n), p);
    }
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(partitions_of(10).size(), 42u);
  EXPECT_EQ(r_partitions_of(3, 2).size(), 10u);
  EXPECT_EQ(all_colored_permutations(3, 2).size(), 48u);
  EXPECT_EQ(sequences_below(3, 2).size(), 4u);
  EXPECT_EQ(partitions_of(5, 2, 3).size(), 1u);  // only (3,2)
}
