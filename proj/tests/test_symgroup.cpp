#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "immlab/characters.hpp"
#include "immlab/permutation.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace immlab;
using testutil::error_code;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST(Permutations, StreamCountsAndUniqueness) {
  EXPECT_EQ(std::distance(PermutationStream(1).begin(), PermutationStream(1).end()), 1);
  std::set<std::vector<int>> seen;
  for (const auto& pi : PermutationStream(3)) seen.insert(pi.images());
  EXPECT_EQ(seen.size(), 6u);

  int total = 0, even = 0;
  for (const auto& pi : PermutationStream(4)) {
    ++total;
    if (pi.sign() == 1) ++even;
  }
  EXPECT_EQ(total, 24);
  EXPECT_EQ(even, 12);

  std::vector<std::vector<int>> first, second;
  for (const auto& pi : permutations(5)) first.push_back(pi.images());
  for (const auto& pi : permutations(5)) second.push_back(pi.images());
  EXPECT_EQ(first.size(), 120u);
  EXPECT_EQ(first, second);
}

TEST(Permutations, CapIsEnforced) {
  EXPECT_EQ(error_code([] { PermutationStream(11); }), Errc::cap_exceeded);
  Caps caps;
  caps.stream_n = 4;
  EXPECT_EQ(error_code([&] { PermutationStream(5, caps); }), Errc::cap_exceeded);
  EXPECT_NO_THROW(PermutationStream(4, caps));
}

TEST(Permutations, RejectsNonBijections) {
  EXPECT_EQ(error_code([] { Permutation({1, 1}); }), Errc::invalid_permutation);
  EXPECT_EQ(error_code([] { Permutation({0, 1}); }), Errc::invalid_permutation);
  EXPECT_EQ(error_code([] { Permutation({3, 1}); }), Errc::invalid_permutation);
}

TEST(Permutations, CycleTypeAndSign) {
  EXPECT_EQ(Permutation::identity(4).cycle_type(), P({1, 1, 1, 1}));
  EXPECT_EQ(Permutation({2, 3, 1}).cycle_type(), P({3}));
  EXPECT_EQ(Permutation({2, 1, 4, 3}).cycle_type(), P({2, 2}));
  for (const auto& pi : PermutationStream(6)) {
    const auto t = pi.cycle_type();
    EXPECT_EQ(t.size(), 6);
    EXPECT_EQ(pi.sign(), (6 - t.length()) % 2 == 0 ? 1 : -1);
    std::vector<int> zero_based;
    for (int x : pi.images()) zero_based.push_back(x - 1);
    EXPECT_EQ(t, oracle::cycle_type_of(zero_based));
  }
}

TEST(ClassSize, ExamplesAndEnumeration) {
  EXPECT_EQ(class_size(P({2, 1})), 3);
  EXPECT_EQ(class_size(Partition::row(6)), 120);
  EXPECT_EQ(class_size(Partition::column(6)), 1);
  for (int n = 1; n <= 7; ++n) {
    std::map<Partition, long long> counts;
    for (const auto& pi : PermutationStream(n)) ++counts[pi.cycle_type()];
    Integer total = 0;
    for (const auto& gamma : partitions_of(n)) {
      EXPECT_EQ(class_size(gamma), counts[gamma]) << gamma.to_string();
      total += class_size(gamma);
    }
    EXPECT_EQ(total, factorial(n));
  }
  for (int n = 8; n <= 10; ++n) {
    Integer total = 0;
    for (const auto& gamma : partitions_of(n)) total += class_size(gamma);
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Character, Examples) {
  EXPECT_EQ(character(P({2, 1}), P({1, 1, 1})), 2);
  EXPECT_EQ(character(P({2, 1}), P({2, 1})), 0);
  EXPECT_EQ(character(P({2, 1}), P({3})), -1);
  for (int n = 1; n <= 8; ++n)
    for (const auto& gamma : partitions_of(n)) {
      EXPECT_EQ(character(Partition::row(n), gamma), 1);
      EXPECT_EQ(character(Partition::column(n), gamma), class_sign(gamma));
    }
  EXPECT_EQ(error_code([] { character(P({2, 1}), P({2})); }), Errc::size_mismatch);
}

// Murnaghan–Nakayama against Frobenius' formula, entry by entry.
TEST(Character, MatchesFrobeniusFormula) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& gamma : partitions_of(n))
        EXPECT_EQ(character(lambda, gamma), oracle::frobenius_character(lambda, gamma))
            << lambda.to_string() << " @ " << gamma.to_string();
}

TEST(Character, TrivialAndSignOrthogonality) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      Integer with_trivial = 0, with_sign = 0;
      for (const auto& gamma : partitions_of(n)) {
        with_trivial += class_size(gamma) * character(lambda, gamma);
        with_sign += class_size(gamma) * class_sign(gamma) * character(lambda, gamma);
      }
      EXPECT_EQ(with_trivial, lambda.is_row() ? factorial(n) : Integer(0));
      EXPECT_EQ(with_sign, lambda.is_column() ? factorial(n) : Integer(0));
    }
}

TEST(Character, ConcurrentEvaluationAgrees) {
  const auto lambda = P({4, 3, 2});
  std::vector<long long> expected;
  for (const auto& gamma : partitions_of(9)) expected.push_back(oracle::frobenius_character(lambda, gamma));
  std::vector<std::vector<long long>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const auto& gamma : partitions_of(9)) results[static_cast<std::size_t>(t)].push_back(character(lambda, gamma));
    });
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, expected);
}

TEST(CharacterTable, SmallTables) {
  const auto t2 = character_table(2);
  ASSERT_EQ(t2.classes(), (std::vector<Partition>{P({2}), P({1, 1})}));
  // rows (2), (1,1); columns (2), (1,1)
  EXPECT_EQ(t2.value(0, 0), 1);
  EXPECT_EQ(t2.value(0, 1), 1);
  EXPECT_EQ(t2.value(1, 0), -1);
  EXPECT_EQ(t2.value(1, 1), 1);

  const auto t3 = character_table(3);
  // row (2,1) over classes (3), (2,1), (1,1,1)
  EXPECT_EQ(t3.irreducibles()[1], P({2, 1}));
  EXPECT_EQ(t3.value(1, 0), -1);
  EXPECT_EQ(t3.value(1, 1), 0);
  EXPECT_EQ(t3.value(1, 2), 2);
  EXPECT_EQ(error_code([] { character_table(9); }), Errc::cap_exceeded);
}

TEST(CharacterTable, RowOrthogonalityAndDimensions) {
  for (int n = 1; n <= 8; ++n) {
    const auto t = character_table(n);
    const std::size_t k = t.irreducibles().size();
    const std::size_t identity_col = k - 1;  // (1^n) is last in decreasing order
    ASSERT_EQ(t.classes()[identity_col], Partition::column(n));
    for (std::size_t a = 0; a < k; ++a) {
      EXPECT_EQ(t.value(a, identity_col), static_cast<long long>(syt_count(t.irreducibles()[a])));
      for (std::size_t b = 0; b < k; ++b) EXPECT_EQ(t.inner_product(a, b), a == b ? factorial(n) : Integer(0));
    }
  }
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient(P({2, 1}), P({1, 1}), P({1})), 1);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q)
      if (p + q > 0) {
        EXPECT_EQ(lr_coefficient(Partition::row(p + q), Partition::row(p), Partition::row(q)), 1);
      }
  // (2,2)/(1,1) is a vertical strip, not a horizontal one.
  EXPECT_EQ(lr_coefficient(P({2, 2}), P({1, 1}), P({2})), 0);
  EXPECT_EQ(lr_coefficient(P({2, 2}), P({2}), P({2})), 1);
  EXPECT_EQ(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})), 2);
  EXPECT_EQ(error_code([] { lr_coefficient(P({2, 2}), P({1}), P({2})); }), Errc::size_mismatch);
}

TEST(LittlewoodRichardson, Symmetry) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int p = 0; p <= n; ++p)
        for (const auto& alpha : partitions_of(p))
          for (const auto& beta : partitions_of(n - p))
            EXPECT_EQ(lr_coefficient(lambda, alpha, beta), lr_coefficient(lambda, beta, alpha));
}

TEST(Pieri, Examples) {
  EXPECT_EQ(pieri_coefficient(P({3, 1}), P({1}), 3, StripKind::row), 1);
  EXPECT_EQ(pieri_coefficient(P({2, 2}), P({1, 1}), 2, StripKind::column), 1);
  EXPECT_EQ(pieri_coefficient(P({2, 2}), P({2}), 2, StripKind::column), 0);
  EXPECT_EQ(error_code([] { pieri_coefficient(P({2, 2}), P({2}), 1, StripKind::row); }), Errc::size_mismatch);
}

TEST(Pieri, AgreesWithCharacterSums) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int q = 1; q <= n; ++q)
        for (const auto& alpha : partitions_of(n - q)) {
          EXPECT_EQ(lr_coefficient(lambda, alpha, Partition::row(q)), pieri_coefficient(lambda, alpha, q, StripKind::row));
          EXPECT_EQ(lr_coefficient(lambda, alpha, Partition::column(q)),
                    pieri_coefficient(lambda, alpha, q, StripKind::column));
        }
}
