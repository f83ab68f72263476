#include <gtest/gtest.h>

#include <set>

#include "immlab/partition.hpp"
#include "oracles.hpp"

using immlab::Errc;
using immlab::Error;
using immlab::Partition;
using immlab::parse_partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an immlab::Error";
  return Errc::internal;
}

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= n; ++s)
    for (auto& p : immlab::partitions_of(s)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Partition, ParseAcceptsCanonicalForms) {
  EXPECT_EQ(parse_partition("4,2,1"), P({4, 2, 1}));
  EXPECT_EQ(parse_partition("[4,2,1]"), P({4, 2, 1}));
  EXPECT_EQ(parse_partition(" 3, 3 "), P({3, 3}));
  EXPECT_TRUE(parse_partition("").empty());
  EXPECT_TRUE(parse_partition("[]").empty());
}

TEST(Partition, ParseRejectsMalformedInput) {
  for (const char* bad : {"2,3", "0", "1,0", "-1", "a", "1,,1", "1,", "[2,1", "1.5"})
    EXPECT_EQ(error_code([&] { parse_partition(bad); }), Errc::malformed_partition) << bad;
}

TEST(Partition, ShapeAccessors) {
  const auto lambda = P({5, 1, 1});
  EXPECT_EQ(lambda.size(), 7);
  EXPECT_EQ(lambda.length(), 3);
  EXPECT_EQ(lambda.width(), 5);
  EXPECT_EQ(lambda.part(4), 0);
  const Partition empty;
  EXPECT_EQ(empty.size(), 0);
  EXPECT_EQ(empty.length(), 0);
  EXPECT_EQ(empty.width(), 0);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(P({3, 1})), P({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition::column(5)), Partition::row(5));
  EXPECT_TRUE(conjugate(Partition()).empty());
  for (const auto& lambda : all_up_to(12)) EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
}

TEST(Partition, PartitionCounts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(immlab::partitions_of(n).size(), static_cast<std::size_t>(expected[n]));
}

TEST(Separation, Examples) {
  auto hook = separation(P({5, 1, 1}));
  EXPECT_EQ(hook.k, 4);
  EXPECT_EQ(hook.indices, std::vector<int>{1});
  auto rect = separation(P({3, 3}));
  EXPECT_EQ(rect.k, 3);
  EXPECT_EQ(rect.indices, std::vector<int>{2});
  auto stair = separation(P({4, 3, 2, 1}));
  EXPECT_EQ(stair.k, 1);
  EXPECT_EQ(stair.indices, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(error_code([] { separation(Partition()); }), Errc::empty_partition);
}

TEST(Separation, IndicesAchieveMaximum) {
  for (const auto& lambda : all_up_to(10)) {
    if (lambda.empty()) continue;
    const auto s = separation(lambda);
    int best = 0;
    for (int i = 1; i <= lambda.length(); ++i) best = std::max(best, lambda.part(i) - lambda.part(i + 1));
    EXPECT_EQ(s.k, best);
    ASSERT_FALSE(s.indices.empty());
    EXPECT_TRUE(std::is_sorted(s.indices.begin(), s.indices.end()));
    for (int i : s.indices) EXPECT_EQ(lambda.part(i) - lambda.part(i + 1), s.k);
  }
}

TEST(Strips, HorizontalExamples) {
  EXPECT_EQ(horizontal_strip_removals(P({2, 1}), 1), (std::vector<Partition>{P({2}), P({1, 1})}));
  EXPECT_EQ(horizontal_strip_removals(P({3, 1}), 3), std::vector<Partition>{P({1})});
  EXPECT_TRUE(horizontal_strip_removals(P({2, 2}), 3).empty());
  EXPECT_EQ(horizontal_strip_removals(P({2, 2}), 0), std::vector<Partition>{P({2, 2})});
  EXPECT_EQ(error_code([] { horizontal_strip_removals(P({2, 1}), 4); }), Errc::size_out_of_range);
}

TEST(Strips, VerticalExamples) {
  EXPECT_EQ(vertical_strip_removals(P({2, 1}), 1), (std::vector<Partition>{P({2}), P({1, 1})}));
  EXPECT_EQ(vertical_strip_removals(P({2, 2}), 2), std::vector<Partition>{P({1, 1})});
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= 4; ++i) {
      std::vector<int> hook{n};
      hook.insert(hook.end(), static_cast<std::size_t>(i), 1);
      EXPECT_EQ(vertical_strip_removals(P(hook), i + 1), std::vector<Partition>{Partition::row(n - 1)});
    }
  EXPECT_EQ(error_code([] { vertical_strip_removals(P({1}), 2); }), Errc::size_out_of_range);
}

TEST(Strips, RemovingTheFirstRowIsUnique) {
  for (const auto& lambda : all_up_to(10)) {
    if (lambda.empty()) continue;
    const Partition rest(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
    EXPECT_EQ(horizontal_strip_removals(lambda, lambda.width()), std::vector<Partition>{rest}) << lambda.to_string();
  }
}

// Box-level oracle: every μ ⊆ λ of the right size whose skew shape is a strip.
TEST(Strips, MatchBoxLevelOracle) {
  for (const auto& lambda : all_up_to(8))
    for (int q = 0; q <= lambda.size(); ++q) {
      std::vector<Partition> h, v;
      for (const auto& mu : immlab::partitions_of(lambda.size() - q)) {
        if (oracle::is_horizontal_strip(lambda, mu)) h.push_back(mu);
        if (oracle::is_vertical_strip(lambda, mu)) v.push_back(mu);
      }
      auto sorted = [](std::vector<Partition> x) {
        std::sort(x.begin(), x.end(), std::greater<>());
        return x;
      };
      EXPECT_EQ(horizontal_strip_removals(lambda, q), sorted(h)) << lambda.to_string() << " q=" << q;
      EXPECT_EQ(vertical_strip_removals(lambda, q), sorted(v)) << lambda.to_string() << " q=" << q;

      std::vector<Partition> via_conjugate;
      for (const auto& mu : horizontal_strip_removals(conjugate(lambda), q)) via_conjugate.push_back(conjugate(mu));
      EXPECT_EQ(vertical_strip_removals(lambda, q), sorted(via_conjugate));
    }
}

TEST(SkewHooks, Examples) {
  // (2,1) is a 2-core: no border strip of two boxes leaves a partition.
  EXPECT_TRUE(skew_hook_removals(P({2, 1}), 2).empty());
  for (int q = 1; q <= 6; ++q) {
    EXPECT_EQ(skew_hook_removals(Partition::column(q), q),
              (std::vector<immlab::SkewHookRemoval>{{Partition(), q, q - 1}}));
    EXPECT_EQ(skew_hook_removals(Partition::row(q), q), (std::vector<immlab::SkewHookRemoval>{{Partition(), 1, 0}}));
  }
  EXPECT_EQ(error_code([] { skew_hook_removals(P({2}), 0); }), Errc::size_out_of_range);
  EXPECT_EQ(error_code([] { skew_hook_removals(P({2}), 3); }), Errc::size_out_of_range);
}

// Every reported removal re-inserts as a border strip of the reported height,
// and every border strip found box by box is reported.
TEST(SkewHooks, MatchBorderStripOracle) {
  for (const auto& lambda : all_up_to(9))
    for (int q = 1; q <= lambda.size(); ++q) {
      const auto removals = skew_hook_removals(lambda, q);
      std::set<Partition> reported;
      for (const auto& r : removals) {
        EXPECT_EQ(r.remainder.size(), lambda.size() - q);
        EXPECT_EQ(r.sign_exponent, r.row_span - 1);
        EXPECT_EQ(oracle::border_strip_rows(lambda, r.remainder), r.row_span) << lambda.to_string() << " q=" << q;
        reported.insert(r.remainder);
      }
      EXPECT_EQ(reported.size(), removals.size());
      std::set<Partition> expected;
      for (const auto& eta : immlab::partitions_of(lambda.size() - q))
        if (oracle::border_strip_rows(lambda, eta) > 0) expected.insert(eta);
      EXPECT_EQ(reported, expected) << lambda.to_string() << " q=" << q;
    }
}

TEST(ReductionChain, Examples) {
  using immlab::BlockDescriptor;
  using immlab::BlockKind;
  EXPECT_EQ(reduction_chain(P({3, 1}), 1), (std::vector<BlockDescriptor>{{BlockKind::E, 2}}));
  EXPECT_EQ(reduction_chain(P({4, 4, 4}), 3),
            (std::vector<BlockDescriptor>{{BlockKind::H, 4}, {BlockKind::H, 4}}));
  EXPECT_TRUE(reduction_chain(P({5}), 1).empty());
  // (5,3,3,1), i=2: drop row 1, then the first 3 columns of (3,3,1) = (3,2,2,...).
  EXPECT_EQ(reduction_chain(P({5, 3, 3, 1}), 3),
            (std::vector<BlockDescriptor>{{BlockKind::H, 5}, {BlockKind::H, 3}, {BlockKind::E, 2}}));
  EXPECT_EQ(error_code([] { reduction_chain(P({2, 1}), 3); }), Errc::index_out_of_range);
  EXPECT_EQ(error_code([] { reduction_chain(P({2, 1}), 0); }), Errc::index_out_of_range);
}

TEST(ReductionChain, BlockSizesLeaveTheGap) {
  for (const auto& lambda : all_up_to(10))
    for (int i = 1; i <= lambda.length(); ++i) {
      int total = 0;
      for (const auto& b : reduction_chain(lambda, i)) total += b.size;
      EXPECT_EQ(total + lambda.part(i) - lambda.part(i + 1), lambda.size()) << lambda.to_string() << " i=" << i;
    }
}

TEST(SytCount, Examples) {
  EXPECT_EQ(immlab::syt_count(P({2, 1})), 2u);
  EXPECT_EQ(immlab::syt_count(Partition::row(7)), 1u);
  EXPECT_EQ(immlab::syt_count(Partition::column(7)), 1u);
  EXPECT_EQ(immlab::syt_count(P({3, 2})), 5u);
  EXPECT_EQ(immlab::syt_count(P({4, 4, 4, 4, 4})), 1662804u);  // branching recursion, 20 boxes
}

TEST(SytCount, BranchingRecursion) {
  for (const auto& lambda : all_up_to(10)) {
    if (lambda.empty()) continue;
    std::uint64_t sum = 0;
    for (const auto& mu : horizontal_strip_removals(lambda, 1)) sum += immlab::syt_count(mu);
    EXPECT_EQ(immlab::syt_count(lambda), sum) << lambda.to_string();
  }
}
