#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "fan/fan.hpp"

namespace fan {
namespace {

TEST(TreeCount, KnownValues) {
  EXPECT_EQ(tree_count(2), 1);
  EXPECT_EQ(tree_count(5), 21);
  EXPECT_EQ(tree_count(6), 55);
  EXPECT_EQ(tree_count(20), 39088169);
  EXPECT_EQ(tree_count<std::uint64_t>(20), 39088169u);
  EXPECT_THROW(tree_count(1), Error);
}

TEST(TreeCount, MatchesOracle) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(tree_count(n), oracle::enumerate_all(n).size()) << n;
}

TEST(TreeCount, StageIdentity) {
  const FibTable<> fib(30);
  for (int n = 5; n <= 30; ++n)
    EXPECT_EQ(fib.trees(n), 2 * fib.trees(n - 1) + 2 * fib.trees(n - 2) - fib.trees(n - 3)) << n;
}

TEST(TreeCount, NativeAndUnboundedAgree) {
  const FibTable<> big(kMaxNativeN);
  const FibTable<std::uint64_t> native(kMaxNativeN);
  for (int n = 2; n <= kMaxNativeN; ++n) EXPECT_EQ(big.trees(n), BigInt(native.trees(n))) << n;
  EXPECT_THROW(FibTable<std::uint64_t>(kMaxNativeN + 1), std::overflow_error);
  // f_92
  EXPECT_EQ(native.trees(kMaxNativeN), 7540113804746346429ULL);
}

TEST(BaseTables, RederivedFromGenerator) {
  for (int k = 2; k <= 4; ++k) {
    const auto l = list(k);
    const auto table = detail::base_list(k);
    ASSERT_EQ(l.size(), table.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      std::uint8_t mask = 0;
      for (std::size_t j = 0; j < edge_count(k); ++j)
        if (l[i].contains(edge_at(k, j))) mask |= static_cast<std::uint8_t>(1u << j);
      EXPECT_EQ(table[i], mask) << "k=" << k << " i=" << i;
    }
  }
}

TEST(Rank, WorkedExample) {
  const auto t = parse_tree(7, "2,3;3,4;4,5;5,inf;6,inf;6,7");
  EXPECT_EQ(rank(7, t), 24);
  EXPECT_EQ(rank<std::uint64_t>(7, t), 24u);
}

TEST(Rank, Endpoints) {
  EXPECT_EQ(rank(2, path_tree(2)), 1);
  EXPECT_EQ(rank(5, path_tree(5)), 1);
  EXPECT_EQ(rank(5, last_tree(5)), 21);
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(rank(n, path_tree(n)), 1) << n;
    EXPECT_EQ(rank(n, last_tree(n)), tree_count(n)) << n;
  }
}

TEST(Rank, RejectsNonTrees) {
  auto bad = SpanningTree::from_edges(5, {{v(2), v(3)}, {v(2), kHub}, {v(3), v(4)}, {v(4), kHub}});
  try {
    rank(5, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASpanningTree);
  }
  EXPECT_THROW(rank(6, path_tree(5)), Error);
}

TEST(Unrank, WorkedExample) {
  const auto t = unrank(7, BigInt(24));
  EXPECT_EQ(t, SpanningTree::from_edges(7, {{v(6), v(7)}, {v(6), kHub}, {v(4), v(5)}, {v(5), kHub}, {v(2), v(3)}, {v(3), v(4)}}));
  EXPECT_EQ(serialize_tree(t), "2,3;3,4;4,5;5,inf;6,7;6,inf");
  EXPECT_EQ(serialize_tree(unrank(2, BigInt(1))), "2,inf");
}

TEST(Unrank, OutOfRange) {
  for (int r : {0, 56}) {
    try {
      unrank(6, BigInt(r));
      FAIL() << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RankOutOfRange);
    }
  }
  EXPECT_THROW(unrank<std::uint64_t>(6, 0), Error);
  EXPECT_EQ(unrank(6, BigInt(55)), last_tree(6));
}

TEST(RankUnrank, RoundTripAgainstListing) {
  for (int n = 2; n <= 10; ++n) {
    const FibTable<> fib(n);
    const auto l = list(n);
    for (std::size_t i = 0; i < l.size(); ++i) {
      const BigInt r(i + 1);
      ASSERT_EQ(rank(fib, n, l[i]), r) << "n=" << n << " tree " << l[i];
      ASSERT_EQ(unrank(fib, n, r), l[i]) << "n=" << n << " rank " << r;
    }
  }
}

TEST(RankUnrank, NativeMatchesUnbounded) {
  for (int n = 2; n <= 12; ++n) {
    const FibTable<std::uint64_t> fib(n);
    std::uint64_t r = 0;
    generate(n, [&](const SpanningTree& t, std::optional<EdgeMove>) {
      ++r;
      ASSERT_EQ(rank(fib, n, t), r);
      ASSERT_EQ(BigInt(rank(fib, n, t)), rank(n, t));
      ASSERT_EQ(unrank(fib, n, r), t);
    });
  }
}

TEST(RankUnrank, LargeN) {
  // Beyond 64 bits: unrank/rank stay inverse at scattered ranks.
  const int n = 120;
  const FibTable<> fib(n);
  const BigInt total = fib.trees(n);
  EXPECT_GT(total, BigInt(std::numeric_limits<std::uint64_t>::max()));
  const std::vector<BigInt> probes{BigInt(1), BigInt(2), BigInt(total / 3), BigInt(total / 2 + 7), BigInt(total - 1), total};
  for (const BigInt& r : probes) {
    const auto t = unrank(fib, n, r);
    ASSERT_TRUE(t.is_spanning_tree());
    EXPECT_EQ(rank(fib, n, t), r);
  }
  EXPECT_EQ(unrank(fib, n, total), last_tree(n));
  EXPECT_EQ(rank(fib, n, path_tree(n)), 1);
}

TEST(RankUnrank, StageBoundaries) {
  for (int n = 5; n <= 8; ++n) {
    const FibTable<std::uint64_t> fib(n);
    const std::uint64_t t1 = fib.trees(n - 1);
    const Edge e1{v(n - 1), v(n)}, e2{v(n), kHub};
    for (std::uint64_t r = 1; r <= fib.trees(n); ++r) {
      const auto t = unrank(fib, n, r);
      if (r <= t1) {
        EXPECT_TRUE(t.contains(e1) && !t.contains(e2));
      } else if (r <= 2 * t1) {
        EXPECT_TRUE(t.contains(e2) && !t.contains(e1));
      } else {
        EXPECT_TRUE(t.contains(e1) && t.contains(e2));
      }
    }
  }
}

}  // namespace
}  // namespace fan
