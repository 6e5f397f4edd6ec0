#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "fan/fan.hpp"

namespace fan::oracle {
namespace {

TEST(EnumerateAll, SmallCounts) {
  EXPECT_EQ(enumerate_all(2).size(), 1u);
  EXPECT_EQ(enumerate_all(5).size(), 21u);
  EXPECT_EQ(enumerate_all(10).size(), 2584u);
}

TEST(EnumerateAll, MatchesFibonacci) {
  std::vector<std::uint64_t> f{0, 1, 1};
  while (f.size() < 23) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(enumerate_all(n).size(), f[2 * (n - 1)]) << n;
}

TEST(EnumerateAll, EveryElementIsATree) {
  for (const auto& t : enumerate_all(8)) {
    EXPECT_TRUE(t.is_spanning_tree());
    EXPECT_TRUE(t.coherent());
  }
}

TEST(EnumerateAll, Range) {
  for (int n : {1, 15}) {
    try {
      enumerate_all(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OracleRangeExceeded);
    }
  }
}

TEST(VerifyListing, AcceptsGeneratedListings) {
  const auto rep = verify_listing(6, list(6));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.tree_total, 55u);
  EXPECT_TRUE(verify_listing(2, {path_tree(2)}).ok());
  for (int n = 2; n <= 12; ++n) EXPECT_TRUE(verify_listing(n, list(n)).ok()) << n;
  for (int n = 2; n <= 10; ++n) EXPECT_TRUE(verify_listing(n, greedy_listing(path_tree(n))).ok()) << n;
}

TEST(VerifyListing, SwappedTail) {
  auto l = list(5);
  std::swap(l[19], l[20]);
  const auto rep = verify_listing(5, l);
  EXPECT_TRUE(rep.distinct);
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_FALSE(rep.pivot_ok);
  ASSERT_TRUE(rep.first_violation.has_value());
  EXPECT_EQ(rep.first_violation->index, 19u);
}

TEST(VerifyListing, RepeatsAndGaps) {
  auto l = list(5);
  l.pop_back();
  auto rep = verify_listing(5, l);
  EXPECT_TRUE(rep.distinct);
  EXPECT_TRUE(rep.pivot_ok);
  EXPECT_FALSE(rep.exhaustive);

  l = list(5);
  l.push_back(l[19]);
  rep = verify_listing(5, l);
  EXPECT_FALSE(rep.distinct);
  EXPECT_EQ(rep.first_violation->index, 21u);
}

TEST(VerifyListing, NonTreeElementIsAViolation) {
  auto l = list(5);
  l[3] = SpanningTree::from_edges(5, {{v(2), v(3)}, {v(2), kHub}, {v(3), v(4)}, {v(4), kHub}});
  const auto rep = verify_listing(5, l);
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.first_violation.has_value());
  EXPECT_EQ(rep.first_violation->index, 3u);
}

TEST(ListingsEqual, Examples) {
  EXPECT_TRUE(listings_equal(list(7), greedy_listing(path_tree(7))).equal);
  auto rev = list(6);
  std::reverse(rev.begin(), rev.end());
  EXPECT_TRUE(listings_equal(rev_list(6), rev).equal);
  // LIST(5) opens with P_5 and REVLIST(5) with L_5.
  const auto cmp = listings_equal(list(5), rev_list(5));
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.divergence, 0u);
  const auto shorter = listings_equal(list(5), greedy_listing(path_tree(5), 4));
  EXPECT_FALSE(shorter.equal);
  EXPECT_EQ(shorter.divergence, 4u);
}

}  // namespace
}  // namespace fan::oracle
