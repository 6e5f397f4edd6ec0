#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "fan/spanning_tree.hpp"

// Brute-force ground truth. Nothing here touches the generators or the
// tree-validity helpers of SpanningTree.
namespace fan::oracle {

inline constexpr int kMaxOracleN = 14;

namespace detail {

// Union-find acceptance of an (n-1)-edge subset given as a bitmask over the
// canonical edge indexing.
inline bool mask_is_spanning_tree(int n, std::uint64_t mask) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const int hub = n + 1;
  int joined = 0;
  for (int i = 0; i < 2 * n - 3; ++i) {
    if (!(mask >> i & 1u)) continue;
    // {k,k+1} at 2(k-2), {k,hub} at 2(k-2)+1, {n,hub} at 2n-4.
    const int k = i / 2 + 2;
    const int a = k;
    const int b = (i % 2 == 1 || k == n) ? hub : k + 1;
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
    ++joined;
  }
  return joined == n - 1;
}

inline SpanningTree tree_from_mask(int n, std::uint64_t mask) {
  SpanningTree t = SpanningTree::empty(n);
  for (int i = 0; i < 2 * n - 3; ++i)
    if (mask >> i & 1u) t.add_edge(edge_at(n, static_cast<std::size_t>(i)));
  return t;
}

inline bool is_pivot_step(const SpanningTree& a, const SpanningTree& b) {
  std::vector<Edge> gone, came;
  for (const Edge& e : a.edges())
    if (!b.contains(e)) gone.push_back(e);
  for (const Edge& e : b.edges())
    if (!a.contains(e)) came.push_back(e);
  if (gone.size() != 1 || came.size() != 1) return false;
  const Edge x = gone[0], y = came[0];
  return x.lo == y.lo || x.lo == y.hi || x.hi == y.lo || x.hi == y.hi;
}

inline bool independent_tree_check(const SpanningTree& t) {
  if (t.size() != static_cast<std::size_t>(t.n() - 1)) return false;
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < edge_count(t.n()); ++i)
    if (t.bits().test(i)) mask |= std::uint64_t{1} << i;
  return mask_is_spanning_tree(t.n(), mask);
}

}  // namespace detail

// All spanning trees of F_n by scanning every (n-1)-subset of the 2n-3 edges.
inline std::vector<SpanningTree> enumerate_all(int n) {
  if (n < 2 || n > kMaxOracleN)
    throw Error(ErrorCode::OracleRangeExceeded, "oracle supports 2 <= n <= " + std::to_string(kMaxOracleN));
  const int m = 2 * n - 3;
  const int r = n - 1;
  std::vector<SpanningTree> out;
  // Gosper's hack over r-subsets of m bits, ascending.
  std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (mask < limit) {
    if (detail::mask_is_spanning_tree(n, mask)) out.push_back(detail::tree_from_mask(n, mask));
    const std::uint64_t c = mask & -mask;
    const std::uint64_t rr = mask + c;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
  return out;
}

struct Violation {
  std::size_t index;
  std::string description;
};

struct VerificationReport {
  int n = 0;
  std::size_t tree_total = 0;
  bool distinct = true;
  bool exhaustive = false;
  bool pivot_ok = true;
  std::optional<Violation> first_violation;

  bool ok() const { return distinct && exhaustive && pivot_ok && !first_violation; }
};

// Checks a listing for repeats, pivot steps, and exhaustiveness against
// enumerate_all(n). Violation indices are 0-based positions in the listing.
inline VerificationReport verify_listing(int n, const std::vector<SpanningTree>& listing) {
  VerificationReport rep;
  rep.n = n;
  rep.tree_total = listing.size();
  auto note = [&](std::size_t i, std::string what) {
    if (!rep.first_violation) rep.first_violation = Violation{i, std::move(what)};
  };

  std::unordered_set<EdgeBits, EdgeBitsHash> seen;
  bool all_trees = true;
  for (std::size_t i = 0; i < listing.size(); ++i) {
    const SpanningTree& t = listing[i];
    if (t.n() != n || !detail::independent_tree_check(t)) {
      all_trees = false;
      note(i, "element is not a spanning tree of F_" + std::to_string(n));
      continue;
    }
    if (!seen.insert(t.bits()).second) {
      rep.distinct = false;
      note(i, "repeated tree " + serialize_tree(t));
    }
    if (i > 0 && listing[i - 1].n() == n && !detail::is_pivot_step(listing[i - 1], t)) {
      rep.pivot_ok = false;
      note(i, "not a pivot move: " + serialize_tree(listing[i - 1]) + " -> " + serialize_tree(t));
    }
  }

  const auto all = enumerate_all(n);
  std::unordered_set<EdgeBits, EdgeBitsHash> expected;
  for (const auto& t : all) expected.insert(t.bits());
  rep.exhaustive = all_trees && seen == expected;
  if (!rep.exhaustive)
    note(listing.size(), "listing covers " + std::to_string(seen.size()) + " of " + std::to_string(expected.size()) + " trees");
  return rep;
}

struct ListingComparison {
  bool equal = true;
  std::optional<std::size_t> divergence;  // first index where the listings differ
};

inline ListingComparison listings_equal(const std::vector<SpanningTree>& a, const std::vector<SpanningTree>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i)
    if (!(a[i] == b[i])) return {false, i};
  if (a.size() != b.size()) return {false, common};
  return {};
}

}  // namespace fan::oracle
