#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fan/spanning_tree.hpp"

namespace fan {

using BigInt = boost::multiprecision::cpp_int;

// Largest n whose tree count t_n = f_{2(n-1)} (and the rank arithmetic on it)
// fits in std::uint64_t.
inline constexpr int kMaxNativeN = 47;

// Fibonacci numbers f_1 = f_2 = 1, f_i = f_{i-1} + f_{i-2}, up to f_{2(max_n-1)}.
template <class Int = BigInt>
class FibTable {
 public:
  explicit FibTable(int max_n) : max_n_(max_n) {
    require_n(max_n);
    if constexpr (std::numeric_limits<Int>::is_bounded) {
      if (max_n > kMaxNativeN)
        throw std::overflow_error("tree counts beyond n=" + std::to_string(kMaxNativeN) + " need an unbounded integer type");
    }
    const std::size_t top = static_cast<std::size_t>(2 * (max_n - 1));
    fib_.assign(top + 1, Int(0));
    fib_[1] = 1;
    if (top >= 2) fib_[2] = 1;
    for (std::size_t i = 3; i <= top; ++i) fib_[i] = fib_[i - 1] + fib_[i - 2];
  }

  int max_n() const { return max_n_; }
  const Int& fib(int i) const { return fib_.at(static_cast<std::size_t>(i)); }
  // t_k for 2 <= k <= max_n.
  const Int& trees(int k) const { return fib_.at(static_cast<std::size_t>(2 * (k - 1))); }

 private:
  int max_n_;
  std::vector<Int> fib_;
};

template <class Int = BigInt>
Int tree_count(int n) {
  return FibTable<Int>(n).trees(n);
}

namespace detail {

// LIST(2), LIST(3), LIST(4) as edge masks over the canonical indexing of
// F_k itself (bit i set <=> edge_at(k, i) present). Re-derived from the
// generator in the unit tests.
inline constexpr std::array<std::uint8_t, 1> kList2 = {0b1};
inline constexpr std::array<std::uint8_t, 3> kList3 = {0b011, 0b110, 0b101};
inline constexpr std::array<std::uint8_t, 8> kList4 = {7, 14, 13, 25, 26, 19, 22, 21};

inline std::span<const std::uint8_t> base_list(int k) {
  switch (k) {
    case 2: return kList2;
    case 3: return kList3;
    default: return kList4;
  }
}

// Mask of T restricted to F_k, for k <= 4.
inline std::uint8_t base_mask(const EdgeBits& bits, int n, int k) {
  std::uint8_t mask = 0;
  for (std::size_t i = 0; i < edge_count(k); ++i)
    if (bits.test(edge_index_unchecked(n, edge_at(k, i)))) mask |= static_cast<std::uint8_t>(1u << i);
  return mask;
}

template <class Int>
Int rank_rec(const FibTable<Int>& fib, EdgeBits& bits, int n, int k) {
  if (k <= 4) {
    const std::uint8_t mask = base_mask(bits, n, k);
    const auto table = base_list(k);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] == mask) return Int(i + 1);
    throw Error(ErrorCode::NotASpanningTree, "restriction to F_" + std::to_string(k) + " is not a spanning tree");
  }
  auto has = [&](Edge e) { return bits.test(edge_index_unchecked(n, e)); };
  const Edge e1{v(k - 1), v(k)}, e2{v(k), kHub}, e3{v(k - 2), kHub}, e4{v(k - 2), v(k - 1)};
  const Int& t1 = fib.trees(k - 1);
  const Int& t2 = fib.trees(k - 2);
  if (has(e1) && has(e2)) {
    if (has(e3)) return 2 * t1 + 2 * t2 - rank_rec(fib, bits, n, k - 2) + 1;  // S4
    if (has(e4)) {                                                        // S3, variable edge
      bits.reset(edge_index_unchecked(n, e4));
      bits.set(edge_index_unchecked(n, e3));
    }
    return 2 * t1 + rank_rec(fib, bits, n, k - 2);  // S3
  }
  if (has(e2)) return 2 * t1 - rank_rec(fib, bits, n, k - 1) + 1;  // S2
  return rank_rec(fib, bits, n, k - 1);                             // S1
}

template <class Int>
void unrank_rec(const FibTable<Int>& fib, SpanningTree& t, int k, Int r, bool var_edge) {
  const Edge hub_edge = var_edge ? Edge{v(k), v(k + 1)} : Edge{v(k), kHub};
  if (k <= 4) {
    const std::uint8_t mask = base_list(k)[static_cast<std::size_t>(r) - 1];
    for (std::size_t i = 0; i < edge_count(k); ++i) {
      if (!(mask & (1u << i))) continue;
      const Edge e = edge_at(k, i);
      t.add_edge(e == Edge{v(k), kHub} ? hub_edge : e);
    }
    return;
  }
  const Edge e1{v(k - 1), v(k)};
  const Int& t1 = fib.trees(k - 1);
  const Int& t2 = fib.trees(k - 2);
  if (r <= t1) {  // S1
    t.add_edge(e1);
    unrank_rec(fib, t, k - 1, std::move(r), false);
  } else if (r <= 2 * t1) {  // S2
    t.add_edge(hub_edge);
    unrank_rec(fib, t, k - 1, Int(2 * t1 - r + 1), false);
  } else if (r <= 2 * t1 + t2) {  // S3
    t.add_edge(e1);
    t.add_edge(hub_edge);
    unrank_rec(fib, t, k - 2, Int(r - 2 * t1), true);
  } else {  // S4
    t.add_edge(e1);
    t.add_edge(hub_edge);
    unrank_rec(fib, t, k - 2, Int(2 * t1 + 2 * t2 - r + 1), false);
  }
}

}  // namespace detail

// 1-indexed position of t in LIST(n). O(n) steps on integers up to t_n.
template <class Int = BigInt>
Int rank(const FibTable<Int>& fib, int n, const SpanningTree& t) {
  require_n(n);
  if (t.n() != n || !t.is_spanning_tree())
    throw Error(ErrorCode::NotASpanningTree, "'" + serialize_tree(t) + "' is not a spanning tree of F_" + std::to_string(n));
  EdgeBits bits = t.bits();
  return detail::rank_rec(fib, bits, n, n);
}

template <class Int = BigInt>
Int rank(int n, const SpanningTree& t) {
  require_n(n);
  return rank(FibTable<Int>(n), n, t);
}

// Tree at 1-indexed position r of LIST(n).
template <class Int = BigInt>
SpanningTree unrank(const FibTable<Int>& fib, int n, const Int& r) {
  require_n(n);
  if (r < 1 || r > fib.trees(n))
    throw Error(ErrorCode::RankOutOfRange, "rank must lie in [1, t_" + std::to_string(n) + "]");
  SpanningTree t = SpanningTree::empty(n);
  detail::unrank_rec(fib, t, n, r, false);
  return t;
}

template <class Int = BigInt>
SpanningTree unrank(int n, const Int& r) {
  require_n(n);
  return unrank(FibTable<Int>(n), n, r);
}

}  // namespace fan
