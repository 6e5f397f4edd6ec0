#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "fan/spanning_tree.hpp"

namespace fan {

// Greedy pivot search state. Memory grows as O(t_n * n) through the visited
// set, so this engine is meant for verification at small n.
class GreedyState {
 public:
  explicit GreedyState(SpanningTree start) : current_(std::move(start)) { visited_.insert(current_.bits()); }

  const SpanningTree& current() const { return current_; }
  std::size_t emitted() const { return visited_.size(); }
  bool visited(const SpanningTree& t) const { return visited_.contains(t.bits()); }

  // Marks t visited without moving to it; used to seed a mid-listing state.
  void mark_visited(const SpanningTree& t) { visited_.insert(t.bits()); }

  // Smallest move (pivot, then removed, then added endpoint; hub last)
  // leading to an unvisited spanning tree, or nullopt when exhausted.
  std::optional<EdgeMove> next_move() const {
    const int n = current_.n();
    std::vector<Vertex> pivots;
    pivots.reserve(static_cast<std::size_t>(n));
    for (int k = 2; k <= n; ++k) pivots.push_back(v(k));
    pivots.push_back(kHub);

    for (Vertex u : pivots) {
      const std::vector<Vertex> present = current_.neighbors(u);
      if (present.empty()) continue;
      const std::vector<Vertex> candidates = fan_neighbors(n, u);
      for (Vertex removed : present) {
        for (Vertex added : candidates) {
          if (added == removed || current_.contains(u, added)) continue;
          const EdgeMove m{u, removed, added};
          if (!is_valid_tree_move(current_, m)) continue;
          if (visited_.contains(apply_move(current_, m).bits())) continue;
          return m;
        }
      }
    }
    return std::nullopt;
  }

  // Applies next_move(); false once exhausted.
  bool advance(EdgeMove* taken = nullptr) {
    auto m = next_move();
    if (!m) return false;
    current_.apply(*m);
    visited_.insert(current_.bits());
    if (taken) *taken = *m;
    return true;
  }

  // Neighbours of u in F_n itself, ascending.
  static std::vector<Vertex> fan_neighbors(int n, Vertex u) {
    std::vector<Vertex> out;
    if (u.is_hub()) {
      for (int k = 2; k <= n; ++k) out.push_back(v(k));
      return out;
    }
    if (u.label() > 2) out.push_back(v(u.label() - 1));
    if (u.label() < n) out.push_back(v(u.label() + 1));
    out.push_back(kHub);
    return out;
  }

 private:
  SpanningTree current_;
  std::unordered_set<EdgeBits, EdgeBitsHash> visited_;
};

inline std::optional<EdgeMove> next_greedy_move(const GreedyState& state) { return state.next_move(); }

// start, then each greedy successor until exhaustion or `limit` trees.
inline std::vector<SpanningTree> greedy_listing(const SpanningTree& start, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<SpanningTree> out;
  if (limit && *limit == 0) return out;
  GreedyState state(start);
  out.push_back(state.current());
  while ((!limit || out.size() < *limit) && state.advance()) out.push_back(state.current());
  return out;
}

// Streaming variant: sink(tree, move) where move is nullopt for the start tree.
template <class Sink>
std::size_t greedy_stream(const SpanningTree& start, Sink&& sink, std::optional<std::size_t> limit = std::nullopt) {
  if (limit && *limit == 0) return 0;
  GreedyState state(start);
  sink(state.current(), std::optional<EdgeMove>{});
  std::size_t count = 1;
  EdgeMove m{};
  while ((!limit || count < *limit) && state.advance(&m)) {
    sink(state.current(), std::optional<EdgeMove>{m});
    ++count;
  }
  return count;
}

}  // namespace fan
