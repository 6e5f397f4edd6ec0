#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "fan/error.hpp"

namespace fan {

// A vertex of the fan graph F_n: a path vertex v_2..v_n or the hub.
// The hub compares greater than every path vertex.
class Vertex {
 public:
  constexpr Vertex() = default;

  static constexpr Vertex finite(int k) { return Vertex(k); }
  static constexpr Vertex hub() { return Vertex(kHubValue); }

  constexpr bool is_hub() const { return value_ == kHubValue; }
  // Path label k; meaningless for the hub.
  constexpr int label() const { return value_; }

  constexpr auto operator<=>(const Vertex&) const = default;

  std::string to_string() const { return is_hub() ? std::string("inf") : std::to_string(value_); }

 private:
  static constexpr int kHubValue = std::numeric_limits<int>::max();
  constexpr explicit Vertex(int v) : value_(v) {}
  int value_ = 0;
};

inline constexpr Vertex kHub = Vertex::hub();

constexpr Vertex v(int k) { return Vertex::finite(k); }

inline std::ostream& operator<<(std::ostream& os, Vertex x) { return os << x.to_string(); }

// True when x names a vertex of F_n.
constexpr bool in_fan(int n, Vertex x) { return x.is_hub() || (x.label() >= 2 && x.label() <= n); }

// Unordered edge stored with lo < hi.
struct Edge {
  Vertex lo;
  Vertex hi;

  static constexpr Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  constexpr auto operator<=>(const Edge&) const = default;

  std::string to_string() const { return lo.to_string() + "," + hi.to_string(); }
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.to_string(); }

// F_n has n-2 path edges and n-1 spokes.
constexpr std::size_t edge_count(int n) { return static_cast<std::size_t>(2 * n - 3); }

constexpr bool is_fan_edge(int n, Vertex a, Vertex b) {
  if (a == b || !in_fan(n, a) || !in_fan(n, b)) return false;
  const Edge e = Edge::of(a, b);
  if (e.hi.is_hub()) return true;
  return e.hi.label() == e.lo.label() + 1;
}

constexpr bool is_fan_edge(int n, const Edge& e) { return is_fan_edge(n, e.lo, e.hi); }

// Edges are indexed by their (lo, hi) lexicographic rank:
//   {2,3}=0, {2,inf}=1, {3,4}=2, {3,inf}=3, ..., {n-1,inf}=2n-5, {n,inf}=2n-4.
constexpr std::size_t edge_index_unchecked(int n, const Edge& e) {
  if (e.lo.label() == n) return static_cast<std::size_t>(2 * n - 4);
  return static_cast<std::size_t>(2 * (e.lo.label() - 2) + (e.hi.is_hub() ? 1 : 0));
}

inline std::size_t canonical_edge_index(int n, const Edge& e) {
  if (!is_fan_edge(n, e)) throw Error(ErrorCode::NotAnEdge, "{" + e.to_string() + "} is not an edge of F_" + std::to_string(n));
  return edge_index_unchecked(n, e);
}

inline std::size_t canonical_edge_index(int n, Vertex a, Vertex b) { return canonical_edge_index(n, Edge::of(a, b)); }

constexpr Edge edge_at(int n, std::size_t index) {
  const int k = static_cast<int>(index / 2) + 2;
  if (index % 2 == 1 || k == n) return Edge{v(k), kHub};
  return Edge{v(k), v(k + 1)};
}

}  // namespace fan
