#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fan/error.hpp"
#include "fan/vertex.hpp"

namespace fan {

// Fixed-width membership bitset over the canonical edge indexing of F_n.
class EdgeBits {
 public:
  EdgeBits() = default;
  explicit EdgeBits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const EdgeBits&) const = default;

  std::size_t hash() const {
    std::size_t h = width_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeBitsHash {
  std::size_t operator()(const EdgeBits& b) const { return b.hash(); }
};

// Delete {pivot, removed}, add {pivot, added}. The defaulted ordering is the
// greedy priority: pivot first, then removed endpoint, then added endpoint.
struct EdgeMove {
  Vertex pivot;
  Vertex removed;
  Vertex added;

  constexpr auto operator<=>(const EdgeMove&) const = default;

  constexpr EdgeMove inverse() const { return {pivot, added, removed}; }
  constexpr Edge removed_edge() const { return Edge::of(pivot, removed); }
  constexpr Edge added_edge() const { return Edge::of(pivot, added); }

  // "-u,v +u,w", hub as inf.
  std::string to_string() const {
    return "-" + pivot.to_string() + "," + removed.to_string() + " +" + pivot.to_string() + "," + added.to_string();
  }
};

inline std::ostream& operator<<(std::ostream& os, const EdgeMove& m) { return os << m.to_string(); }

constexpr std::strong_ordering compare_moves(const EdgeMove& a, const EdgeMove& b) { return a <=> b; }

// Edge set of F_n held twice: adjacency lists keyed by the smaller endpoint
// (the hub never owns an edge) and a membership bitset. Every mutation keeps
// both in step. Whether the edge set actually is a spanning tree is not
// enforced; see is_spanning_tree().
class SpanningTree {
 public:
  struct Neighbors {
    std::array<Vertex, 3> items{};
    std::uint8_t size = 0;

    std::span<const Vertex> view() const { return {items.data(), size}; }
  };

  SpanningTree() = default;

  // n isolated vertices.
  static SpanningTree empty(int n) {
    require_n(n);
    SpanningTree t;
    t.n_ = n;
    t.adj_.resize(static_cast<std::size_t>(n) + 1);
    t.bits_ = EdgeBits(edge_count(n));
    return t;
  }

  static SpanningTree from_edges(int n, std::span<const Edge> edges) {
    SpanningTree t = empty(n);
    for (const auto& e : edges) t.add_edge(e);
    return t;
  }

  static SpanningTree from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int n() const { return n_; }
  std::size_t size() const { return edges_; }
  const EdgeBits& bits() const { return bits_; }

  bool contains(const Edge& e) const { return is_fan_edge(n_, e) && bits_.test(edge_index_unchecked(n_, e)); }
  bool contains(Vertex a, Vertex b) const { return contains(Edge::of(a, b)); }

  void add_edge(const Edge& e) {
    const std::size_t i = canonical_edge_index(n_, e);
    if (bits_.test(i)) throw Error(ErrorCode::DuplicateEdge, "edge {" + e.to_string() + "} already present");
    bits_.set(i);
    auto& list = adj_[static_cast<std::size_t>(e.lo.label())];
    list.items[list.size++] = e.hi;
    ++edges_;
  }

  void remove_edge(const Edge& e) {
    const std::size_t i = canonical_edge_index(n_, e);
    if (!bits_.test(i)) throw Error(ErrorCode::IllegalMove, "edge {" + e.to_string() + "} not present");
    bits_.reset(i);
    auto& list = adj_[static_cast<std::size_t>(e.lo.label())];
    for (std::uint8_t j = 0; j < list.size; ++j) {
      if (list.items[j] == e.hi) {
        list.items[j] = list.items[--list.size];
        break;
      }
    }
    --edges_;
  }

  // In-place move; constant time. Throws IllegalMove when {pivot,removed} is
  // absent or {pivot,added} already present.
  void apply(const EdgeMove& m) {
    if (m.removed == m.added) throw Error(ErrorCode::IllegalMove, "removed and added endpoints coincide");
    if (!is_fan_edge(n_, m.pivot, m.removed) || !is_fan_edge(n_, m.pivot, m.added))
      throw Error(ErrorCode::IllegalMove, "move " + m.to_string() + " does not use edges of F_" + std::to_string(n_));
    if (!contains(m.pivot, m.removed) || contains(m.pivot, m.added))
      throw Error(ErrorCode::IllegalMove, "move " + m.to_string() + " does not apply to this tree");
    remove_edge(m.removed_edge());
    add_edge(m.added_edge());
  }

  // Edges owned by finite vertex u (those whose other endpoint is larger).
  std::span<const Vertex> stored_neighbors(int u) const { return adj_[static_cast<std::size_t>(u)].view(); }

  // All neighbours of x in the tree, ascending.
  std::vector<Vertex> neighbors(Vertex x) const {
    std::vector<Vertex> out;
    if (x.is_hub()) {
      for (int k = 2; k <= n_; ++k)
        if (bits_.test(edge_index_unchecked(n_, Edge{v(k), kHub}))) out.push_back(v(k));
      return out;
    }
    const int k = x.label();
    if (k > 2 && bits_.test(edge_index_unchecked(n_, Edge{v(k - 1), x}))) out.push_back(v(k - 1));
    if (k < n_ && bits_.test(edge_index_unchecked(n_, Edge{x, v(k + 1)}))) out.push_back(v(k + 1));
    if (bits_.test(edge_index_unchecked(n_, Edge{x, kHub}))) out.push_back(kHub);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t i = 0; i < bits_.width(); ++i)
      if (bits_.test(i)) out.push_back(edge_at(n_, i));
    return out;
  }

  bool is_spanning_tree() const {
    if (edges_ != static_cast<std::size_t>(n_ - 1)) return false;
    // Union-find over labels 2..n plus the hub at slot 1.
    std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto slot = [](Vertex x) { return x.is_hub() ? 1 : x.label(); };
    for (std::size_t i = 0; i < bits_.width(); ++i) {
      if (!bits_.test(i)) continue;
      const Edge e = edge_at(n_, i);
      const int a = find(slot(e.lo)), b = find(slot(e.hi));
      if (a == b) return false;
      parent[a] = b;
    }
    return true;  // n-1 edges and acyclic over n vertices
  }

  // Adjacency lists and bitset describe the same edge set.
  bool coherent() const {
    std::size_t listed = 0;
    for (int u = 2; u <= n_; ++u) {
      for (Vertex w : stored_neighbors(u)) {
        if (!(v(u) < w) || !is_fan_edge(n_, v(u), w) || !bits_.test(edge_index_unchecked(n_, Edge{v(u), w}))) return false;
        ++listed;
      }
    }
    return listed == edges_ && bits_.count() == edges_;
  }

  bool operator==(const SpanningTree& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  int n_ = 0;
  std::size_t edges_ = 0;
  std::vector<Neighbors> adj_;
  EdgeBits bits_;
};

// P_n: the path hub, v_2, v_3, ..., v_n.
inline SpanningTree path_tree(int n) {
  SpanningTree t = SpanningTree::empty(n);
  t.add_edge({v(2), kHub});
  for (int k = 2; k < n; ++k) t.add_edge({v(k), v(k + 1)});
  return t;
}

// All spokes.
inline SpanningTree star_tree(int n) {
  SpanningTree t = SpanningTree::empty(n);
  for (int k = 2; k <= n; ++k) t.add_edge({v(k), kHub});
  return t;
}

// The path hub, v_n, v_{n-1}, ..., v_2.
inline SpanningTree reversed_path_tree(int n) {
  SpanningTree t = SpanningTree::empty(n);
  t.add_edge({v(n), kHub});
  for (int k = 2; k < n; ++k) t.add_edge({v(k), v(k + 1)});
  return t;
}

inline SpanningTree apply_move(SpanningTree t, const EdgeMove& m) {
  t.apply(m);
  return t;
}

// True iff t - {pivot,removed} + {pivot,added} is a spanning tree, i.e.
// `added` lies outside the component of `pivot` once {pivot,removed} is cut.
inline bool is_valid_tree_move(const SpanningTree& t, const EdgeMove& m) {
  apply_move(t, m);  // precondition check only
  const int n = t.n();
  auto slot = [](Vertex x) { return x.is_hub() ? std::size_t{1} : static_cast<std::size_t>(x.label()); };
  const Edge cut = m.removed_edge();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{m.pivot};
  seen[slot(m.pivot)] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x)) {
      if (Edge::of(x, y) == cut || seen[slot(y)]) continue;
      if (y == m.added) return false;
      seen[slot(y)] = 1;
      stack.push_back(y);
    }
  }
  return true;
}

// "lo,hi;lo,hi;..." in canonical edge order, hub written as inf.
inline std::string serialize_tree(const SpanningTree& t) {
  std::string out;
  for (const Edge& e : t.edges()) {
    if (!out.empty()) out += ';';
    out += e.to_string();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const SpanningTree& t) { return os << serialize_tree(t); }

namespace detail {

inline Vertex parse_vertex(std::string_view tok) {
  if (tok == "inf") return kHub;
  int k = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (tok.empty() || ec != std::errc{} || ptr != last)
    throw Error(ErrorCode::MalformedToken, "bad vertex token '" + std::string(tok) + "'");
  return v(k);
}

}  // namespace detail

// Inverse of serialize_tree; edges may appear in any order.
inline SpanningTree parse_tree(int n, std::string_view s) {
  SpanningTree t = SpanningTree::empty(n);
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(s.find(';', pos), s.size());
    const std::string_view item = s.substr(pos, end - pos);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos || item.find(',', comma + 1) != std::string_view::npos)
      throw Error(ErrorCode::MalformedToken, "bad edge token '" + std::string(item) + "'");
    const Vertex a = detail::parse_vertex(item.substr(0, comma));
    const Vertex b = detail::parse_vertex(item.substr(comma + 1));
    if (!is_fan_edge(n, a, b))
      throw Error(ErrorCode::NotAnEdge, "{" + std::string(item) + "} is not an edge of F_" + std::to_string(n));
    t.add_edge(Edge::of(a, b));  // DuplicateEdge on repeats
    if (end == s.size()) break;
    pos = end + 1;
  }
  if (t.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::WrongEdgeCount,
                "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(t.size()));
  if (!t.is_spanning_tree()) throw Error(ErrorCode::NotATree, "edge set contains a cycle");
  return t;
}

}  // namespace fan

template <>
struct std::hash<fan::EdgeBits> {
  std::size_t operator()(const fan::EdgeBits& b) const { return b.hash(); }
};
