#pragma once

#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "fan/spanning_tree.hpp"

namespace fan {

struct GenStats {
  std::uint64_t calls = 0;    // invocations of gen/revgen, top level included
  std::uint64_t emitted = 0;  // trees handed to the sink
  int depth = 0;
  int max_depth = 0;
};

// Recursive constant-amortized-time generator of LIST(n) / REVLIST(n).
//
// A single tree T is mutated in place by pivot moves. After each move the sink
// is called as sink(const SpanningTree&, std::optional<EdgeMove>); the move is
// nullopt only for the initial tree. A sink returning bool stops generation
// by returning false. The sink must not re-enter the generator.
template <class Sink>
class Generator {
 public:
  Generator(SpanningTree start, Sink sink) : tree_(std::move(start)), sink_(std::forward<Sink>(sink)) {}

  const SpanningTree& tree() const { return tree_; }
  const GenStats& stats() const { return stats_; }
  bool stopped() const { return stopped_; }

  void emit_initial() { deliver(std::nullopt); }

  // Procedure Gen(k, s1, varEdge).
  void gen(int k, bool s1, bool var_edge) {
    if (stopped_) return;
    Frame frame(stats_);
    if (k == 2) {
      if (var_edge) replace(2, kHub, v(3));
    } else if (k == 3) {
      if (s1) replace(3, v(2), var_edge ? v(4) : kHub);
      replace(2, kHub, v(3));
    } else {
      if (s1) {
        gen(k - 1, true, false);                       // S1
        replace(k, v(k - 1), var_edge ? v(k + 1) : kHub);
      }
      revgen(k - 1, true, false);                      // S2
      replace(k - 1, v(k - 2), v(k));
      gen(k - 2, true, true);                          // S3
      if (k > 4) replace(k - 2, v(k - 1), kHub);
      revgen(k - 2, false, false);                     // S4
    }
  }

  // Procedure RevGen(k, s1, varEdge): Gen's operations undone in reverse.
  void revgen(int k, bool s1, bool var_edge) {
    if (stopped_) return;
    Frame frame(stats_);
    if (k == 2) {
      if (var_edge) replace(2, v(3), kHub);
    } else if (k == 3) {
      replace(2, v(3), kHub);
      if (s1) replace(3, var_edge ? v(4) : kHub, v(2));
    } else {
      gen(k - 2, false, false);                        // S4
      if (k > 4) replace(k - 2, kHub, v(k - 1));
      revgen(k - 2, true, true);                       // S3
      replace(k - 1, v(k), v(k - 2));
      gen(k - 1, true, false);                         // S2
      if (s1) {
        replace(k, var_edge ? v(k + 1) : kHub, v(k - 1));
        revgen(k - 1, true, false);                    // S1
      }
    }
  }

 private:
  struct Frame {
    explicit Frame(GenStats& s) : stats(s) {
      ++stats.calls;
      if (++stats.depth > stats.max_depth) stats.max_depth = stats.depth;
    }
    ~Frame() { --stats.depth; }
    GenStats& stats;
  };

  void replace(int pivot, Vertex old_end, Vertex new_end) {
    if (stopped_) return;
    const Vertex u = v(pivot);
    if (!tree_.contains(u, old_end) || tree_.contains(u, new_end))
      throw Error(ErrorCode::GenInvariantBroken, "cannot apply " + EdgeMove{u, old_end, new_end}.to_string());
    tree_.remove_edge(Edge::of(u, old_end));
    tree_.add_edge(Edge::of(u, new_end));
    deliver(EdgeMove{u, old_end, new_end});
  }

  void deliver(std::optional<EdgeMove> m) {
    ++stats_.emitted;
    if constexpr (std::is_same_v<std::invoke_result_t<Sink&, const SpanningTree&, std::optional<EdgeMove>>, bool>) {
      if (!sink_(std::as_const(tree_), m)) stopped_ = true;
    } else {
      sink_(std::as_const(tree_), m);
    }
  }

  SpanningTree tree_;
  Sink sink_;
  GenStats stats_;
  bool stopped_ = false;
};

// L_2 = {2-inf}, L_3 = {2-3, 3-inf}, L_4 = {2-3, 3-4, 4-inf}, and for n >= 5
// L_n = L_{n-3} + {n-2,inf} + {n-1,n} + {n,inf}. Agrees with replaying Gen.
inline SpanningTree last_tree(int n) {
  require_n(n);
  SpanningTree t = SpanningTree::empty(n);
  int k = n;
  while (k >= 5) {
    t.add_edge({v(k - 2), kHub});
    t.add_edge({v(k - 1), v(k)});
    t.add_edge({v(k), kHub});
    k -= 3;
  }
  switch (k) {
    case 2:
      t.add_edge({v(2), kHub});
      break;
    case 3:
      t.add_edge({v(2), v(3)});
      t.add_edge({v(3), kHub});
      break;
    default:
      t.add_edge({v(2), v(3)});
      t.add_edge({v(3), v(4)});
      t.add_edge({v(4), kHub});
      break;
  }
  return t;
}

// Streams LIST(n) (or REVLIST(n) when reverse) into sink; returns the stats.
template <class Sink>
GenStats generate(int n, Sink&& sink, bool reverse = false) {
  require_n(n);
  Generator<std::decay_t<Sink>&> g(reverse ? last_tree(n) : path_tree(n), sink);
  g.emit_initial();
  if (reverse)
    g.revgen(n, true, false);
  else
    g.gen(n, true, false);
  return g.stats();
}

// Reference L_n: replay Gen from P_n and keep the final tree.
inline SpanningTree last_tree_by_replay(int n) {
  require_n(n);
  SpanningTree last;
  generate(n, [&](const SpanningTree& t, std::optional<EdgeMove>) { last = t; });
  return last;
}

inline std::vector<SpanningTree> list(int n) {
  std::vector<SpanningTree> out;
  generate(n, [&](const SpanningTree& t, std::optional<EdgeMove>) { out.push_back(t); });
  return out;
}

inline std::vector<SpanningTree> rev_list(int n) {
  std::vector<SpanningTree> out;
  generate(n, [&](const SpanningTree& t, std::optional<EdgeMove>) { out.push_back(t); }, true);
  return out;
}

// Pull-style view of the same listing: an explicit stack of Gen/RevGen frames
// stepped one move at a time. State is O(n).
class ListingCursor {
 public:
  explicit ListingCursor(int n, bool reverse = false)
      : tree_(reverse ? last_tree(n) : path_tree(n)) {
    stack_.reserve(static_cast<std::size_t>(n));
    stack_.push_back({reverse, n, true, false, 0});
  }

  // Advances to the next tree; false after the last one.
  bool next() {
    if (!started_) {
      started_ = true;
      return true;
    }
    while (!stack_.empty()) {
      const Action a = step(stack_.back());
      switch (a.kind) {
        case Action::kEmit:
          tree_.apply(a.move);
          move_ = a.move;
          return true;
        case Action::kCall:
          stack_.push_back(a.child);
          break;
        case Action::kDone:
          stack_.pop_back();
          break;
      }
    }
    return false;
  }

  const SpanningTree& tree() const { return tree_; }
  // Move that produced tree(); nullopt for the first tree.
  std::optional<EdgeMove> move() const { return move_; }

 private:
  struct State {
    bool reverse;
    int k;
    bool s1;
    bool var_edge;
    int pc;
  };
  struct Action {
    enum Kind { kEmit, kCall, kDone } kind;
    EdgeMove move{};
    State child{};
  };

  static Action emit(int pivot, Vertex from, Vertex to) { return {Action::kEmit, EdgeMove{v(pivot), from, to}, {}}; }
  static Action call(bool reverse, int k, bool s1, bool var_edge) {
    return {Action::kCall, {}, State{reverse, k, s1, var_edge, 0}};
  }

  static Action step(State& f) {
    const int k = f.k;
    const Vertex var_end = f.var_edge ? v(k + 1) : kHub;
    for (;;) {
      const int pc = f.pc++;
      if (!f.reverse) {
        if (k == 2) {
          if (pc == 0 && f.var_edge) return emit(2, kHub, v(3));
          if (pc >= 1) return {Action::kDone};
        } else if (k == 3) {
          if (pc == 0 && f.s1) return emit(3, v(2), f.var_edge ? v(4) : kHub);
          if (pc == 1) return emit(2, kHub, v(3));
          if (pc >= 2) return {Action::kDone};
        } else {
          switch (pc) {
            case 0: if (f.s1) return call(false, k - 1, true, false); break;
            case 1: if (f.s1) return emit(k, v(k - 1), var_end); break;
            case 2: return call(true, k - 1, true, false);
            case 3: return emit(k - 1, v(k - 2), v(k));
            case 4: return call(false, k - 2, true, true);
            case 5: if (k > 4) return emit(k - 2, v(k - 1), kHub); break;
            case 6: return call(true, k - 2, false, false);
            default: return {Action::kDone};
          }
        }
      } else {
        if (k == 2) {
          if (pc == 0 && f.var_edge) return emit(2, v(3), kHub);
          if (pc >= 1) return {Action::kDone};
        } else if (k == 3) {
          if (pc == 0) return emit(2, v(3), kHub);
          if (pc == 1 && f.s1) return emit(3, f.var_edge ? v(4) : kHub, v(2));
          if (pc >= 2) return {Action::kDone};
        } else {
          switch (pc) {
            case 0: return call(false, k - 2, false, false);
            case 1: if (k > 4) return emit(k - 2, kHub, v(k - 1)); break;
            case 2: return call(true, k - 2, true, true);
            case 3: return emit(k - 1, v(k), v(k - 2));
            case 4: return call(false, k - 1, true, false);
            case 5: if (f.s1) return emit(k, var_end, v(k - 1)); break;
            case 6: if (f.s1) return call(true, k - 1, true, false); break;
            default: return {Action::kDone};
          }
        }
      }
    }
  }

  SpanningTree tree_;
  std::vector<State> stack_;
  std::optional<EdgeMove> move_;
  bool started_ = false;
};

}  // namespace fan
