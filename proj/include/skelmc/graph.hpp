#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "skelmc/op_counter.hpp"

namespace skelmc {

// Anything with numbered states and a successor enumerator: BinaryMatrix,
// ShiftGraph.
template <class G>
concept SuccessorGraph = requires(const G& g, std::size_t v) {
  { g.size() } -> std::convertible_to<std::size_t>;
  g.for_each_successor(v, [](std::size_t) {});
};

struct Components {
  // Members sorted ascending; components ordered by their smallest member.
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> component_of;
};

struct ClassDecomposition {
  Components sccs;
  std::vector<std::size_t> closed;       // indices into sccs.members
  std::vector<std::uint64_t> periods;    // one per entry of `closed`
  std::vector<std::size_t> transient;    // states outside every closed class

  std::size_t closed_count() const { return closed.size(); }
  std::span<const std::size_t> closed_class(std::size_t i) const { return sccs.members[closed[i]]; }
};

// Tarjan's algorithm with an explicit stack. Successor lists of the frames on
// the DFS path live in one shared buffer that grows and shrinks with the path.
template <SuccessorGraph G>
Components strongly_connected_components(const G& g, OpCounter* ops = nullptr) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  const std::size_t n = g.size();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> scc_stack;
  std::vector<std::size_t> successors;

  struct Frame {
    std::size_t vertex;
    std::size_t begin;
    std::size_t next;
  };
  std::vector<Frame> path;

  Components result;
  result.component_of.assign(n, 0);
  std::size_t counter = 0;
  std::uint64_t visits = 0;

  auto open = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    scc_stack.push_back(v);
    on_stack[v] = 1;
    const std::size_t begin = successors.size();
    g.for_each_successor(v, [&](std::size_t w) { successors.push_back(w); });
    path.push_back({v, begin, begin});
    ++visits;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    open(root);
    while (!path.empty()) {
      Frame& f = path.back();
      if (f.next < successors.size()) {
        const std::size_t w = successors[f.next++];
        ++visits;
        if (index[w] == kUnvisited) {
          open(w);
        } else if (on_stack[w]) {
          low[f.vertex] = std::min(low[f.vertex], index[w]);
        }
        continue;
      }
      const std::size_t v = f.vertex;
      successors.resize(f.begin);
      path.pop_back();
      if (!path.empty()) low[path.back().vertex] = std::min(low[path.back().vertex], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        result.members.push_back(std::move(component));
      }
    }
  }

  std::sort(result.members.begin(), result.members.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < result.members.size(); ++c)
    for (std::size_t v : result.members[c]) result.component_of[v] = c;
  count(ops, visits);
  return result;
}

namespace detail {

// gcd over intra-class edges of (level(u) + 1 - level(v)) with BFS levels from
// the class's first member. `level` is scratch of size g.size() filled with -1
// and restored on return. 0 when the class has no edge at all.
template <SuccessorGraph G>
std::uint64_t period_of(const G& g, std::span<const std::size_t> members, std::vector<std::int64_t>& level,
                        OpCounter* ops) {
  std::uint64_t d = 0;
  std::vector<std::size_t> queue{members.front()};
  level[members.front()] = 0;
  std::uint64_t visits = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    g.for_each_successor(u, [&](std::size_t v) {
      ++visits;
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
      const std::int64_t diff = level[u] + 1 - level[v];
      d = std::gcd(d, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
    });
  }
  for (std::size_t v : queue) level[v] = -1;
  count(ops, visits);
  return d;
}

}  // namespace detail

// Partition into SCCs, the closed ones (no edge leaves them) with their
// periods, and the transient remainder.
template <SuccessorGraph G>
ClassDecomposition decompose(const G& g, OpCounter* ops = nullptr) {
  ClassDecomposition out;
  out.sccs = strongly_connected_components(g, ops);
  const auto& comp = out.sccs.component_of;
  std::vector<char> is_closed(out.sccs.members.size(), 0);
  std::uint64_t visits = 0;
  for (std::size_t c = 0; c < out.sccs.members.size(); ++c) {
    bool closed = true;
    for (std::size_t u : out.sccs.members[c]) {
      g.for_each_successor(u, [&](std::size_t v) {
        ++visits;
        if (comp[v] != c) closed = false;
      });
      if (!closed) break;
    }
    is_closed[c] = closed;
    if (closed) out.closed.push_back(c);
  }
  count(ops, visits);

  std::vector<std::int64_t> level(g.size(), -1);
  for (std::size_t c : out.closed) out.periods.push_back(detail::period_of(g, out.sccs.members[c], level, ops));
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!is_closed[comp[v]]) out.transient.push_back(v);
  return out;
}

// Marks the closed members of an existing SCC partition; periods left empty.
template <SuccessorGraph G>
ClassDecomposition closed_classes(const G& g, Components sccs) {
  ClassDecomposition out;
  out.sccs = std::move(sccs);
  std::vector<char> is_closed(out.sccs.members.size(), 0);
  for (std::size_t c = 0; c < out.sccs.members.size(); ++c) {
    bool closed = true;
    for (std::size_t u : out.sccs.members[c])
      g.for_each_successor(u, [&](std::size_t v) { closed = closed && out.sccs.component_of[v] == c; });
    is_closed[c] = closed;
    if (closed) out.closed.push_back(c);
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!is_closed[out.sccs.component_of[v]]) out.transient.push_back(v);
  return out;
}

// Period of a closed class. Throws std::invalid_argument if `members` is not
// a closed strongly connected class of g.
template <SuccessorGraph G>
std::uint64_t class_period(const G& g, std::span<const std::size_t> members) {
  if (members.empty()) throw std::invalid_argument("class_period: empty class");
  const Components sccs = strongly_connected_components(g);
  const std::size_t c = sccs.component_of.at(members.front());
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != sccs.members[c]) throw std::invalid_argument("class_period: class is not strongly connected");
  for (std::size_t u : sorted) {
    bool leaves = false;
    g.for_each_successor(u, [&](std::size_t v) { leaves = leaves || sccs.component_of[v] != c; });
    if (leaves) throw std::invalid_argument("class_period: class is not closed");
  }
  std::vector<std::int64_t> level(g.size(), -1);
  return detail::period_of(g, std::span<const std::size_t>(sorted), level, nullptr);
}

}  // namespace skelmc
