#pragma once

// Joining the cycle factor into a Hamilton cycle of the middle 2l levels.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/cycle_factor.hpp"
#include "graykit/flipping.hpp"
#include "graykit/words.hpp"

namespace graykit {

/// The special tree s without its 0^{2l-3} prefix: 1^{2l-3} 0 (01)^{m-l+1} 1.
inline Bitstring special_tree(int n, int ell) {
  check_factor_parameters(n, ell);
  const int m = (n - 1) / 2;
  Bitstring x = Bitstring::repeat(true, 2 * ell - 3) + "0"_bits;
  for (int k = 0; k < m - ell + 1; ++k) x = x + "01"_bits;
  return x + "1"_bits;
}

struct AuxEdge {
  std::size_t a = 0;  // node of x
  std::size_t b = 0;  // node of y
  FlippablePair pair;
};

/// Long cycles as nodes, flippable pairs as (multi-)edges.
struct AuxGraph {
  int n = 0;
  int ell = 0;
  std::vector<std::size_t> cycle_of_node;  // factor cycle index per node
  std::vector<Bitstring> node_id;          // smallest vertex of the cycle
  std::vector<AuxEdge> edges;
  std::size_t special = 0;  // node containing the special tree

  std::size_t size() const { return node_id.size(); }
};

inline AuxGraph build_aux_graph(const CycleFactor& factor) {
  AuxGraph g;
  g.n = factor.n();
  g.ell = factor.ell();
  std::map<std::size_t, std::size_t> node_of_cycle;
  for (std::size_t c = 0; c < factor.cycles().size(); ++c) {
    const auto& cyc = factor.cycles()[c];
    if (!cyc.is_long) continue;
    node_of_cycle[c] = g.node_id.size();
    g.cycle_of_node.push_back(c);
    g.node_id.push_back(*std::min_element(cyc.vertices.begin(), cyc.vertices.end()));
  }
  auto node = [&](const Bitstring& x) {
    const auto it = node_of_cycle.find(factor.cycle_index(x));
    if (it == node_of_cycle.end()) throw std::logic_error("build_aux_graph: " + x.str() + " is not on a long cycle");
    return it->second;
  };
  for (auto& fp : flippable_pairs(g.n, g.ell)) {
    const std::size_t a = node(fp.x);
    const std::size_t b = node(fp.y);
    g.edges.push_back({a, b, std::move(fp)});
  }
  g.special = node(special_tree(g.n, g.ell));
  return g;
}

/// One flipping 6-cycle per edge of a BFS spanning tree rooted at the node of
/// the special tree; parallel edges are resolved by the smallest (x, y).
inline std::vector<FlipCycle6> spanning_six_cycles(const AuxGraph& g) {
  std::vector<std::vector<std::size_t>> incident(g.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.a == e.b) continue;
    incident[e.a].push_back(k);
    incident[e.b].push_back(k);
  }
  auto pair_less = [&](std::size_t i, std::size_t j) {
    const auto& p = g.edges[i].pair;
    const auto& q = g.edges[j].pair;
    return std::pair(p.x, p.y) < std::pair(q.x, q.y);
  };
  std::vector<bool> seen(g.size(), false);
  std::vector<FlipCycle6> out;
  std::deque<std::size_t> queue{g.special};
  seen[g.special] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    std::map<std::size_t, std::size_t> best;  // new neighbor -> edge
    for (std::size_t k : incident[u]) {
      const std::size_t v = g.edges[k].a == u ? g.edges[k].b : g.edges[k].a;
      if (seen[v]) continue;
      auto it = best.find(v);
      if (it == best.end() || pair_less(k, it->second)) best[v] = k;
    }
    std::vector<std::size_t> chosen;
    for (const auto& [v, k] : best) chosen.push_back(k);
    std::sort(chosen.begin(), chosen.end(), pair_less);
    for (std::size_t k : chosen) {
      const std::size_t v = g.edges[k].a == u ? g.edges[k].b : g.edges[k].a;
      seen[v] = true;
      queue.push_back(v);
      out.push_back(c6(g.ell, g.edges[k].pair));
    }
  }
  const auto missing = std::count(seen.begin(), seen.end(), false);
  if (missing)
    throw std::logic_error("spanning_six_cycles: auxiliary graph is disconnected (" + std::to_string(missing) +
                           " of " + std::to_string(g.size()) + " long cycles unreachable)");
  return out;
}

namespace detail {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges(const std::vector<Edge>& edges) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.emplace_back(a.value(), b.value());
  return out;
}

}  // namespace detail

struct HamiltonBuild {
  int n = 0;
  int ell = 0;
  std::vector<Bitstring> cycle;
  std::size_t factor_cycles = 0;
  std::size_t short_cycles = 0;
  std::size_t long_cycles = 0;
  std::size_t flip4 = 0;
  std::size_t flip6 = 0;
};

/// C_{n,l} xor (F u S'), listed from the smallest vertex towards its smaller
/// neighbor.
inline HamiltonBuild build_hamilton(int n, int ell) {
  check_factor_parameters(n, ell);
  const CycleFactor factor = build_factor(n, ell);
  HamiltonBuild out;
  out.n = n;
  out.ell = ell;
  out.factor_cycles = factor.cycles().size();
  for (const auto& c : factor.cycles()) (c.is_long ? out.long_cycles : out.short_cycles)++;

  TwoFactor g = factor.graph();
  const auto flip4 = build_flip4_set(n, ell);
  for (const auto& f : flip4) g.toggle_edges(detail::raw_edges(f.edges()));
  const auto flip6 = spanning_six_cycles(build_aux_graph(factor));
  for (const auto& f : flip6) g.toggle_edges(detail::raw_edges(f.edges()));
  out.flip4 = flip4.size();
  out.flip6 = flip6.size();

  const auto cycles = g.extract_cycles(middle_vertices(n, ell));
  if (cycles.size() != 1)
    throw std::logic_error("build_hamilton: joining left " + std::to_string(cycles.size()) + " cycles");
  out.cycle.reserve(cycles[0].size());
  for (std::uint64_t v : cycles[0]) out.cycle.emplace_back(v, n);
  return out;
}

inline std::vector<Bitstring> hamilton(int n, int ell) { return build_hamilton(n, ell).cycle; }

struct HamiltonReport {
  bool ok = true;
  std::string message;  // first violation
};

/// Checks that seq visits every vertex of levels m+1-l .. m+l exactly once
/// and that consecutive vertices, including last and first, are adjacent.
inline HamiltonReport verify_hamilton(const std::vector<Bitstring>& seq, int n, int ell) {
  const int m = (n - 1) / 2;
  const int lo = m + 1 - ell;
  const int hi = m + ell;
  auto fail = [](std::string msg) { return HamiltonReport{false, std::move(msg)}; };
  if (n < 1 || n > 24) return fail("unsupported dimension");
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Bitstring& x = seq[k];
    if (x.size() != n) return fail("wrong length at index " + std::to_string(k));
    if (x.level() < lo || x.level() > hi) return fail("outside the middle levels: " + x.str());
    if (seen[x.value()]) return fail("duplicate vertex " + x.str());
    seen[x.value()] = true;
    const Bitstring& y = seq[(k + 1) % seq.size()];
    if (y.size() == n && hamming_distance(x, y) != 1)
      return fail("non-adjacent step " + x.str() + " -> " + y.str() + (k + 1 == seq.size() ? " (wraparound)" : ""));
  }
  const std::size_t expected = middle_vertices(n, ell).size();
  if (seq.size() != expected)
    return fail("missing vertices: " + std::to_string(seq.size()) + " of " + std::to_string(expected));
  return {};
}

// Connectivity witness ------------------------------------------------------

struct TreeMove {
  enum class Kind { light_rotation, pull };
  Kind kind = Kind::pull;
  Bitstring result;  // tree after the move, without the 0^{2l-3} prefix
};

namespace detail {

struct RightShape {
  bool right_empty = false;
  bool right_full = false;
};

inline RightShape right_shape(int ell, const Bitstring& x) {
  const auto u = chain_factorization(x).valleys;
  const auto [v, w] = right_factorize(u.back());
  RightShape r;
  r.right_empty = w.empty();
  bool bare = v.empty();
  for (int j = 0; j <= 2 * ell - 4; ++j) bare = bare && u[static_cast<std::size_t>(j)].empty();
  r.right_full = bare && !w.empty();
  return r;
}

}  // namespace detail

/// Light rotations and pulls taking x in C^+_{2l-3,2l-3} to the special tree,
/// following the three cases of the connectivity argument.
inline std::vector<TreeMove> canonicalize_to_s(int n, int ell, const Bitstring& x) {
  detail::require_class(x, 2 * ell - 3, 2 * ell - 3, true, "canonicalize_to_s");
  if (x.size() != n) throw std::invalid_argument("canonicalize_to_s: wrong length");
  const Bitstring s = special_tree(n, ell);
  const int pad = 2 * ell - 3;
  const Bitstring zeros = Bitstring::repeat(false, pad);
  std::vector<TreeMove> moves;
  Bitstring cur = x;
  auto do_pull = [&](int pos) {
    cur = pull(zeros + cur, pos).substr(pad + 1, n);
    moves.push_back({TreeMove::Kind::pull, cur});
  };
  auto do_light = [&]() {
    cur = long_cycle_successor(ell, cur);
    moves.push_back({TreeMove::Kind::light_rotation, cur});
  };
  const std::size_t limit = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * 8 + 16;
  while (cur != s) {
    if (moves.size() > limit) throw std::logic_error("canonicalize_to_s: no progress from " + x.str());
    const auto shape = detail::right_shape(ell, cur);
    if (shape.right_full) {
      // (a) pull inside the subtree of the rightmost child of the root
      const Bitstring t = zeros + cur;
      std::optional<int> pick;
      int depth = 0;
      for (int i = 1; i + 2 <= t.size() && !pick; ++i) {
        if (depth >= 2 && is_pull_position(t, i)) pick = i;
        depth += t[i] ? -1 : 1;
      }
      if (!pick) throw std::logic_error("canonicalize_to_s: right-full tree without inner pull " + cur.str());
      do_pull(*pick);
    } else if (shape.right_empty) {
      // (c) light rotations until the tree is no longer right-empty
      do_light();
    } else {
      // (b) pull the rightmost leaf up to the root, then rotate
      while (true) {
        const Bitstring t = zeros + cur;
        int pos = t.size() - 1;
        while (pos >= 1 && t[pos]) --pos;
        if (!is_pull_position(t, pos)) break;
        do_pull(pos);
      }
      do_light();
    }
  }
  return moves;
}

}  // namespace graykit
