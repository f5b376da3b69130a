#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graykit/bitstring.hpp"

namespace graykit {

/// Undirected graph on the vertices of Q_n with at most two neighbors per
/// vertex, indexed by vertex value.
class TwoFactor {
 public:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  TwoFactor() = default;
  explicit TwoFactor(int n) : n_(n) {
    if (n < 1 || n > 24) throw std::invalid_argument("TwoFactor: n must be in [1, 24]");
    adj_.assign(std::size_t{1} << n, {kNone, kNone});
  }

  int n() const { return n_; }

  int degree(std::uint64_t v) const {
    const auto& a = adj_[v];
    return (a[0] != kNone) + (a[1] != kNone);
  }
  const std::array<std::uint64_t, 2>& neighbors(std::uint64_t v) const { return adj_[v]; }

  bool has_edge(std::uint64_t a, std::uint64_t b) const { return adj_[a][0] == b || adj_[a][1] == b; }

  void add_edge(std::uint64_t a, std::uint64_t b) {
    if (a == b || std::popcount(a ^ b) != 1) throw std::logic_error("TwoFactor: not a cube edge");
    if (has_edge(a, b)) throw std::logic_error("TwoFactor: duplicate edge " + edge_str(a, b));
    attach(a, b);
    attach(b, a);
  }

  void remove_edge(std::uint64_t a, std::uint64_t b) {
    if (!has_edge(a, b)) throw std::logic_error("TwoFactor: missing edge " + edge_str(a, b));
    detach(a, b);
    detach(b, a);
  }

  /// Symmetric difference with an edge set: present edges are removed first,
  /// then the absent ones are added.
  void toggle_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> added;
    for (const auto& [a, b] : edges) {
      if (has_edge(a, b))
        remove_edge(a, b);
      else
        added.emplace_back(a, b);
    }
    for (const auto& [a, b] : added) add_edge(a, b);
  }

  /// Cycles through the given vertices (ascending values).  Each cycle starts
  /// at its smallest vertex and continues to the smaller neighbor.
  std::vector<std::vector<std::uint64_t>> extract_cycles(const std::vector<std::uint64_t>& vertices) const {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<bool> seen(adj_.size(), false);
    for (std::uint64_t s : vertices) {
      if (seen[s]) continue;
      if (degree(s) != 2) throw std::logic_error("TwoFactor: vertex " + Bitstring(s, n_).str() + " has degree " +
                                                 std::to_string(degree(s)));
      std::vector<std::uint64_t> cyc{s};
      seen[s] = true;
      std::uint64_t prev = s;
      std::uint64_t cur = std::min(adj_[s][0], adj_[s][1]);
      while (cur != s) {
        if (seen[cur] || degree(cur) != 2)
          throw std::logic_error("TwoFactor: walk from " + Bitstring(s, n_).str() + " is not a cycle");
        seen[cur] = true;
        cyc.push_back(cur);
        const std::uint64_t next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

 private:
  void attach(std::uint64_t a, std::uint64_t b) {
    auto& s = adj_[a];
    if (s[0] == kNone)
      s[0] = b;
    else if (s[1] == kNone)
      s[1] = b;
    else
      throw std::logic_error("TwoFactor: degree exceeds 2 at " + Bitstring(a, n_).str());
  }
  void detach(std::uint64_t a, std::uint64_t b) {
    auto& s = adj_[a];
    if (s[0] == b)
      s[0] = kNone;
    else
      s[1] = kNone;
  }
  std::string edge_str(std::uint64_t a, std::uint64_t b) const {
    return "(" + Bitstring(a, n_).str() + ", " + Bitstring(b, n_).str() + ")";
  }

  int n_ = 0;
  std::vector<std::array<std::uint64_t, 2>> adj_;
};

}  // namespace graykit
