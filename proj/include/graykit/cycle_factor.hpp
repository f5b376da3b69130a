#pragma once

// The cycle factor X u Y u Z of the middle 2l levels of Q_n, n = 2m+1.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/lexical.hpp"
#include "graykit/scd.hpp"
#include "graykit/two_factor.hpp"
#include "graykit/words.hpp"

namespace graykit {

enum class EdgeKind : std::uint8_t { X0, Xm1, Xt1, Xb1, Y, Z };

struct FactorEdge {
  Bitstring lower;
  Bitstring upper;
  EdgeKind kind = EdgeKind::X0;
  int k = 0;  // Y_k index, 1-based; 0 for other kinds
};

/// Validates n = 2m+1 and 2 <= l <= m+1.
inline void check_factor_parameters(int n, int ell) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
  if (n > 21) throw std::invalid_argument("n must be at most 21");
  const int m = (n - 1) / 2;
  if (ell < 2 || ell > m + 1) throw std::invalid_argument("l must satisfy 2 <= l <= (n+1)/2");
}

/// Lowest and highest level of the middle 2l levels.
inline int middle_low(int n, int ell) { return (n - 1) / 2 + 1 - ell; }
inline int middle_high(int n, int ell) { return (n - 1) / 2 + ell; }

/// Vertex values of the middle 2l levels in ascending order.
inline std::vector<std::uint64_t> middle_vertices(int n, int ell) {
  std::vector<std::uint64_t> out;
  const int lo = middle_low(n, ell);
  const int hi = middle_high(n, ell);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const int k = std::popcount(v);
    if (k >= lo && k <= hi) out.push_back(v);
  }
  return out;
}

struct FactorEdgeSets {
  int n = 0;
  int ell = 0;
  std::vector<FactorEdge> x0, xm1, xt1, xb1, z;
  std::vector<std::vector<FactorEdge>> y;  // y[k-1] is Y_k

  std::vector<FactorEdge> all() const {
    std::vector<FactorEdge> out;
    for (const auto* set : {&x0, &xm1, &xt1, &xb1, &z}) out.insert(out.end(), set->begin(), set->end());
    for (const auto& yk : y) out.insert(out.end(), yk.begin(), yk.end());
    return out;
  }
};

/// Edge sets of the factor, each edge emitted once from its defining side.
inline FactorEdgeSets build_edge_sets(int n, int ell) {
  check_factor_parameters(n, ell);
  FactorEdgeSets sets;
  sets.n = n;
  sets.ell = ell;
  sets.y.resize(static_cast<std::size_t>(ell));
  const int short_max = 2 * ell - 3;

  auto up = [](int p, const Bitstring& x) {
    auto y = lex_up(p, x);
    if (!y) throw std::logic_error("build_edge_sets: missing lexical partner above " + x.str());
    return *y;
  };
  auto down = [](int p, const Bitstring& x) {
    auto y = lex_down(p, x);
    if (!y) throw std::logic_error("build_edge_sets: missing lexical partner below " + x.str());
    return *y;
  };

  for (std::uint64_t v : middle_vertices(n, ell)) {
    const Bitstring x(v, n);
    const VertexClass c = classify(x);
    const int h = c.h;
    const int i = c.i;

    if (h <= short_max) {
      if (i < h) sets.x0.push_back({x, up(0, x), EdgeKind::X0});
      if (h == 1 && i == 0 && !c.plus) sets.xm1.push_back({x, up(1, x), EdgeKind::Xm1});
      if (c.plus && h <= 2 * ell - 5) {
        if (i == h) sets.xt1.push_back({x, up(1, x), EdgeKind::Xt1});
        if (i == 0) sets.xb1.push_back({down(1, x), x, EdgeKind::Xb1});
      }
      if (c.plus && h == short_max) {
        if (i == 0) sets.y[0].push_back({down(1, x), x, EdgeKind::Y, 1});
        if (i == h) sets.y[static_cast<std::size_t>(ell - 1)].push_back({x, up(1, x), EdgeKind::Y, ell});
      }
      continue;
    }

    const int base = (h - (2 * ell - 1)) / 2;
    const int offset = i - base;
    if (offset >= 0 && offset % 2 == 0 && offset / 2 < ell) {
      const int k = offset / 2 + 1;
      auto& yk = sets.y[static_cast<std::size_t>(k - 1)];
      yk.push_back({x, up(0, x), EdgeKind::Y, k});
      if (c.plus) yk.push_back({x, up(1, x), EdgeKind::Y, k});
    }
    if (c.plus && offset >= 1 && offset % 2 == 1 && (offset - 1) / 2 < ell) {
      const int k = (offset - 1) / 2 + 1;
      sets.y[static_cast<std::size_t>(k - 1)].push_back({down(1, x), x, EdgeKind::Y, k});
    }
    if (h == 2 * ell - 1 && !c.plus && i % 2 == 0 && i >= 2 && i <= 2 * ell - 2)
      sets.z.push_back({z_map(x), x, EdgeKind::Z});
  }
  return sets;
}

struct FactorCycle {
  std::vector<Bitstring> vertices;
  int range = 0;  // number of levels visited
  bool is_long = false;
  std::optional<Chain> witness;  // the short [--]-chain of a short cycle
};

class CycleFactor {
 public:
  CycleFactor() = default;

  CycleFactor(int n, int ell, const std::vector<FactorEdge>& edges) : n_(n), ell_(ell), graph_(n) {
    for (const auto& e : edges) graph_.add_edge(e.lower.value(), e.upper.value());
    const auto verts = middle_vertices(n, ell);
    for (std::uint64_t v : verts)
      if (graph_.degree(v) != 2)
        throw std::logic_error("CycleFactor: vertex " + Bitstring(v, n).str() + " has degree " +
                               std::to_string(graph_.degree(v)));
    cycle_of_.assign(std::size_t{1} << n, kNoCycle);
    for (auto& cyc : graph_.extract_cycles(verts)) {
      FactorCycle fc;
      int lo = n + 1;
      int hi = -1;
      const std::size_t index = cycles_.size();
      for (std::uint64_t v : cyc) {
        const Bitstring x(v, n);
        lo = std::min(lo, x.level());
        hi = std::max(hi, x.level());
        cycle_of_[v] = index;
        fc.vertices.push_back(x);
        if (!fc.witness) {
          const VertexClass c = classify(x);
          if (c.h <= 2 * ell - 3 && !c.first_nonempty && !c.last_nonempty) fc.witness = chain_of(x);
        }
      }
      fc.range = hi - lo + 1;
      fc.is_long = !fc.witness;
      cycles_.push_back(std::move(fc));
    }
  }

  int n() const { return n_; }
  int ell() const { return ell_; }
  const TwoFactor& graph() const { return graph_; }
  const std::vector<FactorCycle>& cycles() const { return cycles_; }

  bool contains(const Bitstring& x) const {
    return x.size() == n_ && x.level() >= middle_low(n_, ell_) && x.level() <= middle_high(n_, ell_);
  }
  std::array<Bitstring, 2> neighbors(const Bitstring& x) const {
    const auto& a = graph_.neighbors(x.value());
    return {Bitstring(a[0], n_), Bitstring(a[1], n_)};
  }
  bool has_edge(const Bitstring& a, const Bitstring& b) const { return graph_.has_edge(a.value(), b.value()); }
  std::size_t cycle_index(const Bitstring& x) const {
    if (!contains(x)) throw std::out_of_range("CycleFactor: vertex outside the middle levels");
    return cycle_of_[x.value()];
  }

 private:
  static constexpr std::size_t kNoCycle = ~std::size_t{0};

  int n_ = 0;
  int ell_ = 0;
  TwoFactor graph_;
  std::vector<FactorCycle> cycles_;
  std::vector<std::size_t> cycle_of_;
};

inline CycleFactor build_factor(int n, int ell) { return CycleFactor(n, ell, build_edge_sets(n, ell).all()); }

// Closed forms for walks along the factor -----------------------------------

namespace detail {

inline Bitstring bits_of(bool bit) { return Bitstring(bit ? 1 : 0, 1); }

/// u_j for even j and rot(u_j) for odd j.
inline Bitstring alternate_rot(const std::vector<Bitstring>& u, int j) {
  return j % 2 == 0 ? u[static_cast<std::size_t>(j)] : rot(u[static_cast<std::size_t>(j)]);
}

inline void require_class(const Bitstring& x, int h, int i, bool plus, const char* what) {
  const VertexClass c = classify(x);
  if (c.h != h || c.i != i || c.plus != plus) throw std::invalid_argument(std::string(what) + ": wrong vertex class");
}

}  // namespace detail

/// Last vertex of the Y_k path starting at x.
inline Bitstring y_path_last_vertex(int ell, int k, const Bitstring& x) {
  const auto f = chain_factorization(x);
  const auto& u = f.valleys;
  const Bitstring one = detail::bits_of(true);
  const Bitstring zero = detail::bits_of(false);
  if (k == ell) {
    detail::require_class(x, 2 * ell - 3, 2 * ell - 3, true, "y_path_last_vertex");
    auto [v, w] = right_factorize(u.back());
    Bitstring y;
    for (int j = 0; j <= 2 * ell - 4; ++j) y = y + u[static_cast<std::size_t>(j)] + one;
    return y + v + one + zero + w;
  }
  if (k == 1) {
    detail::require_class(x, 2 * ell - 3, 0, true, "y_path_last_vertex");
    auto [v, w] = left_factorize(u.front());
    Bitstring y = v + one + zero + w;
    for (int j = 1; j <= 2 * ell - 3; ++j) y = y + zero + u[static_cast<std::size_t>(j)];
    return y;
  }
  if (k < 1 || k > ell) throw std::invalid_argument("y_path_last_vertex: k out of range");
  detail::require_class(x, 2 * ell - 1, 2 * k - 1, false, "y_path_last_vertex");
  Bitstring y;
  for (int j = 0; j <= 2 * k - 3; ++j) y = y + u[static_cast<std::size_t>(j)] + one;
  y = y + zero + u[static_cast<std::size_t>(2 * k - 2)];
  for (int j = 2 * k; j <= 2 * ell - 1; ++j) y = y + zero + u[static_cast<std::size_t>(j)];
  return y;
}

/// Walk the edges of one Y_k from a path end until it stops.
inline std::vector<Bitstring> follow_y_path(const FactorEdgeSets& sets, int k, const Bitstring& x) {
  if (k < 1 || k > sets.ell) throw std::invalid_argument("follow_y_path: k out of range");
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> adj;
  for (const auto& e : sets.y[static_cast<std::size_t>(k - 1)]) {
    adj[e.lower.value()].push_back(e.upper.value());
    adj[e.upper.value()].push_back(e.lower.value());
  }
  auto it = adj.find(x.value());
  if (it == adj.end() || it->second.size() != 1) throw std::invalid_argument("follow_y_path: x is not a path end");
  std::vector<Bitstring> path{x};
  std::uint64_t prev = x.value();
  std::uint64_t cur = it->second.front();
  while (true) {
    path.emplace_back(cur, sets.n);
    const auto& nb = adj[cur];
    if (nb.size() == 1) break;
    const std::uint64_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (path.size() > (std::size_t{1} << sets.n)) throw std::logic_error("follow_y_path: cycle in Y_k");
  }
  return path;
}

/// Last vertex of the Y u Z path that starts at x in C^+_{2l-3,2l-3}.
inline Bitstring yz_endpoint(int ell, const Bitstring& x) {
  detail::require_class(x, 2 * ell - 3, 2 * ell - 3, true, "yz_endpoint");
  const auto u = chain_factorization(x).valleys;
  auto [v, w] = right_factorize(u.back());
  const Bitstring one = detail::bits_of(true);
  const Bitstring zero = detail::bits_of(false);
  Bitstring y = zero + u[0] + one;
  for (int j = 1; j <= 2 * ell - 4; ++j) y = y + detail::alternate_rot(u, j) + zero;
  return y + rot(v) + zero + w;
}

/// Next vertex of C^+_{2l-3,2l-3} on the long cycle through x, by the
/// heavy (w nonempty) or light (w empty) rotation.
inline Bitstring long_cycle_successor(int ell, const Bitstring& x) {
  detail::require_class(x, 2 * ell - 3, 2 * ell - 3, true, "long_cycle_successor");
  const auto u = chain_factorization(x).valleys;
  auto [v, w] = right_factorize(u.back());
  const Bitstring one = detail::bits_of(true);
  const Bitstring zero = detail::bits_of(false);
  if (!w.empty()) {
    Bitstring y = zero + u[0] + one;
    for (int j = 1; j <= 2 * ell - 4; ++j) y = y + detail::alternate_rot(u, j) + one;
    return y + rot(v) + one + w;
  }
  Bitstring y = one;
  for (int j = 0; j <= 2 * ell - 5; ++j) y = y + detail::alternate_rot(u, j) + one;
  return y + u[static_cast<std::size_t>(2 * ell - 4)] + zero + rot(v) + one;
}

/// Walks the factor from x in C^+_{2l-3,2l-3} along its Y_l edge until the
/// next vertex of that class.
inline Bitstring next_top_vertex(const CycleFactor& factor, const Bitstring& x) {
  const int ell = factor.ell();
  detail::require_class(x, 2 * ell - 3, 2 * ell - 3, true, "next_top_vertex");
  auto nb = factor.neighbors(x);
  Bitstring prev = x;
  Bitstring cur = nb[0].level() > x.level() ? nb[0] : nb[1];
  while (true) {
    const VertexClass c = classify(cur);
    if (c.h == 2 * ell - 3 && c.i == c.h && c.plus) return cur;
    auto next = factor.neighbors(cur);
    const Bitstring step = next[0] == prev ? next[1] : next[0];
    prev = cur;
    cur = step;
  }
}

struct FactorStats {
  int n = 0;
  int ell = 0;
  std::size_t total = 0;
  std::map<int, std::size_t> short_by_range;  // range -> count
  std::size_t long_count = 0;
};

inline FactorStats factor_stats(const CycleFactor& factor) {
  FactorStats s;
  s.n = factor.n();
  s.ell = factor.ell();
  s.total = factor.cycles().size();
  for (const auto& c : factor.cycles()) {
    if (c.is_long)
      ++s.long_count;
    else
      ++s.short_by_range[c.range];
  }
  return s;
}

inline FactorStats factor_stats(int n, int ell) { return factor_stats(build_factor(n, ell)); }

}  // namespace graykit
