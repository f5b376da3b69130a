#pragma once

// Flipping 4-cycles between short chains and flipping 6-cycles between the
// top two levels of the middle 2l levels.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/cycle_factor.hpp"
#include "graykit/scd.hpp"
#include "graykit/words.hpp"

namespace graykit {

using Edge = std::pair<Bitstring, Bitstring>;

/// Unordered edge key, smaller endpoint first.
inline std::pair<std::uint64_t, std::uint64_t> edge_key(const Bitstring& a, const Bitstring& b) {
  return std::minmax(a.value(), b.value());
}

// Flipping 4-cycles ---------------------------------------------------------

struct FlipCycle4 {
  Chain parent;
  Chain child;
  int parent_edge = 0;  // 1..h from the bottom of the parent
  int child_edge = 0;   // 1..h-2 from the bottom of the child
  // parent lower, parent upper, child upper, child lower
  std::array<Bitstring, 4> vertices;

  std::vector<Edge> edges() const {
    return {{vertices[0], vertices[1]}, {vertices[1], vertices[2]}, {vertices[2], vertices[3]},
            {vertices[3], vertices[0]}};
  }
};

/// Index i such that `child` matches the i-th and (i+1)-th star of `parent`.
inline std::optional<int> child_index(const Chain& parent, const Chain& child) {
  if (parent.size() != child.size() || child.length() + 2 != parent.length()) return std::nullopt;
  const auto stars = parent.star_positions();
  for (std::size_t i = 0; i + 1 < stars.size(); ++i) {
    std::string w = parent.str();
    w[static_cast<std::size_t>(stars[i] - 1)] = '0';
    w[static_cast<std::size_t>(stars[i + 1] - 1)] = '1';
    if (w == child.str()) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

/// The h-2 flipping 4-cycles between a chain and one of its children, ordered
/// by the parent edge.
inline std::vector<FlipCycle4> flipping_4cycles(const Chain& parent, const Chain& child) {
  const auto i = child_index(parent, child);
  if (!i) throw std::invalid_argument("flipping_4cycles: " + child.str() + " is not a child of " + parent.str());
  const int h = parent.length();
  std::vector<FlipCycle4> out;
  for (int j = 1; j <= h; ++j) {
    if (j == *i || j == *i + 1) continue;
    const int jc = j < *i ? j : j - 2;
    out.push_back({parent, child, j, jc,
                   {parent.vertex_at(j - 1), parent.vertex_at(j), child.vertex_at(jc), child.vertex_at(jc - 1)}});
  }
  return out;
}

/// Representative of x mod h in {1, ..., h}.
inline int mod_rep(int x, int h) { return ((x - 1) % h + h) % h + 1; }

/// Parent edge for each child i = 1..h-1, pairwise distinct and avoiding
/// edge p.  Child i takes edge i+2 in the cyclic order 3, 4, ..., h, 1, 2,
/// moved one step further once p has been passed.
inline std::map<int, int> select_child_4cycles(int h, int p) {
  if (h < 5) throw std::invalid_argument("select_child_4cycles: chain length must be at least 5");
  if (p < 1 || p > h) throw std::invalid_argument("select_child_4cycles: edge index out of range");
  const int p_cyclic = p >= 3 ? p : p + h;
  std::map<int, int> e;
  for (int i = 1; i <= h - 1; ++i) e[i] = i + 2 < p_cyclic ? mod_rep(i + 2, h) : mod_rep(i + 3, h);
  return e;
}

inline std::map<int, int> select_child_4cycles(const Chain& c, int p) { return select_child_4cycles(c.length(), p); }

namespace detail {

inline void require_short_minus_chain(const Chain& c, int ell, const char* what) {
  const int h = c.length();
  if (h < 3 || h % 2 == 0 || h > 2 * ell - 3 || !c.type().matches("[--]"))
    throw std::invalid_argument(std::string(what) + ": expected a [--]-chain of odd length 3..2l-3");
}

inline std::string set_stars(std::string w, const std::vector<int>& stars, int a, int b) {
  w[static_cast<std::size_t>(stars[static_cast<std::size_t>(a - 1)] - 1)] = '0';
  w[static_cast<std::size_t>(stars[static_cast<std::size_t>(b - 1)] - 1)] = '1';
  return w;
}

}  // namespace detail

/// The chain g(C) on the short cycle of C where the cycle is glued.
inline Chain gluing_chain(const Chain& c, int ell) {
  detail::require_short_minus_chain(c, ell, "gluing_chain");
  const int h = c.length();
  if (h < 2 * ell - 3) return c;
  const auto stars = c.star_positions();
  const bool u1_empty = stars[1] == stars[0] + 1;
  if (u1_empty) return Chain::from_string(detail::set_stars(c.str(), stars, 1, 2));
  return Chain::from_string(detail::set_stars(c.str(), stars, h - 1, h));
}

/// The parent p(g(C)) of the gluing chain: the leftmost matched pair of the
/// first nonempty inner valley of C becomes two stars.
inline Chain parent_of_gluing(const Chain& c, int ell) {
  const Chain g = gluing_chain(c, ell);
  const auto stars = c.star_positions();
  for (std::size_t i = 0; i + 1 < stars.size(); ++i) {
    const int start = stars[i] + 1;
    if (start == stars[i + 1]) continue;
    int depth = 0;
    int pos = start;
    do {
      depth += c[pos] == '0' ? 1 : -1;
      ++pos;
    } while (depth != 0);
    std::string w = g.str();
    w[static_cast<std::size_t>(start - 1)] = '*';
    w[static_cast<std::size_t>(pos - 2)] = '*';
    return Chain::from_string(w);
  }
  throw std::logic_error("parent_of_gluing: all inner valleys of " + c.str() + " are empty");
}

/// Short cycles of the factor, one [--]-chain of odd length 3..2l-3 each.
inline std::vector<Chain> short_cycle_chains(int n, int ell) {
  check_factor_parameters(n, ell);
  std::vector<Chain> out;
  for (auto& c : enumerate_chains(n)) {
    const int h = c.length();
    if (h >= 3 && h <= 2 * ell - 3 && c.type().matches("[--]")) out.push_back(std::move(c));
  }
  return out;
}

struct GluingArc {
  Chain cycle;  // the [--]-chain representing the short cycle
  Chain from;   // g(C)
  Chain to;     // p(g(C))
};

inline std::vector<GluingArc> gluing_arcs(int n, int ell) {
  std::vector<GluingArc> out;
  for (const auto& c : short_cycle_chains(n, ell)) out.push_back({c, gluing_chain(c, ell), parent_of_gluing(c, ell)});
  return out;
}

/// One flipping 4-cycle per gluing arc, pairwise edge-disjoint.  Trees of
/// the arc forest are processed from the roots towards the leaves.
inline std::vector<FlipCycle4> build_flip4_set(int n, int ell) {
  const auto arcs = gluing_arcs(n, ell);
  std::unordered_map<std::string, std::vector<std::size_t>> incoming;
  std::unordered_map<std::string, int> upward_edge;  // node -> edge used on it towards its parent
  for (std::size_t k = 0; k < arcs.size(); ++k) incoming[arcs[k].to.str()].push_back(k);

  std::vector<Chain> parents;
  for (const auto& [w, ks] : incoming) parents.push_back(arcs[ks.front()].to);
  std::sort(parents.begin(), parents.end(), canonical_chain_less);

  std::vector<FlipCycle4> out;
  out.reserve(arcs.size());
  for (const Chain& p : parents) {
    const int h = p.length();
    const auto up = upward_edge.find(p.str());
    const int forbidden = up == upward_edge.end() ? 0 : up->second;
    std::vector<bool> used(static_cast<std::size_t>(h) + 1, false);
    if (forbidden) used[static_cast<std::size_t>(forbidden)] = true;
    const auto assignment = h >= 5 ? select_child_4cycles(h, forbidden ? forbidden : h) : std::map<int, int>{};
    for (std::size_t k : incoming[p.str()]) {
      const Chain& child = arcs[k].from;
      const int i = *child_index(p, child);
      const auto candidates = flipping_4cycles(p, child);
      const FlipCycle4* pick = nullptr;
      if (h >= 5) {
        const int e = assignment.at(i);
        for (const auto& f : candidates)
          if (f.parent_edge == e) pick = &f;
      } else {
        for (const auto& f : candidates)
          if (!used[static_cast<std::size_t>(f.parent_edge)]) {
            pick = &f;
            break;
          }
      }
      if (!pick) throw std::logic_error("build_flip4_set: no free flipping 4-cycle below " + p.str());
      used[static_cast<std::size_t>(pick->parent_edge)] = true;
      upward_edge[child.str()] = pick->child_edge;
      out.push_back(*pick);
    }
  }
  return out;
}

// Flipping 6-cycles ---------------------------------------------------------

/// Vertices of C^+_{2l-3,2l-3} in increasing order.
inline std::vector<Bitstring> top_class_vertices(int n, int ell) {
  check_factor_parameters(n, ell);
  const int h = 2 * ell - 3;
  const int level = (n + h) / 2;
  std::vector<Bitstring> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (std::popcount(v) != level) continue;
    const Bitstring x(v, n);
    const VertexClass c = classify(x);
    if (c.h == h && c.i == h && c.plus) out.push_back(x);
  }
  return out;
}

/// Decomposition of a flippable pair: 0^{2l-3} x reads
/// u0' 0 u_1 ... 0 u_{d+1} 0 1 1 v_d 1 ... v_1 1, and y has 1 0 1 in place of
/// the 0 1 1 block.
struct FlippablePair {
  Bitstring x;
  Bitstring y;
  int d = 0;
  Bitstring u0_prime;
  std::vector<Bitstring> u;  // u_1 .. u_{d+1}
  std::vector<Bitstring> v;  // v_1 .. v_d
  int locator = 0;           // position of the 0 1 1 block in 0^{2l-3} x
};

namespace detail {

inline FlippablePair decompose_pull(int ell, const Bitstring& x, const Bitstring& y, int pos) {
  const Bitstring t = Bitstring::repeat(false, 2 * ell - 3) + x;
  FlippablePair fp;
  fp.x = x;
  fp.y = y;
  fp.locator = pos;
  // last up-crossing to each depth before the block
  int depth = 0;
  std::vector<int> open_at;  // open_at[k-1]: index of the 0 entering depth k
  for (int i = 1; i < pos; ++i) {
    if (t[i]) {
      --depth;
      open_at.resize(static_cast<std::size_t>(depth));
    } else {
      ++depth;
      open_at.push_back(i);
    }
  }
  fp.d = depth - 1;
  fp.u0_prime = t.substr(1, open_at[0] - 1);
  for (int k = 1; k <= depth; ++k) {
    const int from = open_at[static_cast<std::size_t>(k - 1)] + 1;
    const int to = k < depth ? open_at[static_cast<std::size_t>(k)] : pos;
    fp.u.push_back(t.substr(from, to - from));
  }
  // first down-crossing from each depth after the block
  depth = fp.d;
  int target = fp.d;
  int from = pos + 3;
  std::vector<Bitstring> v_rev;
  for (int i = pos + 3; i <= t.size() && target > 0; ++i) {
    if (t[i] && depth == target) {
      v_rev.push_back(t.substr(from, i - from));
      from = i + 1;
      --target;
    }
    depth += t[i] ? -1 : 1;
  }
  fp.v.assign(v_rev.rbegin(), v_rev.rend());
  return fp;
}

}  // namespace detail

/// The decomposition if (x, y) is a flippable pair.
inline std::optional<FlippablePair> is_flippable(int ell, const Bitstring& x, const Bitstring& y) {
  if (x.size() != y.size() || x == y) return std::nullopt;
  const int h = 2 * ell - 3;
  for (const auto* z : {&x, &y}) {
    const VertexClass c = classify(*z);
    if (c.h != h || c.i != h || !c.plus) return std::nullopt;
  }
  const Bitstring pad = Bitstring::repeat(false, h);
  const Bitstring tx = pad + x;
  const Bitstring ty = pad + y;
  for (int pos : pull_positions(tx)) {
    if (pos <= h) continue;
    if (pull(tx, pos) == ty) return detail::decompose_pull(ell, x, y, pos);
  }
  return std::nullopt;
}

/// All flippable pairs with x in C^+_{2l-3,2l-3}, ordered by x then locator.
inline std::vector<FlippablePair> flippable_pairs(int n, int ell) {
  const int h = 2 * ell - 3;
  const Bitstring pad = Bitstring::repeat(false, h);
  std::vector<FlippablePair> out;
  for (const auto& x : top_class_vertices(n, ell)) {
    const Bitstring tx = pad + x;
    for (int pos : pull_positions(tx)) {
      if (pos <= h) continue;
      const Bitstring ty = pull(tx, pos);
      out.push_back(detail::decompose_pull(ell, x, ty.substr(h + 1, n), pos));
    }
  }
  return out;
}

/// A 6-cycle of Q_n given by a word with three stars; its vertices replace the
/// stars by the six patterns that are not constant.
struct FlipCycle6 {
  std::string word;

  std::array<Bitstring, 6> vertices() const {
    static constexpr std::array<std::array<bool, 3>, 6> kPatterns = {
        {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}, {1, 0, 1}}};
    std::array<Bitstring, 6> out;
    for (std::size_t k = 0; k < 6; ++k) {
      std::uint64_t v = 0;
      int s = 0;
      for (char ch : word) {
        bool bit = ch == '1';
        if (ch == '*') bit = kPatterns[k][static_cast<std::size_t>(s++)];
        v = (v << 1) | static_cast<std::uint64_t>(bit);
      }
      out[k] = Bitstring(v, static_cast<int>(word.size()));
    }
    return out;
  }

  std::vector<Edge> edges() const {
    const auto vs = vertices();
    std::vector<Edge> out;
    for (std::size_t k = 0; k < 6; ++k) out.emplace_back(vs[k], vs[(k + 1) % 6]);
    return out;
  }

  friend bool operator==(const FlipCycle6&, const FlipCycle6&) = default;
};

inline FlipCycle6 c6(int ell, const FlippablePair& fp) {
  const int h = 2 * ell - 3;
  std::string w = fp.u0_prime.str().substr(static_cast<std::size_t>(h));
  for (int k = 1; k <= fp.d; ++k) w += '1' + fp.u[static_cast<std::size_t>(k - 1)].str();
  w += '*' + fp.u[static_cast<std::size_t>(fp.d)].str() + "**1";
  for (int k = fp.d; k >= 1; --k) w += '0' + fp.v[static_cast<std::size_t>(k - 1)].str();
  if (static_cast<int>(w.size()) != fp.x.size()) throw std::logic_error("c6: word length mismatch");
  return {w};
}

inline FlipCycle6 c6(int ell, const Bitstring& x, const Bitstring& y) {
  const auto fp = is_flippable(ell, x, y);
  if (!fp) throw std::invalid_argument("c6: (" + x.str() + ", " + y.str() + ") is not a flippable pair");
  return c6(ell, *fp);
}

}  // namespace graykit
