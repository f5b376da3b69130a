#pragma once

// Cyclic ordering of the Greene-Kleitman chains whose alternating traversal
// is a Hamilton cycle of Q_n, built recursively and looplessly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/scd.hpp"

namespace graykit {

// Recursive construction ----------------------------------------------------

namespace detail {

inline Chain wrap_stars(const Chain& c) { return Chain::from_string("*" + c.str() + "*"); }

/// Descendants of C in dimension n+2, before any reversal.
inline std::vector<Chain> descendants(const Chain& c, bool even) {
  const Chain w = wrap_stars(c);
  const int h = c.length();
  if (even) {
    if (h == 0) return {w, Chain::from_string("0" + c.str() + "1")};
    return {w, f_op(w), f_op(l_op(w)), l_op(w)};
  }
  if (h == 1) return {w, l_op(w), f_op(w)};
  return {w, l_op(w), l_op(f_op(w)), f_op(w)};
}

}  // namespace detail

/// The cycle ordering of all chains of Q_n, n >= 2.
inline std::vector<Chain> lambda_recursive(int n) {
  if (n < 2) throw std::invalid_argument("lambda_recursive: n must be at least 2");
  if (n > 24) throw std::invalid_argument("lambda_recursive: n must be at most 24");
  const bool even = n % 2 == 0;
  std::vector<Chain> cur{Chain::from_string(even ? "" : "*")};
  for (int k = even ? 0 : 1; k < n; k += 2) {
    std::vector<Chain> next;
    for (const auto& c : cur) {
      auto desc = detail::descendants(c, even);
      if ((c.length() - k) % 4 != 0) std::reverse(desc.begin(), desc.end());
      next.insert(next.end(), desc.begin(), desc.end());
    }
    cur = std::move(next);
  }
  return cur;
}

enum class Direction { up, down };

/// Traversal direction of a chain in the Hamilton cycle of Q_n that runs
/// up the chain *^n.
inline Direction direction(const Chain& c, int n) {
  return ((c.length() - n) % 4 + 4) % 4 == 0 ? Direction::up : Direction::down;
}

// Loopless generation ---------------------------------------------------------

enum class ChainOp : std::uint8_t { f, l, f_inv, l_inv, g, g_inv };

struct GeneratorState {
  int n = 0;
  int m = 0;
  bool odd = false;
  std::string c;            // c[1..n], c[0] unused
  std::vector<int> p;       // 1..n
  std::vector<int> s;       // 0..n
  std::vector<int> t;       // 1..n+1
  std::vector<int> d;       // 0..m
  std::vector<int> l;       // 1..m
  std::string b;            // 1..m, '+' or '-'
  std::string o;            // 1..m, '+' or '-'
  std::vector<ChainOp> q;   // 1..m; q[0] is a sentinel

  std::string_view chain() const { return std::string_view(c).substr(1, static_cast<std::size_t>(n)); }
  friend bool operator==(const GeneratorState&, const GeneratorState&) = default;
};

/// Loopless generator for even and odd n.  Each call to next() returns the
/// next chain of the cycle ordering, or nothing once all chains were visited.
class ChainGenerator {
 public:
  explicit ChainGenerator(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("ChainGenerator: n must be in [1, 62]");
    auto& st = st_;
    st.n = n;
    st.odd = n % 2 == 1;
    st.m = n / 2;
    const int m = st.m;
    st.c.assign(static_cast<std::size_t>(n) + 2, ' ');
    st.p.assign(static_cast<std::size_t>(n) + 2, 0);
    st.s.assign(static_cast<std::size_t>(n) + 2, 0);
    st.t.assign(static_cast<std::size_t>(n) + 2, 0);
    st.d.assign(static_cast<std::size_t>(m) + 1, 0);
    st.l.assign(static_cast<std::size_t>(m) + 2, 0);
    st.b.assign(static_cast<std::size_t>(m) + 2, '+');
    st.o.assign(static_cast<std::size_t>(m) + 2, '+');
    st.q.assign(static_cast<std::size_t>(m) + 2, ChainOp::f);
    // C1 / C'1
    for (int i = 1; i <= n; ++i) st.c[at(i)] = '*';
    for (int i = 0; i <= n; ++i) st.s[at(i)] = i + 1;
    for (int i = 1; i <= n + 1; ++i) st.t[at(i)] = i - 1;
    for (int i = 1; i <= m; ++i) {
      st.l[at(i)] = st.odd ? 2 * i + 1 : 2 * i;
      st.b[at(i)] = '+';
      st.o[at(i)] = '+';
      st.q[at(i)] = st.odd ? ChainOp::l : ChainOp::f;
    }
    if (m >= 1) st.b[1] = '-';
    for (int i = 0; i <= m; ++i) st.d[at(i)] = i;
  }

  /// Resumes from a snapshot taken at a visit; the next call advances.
  explicit ChainGenerator(GeneratorState snapshot) : st_(std::move(snapshot)), started_(true) {}

  std::optional<std::string_view> next() {
    cost_ = 0;
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      return st_.chain();  // C2
    }
    if (!(st_.odd ? step_odd() : step_even())) {
      done_ = true;
      return std::nullopt;
    }
    return st_.chain();
  }

  const GeneratorState& state() const { return st_; }
  /// Array writes performed by the last call to next().
  std::size_t last_cost() const { return cost_; }

  // Auxiliary functions on the window of dimension 2i (or 2i+1 for odd n).
  void match_first(int i) {
    auto& st = st_;
    const int alpha = first_pos(i);
    const int beta = st.s[at(alpha)];
    const int gamma = st.s[at(beta)];
    put(st.c, alpha, '0');
    put(st.c, beta, '1');
    put(st.p, alpha, beta);
    put(st.p, beta, alpha);
    put(st.s, alpha - 1, gamma);
    put(st.t, gamma, alpha - 1);
  }
  void match_first_inv(int i) {
    auto& st = st_;
    const int alpha = first_pos(i);
    const int beta = st.p[at(alpha)];
    const int gamma = st.s[at(alpha - 1)];
    put(st.c, alpha, '*');
    put(st.c, beta, '*');
    put(st.s, alpha - 1, alpha);
    put(st.s, alpha, beta);
    put(st.s, beta, gamma);
    put(st.t, gamma, beta);
    put(st.t, beta, alpha);
    put(st.t, alpha, alpha - 1);
  }
  void match_last(int i) {
    auto& st = st_;
    const int alpha = last_pos(i);
    const int beta = st.t[at(alpha)];
    const int gamma = st.t[at(beta)];
    put(st.c, beta, '0');
    put(st.c, alpha, '1');
    put(st.p, beta, alpha);
    put(st.p, alpha, beta);
    put(st.s, gamma, alpha + 1);
    put(st.t, alpha + 1, gamma);
  }
  void match_last_inv(int i) {
    auto& st = st_;
    const int alpha = last_pos(i);
    const int beta = st.p[at(alpha)];
    const int gamma = st.t[at(alpha + 1)];
    put(st.c, beta, '*');
    put(st.c, alpha, '*');
    put(st.s, gamma, beta);
    put(st.s, beta, alpha);
    put(st.s, alpha, alpha + 1);
    put(st.t, alpha + 1, alpha);
    put(st.t, alpha, beta);
    put(st.t, beta, gamma);
  }

  int first_pos(int i) const { return st_.m - i + 1; }
  int last_pos(int i) const { return st_.m + i + (st_.odd ? 1 : 0); }

 private:
  static std::size_t at(int i) { return static_cast<std::size_t>(i); }

  template <class Seq, class V>
  void put(Seq& a, int i, V v) {
    a[at(i)] = v;
    ++cost_;
  }

  static char flip(char sign) { return sign == '+' ? '-' : '+'; }

  bool step_even() {
    auto& st = st_;
    const int m = st.m;
    // C3
    const int i = st.d[at(m)];
    if (i == 0) return false;
    // C4
    switch (st.q[at(i)]) {
      case ChainOp::l:
        match_last(i);
        break;
      case ChainOp::l_inv:
        match_last_inv(i);
        break;
      case ChainOp::f:
        if (st.s[at(m - i + 1)] <= m + i) {
          match_first(i);
        } else {
          match_last_inv(i + 1);
          match_first(i);
          match_last(i + 1);
        }
        break;
      case ChainOp::f_inv:
        if (i == m || st.c[at(m - i)] == '*') {
          match_first_inv(i);
        } else {
          match_last_inv(i + 1);
          match_first_inv(i);
          match_last(i + 1);
        }
        break;
      default:
        throw std::logic_error("ChainGenerator: invalid operation for even n");
    }
    // C5
    const ChainOp qi = st.q[at(i)];
    put(st.l, i, st.l[at(i)] + (qi == ChainOp::f || qi == ChainOp::l ? -2 : 2));
    put(st.d, m, m);
    if (st.b[at(i)] == '-') {
      // C6
      put(st.d, i, st.d[at(i - 1)]);
      put(st.d, i - 1, i - 1);
      put(st.l, i, st.o[at(i)] == '+' ? 2 : 4);
      put(st.b, i, '+');
      put(st.o, i, flip(st.o[at(i)]));
      put(st.q, i, ChainOp::f);
    } else if (qi != ChainOp::f_inv) {
      // C7
      if (qi == ChainOp::l || qi == ChainOp::l_inv)
        put(st.q, i, ChainOp::f_inv);
      else
        put(st.q, i, st.o[at(i)] == '+' ? ChainOp::l : ChainOp::l_inv);
    } else {
      // C8
      put(st.d, i, st.d[at(i - 1)]);
      put(st.d, i - 1, i - 1);
      const int j = st.d[at(i)];
      const bool shrink = j > 0 && (st.q[at(j)] == ChainOp::f || st.q[at(j)] == ChainOp::l);
      put(st.l, i, st.l[at(i)] + (shrink ? -2 : 2));
      if (st.l[at(i)] == 0) {
        put(st.b, i, '-');
        put(st.q, i, ChainOp::f_inv);
      } else if (st.l[at(i)] == 2 && st.o[at(i)] == '-') {
        put(st.b, i, '-');
        put(st.q, i, ChainOp::f);
      } else {
        put(st.q, i, ChainOp::f);
      }
      put(st.o, i, flip(st.o[at(i)]));
    }
    return true;
  }

  bool step_odd() {
    auto& st = st_;
    const int m = st.m;
    // C'3
    const int i = st.d[at(m)];
    if (i == 0) return false;
    // C'4
    switch (st.q[at(i)]) {
      case ChainOp::l:
        match_last(i);
        break;
      case ChainOp::l_inv:
        match_last_inv(i);
        break;
      case ChainOp::f:
        match_first(i);
        break;
      case ChainOp::f_inv:
        match_first_inv(i);
        break;
      case ChainOp::g:
        match_last_inv(i);
        match_first(i);
        if (i != m) match_first(i + 1);
        break;
      case ChainOp::g_inv:
        if (i == m) {
          match_first_inv(i);
        } else {
          match_first_inv(i + 1);
          match_first_inv(i);
        }
        match_last(i);
        break;
    }
    // C'5
    const ChainOp qi = st.q[at(i)];
    if (qi == ChainOp::f || qi == ChainOp::l)
      put(st.l, i, st.l[at(i)] - 2);
    else if (qi == ChainOp::f_inv || qi == ChainOp::l_inv)
      put(st.l, i, st.l[at(i)] + 2);
    put(st.d, m, m);
    const bool minus = st.b[at(i)] == '-';
    auto reached_last = [&]() {
      put(st.d, i, st.d[at(i - 1)]);
      put(st.d, i - 1, i - 1);
      const int j = st.d[at(i)];
      const ChainOp qj = st.q[at(j)];
      const bool shrink = j > 0 && (qj == ChainOp::f || qj == ChainOp::l || qj == ChainOp::g);
      put(st.l, i, st.l[at(i)] + (shrink ? -2 : 2));
    };
    if (minus && (qi == ChainOp::l || qi == ChainOp::g_inv)) {
      // C'6
      put(st.q, i, qi == ChainOp::l ? ChainOp::g : ChainOp::l_inv);
    } else if (minus && (qi == ChainOp::g || qi == ChainOp::l_inv)) {
      // C'7
      reached_last();
      if (st.l[at(i)] == 1) {
        put(st.q, i, ChainOp::g_inv);
      } else if (st.l[at(i)] == 3 && st.q[at(i - 1)] == ChainOp::l_inv) {
        put(st.b, i, '+');
        put(st.o, i, '-');
        put(st.q, i, ChainOp::l);
      } else if (st.l[at(i)] == 3) {
        put(st.q, i, ChainOp::l);
      } else {
        put(st.b, i, '+');
        put(st.q, i, ChainOp::l);
        put(st.o, i, flip(st.o[at(i)]));
      }
    } else if (qi != ChainOp::l_inv) {
      // C'8
      if (qi == ChainOp::f || qi == ChainOp::f_inv)
        put(st.q, i, ChainOp::l_inv);
      else
        put(st.q, i, st.o[at(i)] == '+' ? ChainOp::f : ChainOp::f_inv);
    } else {
      // C'9
      reached_last();
      if (st.l[at(i)] == 1) {
        put(st.b, i, '-');
        put(st.q, i, ChainOp::g_inv);
      } else if (st.l[at(i)] == 3 && st.o[at(i)] == '-') {
        put(st.b, i, '-');
        put(st.q, i, ChainOp::l);
      } else {
        put(st.q, i, ChainOp::l);
      }
      put(st.o, i, flip(st.o[at(i)]));
    }
    return true;
  }

  GeneratorState st_;
  bool started_ = false;
  bool done_ = false;
  std::size_t cost_ = 0;
};

/// All chains in loopless order.
inline std::vector<Chain> loopless_chains(int n) {
  ChainGenerator gen(n);
  std::vector<Chain> out;
  while (auto c = gen.next()) out.push_back(Chain::from_string(*c));
  return out;
}

inline std::vector<Chain> loopless_even(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("loopless_even: n must be even and at least 2");
  return loopless_chains(n);
}

inline std::vector<Chain> loopless_odd(int n) {
  if (n < 1 || n % 2 != 1) throw std::invalid_argument("loopless_odd: n must be odd");
  return loopless_chains(n);
}

// Hamilton cycle of Q_n -------------------------------------------------------

/// Streams the Hamilton cycle of Q_n that walks the chains of the cycle
/// ordering up and down alternately.  Junctions are checked to be edges.
inline void for_each_cube_vertex(int n, const std::function<void(const Bitstring&)>& visit) {
  if (n < 1 || n > 62) throw std::invalid_argument("for_each_cube_vertex: n must be in [1, 62]");
  ChainGenerator gen(n);
  std::optional<Bitstring> prev;
  std::optional<Bitstring> first;
  std::vector<int> stars;
  while (auto w = gen.next()) {
    stars.clear();
    std::uint64_t base = 0;
    for (int i = 0; i < n; ++i) {
      const char ch = (*w)[static_cast<std::size_t>(i)];
      base = (base << 1) | static_cast<std::uint64_t>(ch == '1');
      if (ch == '*') stars.push_back(i);
    }
    const int h = static_cast<int>(stars.size());
    const bool up = ((h - n) % 4 + 4) % 4 == 0;
    for (int k = 0; k <= h; ++k) {
      const int ones = up ? k : h - k;
      std::uint64_t v = base;
      for (int j = 0; j < ones; ++j) v |= std::uint64_t{1} << (n - 1 - stars[static_cast<std::size_t>(j)]);
      const Bitstring x(v, n);
      if (prev && hamming_distance(*prev, x) != 1 && n >= 2)
        throw std::logic_error("for_each_cube_vertex: junction " + prev->str() + " -> " + x.str() + " is not an edge");
      if (!first) first = x;
      prev = x;
      visit(x);
    }
  }
  if (n >= 2 && hamming_distance(*prev, *first) != 1)
    throw std::logic_error("for_each_cube_vertex: closing junction is not an edge");
}

inline std::vector<Bitstring> expand_to_hamilton(int n) {
  if (n > 24) throw std::invalid_argument("expand_to_hamilton: n must be at most 24");
  std::vector<Bitstring> out;
  out.reserve(std::size_t{1} << n);
  for_each_cube_vertex(n, [&](const Bitstring& x) { out.push_back(x); });
  return out;
}

}  // namespace graykit
