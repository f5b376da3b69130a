#pragma once

// Dyck words and the tree operations used by the factor and joining code.
// Trees are never materialized: a Dyck word is read as a plane tree via the
// usual bijection (0 = step down to a new child, 1 = step back up).

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graykit/bitstring.hpp"

namespace graykit {

/// Every prefix has at least as many 0s as 1s and the counts balance.
inline bool is_dyck(const Bitstring& x) {
  int depth = 0;
  for (int i = 1; i <= x.size(); ++i) {
    depth += x[i] ? -1 : 1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

/// Balanced, and exactly one prefix has more 1s than 0s.
inline bool is_dyck_prime(const Bitstring& x) {
  int depth = 0;
  int below = 0;
  for (int i = 1; i <= x.size(); ++i) {
    depth += x[i] ? -1 : 1;
    if (depth < 0) ++below;
  }
  return depth == 0 && below == 1;
}

struct DyckFactors {
  Bitstring u;
  Bitstring v;
  friend bool operator==(const DyckFactors&, const DyckFactors&) = default;
};

/// x = 0 u 1 v with u, v Dyck.
inline DyckFactors left_factorize(const Bitstring& x) {
  if (x.empty() || !is_dyck(x)) throw std::invalid_argument("left_factorize: expected a nonempty Dyck word");
  int depth = 0;
  int close = 0;
  for (int i = 1; i <= x.size(); ++i) {
    depth += x[i] ? -1 : 1;
    if (depth == 0) {
      close = i;
      break;
    }
  }
  return {x.substr(2, close - 2), x.substr(close + 1, x.size() - close)};
}

/// x = u 0 v 1 with u, v Dyck.
inline DyckFactors right_factorize(const Bitstring& x) {
  if (x.empty() || !is_dyck(x)) throw std::invalid_argument("right_factorize: expected a nonempty Dyck word");
  // the opening 0 of the final pair sits right after the last return to depth 0
  int depth = 0;
  int last_zero_prefix = 0;
  for (int i = 1; i < x.size(); ++i) {
    depth += x[i] ? -1 : 1;
    if (depth == 0) last_zero_prefix = i;
  }
  const int open = last_zero_prefix + 1;
  return {x.substr(1, open - 1), x.substr(open + 1, x.size() - open - 1)};
}

/// Tree rotation: the leftmost child of the root becomes the new root.
/// Fixes the empty word.
inline Bitstring rot(const Bitstring& x) {
  if (x.empty()) return x;
  auto [u, v] = left_factorize(x);
  return u + Bitstring(0, 1) + v + Bitstring(1, 1);
}

inline Bitstring rot_inv(const Bitstring& x) {
  if (x.empty()) return x;
  auto [u, v] = right_factorize(x);
  return Bitstring(0, 1) + u + Bitstring(1, 1) + v;
}

/// Binary reflected Gray code of length n.
inline std::vector<Bitstring> brgc(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("brgc: n must be in [1, 30]");
  std::vector<Bitstring> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) out.emplace_back(k ^ (k >> 1), n);
  return out;
}

// Pull operation ----------------------------------------------------------
//
// A pull takes a pending edge (q, r) that is the rightmost child edge of a
// vertex q inside the rightmost subtree of the root, and reattaches it to the
// parent p of q, directly to the right of the edge (p, q).  On the word this
// rewrites the block "0 1 1" starting at the opening 0 of (q, r) into
// "1 0 1".  The locator is that 1-based position.

/// Whether `pos` locates a pullable pending edge of the tree `t`.
inline bool is_pull_position(const Bitstring& t, int pos) {
  if (!is_dyck(t) || pos < 1 || pos + 2 > t.size()) return false;
  if (t[pos] || !t[pos + 1] || !t[pos + 2]) return false;
  int depth = 0;
  for (int i = 1; i < pos; ++i) depth += t[i] ? -1 : 1;
  if (depth < 1) return false;  // q must not be the root
  // no return to the root before the end: q lies in the rightmost subtree
  depth -= 1;  // after the 0 1 1 block
  for (int i = pos + 3; i <= t.size(); ++i) {
    if (depth == 0) return false;
    depth += t[i] ? -1 : 1;
  }
  return true;
}

/// All locators for which `pull` succeeds, in increasing order.
inline std::vector<int> pull_positions(const Bitstring& t) {
  std::vector<int> out;
  if (!is_dyck(t) || t.size() < 3) return out;
  // depth before each position and the last position where depth hits 0
  std::vector<int> depth_before(static_cast<std::size_t>(t.size()) + 2, 0);
  int depth = 0;
  int last_root_return = 0;  // index i with depth after i equal to 0, i < size
  for (int i = 1; i <= t.size(); ++i) {
    depth_before[static_cast<std::size_t>(i)] = depth;
    depth += t[i] ? -1 : 1;
    if (depth == 0 && i < t.size()) last_root_return = i;
  }
  for (int pos = last_root_return + 1; pos + 2 <= t.size(); ++pos)
    if (!t[pos] && t[pos + 1] && t[pos + 2] && depth_before[static_cast<std::size_t>(pos)] >= 1) out.push_back(pos);
  return out;
}

inline Bitstring pull(const Bitstring& t, int pos) {
  if (!is_pull_position(t, pos)) throw std::invalid_argument("pull: locator does not name a pullable pending edge");
  return t.with_bit(pos, true).with_bit(pos + 1, false);
}

}  // namespace graykit
