#pragma once

// p-lexical matchings between consecutive levels and the map z.
//
// A word is read as a lattice path with 1 = up-step and 0 = down-step.  For
// the upward map the path is padded with down-steps until it ends at height
// -1, and its down-steps are ranked row by row from the top, right to left
// within a row.  The p-th ranked step is flipped if it belongs to x itself.
// The downward map is the mirror image on up-steps, padded to height +1 and
// scanned left to right within a row.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/scd.hpp"
#include "graykit/words.hpp"

namespace graykit {

namespace detail {

struct LatticeStep {
  int top;  // height of the higher end
  int column;
};

}  // namespace detail

/// Neighbor one level up along the p-lexical matching, if x is matched.
inline std::optional<Bitstring> lex_up(int p, const Bitstring& x) {
  if (p < 0) throw std::invalid_argument("lex_up: p must be nonnegative");
  const int n = x.size();
  std::vector<detail::LatticeStep> steps;
  steps.reserve(static_cast<std::size_t>(n) + 2);
  int height = 0;
  for (int col = 1; col <= n; ++col) {
    if (x[col]) {
      ++height;
    } else {
      steps.push_back({height, col});
      --height;
    }
  }
  for (int col = n + 1; height > -1; ++col) {
    steps.push_back({height, col});
    --height;
  }
  if (static_cast<std::size_t>(p) >= steps.size()) return std::nullopt;
  auto order = [](const detail::LatticeStep& a, const detail::LatticeStep& b) {
    return a.top != b.top ? a.top > b.top : a.column > b.column;
  };
  std::nth_element(steps.begin(), steps.begin() + p, steps.end(), order);
  const int col = steps[static_cast<std::size_t>(p)].column;
  if (col > n) return std::nullopt;
  return x.with_flipped(col);
}

/// Neighbor one level down along the p-lexical matching, if x is matched.
inline std::optional<Bitstring> lex_down(int p, const Bitstring& x) {
  if (p < 0) throw std::invalid_argument("lex_down: p must be nonnegative");
  const int n = x.size();
  std::vector<detail::LatticeStep> steps;
  steps.reserve(static_cast<std::size_t>(n) + 2);
  int height = 0;
  for (int col = 1; col <= n; ++col) {
    if (x[col]) {
      ++height;
      steps.push_back({height, col});
    } else {
      --height;
    }
  }
  for (int col = n + 1; height < 1; ++col) {
    ++height;
    steps.push_back({height, col});
  }
  if (static_cast<std::size_t>(p) >= steps.size()) return std::nullopt;
  auto order = [](const detail::LatticeStep& a, const detail::LatticeStep& b) {
    return a.top != b.top ? a.top > b.top : a.column < b.column;
  };
  std::nth_element(steps.begin(), steps.begin() + p, steps.end(), order);
  const int col = steps[static_cast<std::size_t>(p)].column;
  if (col > n) return std::nullopt;
  return x.with_flipped(col);
}

/// z(x) = u_0 1 ... u_{i-2} 1 0 rot(u_{i-1}) 0 u_{i+1} ... 0 u_h for x in
/// C^-_{h,i} with 1 < i < h.
inline Bitstring z_map(const Bitstring& x) {
  const ChainFactorization f = chain_factorization(x);
  const int h = f.h();
  const int i = f.index;
  if (!(1 < i && i < h) || !f.valleys[static_cast<std::size_t>(i)].empty())
    throw std::invalid_argument("z_map: x must lie in C^-_{h,i} with 1 < i < h");
  Bitstring y = f.valleys[0];
  for (int j = 1; j <= i - 2; ++j) {
    y.append(true);
    y.append(f.valleys[static_cast<std::size_t>(j)]);
  }
  y.append(true);
  y.append(false);
  y.append(rot(f.valleys[static_cast<std::size_t>(i - 1)]));
  for (int j = i + 1; j <= h; ++j) {
    y.append(false);
    y.append(f.valleys[static_cast<std::size_t>(j)]);
  }
  return y;
}

}  // namespace graykit
