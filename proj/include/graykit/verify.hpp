#pragma once

// Checkers for listings produced by the library or read from outside.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/scd.hpp"

namespace graykit {

struct CheckReport {
  bool ok = true;
  std::string message;  // first violation
};

namespace detail {
inline CheckReport fail(std::string msg) { return {false, std::move(msg)}; }
inline std::size_t choose(int n, int k) {
  std::size_t c = 1;
  for (int j = 1; j <= k; ++j) c = c * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return c;
}
}  // namespace detail

/// Hamilton cycle of the full cube Q_n.
inline CheckReport verify_cube_cycle(const std::vector<Bitstring>& seq, int n) {
  if (n < 1 || n > 30) return detail::fail("unsupported dimension");
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Bitstring& x = seq[k];
    if (x.size() != n) return detail::fail("wrong length at index " + std::to_string(k));
    if (seen[x.value()]) return detail::fail("duplicate vertex " + x.str());
    seen[x.value()] = true;
    const Bitstring& y = seq[(k + 1) % seq.size()];
    if (seq.size() > 1 && y.size() == n && hamming_distance(x, y) != 1)
      return detail::fail("non-adjacent step " + x.str() + " -> " + y.str() +
                          (k + 1 == seq.size() ? " (wraparound)" : ""));
  }
  if (seq.size() != seen.size())
    return detail::fail("missing vertices: " + std::to_string(seq.size()) + " of " + std::to_string(seen.size()));
  return {};
}

/// Every vertex of Q_n lies on exactly one of the given chains.
inline CheckReport verify_scd_partition(const std::vector<Chain>& chains, int n) {
  if (n < 1 || n > 24) return detail::fail("unsupported dimension");
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::size_t covered = 0;
  for (const auto& c : chains) {
    if (c.size() != n) return detail::fail("wrong length: " + c.str());
    for (int j = 0; j <= c.length(); ++j) {
      const Bitstring x = c.vertex_at(j);
      if (seen[x.value()]) return detail::fail("vertex " + x.str() + " covered twice (chain " + c.str() + ")");
      seen[x.value()] = true;
      ++covered;
    }
  }
  if (covered != seen.size())
    return detail::fail("uncovered vertices: " + std::to_string(seen.size() - covered));
  return {};
}

/// A cyclic listing of all chains of Q_n with consecutive chains differing in
/// at most three positions.
inline CheckReport verify_gray3(const std::vector<Chain>& chains, int n) {
  if (auto r = verify_scd_partition(chains, n); !r.ok) return r;
  const std::size_t want = detail::choose(n, n / 2);
  if (chains.size() != want)
    return detail::fail("expected " + std::to_string(want) + " chains, got " + std::to_string(chains.size()));
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const std::string& a = chains[k].str();
    const std::string& b = chains[(k + 1) % chains.size()].str();
    int d = 0;
    for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
    if (d > 3) return detail::fail(a + " -> " + b + " differ in " + std::to_string(d) + " positions");
  }
  return {};
}

}  // namespace graykit
