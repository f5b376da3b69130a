// Acceptance runner: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flip_checks.hpp"
#include "graykit/graykit.hpp"
#include "matching_checks.hpp"
#include "factor_counts.hpp"
#include "protocol6.hpp"

namespace {

using namespace graykit;

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t c = 1;
  for (int j = 1; j <= k; ++j) c = c * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return c;
}

std::string hamiltonicity() {
  for (int n = 3; n <= 15; n += 2) {
    const int m = (n - 1) / 2;
    for (int ell = 2; ell <= m + 1; ++ell) {
      const auto cycle = hamilton(n, ell);
      std::size_t want = 0;
      for (int k = m + 1 - ell; k <= m + ell; ++k) want += binom(n, k);
      const std::string where = " (n=" + std::to_string(n) + " l=" + std::to_string(ell) + ")";
      if (cycle.size() != want) return "vertex count " + std::to_string(cycle.size()) + where;
      if (auto r = verify_hamilton(cycle, n, ell); !r.ok) return r.message + where;
    }
  }
  return "";
}

std::string factor_table() {
  for (const auto& row : checks::factor_counts()) {
    const auto s = factor_stats(2 * row.m + 1, row.ell);
    const auto it = s.short_by_range.find(2 * row.ell - 2);
    const std::size_t top = it == s.short_by_range.end() ? 0 : it->second;
    if (s.total != row.total || top != row.short_top_range || s.long_count != row.long_count)
      return "m=" + std::to_string(row.m) + " l=" + std::to_string(row.ell) + ": " + std::to_string(s.total) + " [" +
             std::to_string(top) + "," + std::to_string(s.long_count) + "]";
  }
  // full range distribution for m = 8, l = 9
  const auto s = factor_stats(17, 9);
  const std::vector<std::size_t> want = {1430, 2002, 1638, 910, 350, 90, 14};
  for (std::size_t k = 0; k < want.size(); ++k) {
    const int range = 4 + 2 * static_cast<int>(k);
    const auto it = s.short_by_range.find(range);
    if (it == s.short_by_range.end() || it->second != want[k]) return "m=8 l=9 range " + std::to_string(range);
  }
  if (s.long_count != 1) return "m=8 l=9 long count";
  return "";
}

// Cycles of range 2r in C_{2m+1,l} for every l > r, against the closed form
// and against the binomial difference it comes from.  For r = m+1 only the
// lone long cycle of the l = m+1 factor has that range.
std::string short_cycle_formula() {
  for (int m = 1; m <= 8; ++m) {
    const int n = 2 * m + 1;
    std::vector<FactorStats> by_ell(static_cast<std::size_t>(m) + 2);
    for (int ell = 2; ell <= m + 1; ++ell) by_ell[static_cast<std::size_t>(ell)] = factor_stats(n, ell);
    for (int r = 2; r <= m + 1; ++r) {
      const std::size_t scaled = static_cast<std::size_t>(r - 1) * binom(2 * m, m - r + 1);
      if (scaled % static_cast<std::size_t>(m) != 0) return "formula not integral at m=" + std::to_string(m);
      const std::size_t formula = scaled / static_cast<std::size_t>(m);
      if (formula != binom(2 * m - 1, m - r + 1) - binom(2 * m - 1, m - r))
        return "closed form disagrees with difference at m=" + std::to_string(m) + " r=" + std::to_string(r);
      for (int ell = r + 1; ell <= m + 1; ++ell) {
        const auto& s = by_ell[static_cast<std::size_t>(ell)];
        const auto it = s.short_by_range.find(2 * r);
        const std::size_t got = it == s.short_by_range.end() ? 0 : it->second;
        if (got != formula)
          return "m=" + std::to_string(m) + " l=" + std::to_string(ell) + " r=" + std::to_string(r) + ": " +
                 std::to_string(got) + " vs " + std::to_string(formula);
      }
      if (r == m + 1) {
        const auto& s = by_ell[static_cast<std::size_t>(m + 1)];
        if (s.long_count != formula || s.short_by_range.count(2 * r)) return "top range at m=" + std::to_string(m);
      }
    }
  }
  return "";
}

std::string loopless_conformance() {
  std::vector<std::string> got;
  for (const auto& c : loopless_even(6)) {
    if (got.size() == 20) break;
    got.push_back(c.str());
  }
  if (got != checks::protocol6_chains()) return "n=6 listing differs from the protocol table";
  for (int n = 2; n <= 16; ++n) {
    const auto a = loopless_chains(n);
    const auto b = lambda_recursive(n);
    if (a.size() != b.size()) return "length differs at n=" + std::to_string(n);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].str() != b[k].str()) return "n=" + std::to_string(n) + " differs at index " + std::to_string(k);
  }
  std::size_t peak_even = 0, peak_odd = 0;
  for (int n = 2; n <= 30; ++n) {
    ChainGenerator g(n);
    std::size_t peak = 0, visits = 0;
    while (g.next()) {
      peak = std::max<std::size_t>(peak, static_cast<std::size_t>(g.last_cost()));
      ++visits;
    }
    if (visits != binom(n, n / 2)) return "visit count at n=" + std::to_string(n);
    if (peak > 64) return "mutation counter " + std::to_string(peak) + " at n=" + std::to_string(n);
    if (n >= 8) {
      std::size_t& ref = n % 2 == 0 ? peak_even : peak_odd;
      if (ref == 0) ref = peak;
      if (peak != ref) return "mutation peak varies with n at n=" + std::to_string(n);
    }
  }
  return "";
}

std::string cube_expansion() {
  for (int n = 2; n <= 16; ++n) {
    const std::string where = " at n=" + std::to_string(n);
    const auto chains = loopless_chains(n);
    if (auto r = verify_gray3(chains, n); !r.ok) return r.message + where;
    const auto seq = expand_to_hamilton(n);
    if (auto r = verify_cube_cycle(seq, n); !r.ok) return r.message + where;
    std::unordered_map<std::uint64_t, std::size_t> pos;
    for (std::size_t k = 0; k < seq.size(); ++k) pos[seq[k].value()] = k;
    const std::size_t len = seq.size();
    for (const auto& c : enumerate_chains(n)) {
      const std::size_t start = pos.at(c.bottom().value());
      const std::size_t h = static_cast<std::size_t>(c.length());
      bool fwd = true, bwd = true;
      for (std::size_t j = 0; j <= h; ++j) {
        const std::uint64_t v = c.vertex_at(static_cast<int>(j)).value();
        fwd = fwd && seq[(start + j) % len].value() == v;
        bwd = bwd && seq[(start + len - j) % len].value() == v;
      }
      if (!fwd && !bwd) return "chain " + c.str() + " not a contiguous subpath" + where;
    }
  }
  return "";
}

std::string lexical_matchings() {
  for (int n = 1; n <= 13; ++n) {
    const std::string where = " at n=" + std::to_string(n);
    if (auto e = checks::check_lex_inverse(n, n); !e.empty()) return e + where;
    if (auto e = checks::check_m0_is_scd(n); !e.empty()) return e + where;
    if (n >= 3)
      if (auto e = checks::check_perfect_matchings(n); !e.empty()) return e + where;
  }
  const Bitstring x = Bitstring::from_string("1110001001001001100001");
  const Bitstring y = Bitstring::from_string("1110001001001001100101");
  if (lex_up(11, x) != y || lex_down(11, y) != x) return "p=11 edge of the example vertex";
  std::vector<int> unmatched;
  for (int p = 0; p <= 12; ++p)
    if (!lex_down(p, y)) unmatched.push_back(p);
  if (unmatched != std::vector<int>{4, 6, 9}) return "unmatched set of the example vertex";
  return "";
}

std::string flipping_contracts() {
  for (int n = 3; n <= 11; n += 2)
    for (int ell = 2; ell <= (n + 1) / 2; ++ell) {
      const std::string where = " (n=" + std::to_string(n) + " l=" + std::to_string(ell) + ")";
      if (auto e = checks::check_flip4_family(n, ell); !e.empty()) return e + where;
      if (auto e = checks::check_flip_contracts(n, ell); !e.empty()) return e + where;
    }
  return "";
}

std::string brgc_sanity() {
  std::string listing;
  for (const auto& x : brgc(3)) listing += x.str() + ",";
  if (listing != "000,001,011,010,110,111,101,100,") return "n=3 listing " + listing;
  for (int n = 2; n <= 16; ++n) {
    const auto seq = brgc(n);
    if (auto r = verify_cube_cycle(seq, n); !r.ok) return r.message;
    std::vector<std::size_t> flips(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < seq.size(); ++k) ++flips[static_cast<std::size_t>(flipped_position(seq[k], seq[(k + 1) % seq.size()]))];
    if (flips[1] != 2) return "position 1 at n=" + std::to_string(n);
    for (int j = 2; j <= n; ++j)
      if (flips[static_cast<std::size_t>(j)] != std::size_t{1} << (j - 1))
        return "position " + std::to_string(j) + " at n=" + std::to_string(n);
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"1 hamilton cycles of the middle 2l levels, odd n <= 15, all l", hamiltonicity},
      {"2 cycle factor counts, m = 1..8", factor_table},
      {"3 short cycle counts by range, m <= 8", short_cycle_formula},
      {"4 loopless chain generator: protocol, recursive agreement, mutation bound", loopless_conformance},
      {"5 cube hamilton cycle through every chain and 3-gray chain order, n <= 16", cube_expansion},
      {"6 lexical matchings, n <= 13", lexical_matchings},
      {"7 flipping 4- and 6-cycle contracts, n <= 11", flipping_contracts},
      {"8 reflected gray code flip counts, n <= 16", brgc_sanity},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = check();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", err.empty() ? "PASS" : "FAIL", name, secs, err.empty() ? "" : ": ",
                err.c_str());
    std::fflush(stdout);
    failed += !err.empty();
  }
  return failed == 0 ? 0 : 1;
}
