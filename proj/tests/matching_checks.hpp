#pragma once

// Exhaustive matching checks shared by the unit tests and the acceptance
// runner.  Each returns an empty string on success or a first-failure message.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "graykit/lexical.hpp"
#include "graykit/scd.hpp"

namespace graykit::checks {

inline std::string check_lex_inverse(int n, int max_p) {
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const Bitstring x(v, n);
    for (int p = 0; p <= max_p; ++p) {
      if (auto y = lex_up(p, x)) {
        if (y->level() != x.level() + 1 || hamming_distance(*y, x) != 1) return "lex_up not an up-edge at " + x.str();
        auto back = lex_down(p, *y);
        if (!back || *back != x) return "lex_down(lex_up(x)) != x at " + x.str() + " p=" + std::to_string(p);
      }
      if (auto y = lex_down(p, x)) {
        auto back = lex_up(p, *y);
        if (!back || *back != x) return "lex_up(lex_down(x)) != x at " + x.str() + " p=" + std::to_string(p);
      }
    }
  }
  return {};
}

/// Union of all 0-lexical edges equals the set of consecutive chain edges.
inline std::string check_m0_is_scd(int n) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> lex_edges;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (auto y = lex_up(0, Bitstring(v, n))) lex_edges.insert({v, y->value()});
  std::set<std::pair<std::uint64_t, std::uint64_t>> chain_edges;
  for (const auto& c : enumerate_chains(n))
    for (int i = 0; i < c.length(); ++i) chain_edges.insert({c.vertex_at(i).value(), c.vertex_at(i + 1).value()});
  if (lex_edges != chain_edges) return "M^0 differs from the chain edges for n=" + std::to_string(n);
  return {};
}

namespace detail {

using ClassKey = std::tuple<int, int, bool>;  // h, i, plus

inline std::map<ClassKey, std::vector<Bitstring>> vertex_classes(int n) {
  std::map<ClassKey, std::vector<Bitstring>> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const Bitstring x(v, n);
    const auto c = classify(x);
    out[{c.h, c.i, c.plus}].push_back(x);
  }
  return out;
}

template <class Up, class Down>
std::string check_perfect(const std::vector<Bitstring>& from, const std::vector<Bitstring>& to, Up up, Down down,
                          const std::string& label) {
  std::set<Bitstring> to_set(to.begin(), to.end());
  std::set<Bitstring> from_set(from.begin(), from.end());
  if (from.size() != to.size()) return label + ": class sizes differ";
  for (const auto& x : from) {
    auto y = up(x);
    if (!y || !to_set.count(*y)) return label + ": unmatched " + x.str();
  }
  for (const auto& y : to) {
    auto x = down(y);
    if (!x || !from_set.count(*x)) return label + ": unmatched " + y.str();
  }
  return {};
}

}  // namespace detail

/// M0 and M1 restricted to the vertex classes C_{h,i} of Q_n are perfect
/// matchings between the class pairs they connect.
inline std::string check_perfect_matchings(int n) {
  auto classes = detail::vertex_classes(n);
  auto get = [&](int h, int i, std::optional<bool> plus) {
    std::vector<Bitstring> out;
    for (bool s : {false, true}) {
      if (plus && *plus != s) continue;
      auto it = classes.find({h, i, s});
      if (it != classes.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
  };
  auto up = [](int p) { return [p](const Bitstring& x) { return lex_up(p, x); }; };
  auto down = [](int p) { return [p](const Bitstring& x) { return lex_down(p, x); }; };
  const std::string tag = " n=" + std::to_string(n);

  for (int h = 1; h <= n; ++h) {
    for (int i = 0; i < h; ++i) {
      auto msg = detail::check_perfect(get(h, i, std::nullopt), get(h, i + 1, std::nullopt), up(0), down(0),
                                       "M0[C" + std::to_string(h) + "," + std::to_string(i) + "]" + tag);
      if (!msg.empty()) return msg;
    }
  }
  if (auto msg = detail::check_perfect(get(1, 0, false), get(1, 1, false), up(1), down(1), "M1[C-1,0]" + tag);
      !msg.empty())
    return msg;
  for (int h = 0; h <= n - 2; ++h) {
    for (int i = 0; i <= h; ++i) {
      const std::string hi = std::to_string(h) + "," + std::to_string(i);
      if (auto msg = detail::check_perfect(get(h, i, true), get(h + 2, i + 2, false), up(1), down(1), "M1 up " + hi + tag);
          !msg.empty())
        return msg;
      if (auto msg = detail::check_perfect(get(h, i, true), get(h + 2, i, false), down(1), up(1), "M1 down " + hi + tag);
          !msg.empty())
        return msg;
    }
  }
  for (int h = 3; h <= n; ++h) {
    for (int i = 2; i < h; ++i) {
      const auto from = get(h, i, false);
      const auto to = get(h, i - 1, false);
      std::set<Bitstring> to_set(to.begin(), to.end());
      std::set<Bitstring> image;
      for (const auto& x : from) {
        const Bitstring z = z_map(x);
        if (!to_set.count(z)) return "z leaves C^-_{h,i-1} at " + x.str() + tag;
        const bool first_case = chain_factorization(x).valleys[static_cast<std::size_t>(i - 1)].empty();
        if (lex_down(first_case ? 0 : 2, x) != z) return "z edge is not lexical at " + x.str() + tag;
        image.insert(z);
      }
      if (image.size() != to.size() || from.size() != to.size()) return "z not a bijection" + tag;
    }
  }
  return {};
}

}  // namespace graykit::checks
