#pragma once

// Greene-Kleitman symmetric chain decomposition.
//
// 0s are opening and 1s closing brackets; matching closest pairs leaves the
// unmatched positions, which read as 1...10...0.  A chain is written as a word
// over {0,1,*} with a * at every unmatched position; its i-th vertex sets the
// first i stars to 1 and the rest to 0.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graykit/bitstring.hpp"
#include "graykit/words.hpp"

namespace graykit {

/// Emptiness of the first and last valley of a chain: [--], [+-], [++], [-+].
struct ChainType {
  bool first_nonempty = false;
  bool last_nonempty = false;

  std::string str() const {
    return std::string("[") + (first_nonempty ? '+' : '-') + (last_nonempty ? '+' : '-') + ']';
  }
  /// Pattern like "[?-]"; '?' matches either sign.
  bool matches(std::string_view pattern) const {
    if (pattern.size() != 4 || pattern.front() != '[' || pattern.back() != ']')
      throw std::invalid_argument("ChainType::matches: bad pattern");
    auto ok = [](char c, bool nonempty) { return c == '?' || (c == '+') == nonempty; };
    return ok(pattern[1], first_nonempty) && ok(pattern[2], last_nonempty);
  }
  friend bool operator==(const ChainType&, const ChainType&) = default;
};

class Chain {
 public:
  Chain() = default;

  /// Validates the alphabet and that every valley between stars is a Dyck word.
  static Chain from_string(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(Bitstring::kMaxSize)) throw std::invalid_argument("Chain: too long");
    int depth = 0;
    for (char ch : s) {
      if (ch == '*') {
        if (depth != 0) throw std::invalid_argument("Chain: star inside a matched pair");
      } else if (ch == '0') {
        ++depth;
      } else if (ch == '1') {
        if (--depth < 0) throw std::invalid_argument("Chain: unmatched 1");
      } else {
        throw std::invalid_argument("Chain: expected only 0, 1, * characters");
      }
    }
    if (depth != 0) throw std::invalid_argument("Chain: unmatched 0");
    Chain c;
    c.word_ = std::string(s);
    return c;
  }

  const std::string& str() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  /// Number of stars.
  int length() const { return static_cast<int>(std::count(word_.begin(), word_.end(), '*')); }
  char operator[](int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }

  std::vector<int> star_positions() const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i)
      if ((*this)[i] == '*') out.push_back(i);
    return out;
  }

  Bitstring vertex_at(int i) const {
    const int h = length();
    if (i < 0 || i > h) throw std::out_of_range("Chain::vertex_at: index out of range");
    std::uint64_t v = 0;
    int seen = 0;
    for (char ch : word_) {
      bool bit = ch == '1';
      if (ch == '*') bit = seen++ < i;
      v = (v << 1) | static_cast<std::uint64_t>(bit);
    }
    return Bitstring(v, size());
  }
  Bitstring bottom() const { return vertex_at(0); }
  Bitstring top() const { return vertex_at(length()); }

  /// u_0, ..., u_h.
  std::vector<Bitstring> valleys() const {
    std::vector<Bitstring> out(1);
    for (char ch : word_) {
      if (ch == '*')
        out.emplace_back();
      else
        out.back().append(ch == '1');
    }
    return out;
  }

  ChainType type() const {
    if (length() == 0) throw std::domain_error("Chain::type: chains of length 0 have no type");
    return {word_.front() != '*', word_.back() != '*'};
  }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain& a, const Chain& b) { return a.word_ <=> b.word_; }

 private:
  std::string word_;
};

namespace detail {

/// Partner position for matched characters, 0 for unmatched ones.  Stars
/// count as unmatched and never participate.
inline std::vector<int> match_partners(std::string_view w) {
  std::vector<int> partner(w.size() + 1, 0);
  std::vector<int> open;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    const char ch = w[static_cast<std::size_t>(i - 1)];
    if (ch == '0') {
      open.push_back(i);
    } else if (ch == '1' && !open.empty()) {
      partner[static_cast<std::size_t>(i)] = open.back();
      partner[static_cast<std::size_t>(open.back())] = i;
      open.pop_back();
    }
  }
  return partner;
}

}  // namespace detail

/// Unmatched positions of a vertex and its class data.
struct VertexClass {
  int h = 0;                    // chain length
  int i = 0;                    // index on the chain (number of unmatched 1s)
  bool plus = false;            // u_i nonempty
  bool first_nonempty = false;  // u_0 nonempty
  bool last_nonempty = false;   // u_h nonempty
};

/// Chain length, index, and valley emptiness of x in one bracket pass.
inline VertexClass classify(const Bitstring& x) {
  const int n = x.size();
  std::array<int, Bitstring::kMaxSize> open{};
  int open_count = 0;
  int unmatched_ones = 0;
  int first_unmatched_one = 0;
  int last_unmatched_one = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (!x[pos]) {
      open[static_cast<std::size_t>(open_count++)] = pos;
    } else if (open_count > 0) {
      --open_count;
    } else {
      if (unmatched_ones++ == 0) first_unmatched_one = pos;
      last_unmatched_one = pos;
    }
  }
  // unmatched 0s are the remaining stack entries, in increasing order
  VertexClass c;
  c.h = unmatched_ones + open_count;
  c.i = unmatched_ones;
  if (c.h == 0) {
    c.plus = c.first_nonempty = c.last_nonempty = n > 0;
    return c;
  }
  const int first_unmatched_zero = open_count > 0 ? open[0] : n + 1;
  const int first_star = unmatched_ones > 0 ? first_unmatched_one : first_unmatched_zero;
  const int last_star = open_count > 0 ? open[static_cast<std::size_t>(open_count - 1)] : last_unmatched_one;
  c.first_nonempty = first_star != 1;
  c.last_nonempty = last_star != n;
  // u_i lies strictly between the last unmatched 1 and the first unmatched 0
  const int lo = unmatched_ones > 0 ? last_unmatched_one : 0;
  c.plus = first_unmatched_zero - lo > 1;
  return c;
}

inline Chain chain_of(const Bitstring& x) {
  std::string w = x.str();
  std::vector<int> partner = detail::match_partners(w);
  for (int i = 1; i <= x.size(); ++i)
    if (partner[static_cast<std::size_t>(i)] == 0) w[static_cast<std::size_t>(i - 1)] = '*';
  return Chain::from_string(w);
}

struct ChainFactorization {
  std::vector<Bitstring> valleys;  // u_0, ..., u_h
  int index = 0;                   // i

  int h() const { return static_cast<int>(valleys.size()) - 1; }

  /// u_0 1 ... u_{i-1} 1 u_i 0 u_{i+1} ... 0 u_h
  Bitstring vertex() const {
    Bitstring x = valleys.front();
    for (int j = 1; j <= h(); ++j) {
      x.append(j <= index);
      x.append(valleys[static_cast<std::size_t>(j)]);
    }
    return x;
  }
};

inline ChainFactorization chain_factorization(const Bitstring& x) {
  return {chain_of(x).valleys(), classify(x).i};
}

inline Bitstring vertex_at(const Chain& c, int i) { return c.vertex_at(i); }
inline Bitstring bottom(const Chain& c) { return c.bottom(); }
inline Bitstring top(const Chain& c) { return c.top(); }
inline ChainType chain_type(const Chain& c) { return c.type(); }

namespace detail {

inline void collect_chains(int n, int depth, std::string& prefix, std::vector<Chain>& out) {
  const int remaining = n - static_cast<int>(prefix.size());
  if (remaining == 0) {
    if (depth == 0) out.push_back(Chain::from_string(prefix));
    return;
  }
  if (depth > remaining) return;
  if (depth == 0) {
    prefix.push_back('*');
    collect_chains(n, depth, prefix, out);
    prefix.pop_back();
  }
  if (depth + 1 <= remaining - 1) {
    prefix.push_back('0');
    collect_chains(n, depth + 1, prefix, out);
    prefix.pop_back();
  }
  if (depth > 0) {
    prefix.push_back('1');
    collect_chains(n, depth - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Orders chains by length (longest first), then lexicographically.
inline bool canonical_chain_less(const Chain& a, const Chain& b) {
  const int la = a.length();
  const int lb = b.length();
  if (la != lb) return la > lb;
  return a.str() < b.str();
}

/// All chains of Q_n in canonical order.
inline std::vector<Chain> enumerate_chains(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("enumerate_chains: n must be in [1, 24]");
  std::vector<Chain> out;
  std::string prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  detail::collect_chains(n, 0, prefix, out);
  std::sort(out.begin(), out.end(), canonical_chain_less);
  return out;
}

// Chain operators -----------------------------------------------------------

/// Replace the first two stars by 0 and 1.
inline Chain f_op(const Chain& c) {
  auto stars = c.star_positions();
  if (stars.size() < 2) throw std::invalid_argument("f_op: chain needs at least two stars");
  std::string w = c.str();
  w[static_cast<std::size_t>(stars[0] - 1)] = '0';
  w[static_cast<std::size_t>(stars[1] - 1)] = '1';
  return Chain::from_string(w);
}

/// Replace the last two stars by 0 and 1.
inline Chain l_op(const Chain& c) {
  auto stars = c.star_positions();
  if (stars.size() < 2) throw std::invalid_argument("l_op: chain needs at least two stars");
  std::string w = c.str();
  w[static_cast<std::size_t>(stars[stars.size() - 2] - 1)] = '0';
  w[static_cast<std::size_t>(stars.back() - 1)] = '1';
  return Chain::from_string(w);
}

/// Undo f_op on a chain whose first character is a 0 matched before any star.
/// The inverse is only unique for that shape, which is what f_op produces on
/// chains starting with a star.
inline Chain f_inv(const Chain& c) {
  const std::string& w = c.str();
  if (w.empty() || w.front() != '0') throw std::invalid_argument("f_inv: chain must start with a matched 0");
  const int partner = detail::match_partners(w)[1];
  std::string out = w;
  out.front() = '*';
  out[static_cast<std::size_t>(partner - 1)] = '*';
  return Chain::from_string(out);
}

/// Undo l_op on a chain whose last character is a 1 matched after every star.
inline Chain l_inv(const Chain& c) {
  const std::string& w = c.str();
  if (w.empty() || w.back() != '1') throw std::invalid_argument("l_inv: chain must end with a matched 1");
  const int partner = detail::match_partners(w)[w.size()];
  std::string out = w;
  out.back() = '*';
  out[static_cast<std::size_t>(partner - 1)] = '*';
  return Chain::from_string(out);
}

/// The h-1 chains obtained by matching the j-th and (j+1)-th star, j = 1..h-1.
inline std::vector<Chain> children(const Chain& c) {
  auto stars = c.star_positions();
  std::vector<Chain> out;
  for (std::size_t j = 0; j + 1 < stars.size(); ++j) {
    std::string w = c.str();
    w[static_cast<std::size_t>(stars[j] - 1)] = '0';
    w[static_cast<std::size_t>(stars[j + 1] - 1)] = '1';
    out.push_back(Chain::from_string(w));
  }
  return out;
}

/// One parent per outermost matched pair, turned back into two stars.
inline std::vector<Chain> parents(const Chain& c) {
  const std::string& w = c.str();
  std::vector<int> partner = detail::match_partners(w);
  std::vector<Chain> out;
  int depth = 0;
  for (int i = 1; i <= c.size(); ++i) {
    const char ch = w[static_cast<std::size_t>(i - 1)];
    if (ch == '0') {
      if (depth == 0) {
        std::string p = w;
        p[static_cast<std::size_t>(i - 1)] = '*';
        p[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)] - 1)] = '*';
        out.push_back(Chain::from_string(p));
      }
      ++depth;
    } else if (ch == '1') {
      --depth;
    }
  }
  return out;
}

}  // namespace graykit
