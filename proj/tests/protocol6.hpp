#pragma once

#include <string>
#include <vector>

namespace graykit::checks {

// Generator protocol for n = 6, first 20 visits: every row lists the changed entries; '.' means unchanged.
// q uses F for f^-1 and L for l^-1.
struct ProtocolRow {
  const char* c;
  const char* p;
  const char* s;
  const char* t;
  const char* l;
  const char* b;
  const char* o;
  const char* q;
  const char* d;
};

inline constexpr ProtocolRow kProtocol6[] = {
    {"******", "......", "1234567", "0123456", "246", "-++", "+++", "fff", "0123"},
    {"01....", "21....", "3......", "..0....", "..4", "...", "...", "..l", "...."},
    {"....01", "....65", "....7..", "......4", "..2", "...", "...", "..F", "...."},
    {"**....", "......", "1......", "..2....", "..2", "...", "..-", "..f", "...2"},
    {".01...", ".32...", ".4.....", "...1...", ".2.", "...", "...", ".l.", "...3"},
    {"0..1..", "4..1..", "7......", "......0", "..0", "...", "...", "..L", "...."},
    {"....**", "......", "5......", "....0.6", "..2", "...", "...", "..F", "...."},
    {"*..*..", "......", "1...5..", "....4..", "..2", "..-", "..+", "..f", "...2"},
    {"...01.", "...54.", ".6.....", ".....1.", ".0.", "...", "...", ".F.", "...3"},
    {"0....1", "6....1", "7......", "......0", "..2", "..+", "..-", "...", "...2"},
    {"**0...", "..6..3", "127....", "......2", ".0.", ".-.", ".-.", "...", "..13"},
    {"01....", "21....", "7......", "......0", "..0", "...", "...", "..L", "...."},
    {"..*..*", "......", "3..6...", "..0..36", "..2", "...", "...", "..F", "...."},
    {"**....", "......", "1.3....", "..2....", "..2", "..-", "..+", "..f", "..21"},
    {".001..", ".5432.", ".6.....", ".....1.", "2..", "+..", "-..", "...", ".0.3"},
    {"0....1", "6....1", "7......", "......0", "..2", "..+", "..-", "...", "...2"},
    {"**..0.", "....65", "127....", "......2", ".4.", ".+.", ".+.", ".f.", ".103"},
    {"01....", "21....", "7......", "......0", "..0", "...", "...", "..L", "...."},
    {"....**", "......", "5......", "....056", "..2", "...", "...", "..F", "...."},
    {"**....", "......", "1.5....", "....2..", "..6", "...", "..+", "..f", "..20"},
};

// The chain column of the table, one word per row.
inline std::vector<std::string> protocol6_chains() {
  std::vector<std::string> out;
  std::string c(6, '.');
  for (const auto& r : kProtocol6) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (r.c[k] != '.') c[k] = r.c[k];
    out.push_back(c);
  }
  return out;
}

}  // namespace graykit::checks
