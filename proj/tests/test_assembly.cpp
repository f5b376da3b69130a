#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "graykit/assembly.hpp"
#include "factor_counts.hpp"

namespace graykit {
namespace {

std::size_t binomial_window(int n, int ell) {
  const int m = (n - 1) / 2;
  std::size_t total = 0;
  for (int k = m + 1 - ell; k <= m + ell; ++k) {
    std::size_t c = 1;
    for (int j = 1; j <= k; ++j) c = c * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
    total += c;
  }
  return total;
}

TEST(SpecialTree, Shape) {
  EXPECT_EQ(special_tree(3, 2), "101"_bits);
  EXPECT_EQ(special_tree(7, 2), "1001011"_bits);
  EXPECT_EQ(special_tree(9, 3), "111001011"_bits);
  for (int n = 3; n <= 13; n += 2)
    for (int ell = 2; ell <= (n + 1) / 2; ++ell) {
      const auto s = special_tree(n, ell);
      EXPECT_TRUE(is_dyck(Bitstring::repeat(false, 2 * ell - 3) + s));
      const VertexClass c = classify(s);
      EXPECT_EQ(c.h, 2 * ell - 3);
      EXPECT_EQ(c.i, c.h);
      EXPECT_TRUE(c.plus);
    }
}

TEST(AuxGraph, NodeCountsMatchLongCycles) {
  for (const auto& row : checks::factor_counts()) {
    const int n = 2 * row.m + 1;
    if (n > 13) continue;
    const auto f = build_factor(n, row.ell);
    const auto g = build_aux_graph(f);
    EXPECT_EQ(g.size(), row.long_count) << "n=" << n << " l=" << row.ell;
    for (const auto& e : g.edges) {
      EXPECT_LT(e.a, g.size());
      EXPECT_LT(e.b, g.size());
    }
  }
}

TEST(AuxGraph, NodeIdsAreSmallestVertices) {
  const auto f = build_factor(9, 2);
  const auto g = build_aux_graph(f);
  ASSERT_EQ(g.size(), 4u);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& vs = f.cycles()[g.cycle_of_node[k]].vertices;
    EXPECT_EQ(g.node_id[k], *std::min_element(vs.begin(), vs.end()));
  }
}

TEST(SpanningSixCycles, Counts) {
  EXPECT_TRUE(spanning_six_cycles(build_aux_graph(build_factor(7, 2))).empty());
  EXPECT_EQ(spanning_six_cycles(build_aux_graph(build_factor(9, 2))).size(), 3u);
  const auto s13 = spanning_six_cycles(build_aux_graph(build_factor(13, 3)));
  EXPECT_EQ(s13.size(), 9u);
}

TEST(SpanningSixCycles, EdgeDisjointAndTopLevels) {
  for (int n = 5; n <= 13; n += 2)
    for (int ell = 2; ell <= (n + 1) / 2; ++ell) {
      std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
      const int top = middle_high(n, ell);
      for (const auto& c : spanning_six_cycles(build_aux_graph(build_factor(n, ell))))
        for (const auto& [a, b] : c.edges()) {
          EXPECT_TRUE(seen.insert(edge_key(a, b)).second);
          EXPECT_GE(std::min(a.level(), b.level()), top - 1);
        }
    }
}

TEST(Hamilton, SmallCases) {
  const auto q3 = hamilton(3, 2);
  EXPECT_EQ(q3.size(), 8u);
  EXPECT_TRUE(verify_hamilton(q3, 3, 2).ok);
  EXPECT_EQ(hamilton(7, 3).size(), 126u);
  EXPECT_EQ(hamilton(7, 4).size(), 128u);
  EXPECT_THROW(hamilton(7, 1), std::invalid_argument);
  EXPECT_THROW(hamilton(8, 2), std::invalid_argument);
}

TEST(Hamilton, VerifiedAndCanonicalStart) {
  for (int n = 3; n <= 13; n += 2)
    for (int ell = 2; ell <= (n + 1) / 2; ++ell) {
      const auto cyc = hamilton(n, ell);
      const auto report = verify_hamilton(cyc, n, ell);
      EXPECT_TRUE(report.ok) << "n=" << n << " l=" << ell << ": " << report.message;
      EXPECT_EQ(cyc.size(), binomial_window(n, ell));
      EXPECT_EQ(cyc.front(), *std::min_element(cyc.begin(), cyc.end()));
      EXPECT_LT(cyc[1], cyc.back());
    }
}

TEST(Hamilton, BuildStatistics) {
  for (const auto& row : checks::factor_counts()) {
    const int n = 2 * row.m + 1;
    if (n > 13) continue;
    const auto b = build_hamilton(n, row.ell);
    EXPECT_EQ(b.factor_cycles, row.total);
    EXPECT_EQ(b.long_cycles, row.long_count);
    EXPECT_EQ(b.flip4, b.short_cycles);
    EXPECT_EQ(b.flip6 + 1, b.long_cycles);
  }
}

TEST(Hamilton, JoiningMonotonicity) {
  for (int n = 5; n <= 11; n += 2)
    for (int ell = 2; ell <= (n + 1) / 2; ++ell) {
      const auto f = build_factor(n, ell);
      const auto verts = middle_vertices(n, ell);
      TwoFactor g = f.graph();
      std::size_t count = f.cycles().size();
      auto apply = [&](const std::vector<Edge>& edges) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
        for (const auto& [a, b] : edges) raw.emplace_back(a.value(), b.value());
        g.toggle_edges(raw);
        const std::size_t now = g.extract_cycles(verts).size();
        EXPECT_EQ(now + 1, count) << "n=" << n << " l=" << ell;
        count = now;
      };
      for (const auto& c : build_flip4_set(n, ell)) apply(c.edges());
      for (const auto& c : spanning_six_cycles(build_aux_graph(f))) apply(c.edges());
      EXPECT_EQ(count, 1u);
    }
}

TEST(Verify, ReportsViolations) {
  auto cyc = hamilton(5, 2);
  ASSERT_TRUE(verify_hamilton(cyc, 5, 2).ok);
  auto dup = cyc;
  dup[3] = dup[5];
  const auto r1 = verify_hamilton(dup, 5, 2);
  EXPECT_FALSE(r1.ok);
  EXPECT_NE(r1.message.find("duplicate"), std::string::npos);
  auto swapped = cyc;
  std::swap(swapped[2], swapped[3]);
  const auto r2 = verify_hamilton(swapped, 5, 2);
  EXPECT_FALSE(r2.ok);
  EXPECT_NE(r2.message.find("non-adjacent"), std::string::npos);
  auto shorter = cyc;
  shorter.pop_back();
  EXPECT_FALSE(verify_hamilton(shorter, 5, 2).ok);
}

TEST(Canonicalize, IdentityOnS) { EXPECT_TRUE(canonicalize_to_s(9, 3, special_tree(9, 3)).empty()); }

TEST(Canonicalize, RightEmptyStartsWithLightRotations) {
  // u_3 = 0 0 1 1 0 1 is right-empty (w = eps) for n = 7, l = 2
  const Bitstring x = "1001101"_bits;
  const auto moves = canonicalize_to_s(7, 2, x);
  ASSERT_FALSE(moves.empty());
  EXPECT_EQ(moves.front().kind, TreeMove::Kind::light_rotation);
  EXPECT_EQ(moves.back().result, special_tree(7, 2));
}

// Replays every move sequence: rotations stay on the cycle, pulls are aux
// edges, and all long cycles end up in the class of s.
TEST(Canonicalize, WitnessesConnectivity) {
  for (int n = 5; n <= 11; n += 2)
    for (int ell = 2; ell <= (n + 1) / 2; ++ell) {
      const auto f = build_factor(n, ell);
      const std::size_t target = f.cycle_index(special_tree(n, ell));
      std::vector<std::size_t> parent(f.cycles().size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
      };
      for (const auto& x : top_class_vertices(n, ell)) {
        Bitstring cur = x;
        for (const auto& mv : canonicalize_to_s(n, ell, x)) {
          if (mv.kind == TreeMove::Kind::light_rotation) {
            EXPECT_EQ(f.cycle_index(mv.result), f.cycle_index(cur));
          } else {
            EXPECT_TRUE(is_flippable(ell, cur, mv.result).has_value());
            parent[find(f.cycle_index(cur))] = find(f.cycle_index(mv.result));
          }
          cur = mv.result;
        }
        EXPECT_EQ(cur, special_tree(n, ell));
      }
      for (std::size_t c = 0; c < f.cycles().size(); ++c)
        if (f.cycles()[c].is_long) {
          EXPECT_EQ(find(c), find(target)) << "n=" << n << " l=" << ell;
        }
    }
}

TEST(FullCube, FactorContainsAllChains) {
  for (int n = 3; n <= 11; n += 2) {
    const int ell = (n + 1) / 2;
    const auto f = build_factor(n, ell);
    for (const auto& c : enumerate_chains(n))
      for (int j = 1; j <= c.length(); ++j) EXPECT_TRUE(f.has_edge(c.vertex_at(j - 1), c.vertex_at(j))) << c.str();
  }
}

}  // namespace
}  // namespace graykit
