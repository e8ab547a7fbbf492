#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "psums/edge_lengths.hpp"

using namespace psums;

namespace {

LengthList L(const char* s) { return LengthList::parse(s); }

// All multisets of size k over 1..floor(v/2).
void for_each_list(std::uint32_t v, std::size_t k, const std::function<void(const LengthList&)>& f) {
  std::vector<std::uint32_t> e;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t min_a) {
    if (e.size() == k) {
      f(LengthList::from_entries(v, e));
      return;
    }
    for (std::uint32_t a = min_a; a <= v / 2; ++a) {
      e.push_back(a);
      rec(a);
      e.pop_back();
    }
  };
  rec(1);
}

// Signs by plain enumeration.
bool signs_exist(const LengthList& l) {
  const auto e = l.entries();
  for (std::uint64_t m = 0; m < (1ull << e.size()); ++m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += (m >> i & 1) ? e[i] : -static_cast<std::int64_t>(e[i]);
    if (((s % l.v()) + l.v()) % l.v() == 0) return true;
  }
  return false;
}

}  // namespace

TEST(Parse, RoundTrip) {
  const auto l = L("11: 1^2 2 3 5^2");
  EXPECT_EQ(l.v(), 11u);
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l.count(1), 2u);
  EXPECT_EQ(l.count(5), 2u);
  EXPECT_EQ(l.to_string(), "11: 1^2 2 3 5^2");
  EXPECT_EQ(L("11: 5 1 5 1 3 2"), l);
  EXPECT_THROW(L("11 1 2"), std::invalid_argument);
  EXPECT_THROW(L("11: 6"), std::invalid_argument);
  EXPECT_THROW(L("11: 0"), std::invalid_argument);
  EXPECT_THROW(L("11: 2^x"), std::invalid_argument);
  EXPECT_THROW(L("1: "), std::invalid_argument);
}

TEST(EdgeLength, Examples) {
  EXPECT_EQ(edge_length(11, 9, 1), 3u);
  EXPECT_EQ(edge_length(11, 0, 5), 5u);
  EXPECT_EQ(edge_length(8, 1, 5), 4u);
  EXPECT_THROW(edge_length(8, 2, 2), std::invalid_argument);
  EXPECT_THROW(edge_length(8, 2, 8), std::out_of_range);
}

TEST(EdgeLength, SymmetricAndTranslationInvariant) {
  for (std::uint32_t v = 2; v <= 30; ++v)
    for (Vertex x = 0; x < v; ++x)
      for (Vertex y = 0; y < v; ++y) {
        if (x == y) continue;
        const auto l = edge_length(v, x, y);
        EXPECT_EQ(l, edge_length(v, y, x));
        EXPECT_GE(l, 1u);
        EXPECT_LE(l, v / 2);
        for (std::uint32_t c = 0; c < v; ++c) ASSERT_EQ(edge_length(v, (x + c) % v, (y + c) % v), l);
      }
}

TEST(Subgraph, Lengths) {
  EXPECT_EQ(lengths_of_subgraph(11, cycle_edges({0, 5, 10, 9, 1, 2})), L("11: 1^2 2 3 5^2"));
  EXPECT_EQ(lengths_of_subgraph(10, cycle_edges({0, 4, 8, 5, 2, 9, 6, 3})), L("10: 3^6 4^2"));
  EXPECT_EQ(lengths_of_subgraph(9, {{0, 1}}), L("9: 1"));
  EXPECT_THROW(lengths_of_subgraph(9, {{3, 3}}), std::invalid_argument);
}

TEST(Conditions, Bhr) {
  EXPECT_TRUE(check_bhr_condition(lengths_of_residues(6, {1, 1, 4, 4, 5})).pass);
  const auto r = check_bhr_condition(L("6: 2^5"));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violating_divisor, 2u);
  EXPECT_TRUE(check_bhr_condition(L("7: 1 2 3^4")).pass);
}

TEST(Conditions, Mpp) {
  const auto r = check_mpp_condition(L("9: 3^4"));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violating_divisor, 3u);
  EXPECT_TRUE(check_mpp_condition(L("7: 1 2 3")).pass);
  EXPECT_TRUE(check_mpp_condition(L("9: 1 2 3 4")).pass);
  EXPECT_THROW(check_mpp_condition(L("8: 1 2 3")), std::invalid_argument);
  EXPECT_THROW(check_mpp_condition(L("9: 1 2 3")), std::invalid_argument);
}

TEST(Conditions, SignedSum) {
  const auto s = check_signed_sum_condition(L("11: 1^2 2 3 5^2"));
  ASSERT_TRUE(s);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s->entries.size(); ++i) total += s->signs[i] * static_cast<std::int64_t>(s->entries[i]);
  EXPECT_EQ(((total % 11) + 11) % 11, 0);
  EXPECT_FALSE(check_signed_sum_condition(L("5: 1")));
  EXPECT_FALSE(check_signed_sum_condition(L("4: 2")));
}

TEST(Conditions, SignedSumMatchesEnumeration) {
  for (std::uint32_t v = 2; v <= 12; ++v)
    for (std::size_t k = 1; k <= 6; ++k)
      for_each_list(v, k, [&](const LengthList& l) {
        const auto s = check_signed_sum_condition(l);
        EXPECT_EQ(s.has_value(), signs_exist(l)) << l.to_string();
        if (s) {
          std::int64_t total = 0;
          for (std::size_t i = 0; i < s->entries.size(); ++i)
            total += s->signs[i] * static_cast<std::int64_t>(s->entries[i]);
          EXPECT_EQ(((total % v) + v) % v, 0);
          EXPECT_EQ(LengthList::from_entries(v, s->entries), l);
        }
      });
}

TEST(Reduce, Examples) {
  const auto r = reduce_by_gcd(L("20: 6^6 8^2"));
  EXPECT_EQ(r.d, 2u);
  EXPECT_EQ(r.reduced, L("10: 3^6 4^2"));
  EXPECT_EQ(reduce_by_gcd(L("10: 3^6 4^2")).d, 1u);
  EXPECT_EQ(reduce_by_gcd(L("9: 3^3")).reduced, L("3: 1^3"));
}

TEST(Conditions, DivisorCount) {
  EXPECT_TRUE(check_divisor_count_condition(L("8: 3^4 4^4")).pass);
  EXPECT_TRUE(check_divisor_count_condition(L("11: 1 2 3")).pass);
  // (10, {5^6}) fails the gcd precondition, and its reduction (2, {1^6})
  // has no divisor d > 1 with a multiple, so it passes once reduced.
  EXPECT_THROW(check_divisor_count_condition(L("10: 5^6")), std::invalid_argument);
  EXPECT_TRUE(check_divisor_count_condition(reduce_by_gcd(L("10: 5^6")).reduced).pass);
  const auto r = check_divisor_count_condition(L("10: 1 5^5"));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violating_divisor, 5u);
}

TEST(Realize, KnownVerdicts) {
  const auto c11 = realize(L("11: 1^2 2 3 5^2"), RealizeTarget::kCycle);
  ASSERT_TRUE(c11.witness);
  EXPECT_EQ(c11.witness->vertices.size(), 6u);
  EXPECT_EQ(lengths_of_subgraph(11, c11.witness->edges), L("11: 1^2 2 3 5^2"));
  ASSERT_TRUE(realize(L("10: 3^6 4^2"), RealizeTarget::kCycle).witness);
  EXPECT_FALSE(realize(L("8: 3^4 4^4"), RealizeTarget::kCycle).witness);
  EXPECT_FALSE(realize(L("7: 1 2 3^5"), RealizeTarget::kCycle).witness);
}

// Lists that pass every implemented necessary condition yet have no cycle.
TEST(Realize, NonSufficiencyRegressions) {
  for (const char* s : {"8: 3^4 4^4", "7: 1 2 3^5"}) {
    const auto l = L(s);
    EXPECT_TRUE(check_signed_sum_condition(l)) << s;
    EXPECT_TRUE(check_divisor_count_condition(reduce_by_gcd(l).reduced).pass) << s;
    EXPECT_FALSE(realize(l, RealizeTarget::kCycle).witness) << s;
  }
}

TEST(Realize, SizeChecks) {
  EXPECT_THROW(realize(L("7: 1 2"), RealizeTarget::kCycle), std::invalid_argument);
  EXPECT_THROW(realize(L("7: 1 2 3"), RealizeTarget::kHamiltonianPath), std::invalid_argument);
  EXPECT_THROW(realize(L("8: 1 2 3"), RealizeTarget::kNearOneFactor), std::invalid_argument);
}

TEST(Realize, PathsAndFactors) {
  const auto p = realize(lengths_of_residues(6, {1, 1, 4, 4, 5}), RealizeTarget::kHamiltonianPath);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(p.witness->vertices.size(), 6u);
  const auto f = realize(L("9: 1 2 3 4"), RealizeTarget::kNearOneFactor);
  ASSERT_TRUE(f.witness);
  EXPECT_EQ(f.witness->edges.size(), 4u);
  EXPECT_FALSE(realize(L("9: 3^4"), RealizeTarget::kNearOneFactor).witness);
  EXPECT_FALSE(realize(L("6: 2^5"), RealizeTarget::kHamiltonianPath).witness);
}

TEST(Bhr, SignedSequenceCoversNonzeroResidues) {
  const auto s = bhr_signed_sequence(6, {1, 1, 4, 4, 5});
  ASSERT_TRUE(s);
  auto sums = s->partial_sums;
  std::sort(sums.begin(), sums.end());
  EXPECT_EQ(sums, (std::vector<std::uint32_t>{1, 2, 3, 4, 5}));
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < s->ordering.size(); ++i) {
    acc = (acc + (s->signs[i] > 0 ? s->ordering[i] : 6 - s->ordering[i])) % 6;
    EXPECT_EQ(acc, s->partial_sums[i]);
  }
  auto used = s->ordering;
  std::sort(used.begin(), used.end());
  EXPECT_EQ(used, (std::vector<std::uint32_t>{1, 1, 4, 4, 5}));
}

TEST(UniformList, Cycles) {
  EXPECT_EQ(uniform_list_cycle(12, 4, 3), (std::vector<Vertex>{0, 4, 8}));
  EXPECT_FALSE(uniform_list_cycle(12, 4, 4));
  EXPECT_EQ(uniform_list_cycle(7, 1, 7), (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_THROW(uniform_list_cycle(7, 4, 3), std::invalid_argument);
}

// Whenever a cycle exists, the signed-sum and divisor-count conditions hold.
TEST(Realize, NecessaryConditionsAreSound) {
  int realized = 0;
  for (std::uint32_t v = 3; v <= 12; ++v)
    for (std::size_t k = 3; k <= std::min<std::size_t>(8, v); ++k)
      for_each_list(v, k, [&](const LengthList& l) {
        const auto out = realize(l, RealizeTarget::kCycle);
        if (!out.witness) return;
        ++realized;
        EXPECT_EQ(lengths_of_subgraph(v, out.witness->edges), l);
        EXPECT_TRUE(check_signed_sum_condition(l)) << l.to_string();
        EXPECT_TRUE(check_divisor_count_condition(reduce_by_gcd(l).reduced).pass) << l.to_string();
      });
  EXPECT_GT(realized, 100);
}

// realize(v, L) succeeds iff realize(v/d, L/d) does, and scaling maps the
// smaller witness to the larger.
TEST(Reduce, RealizationEquivalence) {
  for (std::uint32_t v = 4; v <= 20; ++v)
    for (std::size_t k = 3; k <= std::min<std::size_t>(5, v); ++k)
      for_each_list(v, k, [&](const LengthList& l) {
        const auto red = reduce_by_gcd(l);
        if (red.d == 1 || k > red.reduced.v()) return;
        const auto big = realize(l, RealizeTarget::kCycle);
        const auto small = realize(red.reduced, RealizeTarget::kCycle);
        EXPECT_EQ(big.witness.has_value(), small.witness.has_value()) << l.to_string();
        if (small.witness) {
          const auto scaled = scale_vertices(small.witness->vertices, red.d);
          EXPECT_EQ(lengths_of_subgraph(v, cycle_edges(scaled)), l);
        }
      });
}
