#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>

#include "psums/constructive.hpp"

using namespace psums;

namespace {

// Zero-sum sets without 0 or inverse pairs, |A| <= max_size, by choosing
// none / x / -x per pair and none / x per involution.
template <FiniteGroup G>
std::vector<std::vector<Elem>> zero_sum_sets(const G& g, std::size_t max_size) {
  std::vector<Elem> slots;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.inverse(x) >= x) slots.push_back(x);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem s) {
    if (cur.size() > max_size) return;
    if (i == slots.size()) {
      if (!cur.empty() && s == kIdentity) out.push_back(cur);
      return;
    }
    const Elem x = slots[i], y = g.inverse(x);
    rec(i + 1, s);
    cur.push_back(x);
    rec(i + 1, g.op(s, x));
    cur.pop_back();
    if (y != x) {
      cur.push_back(y);
      rec(i + 1, g.op(s, y));
      cur.pop_back();
    }
  };
  rec(0, kIdentity);
  return out;
}

template <FiniteGroup G>
void expect_same_elements(const G&, std::vector<Elem> a, std::vector<Elem> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

}  // namespace

TEST(OrderSmallAbelian, Z13Example) {
  const auto g = AbelianGroup::cyclic(13);
  const auto r = order_small_abelian(g, std::vector<Elem>{1, 3, 9, 2, 5, 6});
  EXPECT_EQ(r.ordering, (Ordering{1, 3, 2, 9, 5, 6}));
  EXPECT_EQ(partial_sums(g, r.ordering), (PartialSumTrace{1, 4, 6, 2, 7, 0}));
  EXPECT_EQ(r.label.theorem, "abelian8");
  EXPECT_EQ(r.label.branch, "abelian8/|A|=6");
  EXPECT_FALSE(r.fallback);
}

TEST(OrderSmallAbelian, SmallSetsUseAmbientOrder) {
  const auto g = AbelianGroup::cyclic(7);
  const auto r = order_small_abelian(g, std::vector<Elem>{4, 2, 1});
  EXPECT_EQ(r.ordering, (Ordering{1, 2, 4}));
  EXPECT_EQ(r.label.branch, "abelian8/|A|<=5");
}

TEST(OrderSmallAbelian, HypothesisViolations) {
  const auto z13 = AbelianGroup::cyclic(13);
  EXPECT_THROW(order_small_abelian(z13, std::vector<Elem>{1, 2}), HypothesisError);            // sum 3
  EXPECT_THROW(order_small_abelian(z13, std::vector<Elem>{1, 12, 3, 10}), HypothesisError);     // inverse pairs
  EXPECT_THROW(order_small_abelian(z13, std::vector<Elem>{0, 1, 12}), std::invalid_argument);   // identity
  std::vector<Elem> ten{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  EXPECT_THROW(order_small_abelian(AbelianGroup::cyclic(31), ten), HypothesisError);
  EXPECT_THROW(order_small_abelian(builtin_group("sym", 3), std::vector<Elem>{1, 2}), HypothesisError);
}

// Every zero-sum set of every abelian group of order <= 11 gets a simple
// ordering of the same elements without falling back to search.
TEST(OrderSmallAbelian, MatchesOracleOnSmallGroups) {
  std::map<std::string, int> branches;
  for (std::uint32_t n = 2; n <= 11; ++n)
    for (const auto& spec : enumerate_abelian_groups(n)) {
      const AbelianGroup g(spec);
      for (const auto& a : zero_sum_sets(g, 9)) {
        const auto r = order_small_abelian(g, a);
        ASSERT_FALSE(r.fallback) << g.name() << ": " << r.gap_detail;
        EXPECT_TRUE(is_simple(g, r.ordering));
        expect_same_elements(g, r.ordering, a);
        EXPECT_TRUE(find_simple_ordering(g, std::span<const Elem>(a), false).has_value());
        ++branches[r.label.branch];
      }
    }
  for (const auto& [b, n] : branches) std::printf("  %s: %d\n", b.c_str(), n);
  EXPECT_GE(branches.size(), 2u);
}

TEST(OrderSmallAbelian, RandomLargerGroups) {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int t = 0; t < 4000 && checked < 1500; ++t) {
    const std::uint32_t v = 20 + rng() % 80;
    const auto g = AbelianGroup::cyclic(v);
    const std::size_t k = 6 + rng() % 4;
    std::vector<Elem> a;
    std::vector<std::uint8_t> used(v, 0);
    used[0] = 1;
    while (a.size() + 1 < k) {
      const Elem x = 1 + rng() % (v - 1);
      if (used[x] || used[v - x]) continue;
      used[x] = 1;
      a.push_back(x);
    }
    Elem s = 0;
    for (auto x : a) s = (s + x) % v;
    const Elem last = (v - s) % v;
    if (last == 0 || used[last] || used[(v - last) % v]) continue;
    a.push_back(last);
    const auto r = order_small_abelian(g, a);
    ASSERT_FALSE(r.fallback) << r.gap_detail;
    EXPECT_TRUE(is_simple(g, r.ordering));
    expect_same_elements(g, r.ordering, a);
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(ZeroSumIndex, MatchesDirectEnumeration) {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::uint32_t v = 7 + rng() % 30;
    const auto g = AbelianGroup::cyclic(v);
    std::vector<Elem> a;
    for (Elem x = 1; x < v && a.size() < 9; ++x)
      if (rng() % 3 == 0) a.push_back(x);
    const auto idx = zero_sum_index(g, std::span<const Elem>(a));
    std::vector<PositionMask> t3, t4;
    for (PositionMask m = 0; m < (1u << a.size()); ++m) {
      const auto c = std::popcount(m);
      if (c != 3 && c != 4) continue;
      Elem s = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (m >> i & 1) s = (s + a[i]) % v;
      if (s == 0) (c == 3 ? t3 : t4).push_back(m);
    }
    auto sorted = [](std::vector<PositionMask> x) {
      std::sort(x.begin(), x.end());
      return x;
    };
    EXPECT_EQ(sorted(idx.triples), sorted(t3));
    EXPECT_EQ(sorted(idx.quads), sorted(t4));
  }
}

// Without inverse pairs, two zero-sum triples share at most one element,
// and a zero-sum triple never sits inside a zero-sum quad.
TEST(ZeroSumIndex, IntersectionProperties) {
  for (std::uint32_t n = 2; n <= 16; ++n)
    for (const auto& spec : enumerate_abelian_groups(n)) {
      const AbelianGroup g(spec);
      for (const auto& a : zero_sum_sets(g, 9)) {
        const auto idx = zero_sum_index(g, std::span<const Elem>(a));
        for (std::size_t i = 0; i < idx.triples.size(); ++i) {
          for (std::size_t j = i + 1; j < idx.triples.size(); ++j)
            EXPECT_LE(std::popcount(idx.triples[i] & idx.triples[j]), 1);
          for (auto q : idx.quads) EXPECT_NE(idx.triples[i] & q, idx.triples[i]);
        }
      }
    }
}

// With |A| = 6, the complement of a zero-sum triple is a zero-sum triple.
TEST(ZeroSumIndex, DisjointTripleClosure) {
  for (std::uint32_t n = 7; n <= 25; ++n)
    for (const auto& spec : enumerate_abelian_groups(n)) {
      const AbelianGroup g(spec);
      for (const auto& a : zero_sum_sets(g, 6)) {
        if (a.size() != 6) continue;
        const auto idx = zero_sum_index(g, std::span<const Elem>(a));
        for (auto t : idx.triples)
          EXPECT_NE(std::find(idx.triples.begin(), idx.triples.end(), 0x3Fu ^ t), idx.triples.end());
      }
    }
}

TEST(OrderSmallGeneral, AllSmallSubsetsOfSmallGroups) {
  for (const char* name : {"sym3", "D4", "Q8", "C6", "D5"}) {
    const auto g = builtin_group_by_name(name);
    const auto n = static_cast<std::uint32_t>(g.order());
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      if (std::popcount(mask) > 5) continue;
      std::vector<Elem> a;
      for (Elem i = 0; i + 1 < n; ++i)
        if (mask >> i & 1) a.push_back(i + 1);
      const auto r = order_small_general(g, a);
      ASSERT_FALSE(r.fallback) << name << ": " << r.gap_detail;
      EXPECT_TRUE(is_simple(g, r.ordering));
      expect_same_elements(g, r.ordering, a);
      EXPECT_EQ(r.label.theorem, "general5");
    }
  }
}

TEST(OrderSmallGeneral, Sym3AllNonidentity) {
  const auto g = builtin_group("sym", 3);
  const auto r = order_small_general(g, std::vector<Elem>{1, 2, 3, 4, 5});
  EXPECT_TRUE(is_simple(g, r.ordering));
  EXPECT_FALSE(r.fallback);
}

TEST(OrderSmallGeneral, RejectsLargeSets) {
  const auto g = AbelianGroup::cyclic(11);
  EXPECT_THROW(order_small_general(g, std::vector<Elem>{1, 2, 3, 4, 5, 6}), HypothesisError);
}
