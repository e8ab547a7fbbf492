#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "psums/group.hpp"

using namespace psums;

namespace {

std::uint64_t partition_count(std::uint32_t e) { return integer_partitions(e).size(); }

// Number of abelian groups of order n: product over p^e || n of p(e).
std::uint64_t expected_abelian_count(std::uint32_t n) {
  std::uint64_t c = 1;
  for (std::uint32_t p = 2; n > 1; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) c *= partition_count(e);
  }
  return c;
}

template <FiniteGroup G>
void expect_group_axioms(const G& g) {
  const auto n = g.order();
  for (Elem x = 0; x < n; ++x) {
    EXPECT_EQ(g.op(kIdentity, x), x);
    EXPECT_EQ(g.op(x, kIdentity), x);
    EXPECT_EQ(g.op(x, g.inverse(x)), kIdentity);
    EXPECT_EQ(g.op(g.inverse(x), x), kIdentity);
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) ASSERT_EQ(g.op(g.op(x, y), z), g.op(x, g.op(y, z)));
  }
}

}  // namespace

TEST(Partitions, SmallValues) {
  EXPECT_EQ(partition_count(1), 1u);
  EXPECT_EQ(partition_count(4), 5u);
  EXPECT_EQ(partition_count(5), 7u);
  const auto p3 = integer_partitions(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3.front(), (std::vector<std::uint32_t>{3}));
  EXPECT_EQ(p3.back(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(AbelianEnumeration, CountsMatchPartitionProducts) {
  for (std::uint32_t n = 1; n <= 27; ++n) EXPECT_EQ(enumerate_abelian_groups(n).size(), expected_abelian_count(n)) << n;
}

TEST(AbelianEnumeration, KnownLists) {
  const auto g8 = enumerate_abelian_groups(8);
  ASSERT_EQ(g8.size(), 3u);
  EXPECT_EQ(g8[0].name(), "Z8");
  EXPECT_EQ(g8[1].name(), "Z2xZ4");
  EXPECT_EQ(g8[2].name(), "Z2xZ2xZ2");
  EXPECT_EQ(enumerate_abelian_groups(12).size(), 2u);
  EXPECT_EQ(enumerate_abelian_groups(16).size(), 5u);
  EXPECT_EQ(enumerate_abelian_groups(24).size(), 3u);
  EXPECT_THROW(enumerate_abelian_groups(0), GroupError);
}

TEST(AbelianEnumeration, OrdersMultiply) {
  for (std::uint32_t n = 1; n <= 27; ++n)
    for (const auto& s : enumerate_abelian_groups(n)) EXPECT_EQ(s.order(), n);
}

TEST(AbelianSpec, CanonicalizesModuli) {
  EXPECT_EQ(AbelianGroupSpec::from_moduli({12}), AbelianGroupSpec::from_moduli({3, 4}));
  EXPECT_EQ(AbelianGroupSpec::from_moduli({6, 2}).order(), 12u);
  EXPECT_THROW(AbelianGroupSpec({6}), GroupError);
}

TEST(GroupElement, Arithmetic) {
  auto spec = std::make_shared<const AbelianGroupSpec>(AbelianGroupSpec::from_moduli({4, 2}));
  const auto z = GroupElement::zero(spec);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE((-z).is_zero());
  auto other = std::make_shared<const AbelianGroupSpec>(AbelianGroupSpec::from_moduli({8}));
  EXPECT_THROW(element_add(z, GroupElement::zero(other)), GroupError);
}

TEST(AbelianGroup, CyclicArithmetic) {
  const auto g = AbelianGroup::cyclic(25);
  EXPECT_EQ(g.op(20, 10), 5u);
  EXPECT_EQ(g.inverse(5), 20u);
  EXPECT_EQ(g.index({-5}), 20u);
  EXPECT_EQ(g.label(7), "7");
  EXPECT_EQ(g.name(), "Z25");
}

TEST(AbelianGroup, ProductLabelsAndIndices) {
  const AbelianGroup g(std::vector<std::uint32_t>{4, 2});
  EXPECT_EQ(g.order(), 8u);
  const auto x = g.index({1, 1});
  EXPECT_EQ(g.label(x), "(1,1)");
  EXPECT_EQ(g.coords(g.op(x, x)), (std::vector<std::uint32_t>{2, 0}));
  expect_group_axioms(g);
}

TEST(AbelianGroup, Trivial) {
  const auto g = AbelianGroup::cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.label(0), "0");
}

TEST(AbelianGroup, AxiomsForAllSmallOrders) {
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (const auto& s : enumerate_abelian_groups(n)) expect_group_axioms(AbelianGroup(s));
}

TEST(Builtins, OrdersAndAbelianFlags) {
  EXPECT_EQ(builtin_group("sym", 3).order(), 6u);
  EXPECT_FALSE(builtin_group("sym", 3).is_abelian());
  EXPECT_EQ(builtin_group("sym", 4).order(), 24u);
  EXPECT_EQ(builtin_group("alternating", 4).order(), 12u);
  EXPECT_EQ(builtin_group("alternating", 5).order(), 60u);
  EXPECT_EQ(builtin_group("dihedral", 5).order(), 10u);
  EXPECT_EQ(builtin_group("quaternion", 2).order(), 8u);
  EXPECT_EQ(builtin_group("dicyclic", 3).order(), 12u);
  EXPECT_TRUE(builtin_group("cyclic", 9).is_abelian());
  EXPECT_THROW(builtin_group("sym", 7), GroupError);
  EXPECT_THROW(builtin_group("mystery", 3), GroupError);
}

TEST(Builtins, Axioms) {
  for (const char* name : {"sym3", "sym4", "D4", "D6", "Q8", "Dic3", "A4"}) {
    SCOPED_TRACE(name);
    expect_group_axioms(builtin_group_by_name(name));
  }
}

TEST(Builtins, NamesResolve) {
  EXPECT_EQ(builtin_group_by_name("S3").name(), "Sym3");
  EXPECT_EQ(builtin_group_by_name("quaternion").name(), "Q8");
  EXPECT_EQ(builtin_group_by_name("C5").order(), 5u);
  EXPECT_THROW(builtin_group_by_name("sym"), GroupError);
}

TEST(Sym3, InvolutionsAndThreeCycles) {
  const auto g = builtin_group("sym", 3);
  int involutions = 0;
  for (Elem x = 1; x < 6; ++x) {
    if (cayley_op(g, x, x) == kIdentity) {
      ++involutions;
    } else {
      EXPECT_EQ(cayley_op(g, x, g.inverse(x)), kIdentity);
      EXPECT_NE(g.inverse(x), x);
    }
  }
  EXPECT_EQ(involutions, 3);
  EXPECT_THROW(cayley_op(g, 6, 0), std::out_of_range);
}

TEST(CayleyTable, RoundTrip) {
  for (const char* name : {"sym3", "D5", "Q8"}) {
    const auto g = builtin_group_by_name(name);
    std::stringstream ss;
    write_cayley_table(ss, g);
    const auto h = load_cayley_table(ss);
    ASSERT_EQ(h.order(), g.order());
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y) EXPECT_EQ(h.op(x, y), g.op(x, y));
  }
}

TEST(CayleyTable, FromAbelianGroupKeepsIndices) {
  const AbelianGroup a(std::vector<std::uint32_t>{3, 3});
  const auto c = CayleyGroup::from_group(a);
  EXPECT_TRUE(c.is_abelian());
  for (Elem x = 0; x < 9; ++x) {
    EXPECT_EQ(c.label(x), a.label(x));
    EXPECT_EQ(c.inverse(x), a.inverse(x));
  }
}

TEST(CayleyTable, RejectsMissingIdentity) {
  std::stringstream ss("2\n1 0\n0 1\n");
  EXPECT_THROW(load_cayley_table(ss), GroupError);
}

TEST(CayleyTable, RejectsNonLatinSquare) {
  std::stringstream ss("3\n0 1 2\n1 1 0\n2 0 1\n");
  EXPECT_THROW(load_cayley_table(ss), GroupError);
}

TEST(CayleyTable, RejectsNonAssociativeAndNamesTriple) {
  // a Latin square with identity 0 that is not associative (order 5 loop)
  std::stringstream ss(
      "5\n"
      "0 1 2 3 4\n"
      "1 0 3 4 2\n"
      "2 4 0 1 3\n"
      "3 2 4 0 1\n"
      "4 3 1 2 0\n");
  try {
    load_cayley_table(ss);
    FAIL() << "expected GroupError";
  } catch (const GroupError& e) {
    EXPECT_NE(std::string(e.what()).find("associativ"), std::string::npos) << e.what();
  }
}

TEST(CayleyTable, ReportsTruncatedInput) {
  std::stringstream ss("3\n0 1 2\n1 2\n");
  EXPECT_THROW(load_cayley_table(ss), GroupError);
  std::stringstream bad("3\n0 1 2\n1 2 7\n2 0 1\n");
  EXPECT_THROW(load_cayley_table(bad), GroupError);
  std::stringstream empty("");
  EXPECT_THROW(load_cayley_table(empty), GroupError);
}

TEST(CayleyTable, RandomRelabelledCyclicStaysValid) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 2 + rng() % 15;
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) t[perm[x] * n + perm[y]] = perm[(x + y) % n];
    const CayleyGroup g(n, t);
    EXPECT_TRUE(g.is_abelian());
  }
}
