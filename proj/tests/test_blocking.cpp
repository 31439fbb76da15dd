#include <gtest/gtest.h>

#include <random>

#include "omc/acceptance.hpp"
#include "omc/blocking.hpp"
#include "oracles.hpp"

using namespace omc;

namespace {

BLElement el(int m, std::vector<int> items) { return BLElement::from_items(m, items); }

// Signed items of a 2m-bit mask, rebuilt without the library's layout helpers.
std::vector<int> items_of(int m, Mask bits) {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) {
    if ((bits >> (i - 1)) & 1) out.push_back(i);
    if ((bits >> (m + i - 1)) & 1) out.push_back(-i);
  }
  return out;
}

bool opposite_free(const std::vector<int>& items) {
  for (int x : items)
    for (int y : items)
      if (x == -y) return false;
  return true;
}

long long meet(const std::vector<int>& a, const std::vector<int>& b) {
  long long n = 0;
  for (int x : a)
    for (int y : b)
      if (x == y) ++n;
  return n;
}

// Counts of all 2^(2m) subsets filtered literally.
long long oracle_blocking(int m, long long p, long long q, int k, const std::vector<std::vector<int>>& lambda) {
  long long count = 0;
  for (Mask b = 0; b < (Mask{1} << (2 * m)); ++b) {
    const auto items = items_of(m, b);
    if (static_cast<int>(items.size()) != k || !opposite_free(items)) continue;
    bool ok = true;
    for (const auto& l : lambda) ok = ok && meet(items, l) * q > p * k;
    if (ok) ++count;
  }
  return count;
}

long long oracle_disjoint(int m, const std::vector<int>& w, int k) {
  long long count = 0;
  for (Mask b = 0; b < (Mask{1} << (2 * m)); ++b) {
    const auto items = items_of(m, b);
    if (static_cast<int>(items.size()) == k && opposite_free(items) && meet(items, w) == 0) ++count;
  }
  return count;
}

}  // namespace

TEST(BLElement, ParseNegateAndPrint) {
  const BLElement b = BLElement::parse(3, "1,-2,3");
  EXPECT_EQ(b.rank(), 3);
  EXPECT_EQ(b.items(), (std::vector<int>{1, -2, 3}));
  EXPECT_EQ((-b).items(), (std::vector<int>{-1, 2, -3}));
  EXPECT_EQ((-(-b)).bits(), b.bits());
  EXPECT_EQ(b.str(), "1,-2,3");
  EXPECT_THROW(BLElement::parse(3, "4"), Error);
  EXPECT_THROW(BLElement::parse(3, "0"), Error);
  EXPECT_THROW(BLElement::parse(3, "1,x"), Error);
}

TEST(Rational, ParseAndFloor) {
  const Rational r = Rational::parse("2/4");
  EXPECT_EQ(r.num(), 1);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.floor_times(3), 1);
  EXPECT_EQ(Rational::parse("0").floor_times(5), 0);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("a/b"), Error);
}

TEST(Crosspolytope, Examples) {
  EXPECT_EQ(crosspolytope_count(3, 2), 12);
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(crosspolytope_count(m, 0), 1);
  EXPECT_EQ(crosspolytope_count(4, 3), 32);
  EXPECT_EQ(crosspolytope_count(4, 3), oracle_disjoint(4, {}, 3));
  EXPECT_THROW(crosspolytope_count(3, 4), Error);
  EXPECT_THROW(crosspolytope_count(3, -1), Error);
}

TEST(OppositePairStats, Examples) {
  const auto s = opposite_pair_stats(el(3, {1, -1, 2}));
  EXPECT_EQ(s.excess, 1);
  EXPECT_EQ(s.free_pairs, 1);
  const auto e = opposite_pair_stats(el(3, {}));
  EXPECT_EQ(e.excess, 0);
  EXPECT_EQ(e.free_pairs, 3);
  const auto f = opposite_pair_stats(el(3, {1, 2, 3, -1, -2, -3}));
  EXPECT_EQ(f.excess, 0);
  EXPECT_EQ(f.free_pairs, 0);
}

TEST(OppositePairStats, MatchLiteralPairCounting) {
  for (int m = 1; m <= 4; ++m)
    for (Mask w = 0; w < (Mask{1} << (2 * m)); ++w) {
      const auto items = items_of(m, w);
      std::set<int> closed(items.begin(), items.end());
      for (int x : items) closed.insert(-x);
      int free_pairs = 0;
      for (int i = 1; i <= m; ++i) free_pairs += !closed.count(i) && !closed.count(-i);
      const auto s = opposite_pair_stats(BLElement(m, w));
      EXPECT_EQ(s.excess, static_cast<int>(closed.size() - items.size()));
      EXPECT_EQ(s.free_pairs, free_pairs);
    }
}

TEST(DisjointOppositeFree, Examples) {
  EXPECT_EQ(count_disjoint_opposite_free(el(3, {}), 2), 12);
  EXPECT_EQ(count_disjoint_opposite_free(el(3, {1, -1, 2}), 1), 3);
  EXPECT_EQ(count_disjoint_opposite_free(el(2, {1}), 2), oracle_disjoint(2, {1}, 2));
}

TEST(DisjointOppositeFree, MatchesEnumeration) {
  for (int m = 1; m <= 4; ++m)
    for (Mask w = 0; w < (Mask{1} << (2 * m)); ++w)
      for (int k = 0; k <= m; ++k)
        EXPECT_EQ(count_disjoint_opposite_free(BLElement(m, w), k), oracle_disjoint(m, items_of(m, w), k));
}

TEST(RelativeBlocking, Examples) {
  const std::vector<BLElement> none;
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k) {
      EXPECT_EQ(relative_blocking_brute(m, Rational(1, 2), k, none), crosspolytope_count(m, k));
      EXPECT_EQ(relative_blocking_ie(m, Rational(1, 2), k, none).value, crosspolytope_count(m, k));
      EXPECT_EQ(relative_blocking_moebius(m, Rational(1, 2), k, none).value, crosspolytope_count(m, k));
    }
  const std::vector<BLElement> one = {el(2, {1, 2})};
  EXPECT_EQ(relative_blocking_brute(2, Rational(0, 1), 1, one), 2);
  EXPECT_EQ(relative_blocking_ie(2, Rational(0, 1), 1, one).value, 2);
  EXPECT_EQ(relative_blocking_moebius(2, Rational(0, 1), 1, one).value, 2);

  const std::vector<BLElement> triple = {el(3, {1, 2, 3})};
  const long long expected = oracle_blocking(3, 1, 2, 3, {{1, 2, 3}});
  EXPECT_EQ(expected, 4);
  EXPECT_EQ(relative_blocking_brute(3, Rational(1, 2), 3, triple), expected);
  EXPECT_EQ(relative_blocking_ie(3, Rational(1, 2), 3, triple).value, expected);
  EXPECT_EQ(relative_blocking_moebius(3, Rational(1, 2), 3, triple).value, expected);
}

TEST(RelativeBlocking, SingleElementTwoTermLattice) {
  for (int m = 1; m <= 4; ++m)
    for (Mask bits = 1; bits < (Mask{1} << (2 * m)); ++bits)
      for (int k = 1; k <= m; ++k) {
        const BLElement lambda(m, bits);
        const std::vector<BLElement> chain = {lambda};
        const auto gens = blocking_generators(m, Rational(0, 1), k, chain);
        ASSERT_EQ(gens, std::vector<Mask>{bits});
        const Integer expected = crosspolytope_count(m, k) - count_disjoint_opposite_free(lambda, k);
        EXPECT_EQ(relative_blocking_moebius(m, Rational(0, 1), k, chain).value, expected);
        EXPECT_EQ(relative_blocking_brute(m, Rational(0, 1), k, chain), expected);
      }
}

TEST(RelativeBlocking, Errors) {
  const std::vector<BLElement> comparable = {el(3, {1, 2}), el(3, {1, 2, 3})};
  try {
    relative_blocking_brute(3, Rational(0, 1), 2, comparable);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadAntichain);
  }
  const std::vector<BLElement> fine = {el(3, {1, 2})};
  try {
    relative_blocking_brute(3, Rational(1, 1), 2, fine);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadThreshold);
  }
  try {
    relative_blocking_ie(3, Rational(2, 3), 3, std::vector<BLElement>{el(3, {1, 2})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadThreshold);
  }
  EXPECT_THROW(relative_blocking_brute(3, Rational(0, 1), 4, fine), Error);
  EXPECT_THROW(relative_blocking_brute(3, Rational(0, 1), 2, std::vector<BLElement>{el(2, {1})}), Error);
}

TEST(RelativeBlocking, ThreeWayEqualityOnSeededSweep) {
  std::mt19937_64 rng(99);
  const Rational thresholds[] = {Rational(0, 1), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  int nonempty = 0, unpruned = 0;
  for (int c = 0; c < 300; ++c) {
    const int m = 1 + c % 4;
    const int k = std::uniform_int_distribution<int>(1, m)(rng);
    const Rational r = thresholds[c % 4];
    const auto lambda = acceptance::random_antichain(rng, m, r, k);
    if (!lambda.empty()) ++nonempty;
    std::vector<std::vector<int>> items;
    for (const auto& l : lambda) items.push_back(l.items());
    const long long expected = oracle_blocking(m, r.num(), r.den(), k, items);
    EXPECT_EQ(relative_blocking_brute(m, r, k, lambda), expected);
    EXPECT_EQ(relative_blocking_ie(m, r, k, lambda).value, expected);
    // Without pruning every subfamily is visited, so keep that to small generator sets.
    if (blocking_generators(m, r, k, lambda).size() <= 16) {
      ++unpruned;
      EXPECT_EQ(relative_blocking_ie(m, r, k, lambda, {}, Pruning::none()).value, expected);
    }
    EXPECT_EQ(relative_blocking_moebius(m, r, k, lambda).value, expected);
  }
  EXPECT_GT(nonempty, 200);
  EXPECT_GT(unpruned, 150);
}

TEST(RelativeBlocking, DroppingAnElementNeverLowersTheCount) {
  std::mt19937_64 rng(5);
  for (int c = 0; c < 200; ++c) {
    const int m = 2 + c % 3;
    const int k = std::uniform_int_distribution<int>(1, m)(rng);
    const Rational r(c % 2, 2);
    const auto lambda = acceptance::random_antichain(rng, m, r, k);
    const Integer full = relative_blocking_brute(m, r, k, lambda);
    for (std::size_t drop = 0; drop < lambda.size(); ++drop) {
      auto fewer = lambda;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      EXPECT_GE(relative_blocking_brute(m, r, k, fewer), full);
    }
  }
}

TEST(RelativeBlocking, BudgetIsEnforced) {
  const std::vector<BLElement> lambda = {el(4, {1, 2, 3, 4}), el(4, {-1, -2, -3, -4}), el(4, {1, -2, 3, -4})};
  Budget tiny;
  tiny.max_nodes = 2;
  tiny.max_elements = 2;
  EXPECT_THROW(relative_blocking_ie(4, Rational(1, 2), 4, lambda, tiny), Error);
  EXPECT_THROW(relative_blocking_moebius(4, Rational(1, 2), 4, lambda, tiny), Error);
}
