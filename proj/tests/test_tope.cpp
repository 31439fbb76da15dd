#include <gtest/gtest.h>

#include <random>
#include <set>

#include "omc/instances.hpp"
#include "omc/tope.hpp"
#include "oracles.hpp"

using namespace omc;

namespace {

const std::vector<std::string> kThreeLines = {"+++", "-++", "-+-", "---", "+--", "+-+"};

std::vector<std::string> strings_of(const std::vector<Tope>& topes) {
  std::vector<std::string> out;
  for (const auto& t : topes) out.push_back(t.str());
  return out;
}

ErrorKind kind_of(const std::vector<std::string>& rows) {
  try {
    validate_tope_set(rows);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorKind::IoError;
}

}  // namespace

TEST(Tope, ParseAndPrintRoundTrip) {
  const Tope t = Tope::parse("+-+");
  EXPECT_EQ(t.size(), 3);
  EXPECT_EQ(t[0], Sign::Plus);
  EXPECT_EQ(t[1], Sign::Minus);
  EXPECT_EQ(t.str(), "+-+");
  EXPECT_EQ((-t).str(), "-+-");
  EXPECT_THROW(Tope::parse("+0+"), Error);
}

TEST(Tope, CanonicalOrderIsLexicographicMinusFirst) {
  const TopeSet m = validate_tope_set(kThreeLines);
  EXPECT_EQ(strings_of(m.topes()), (std::vector<std::string>{"---", "-+-", "-++", "+--", "+-+", "+++"}));
}

TEST(ValidateTopeSet, ThreeLineArrangementIsValid) {
  const TopeSet m = validate_tope_set(kThreeLines);
  EXPECT_EQ(m.ground_size(), 3);
  EXPECT_EQ(m.size(), 6);
  // The same six sign vectors come out of sampling the plane.
  const auto regions = oracle::grid_topes({{1, 0}, {0, 1}, {1, 1}}, 2, 3);
  EXPECT_EQ(std::set<std::string>(kThreeLines.begin(), kThreeLines.end()), regions);
}

TEST(ValidateTopeSet, RejectsParallelColumns) {
  EXPECT_EQ(kind_of({"++", "--"}), ErrorKind::ParallelElements);
}

TEST(ValidateTopeSet, RejectsAntiparallelColumns) {
  EXPECT_EQ(kind_of({"+-", "-+"}), ErrorKind::ParallelElements);
}

TEST(ValidateTopeSet, RejectsMissingOpposite) {
  EXPECT_EQ(kind_of({"++", "+-"}), ErrorKind::NotSymmetric);
}

TEST(ValidateTopeSet, ReportsOtherDefects) {
  EXPECT_EQ(kind_of({"++", "+"}), ErrorKind::RaggedInput);
  EXPECT_EQ(kind_of({"+x", "-+"}), ErrorKind::BadSymbol);
  EXPECT_EQ(kind_of({"+-+", "-+-", "+-+", "-+-"}), ErrorKind::Duplicate);
  EXPECT_THROW(validate_tope_set(std::vector<std::string>{}), Error);
}

TEST(ValidateTopeSet, ErrorNamesTheRow) {
  try {
    validate_tope_set(std::vector<std::string>{"+++", "---", "++-"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
  try {
    validate_tope_set(std::vector<std::string>{"+++", "---", "+-+", "-+-"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParallelElements);
    EXPECT_NE(std::string(e.what()).find("columns 1 and 3"), std::string::npos) << e.what();
  }
}

// Mutating a valid tope set in one row or one column must flip acceptance.
TEST(ValidateTopeSet, SingleMutationsAreRejected) {
  for (const auto& name : catalog_names()) {
    const std::vector<std::string> rows = catalog_entry(name).topes;
    ASSERT_NO_THROW(validate_tope_set(rows));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto flipped_row = rows;
      flipped_row[i] = oracle::negate(rows[i]);
      EXPECT_THROW(validate_tope_set(flipped_row), Error) << name << " row " << i;
      for (std::size_t e = 0; e < rows[i].size(); ++e) {
        auto one_sign = rows;
        one_sign[i][e] = one_sign[i][e] == '+' ? '-' : '+';
        EXPECT_THROW(validate_tope_set(one_sign), Error) << name << " row " << i << " col " << e;
      }
    }
    for (std::size_t e = 0; e < rows.front().size(); ++e) {
      auto widened = rows;
      for (auto& r : widened) r += r[e];
      EXPECT_EQ(kind_of(widened), ErrorKind::ParallelElements);
    }
  }
}

TEST(TopeSet, NegateMaskMatchesIndexLookup) {
  for (const auto& name : catalog_names()) {
    const TopeSet m = canonical(name);
    for (int i = 0; i < m.size(); ++i)
      EXPECT_EQ(m.negate(Mask{1} << i), Mask{1} << *m.index_of(-m[i])) << name << " tope " << i;
  }
}

TEST(Halfspace, PositiveHalfspaceOfFirstElement) {
  const TopeSet m = validate_tope_set(kThreeLines);
  const Halfspace h = halfspace(m, 1, Sign::Plus);
  EXPECT_EQ(strings_of(m.topes_of(h.members)), (std::vector<std::string>{"+--", "+-+", "+++"}));
  EXPECT_THROW(halfspace(m, 0, Sign::Plus), Error);
  EXPECT_THROW(halfspace(m, 4, Sign::Minus), Error);
}

TEST(Halfspace, HalvesPartitionEveryCorpusInstance) {
  for (const auto& name : catalog_names()) {
    const TopeSet m = canonical(name);
    for (int e = 1; e <= m.ground_size(); ++e) {
      const Mask plus = halfspace(m, e, Sign::Plus).members;
      const Mask minus = halfspace(m, e, Sign::Minus).members;
      EXPECT_EQ(plus & minus, Mask{0});
      EXPECT_EQ(plus | minus, m.all());
      EXPECT_EQ(popcount(plus), m.size() / 2);
      EXPECT_EQ(popcount(minus), m.size() / 2);
    }
  }
}

TEST(NegateSet, Basics) {
  const std::vector<Tope> single = {Tope::parse("+++")};
  EXPECT_EQ(strings_of(negate_set(single)), (std::vector<std::string>{"---"}));
  EXPECT_TRUE(negate_set(std::vector<Tope>{}).empty());
}

TEST(NegateSet, IsAnInvolution) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Mask> bits(0, 63);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<Tope> g;
    for (int i = 0; i < 5; ++i) g.insert(Tope(bits(rng), 6));
    const std::vector<Tope> sorted(g.begin(), g.end());
    EXPECT_EQ(negate_set(negate_set(sorted)), sorted);
  }
}

TEST(Reorient, FlipThirdCoordinateOfThreeLines) {
  const TopeSet m = validate_tope_set(kThreeLines);
  const int a[] = {3};
  const TopeSet expected = validate_tope_set(std::vector<std::string>{"++-", "-+-", "-++", "--+", "+-+", "+--"});
  EXPECT_EQ(reorient(m, a), expected);
}

TEST(Reorient, IdentityFullSetAndInvolution) {
  for (const auto& name : catalog_names()) {
    const TopeSet m = canonical(name);
    const int t = m.ground_size();
    EXPECT_EQ(reorient(m, std::vector<int>{}), m);
    std::vector<int> everything;
    for (int e = 1; e <= t; ++e) everything.push_back(e);
    EXPECT_EQ(reorient(m, everything), m);
    for (Mask a = 0; a < (Mask{1} << t); ++a) {
      std::vector<int> set, rest;
      for (int e = 1; e <= t; ++e) (((a >> (e - 1)) & 1) ? set : rest).push_back(e);
      EXPECT_EQ(reorient(reorient(m, set), set), m);
      EXPECT_EQ(reorient(m, set), reorient(m, rest));
    }
  }
}

TEST(Reorient, RejectsOutOfRangeElements) {
  const TopeSet m = canonical("lines3");
  EXPECT_THROW(reorient(m, std::vector<int>{4}), Error);
  EXPECT_THROW(reorient(m, std::vector<int>{0}), Error);
}

TEST(Acyclic, AllPlusTopeDecides) {
  const TopeSet m = canonical("lines3");
  EXPECT_TRUE(is_acyclic(m));
  EXPECT_FALSE(is_acyclic(reorient(m, std::vector<int>{3})));
  for (const auto& name : catalog_names()) {
    const TopeSet x = canonical(name);
    std::vector<int> everything;
    for (int e = 1; e <= x.ground_size(); ++e) everything.push_back(e);
    const bool all_minus = x.index_of(Tope(0, x.ground_size())).has_value();
    EXPECT_EQ(is_acyclic(reorient(x, everything)), all_minus);
  }
}
