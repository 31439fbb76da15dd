#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "omc/inclusion_exclusion.hpp"
#include "omc/instances.hpp"
#include "oracles.hpp"

using namespace omc;

namespace {

std::vector<std::string> rows_of(const TopeSet& m) {
  std::vector<std::string> rows;
  for (const Tope& t : m.topes()) rows.push_back(t.str());
  return rows;
}

// Every corpus instance together with all of its reorientations.
std::vector<std::pair<std::string, TopeSet>> corpus_with_reorientations(int max_ground = 5) {
  std::vector<std::pair<std::string, TopeSet>> out;
  for (const auto& name : catalog_names()) {
    const TopeSet base = canonical(name);
    if (base.ground_size() > max_ground) {
      out.emplace_back(name, base);
      continue;
    }
    for (Mask a = 0; a < (Mask{1} << base.ground_size()); ++a)
      out.emplace_back(name + " reoriented " + std::to_string(a), reorient_mask(base, a));
  }
  return out;
}

}  // namespace

TEST(BuildFamily, ThreeLines) {
  const TopeSet m = canonical("lines3");
  const SubsetFamily f = build_family(m, 2);
  EXPECT_EQ(f.h, 2);
  // 3 pairs per halfspace; {+-+,+++} and {-++,+++} each lie in two of them.
  EXPECT_EQ(f.members.size(), 7u);
  for (Mask s : f.members) EXPECT_EQ(popcount(s), 2);
  // Elements 2 and 3 give 6 pairs sharing {-++,+++}.
  EXPECT_EQ(build_family(m, 2, 1).members.size(), 5u);
  EXPECT_EQ(build_family(m, 3).members.size(), 3u);
}

TEST(BuildFamily, MatchesStringEnumeration) {
  for (const auto& name : catalog_names()) {
    const TopeSet m = canonical(name);
    const auto rows = rows_of(m);
    for (int h = 1; h <= m.half_size(); ++h)
      for (int exclude = 0; exclude <= m.ground_size(); ++exclude) {
        std::set<std::set<std::string>> expected;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << rows.size()); ++s) {
          if (std::popcount(s) != h) continue;
          std::set<std::string> chosen;
          for (std::size_t i = 0; i < rows.size(); ++i)
            if ((s >> i) & 1) chosen.insert(rows[i]);
          for (int e = 1; e <= m.ground_size(); ++e) {
            if (e == exclude) continue;
            bool inside = true;
            for (const auto& t : chosen) inside = inside && t[static_cast<std::size_t>(e - 1)] == '+';
            if (inside) expected.insert(chosen);
          }
        }
        const SubsetFamily f = exclude == 0 ? build_family(m, h) : build_family(m, h, exclude);
        std::set<std::set<std::string>> got;
        for (Mask s : f.members) {
          std::set<std::string> chosen;
          for (int i : indices_of(s)) chosen.insert(rows[static_cast<std::size_t>(i)]);
          got.insert(chosen);
        }
        EXPECT_EQ(got, expected) << name << " h=" << h << " exclude=" << exclude;
        EXPECT_EQ(got.size(), f.members.size());
      }
  }
}

TEST(BuildFamily, MembersLieInPositiveHalfspaces) {
  for (const auto& name : catalog_names()) {
    const TopeSet m = canonical(name);
    for (int h = 1; h <= m.half_size(); ++h) {
      const SubsetFamily f = build_family(m, h);
      std::set<Mask> distinct(f.members.begin(), f.members.end());
      EXPECT_EQ(distinct.size(), f.members.size());
      for (Mask s : f.members) {
        bool inside = false;
        for (int e = 0; e < m.ground_size(); ++e) inside = inside || is_subset(s, m.halfspace_mask(e, Sign::Plus));
        EXPECT_TRUE(inside);
      }
      EXPECT_TRUE(std::is_sorted(f.members.begin(), f.members.end(), index_lex_less));
    }
  }
}

TEST(BuildFamily, RejectsBadH) {
  const TopeSet m = canonical("lines3");
  EXPECT_THROW(build_family(m, 0), Error);
  EXPECT_THROW(build_family(m, 4), Error);
  EXPECT_THROW(build_family(m, 2, 4), Error);
}

TEST(CountCommittees, ThreeLinesExamples) {
  const TopeSet m = canonical("lines3");
  EXPECT_EQ(count_committees_ie(m, 3, Ell::K).value, 3);
  EXPECT_EQ(count_committees_ie(m, 3, Ell::Complement).value, 3);
  EXPECT_EQ(count_committees_ie(m, 1, Ell::K).value, 1);
  EXPECT_EQ(count_committees_moebius(m, 3).value, 3);
  EXPECT_EQ(count_committees_moebius(m, 2).value, 0);
  EXPECT_EQ(count_committees_moebius(reorient(m, std::vector<int>{3}), 1).value, 0);
}

TEST(CountRing, ThreeLinesExamples) {
  const TopeSet m = canonical("lines3");
  EXPECT_EQ(count_ring_ie(m, 3).value, 1);
  EXPECT_EQ(count_ring_ie(m, 1).value, 1);
  EXPECT_EQ(count_ring_moebius(m, 3).value, 1);
  EXPECT_EQ(count_ring_moebius(m, 1).value, 1);
  EXPECT_EQ(count_ring_moebius(reorient(m, std::vector<int>{3}), 3).value, 1);
}

TEST(CountCommittees, PairsAlwaysZero) {
  for (const auto& [label, m] : corpus_with_reorientations()) {
    EXPECT_EQ(count_committees_ie(m, 2, Ell::K).value, 0) << label;
    EXPECT_EQ(count_ring_ie(m, 2).value, 0) << label;
  }
}

TEST(CountCommittees, EveryMethodMatchesTheOracle) {
  for (const auto& [label, m] : corpus_with_reorientations()) {
    const auto rows = rows_of(m);
    const auto general = oracle::kappa(rows, false);
    const auto ring = oracle::kappa(rows, true);
    for (int k = 1; k <= m.half_size(); ++k) {
      const auto idx = static_cast<std::size_t>(k - 1);
      EXPECT_EQ(count_committees_ie(m, k, Ell::K).value, general[idx]) << label << " k=" << k;
      EXPECT_EQ(count_committees_ie(m, k, Ell::Complement).value, general[idx]) << label << " k=" << k;
      EXPECT_EQ(count_committees_moebius(m, k).value, general[idx]) << label << " k=" << k;
      EXPECT_EQ(count_ring_ie(m, k).value, ring[idx]) << label << " k=" << k;
      EXPECT_EQ(count_ring_moebius(m, k).value, ring[idx]) << label << " k=" << k;
    }
  }
}

TEST(CountCommittees, PruningNeverChangesTheValue) {
  const Pruning variants[] = {Pruning::none(), Pruning{true, false}, Pruning{false, true}};
  for (const char* name : {"lines3", "lines4"}) {
    const TopeSet m = canonical(name);
    for (int k = 1; k <= m.half_size(); ++k)
      for (const Pruning& p : variants) {
        EXPECT_EQ(count_committees_ie(m, k, Ell::K, {}, p).value, count_committees_ie(m, k, Ell::K).value);
        EXPECT_EQ(count_committees_ie(m, k, Ell::Complement, {}, p).value,
                  count_committees_ie(m, k, Ell::Complement).value);
        EXPECT_EQ(count_ring_ie(m, k, {}, p).value, count_ring_ie(m, k).value);
      }
  }
}

TEST(CountCommittees, BudgetIsAnErrorNotATruncation) {
  const TopeSet m = canonical("lines5");
  Budget tiny;
  tiny.max_nodes = 3;
  tiny.max_elements = 3;
  EXPECT_THROW(count_committees_ie(m, 5, Ell::Complement, tiny), Error);
  EXPECT_THROW(count_ring_moebius(m, 5, tiny), Error);
  EXPECT_THROW(count_committees_ie(m, 6, Ell::K), Error);
}

TEST(Splits, BalanceOnThreeLines) {
  const TopeSet m = canonical("lines3");
  const SplitResult a = alpha_split(m, 1, 3, Ell::Complement);
  EXPECT_EQ(a.total(), 3);
  const SplitResult b = beta_split(m, 1, 3);
  EXPECT_EQ(b.total(), 1);
  for (int e = 1; e <= 3; ++e) EXPECT_EQ(beta_split(m, e, 2).total(), 0);
}

TEST(Splits, BalanceAcrossTheCorpus) {
  for (const auto& [label, m] : corpus_with_reorientations(3)) {
    const auto rows = rows_of(m);
    const auto general = oracle::kappa(rows, false);
    const auto ring = oracle::kappa(rows, true);
    for (int a = 1; a <= m.ground_size(); ++a)
      for (int k = 1; k <= m.half_size(); ++k) {
        const auto idx = static_cast<std::size_t>(k - 1);
        EXPECT_EQ(alpha_split(m, a, k, Ell::K).total(), general[idx]) << label;
        EXPECT_EQ(alpha_split(m, a, k, Ell::Complement).total(), general[idx]) << label;
        EXPECT_EQ(beta_split(m, a, k).total(), ring[idx]) << label;
      }
  }
}

TEST(Splits, NoOwnSubsetsMeansNoSplit) {
  const TopeSet m = canonical("lines3");
  for (int k : {1, 2}) {
    const SplitResult s = alpha_split(m, 3, k, Ell::K);
    EXPECT_EQ(s.a_part, 0);
    EXPECT_EQ(s.base, count_committees_ie(m, k, Ell::K).value);
  }
}

TEST(Splits, BaseIgnoresTheOrientationOfA) {
  for (const auto& name : catalog_names()) {
    const TopeSet m = canonical(name);
    for (int a = 1; a <= m.ground_size(); ++a) {
      const TopeSet flipped = reorient(m, std::vector<int>{a});
      for (int k = 1; k <= m.half_size(); ++k) {
        EXPECT_EQ(alpha_k(m, a, k, Ell::Complement), alpha_k(flipped, a, k, Ell::Complement)) << name;
        EXPECT_EQ(alpha_k(m, a, k, Ell::K), alpha_k(flipped, a, k, Ell::K)) << name;
        EXPECT_EQ(beta_k(m, a, k), beta_k(flipped, a, k)) << name;
      }
    }
  }
}

TEST(CountSpec, LeadingTerms) {
  const TopeSet m = canonical("lines4");
  EXPECT_EQ(CountSpec::general(m, 3, Ell::K).weight(0, 0), binomial(8, 5));
  EXPECT_EQ(CountSpec::general(m, 3, Ell::Complement).weight(0, 0), binomial(8, 3));
  EXPECT_EQ(CountSpec::opposite_free(m, 3).weight(0, 0), crosspolytope_faces(4, 3));
  EXPECT_EQ(CountSpec::opposite_free(m, 3).h(), 3);
  EXPECT_EQ(CountSpec::general(m, 3, Ell::K).h(), 2);
}
