#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "omc/committee.hpp"
#include "omc/counting.hpp"
#include "omc/subfamily.hpp"
#include "omc/tope.hpp"

namespace omc {

/// Which of the two equivalent window sizes the general count uses:
/// ell = k, or ell = |T| - k.
enum class Ell { K, Complement };

constexpr std::string_view ell_name(Ell e) { return e == Ell::K ? "k" : "complement"; }

/// Equal-size tope subsets, each inside some positive halfspace.
struct SubsetFamily {
  int h = 0;
  std::vector<Mask> members;
};

/// All h-subsets of the given halfspace of the 0-based element e.
inline std::vector<Mask> halfspace_subsets(const TopeSet& m, int e, Sign s, int h) {
  return k_subsets_of(m.halfspace_mask(e, s), h);
}

/// h-subsets of the positive halfspaces of all elements except the optional
/// 1-based `exclude`, deduplicated, in lexicographic order of tope positions.
inline SubsetFamily build_family(const TopeSet& m, int h, std::optional<int> exclude = std::nullopt) {
  if (h < 1 || h > m.half_size())
    throw Error(ErrorKind::BadH, "h=" + std::to_string(h) + " outside 1.." + std::to_string(m.half_size()));
  if (exclude) check_element(m, *exclude);
  SubsetFamily family{h, {}};
  for (int e = 0; e < m.ground_size(); ++e) {
    if (exclude && e == *exclude - 1) continue;
    auto subsets = halfspace_subsets(m, e, Sign::Plus, h);
    family.members.insert(family.members.end(), subsets.begin(), subsets.end());
  }
  std::sort(family.members.begin(), family.members.end(), index_lex_less);
  family.members.erase(std::unique(family.members.begin(), family.members.end()), family.members.end());
  return family;
}

/// Parameters of one committee count: the window ell fixes the family's
/// subset size h = floor((ell+1)/2), the union cap, and the weight of a union.
struct CountSpec {
  Variant variant;
  int tope_count;
  int k;
  int ell;

  static CountSpec general(const TopeSet& m, int k, Ell choice) {
    check_cardinality(m, k);
    return {Variant::General, m.size(), k, choice == Ell::K ? k : m.size() - k};
  }
  static CountSpec opposite_free(const TopeSet& m, int k) {
    check_cardinality(m, k);
    return {Variant::OppositeFree, m.size(), k, m.size() - k};
  }
  static CountSpec of(const TopeSet& m, int k, Variant v) {
    return v == Variant::General ? general(m, k, Ell::Complement) : opposite_free(m, k);
  }

  int h() const { return (ell + 1) / 2; }
  int cap() const { return ell; }

  /// Weight of a union with |U| = size and |U u -U| = closed_size. At the
  /// empty union this is the leading term of the sum.
  Integer weight(int size, int closed_size) const {
    if (variant == Variant::General) return binomial(tope_count - size, tope_count - ell);
    return opposite_free_avoiding(closed_size - size, (tope_count - closed_size) / 2, k);
  }
};

struct SumResult {
  Integer value;
  std::uint64_t terms = 0;
};

/// Splits a count into the part from subfamilies avoiding element a and the
/// remainder, which uses at least one h-subset found only in a's halfspace.
struct SplitResult {
  Integer base;
  Integer a_part;
  std::uint64_t terms = 0;

  Integer total() const { return base + a_part; }
};

namespace detail {

class TopeTally {
 public:
  TopeTally(const TopeSet& m, const CountSpec& spec) : m_(m), spec_(spec), tally_(m.size()) {}

  void add(Mask u, std::int64_t coefficient) {
    const int size = popcount(u);
    const int closed = spec_.variant == Variant::General ? 0 : popcount(u | m_.negate(u));
    tally_.add(size, closed, coefficient);
  }

  bool alive(Mask u) const { return popcount(u) <= spec_.cap(); }

  Integer evaluate() const {
    return tally_.evaluate([this](int u, int uu) { return spec_.weight(u, uu); });
  }

 private:
  const TopeSet& m_;
  CountSpec spec_;
  PairTally tally_;
};

inline SumResult inclusion_exclusion(const TopeSet& m, const CountSpec& spec, const Budget& budget,
                                     Pruning pruning) {
  const SubsetFamily family = build_family(m, spec.h());
  TopeTally tally(m, spec);
  tally.add(0, 1);
  std::uint64_t nodes = 0;
  walk_subfamilies(
      family.members, family.members.size(), 0, 1, [&](Mask u) { return tally.alive(u); },
      [&](Mask u, int sign) { tally.add(u, sign); }, pruning, budget.max_nodes, nodes);
  return {tally.evaluate(), nodes};
}

inline SumResult moebius_sum(const TopeSet& m, const CountSpec& spec, const Budget& budget) {
  const SubsetFamily family = build_family(m, spec.h());
  const UnionSemilattice lattice = build_union_semilattice(family.members, spec.cap(), budget.max_elements);
  TopeTally tally(m, spec);
  for (std::size_t i = 0; i < lattice.size(); ++i) tally.add(lattice.elements[i], lattice.moebius[i]);
  return {tally.evaluate(), lattice.size()};
}

inline SplitResult split_at(const TopeSet& m, int a, const CountSpec& spec, const Budget& budget,
                            Pruning pruning) {
  check_element(m, a);
  const SubsetFamily shared = build_family(m, spec.h(), a);
  const std::vector<Mask> own = family_difference(halfspace_subsets(m, a - 1, Sign::Plus, spec.h()), shared.members);
  std::uint64_t nodes = 0;
  auto alive = [&](Mask u) { return popcount(u) <= spec.cap(); };

  TopeTally base(m, spec);
  base.add(0, 1);
  walk_subfamilies(
      shared.members, shared.members.size(), 0, 1, alive, [&](Mask u, int sign) { base.add(u, sign); },
      pruning, budget.max_nodes, nodes);

  // The own-family members come first, so requiring the first chosen member
  // to lie among them selects exactly the subfamilies that use at least one.
  std::vector<Mask> combined = own;
  combined.insert(combined.end(), shared.members.begin(), shared.members.end());
  TopeTally rest(m, spec);
  walk_subfamilies(
      combined, own.size(), 0, 1, alive, [&](Mask u, int sign) { rest.add(u, sign); }, pruning,
      budget.max_nodes, nodes);
  return {base.evaluate(), rest.evaluate(), nodes};
}

}  // namespace detail

/// General committees of size k as an alternating sum over subfamilies of
/// h-subsets of positive halfspaces.
inline SumResult count_committees_ie(const TopeSet& m, int k, Ell ell, const Budget& budget = {},
                                     Pruning pruning = {}) {
  return detail::inclusion_exclusion(m, CountSpec::general(m, k, ell), budget, pruning);
}

/// Opposite-free committees of size k; each union U weighs the number of
/// opposite-free k-sets avoiding it.
inline SumResult count_ring_ie(const TopeSet& m, int k, const Budget& budget = {}, Pruning pruning = {}) {
  return detail::inclusion_exclusion(m, CountSpec::opposite_free(m, k), budget, pruning);
}

/// Same counts with one term per distinct union, weighted by its Moebius value.
inline SumResult count_committees_moebius(const TopeSet& m, int k, const Budget& budget = {}) {
  return detail::moebius_sum(m, CountSpec::general(m, k, Ell::Complement), budget);
}

inline SumResult count_ring_moebius(const TopeSet& m, int k, const Budget& budget = {}) {
  return detail::moebius_sum(m, CountSpec::opposite_free(m, k), budget);
}

inline SplitResult alpha_split(const TopeSet& m, int a, int k, Ell ell, const Budget& budget = {},
                               Pruning pruning = {}) {
  return detail::split_at(m, a, CountSpec::general(m, k, ell), budget, pruning);
}

inline SplitResult beta_split(const TopeSet& m, int a, int k, const Budget& budget = {}, Pruning pruning = {}) {
  return detail::split_at(m, a, CountSpec::opposite_free(m, k), budget, pruning);
}

inline Integer alpha_k(const TopeSet& m, int a, int k, Ell ell, const Budget& budget = {}) {
  return alpha_split(m, a, k, ell, budget).base;
}

inline Integer beta_k(const TopeSet& m, int a, int k, const Budget& budget = {}) {
  return beta_split(m, a, k, budget).base;
}

}  // namespace omc
