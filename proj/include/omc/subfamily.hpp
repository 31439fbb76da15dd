#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "omc/bits.hpp"
#include "omc/error.hpp"
#include "omc/integer.hpp"

namespace omc {

/// Caps on the work done by the exact alternating sums. Exceeding either is
/// an error, never an approximation.
struct Budget {
  std::uint64_t max_nodes = std::uint64_t{1} << 24;
  std::uint64_t max_elements = std::uint64_t{1} << 20;
};

/// Sound cuts for subfamily enumeration. Both only drop groups of terms whose
/// total is zero, so disabling them changes the work but never the value.
struct Pruning {
  // Drop subfamilies whose union is no longer alive; alive is monotone
  // decreasing, so the whole branch goes with it.
  bool union_bound = true;
  // When a later member is already inside the running union, including or
  // excluding it pairs the subtree off into cancelling terms.
  bool absorption = true;

  static constexpr Pruning none() { return Pruning{false, false}; }
};

namespace detail {

template <class Alive, class Visit>
class SubfamilyWalker {
 public:
  SubfamilyWalker(std::span<const Mask> family, Alive& alive, Visit& visit, Pruning pruning,
                  std::uint64_t max_nodes, std::uint64_t& nodes)
      : family_(family), alive_(alive), visit_(visit), pruning_(pruning), max_nodes_(max_nodes), nodes_(nodes) {}

  void extend(std::size_t from, std::size_t limit, Mask u, int sign) {
    for (std::size_t i = from; i < limit; ++i) {
      const Mask v = u | family_[i];
      if (pruning_.union_bound && !alive_(v)) continue;
      if (pruning_.absorption && absorbed_after(i, v)) continue;
      if (++nodes_ > max_nodes_)
        throw Error(ErrorKind::BudgetExceeded,
                    "more than " + std::to_string(max_nodes_) + " subfamily terms");
      visit_(v, -sign);
      extend(i + 1, family_.size(), v, -sign);
    }
  }

 private:
  bool absorbed_after(std::size_t i, Mask u) const {
    for (std::size_t j = i + 1; j < family_.size(); ++j)
      if (is_subset(family_[j], u)) return true;
    return false;
  }

  std::span<const Mask> family_;
  Alive& alive_;
  Visit& visit_;
  Pruning pruning_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
};

}  // namespace detail

/// Visits every nonempty subfamily of `family` whose first member has index
/// below `first_limit`, calling visit(seed | union, root_sign * (-1)^size).
/// `nodes` accumulates the number of visited subfamilies across calls.
template <class Alive, class Visit>
void walk_subfamilies(std::span<const Mask> family, std::size_t first_limit, Mask seed, int root_sign,
                      Alive&& alive, Visit&& visit, Pruning pruning, std::uint64_t max_nodes,
                      std::uint64_t& nodes) {
  detail::SubfamilyWalker<std::remove_reference_t<Alive>, std::remove_reference_t<Visit>> walker(
      family, alive, visit, pruning, max_nodes, nodes);
  walker.extend(0, std::min(first_limit, family.size()), seed, root_sign);
}

/// Signed coefficients keyed by (|U|, |U u -U|); every sum in this library
/// weighs a union only through those two sizes.
class PairTally {
 public:
  explicit PairTally(int universe) : n_(universe), cells_(static_cast<std::size_t>((universe + 1) * (universe + 1)), 0) {}

  void add(int size, int closed_size, std::int64_t coefficient) {
    checked_add(cells_[static_cast<std::size_t>(size * (n_ + 1) + closed_size)], coefficient);
  }

  template <class Weight>
  Integer evaluate(Weight&& weight) const {
    Integer sum = 0;
    for (int u = 0; u <= n_; ++u)
      for (int uu = 0; uu <= n_; ++uu) {
        const std::int64_t c = cells_[static_cast<std::size_t>(u * (n_ + 1) + uu)];
        if (c != 0) sum += Integer(c) * weight(u, uu);
      }
    return sum;
  }

 private:
  int n_;
  std::vector<std::int64_t> cells_;
};

/// Distinct unions of nonempty subfamilies of a generating family, ordered by
/// inclusion, plus an adjoined bottom. elements[0] is the bottom (stored as
/// the empty mask); moebius[i] is mu(bottom, elements[i]).
struct UnionSemilattice {
  std::vector<Mask> elements;
  std::vector<std::int64_t> moebius;

  std::size_t size() const { return elements.size(); }
};

/// Builds the part of the union semilattice of `generators` whose elements are
/// alive. `alive` must be monotone decreasing, so the stored part is an order
/// ideal and its Moebius values agree with those of the full semilattice.
template <class Alive>
UnionSemilattice build_union_semilattice(std::span<const Mask> generators, Alive&& alive,
                                         std::uint64_t max_elements) {
  std::vector<Mask> gens;
  for (Mask g : generators)
    if (g != 0 && alive(g)) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::unordered_set<Mask> seen(gens.begin(), gens.end());
  std::vector<Mask> frontier = gens;
  std::vector<Mask> all = gens;
  auto check = [&] {
    if (all.size() + 1 > max_elements)
      throw Error(ErrorKind::BudgetExceeded,
                  "union semilattice exceeds " + std::to_string(max_elements) + " elements");
  };
  check();
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask x : frontier)
      for (Mask g : gens) {
        const Mask y = x | g;
        if (y == x || !alive(y) || !seen.insert(y).second) continue;
        next.push_back(y);
        all.push_back(y);
        check();
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  UnionSemilattice lattice;
  lattice.elements.reserve(all.size() + 1);
  lattice.elements.push_back(0);
  lattice.elements.insert(lattice.elements.end(), all.begin(), all.end());
  lattice.moebius.assign(lattice.elements.size(), 0);
  lattice.moebius[0] = 1;
  for (std::size_t z = 1; z < lattice.elements.size(); ++z) {
    const Mask top = lattice.elements[z];
    const int rank = popcount(top);
    std::int64_t below = lattice.moebius[0];
    for (std::size_t w = 1; w < z; ++w) {
      const Mask x = lattice.elements[w];
      if (popcount(x) >= rank) break;
      if (is_subset(x, top)) checked_add(below, lattice.moebius[w]);
    }
    if (below == INT64_MIN) throw Error(ErrorKind::Overflow, "Moebius value left the 64-bit range");
    lattice.moebius[z] = -below;
  }
  return lattice;
}

inline UnionSemilattice build_union_semilattice(std::span<const Mask> generators, int size_cap,
                                                std::uint64_t max_elements) {
  return build_union_semilattice(generators, [size_cap](Mask u) { return popcount(u) <= size_cap; },
                                 max_elements);
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "Moebius product left the 64-bit range");
  return out;
}

/// Members of `from` that do not occur in `minus`, in their original order.
inline std::vector<Mask> family_difference(std::span<const Mask> from, std::span<const Mask> minus) {
  const std::unordered_set<Mask> drop(minus.begin(), minus.end());
  std::vector<Mask> out;
  for (Mask m : from)
    if (!drop.contains(m)) out.push_back(m);
  return out;
}

}  // namespace omc
