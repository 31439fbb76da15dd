#pragma once

#include <string_view>

#include "omc/committee.hpp"
#include "omc/inclusion_exclusion.hpp"

namespace omc {

enum class DeltaMethod { Ie, Moebius, Direct };

constexpr std::string_view method_name(DeltaMethod m) {
  switch (m) {
    case DeltaMethod::Ie: return "ie";
    case DeltaMethod::Moebius: return "moebius";
    case DeltaMethod::Direct: return "direct";
  }
  return "";
}

/// Change of the k-th committee count under reorientation on {a} (1-based).
struct DeltaRequest {
  const TopeSet& m;
  int a;
  int k;
  Variant variant;

  void validate() const {
    check_element(m, a);
    check_cardinality(m, k);
  }
};

namespace detail {

// The three families of the single-element reorientation: h-subsets of the
// positive halfspaces of the other elements, and the h-subsets of either
// halfspace of a that are not already among them.
struct ReorientationFamilies {
  std::vector<Mask> shared;
  std::vector<Mask> minus_own;
  std::vector<Mask> plus_own;

  ReorientationFamilies(const TopeSet& m, int a, int h)
      : shared(build_family(m, h, a).members),
        minus_own(family_difference(halfspace_subsets(m, a - 1, Sign::Minus, h), shared)),
        plus_own(family_difference(halfspace_subsets(m, a - 1, Sign::Plus, h), shared)) {}
};

}  // namespace detail

/// Subfamily form. The shared family is walked once; for each of its
/// subfamilies (empty one included) both own-family sums are taken.
inline SumResult delta_ie(const DeltaRequest& req, const Budget& budget = {}, Pruning pruning = {}) {
  req.validate();
  const CountSpec spec = CountSpec::of(req.m, req.k, req.variant);
  const detail::ReorientationFamilies fam(req.m, req.a, spec.h());
  detail::TopeTally tally(req.m, spec);
  std::uint64_t nodes = 0;
  auto alive = [&](Mask u) { return tally.alive(u); };
  auto record = [&](Mask u, int sign) { tally.add(u, sign); };

  auto inner = [&](Mask shared_union, int shared_sign) {
    walk_subfamilies(fam.minus_own, fam.minus_own.size(), shared_union, shared_sign, alive, record, pruning,
                     budget.max_nodes, nodes);
    walk_subfamilies(fam.plus_own, fam.plus_own.size(), shared_union, -shared_sign, alive, record, pruning,
                     budget.max_nodes, nodes);
  };
  inner(0, 1);
  walk_subfamilies(fam.shared, fam.shared.size(), 0, 1, alive, inner, pruning, budget.max_nodes, nodes);
  return {tally.evaluate(), nodes};
}

/// Moebius form over the three union semilattices.
inline SumResult delta_moebius(const DeltaRequest& req, const Budget& budget = {}) {
  req.validate();
  const CountSpec spec = CountSpec::of(req.m, req.k, req.variant);
  const detail::ReorientationFamilies fam(req.m, req.a, spec.h());
  const UnionSemilattice shared = build_union_semilattice(fam.shared, spec.cap(), budget.max_elements);
  const UnionSemilattice minus = build_union_semilattice(fam.minus_own, spec.cap(), budget.max_elements);
  const UnionSemilattice plus = build_union_semilattice(fam.plus_own, spec.cap(), budget.max_elements);

  detail::TopeTally tally(req.m, spec);
  std::uint64_t terms = 0;
  for (std::size_t s = 0; s < shared.size(); ++s) {
    const Mask outer_union = shared.elements[s];
    const std::int64_t outer_mu = shared.moebius[s];
    for (int side = 0; side < 2; ++side) {
      const UnionSemilattice& own = side == 0 ? minus : plus;
      const std::int64_t sign = side == 0 ? 1 : -1;
      for (std::size_t i = 1; i < own.size(); ++i) {
        const Mask u = outer_union | own.elements[i];
        if (!tally.alive(u)) continue;
        ++terms;
        tally.add(u, sign * checked_mul(outer_mu, own.moebius[i]));
      }
    }
  }
  return {tally.evaluate(), terms};
}

/// Two exhaustive counts and a subtraction.
inline SumResult delta_direct(const DeltaRequest& req) {
  req.validate();
  const bool opposite_free = req.variant == Variant::OppositeFree;
  const int a[] = {req.a};
  const TopeSet flipped = reorient(req.m, a);
  const auto after = committees_of_size(flipped, req.k, opposite_free).size();
  const auto before = committees_of_size(req.m, req.k, opposite_free).size();
  return {Integer(after) - Integer(before), 0};
}

inline SumResult delta(const DeltaRequest& req, DeltaMethod method, const Budget& budget = {},
                       Pruning pruning = {}) {
  switch (method) {
    case DeltaMethod::Ie: return delta_ie(req, budget, pruning);
    case DeltaMethod::Moebius: return delta_moebius(req, budget);
    case DeltaMethod::Direct: return delta_direct(req);
  }
  return {};
}

}  // namespace omc
