#pragma once

#include "omc/integer.hpp"

namespace omc {

/// Opposite-free k-subsets of +-[1,m]; the number of (k-1)-faces of the
/// m-dimensional crosspolytope.
inline Integer crosspolytope_faces(int m, int k) { return binomial(m, k) * pow2(static_cast<unsigned>(k < 0 ? 0 : k)); }

/// Opposite-free k-sets avoiding a set W, given
///   excess     = |W u -W| - |W|   (items whose opposite lies in W but which are not in W)
///   free_pairs = m - |W u -W| / 2 (opposite pairs untouched by W).
/// Sum over j of C(excess, j) * C(free_pairs, k - j) * 2^(k - j).
inline Integer opposite_free_avoiding(int excess, int free_pairs, int k) {
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer a = binomial(excess, j);
    if (a == 0) continue;
    sum += a * binomial(free_pairs, k - j) * pow2(static_cast<unsigned>(k - j));
  }
  return sum;
}

}  // namespace omc
