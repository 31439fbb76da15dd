#pragma once

#include <algorithm>
#include <span>
#include <thread>
#include <vector>

#include "omc/bits.hpp"
#include "omc/integer.hpp"
#include "omc/tope.hpp"

namespace omc {

enum class Variant { General, OppositeFree };

constexpr std::string_view variant_name(Variant v) {
  return v == Variant::General ? "general" : "opposite-free";
}

/// A committee as a mask over the canonical tope positions of its TopeSet.
struct Committee {
  Mask members = 0;
  int size() const { return popcount(members); }
  friend bool operator==(const Committee&, const Committee&) = default;
};

/// Committee counts indexed by cardinality k = 1 .. |T|/2.
class KappaVector {
 public:
  KappaVector(Variant variant, std::vector<Integer> counts)
      : variant_(variant), counts_(std::move(counts)) {}

  Variant variant() const { return variant_; }
  int length() const { return static_cast<int>(counts_.size()); }
  const std::vector<Integer>& counts() const { return counts_; }

  /// 1-based access.
  const Integer& at(int k) const {
    if (k < 1 || k > length())
      throw Error(ErrorKind::BadCardinality, "k=" + std::to_string(k) + " outside 1.." + std::to_string(length()));
    return counts_[static_cast<std::size_t>(k - 1)];
  }

  friend bool operator==(const KappaVector&, const KappaVector&) = default;

 private:
  Variant variant_;
  std::vector<Integer> counts_;
};

inline void check_cardinality(const TopeSet& m, int k) {
  if (k < 1 || k > m.half_size())
    throw Error(ErrorKind::BadCardinality,
                "k=" + std::to_string(k) + " outside 1.." + std::to_string(m.half_size()));
}

namespace detail {

// Strict-majority test over the positive-halfspace columns. The coordinate
// that failed most recently is tried first.
class MajorityTest {
 public:
  explicit MajorityTest(const TopeSet& m) : m_(m) {
    for (int e = 0; e < m.ground_size(); ++e) columns_.push_back(m.halfspace_mask(e, Sign::Plus));
  }

  bool operator()(Mask k_set) {
    const int k = popcount(k_set);
    const int t = static_cast<int>(columns_.size());
    if (!passes(k_set, k, last_fail_)) return false;
    for (int e = 0; e < t; ++e) {
      if (e == last_fail_) continue;
      if (!passes(k_set, k, e)) {
        last_fail_ = e;
        return false;
      }
    }
    return true;
  }

 private:
  bool passes(Mask k_set, int k, int e) const {
    return 2 * popcount(k_set & columns_[static_cast<std::size_t>(e)]) > k;
  }

  const TopeSet& m_;
  std::vector<Mask> columns_;
  int last_fail_ = 0;
};

// k-subsets of {0..n-1} whose smallest member is `first`.
template <class F>
void for_each_subset_with_first(int n, int k, int first, F&& f) {
  const Mask head = Mask{1} << first;
  for_each_k_subset(n - first - 1, k - 1,
                    [&](Mask rest) { f(rest == 0 ? head : head | (rest << (first + 1))); });
}

}  // namespace detail

inline bool is_committee_mask(const TopeSet& m, Mask k_set) {
  if (k_set == 0) throw Error(ErrorKind::EmptyInput, "a committee has at least one member");
  if (!is_subset(k_set, m.all())) throw Error(ErrorKind::NotSubset, "mask has bits beyond the tope set");
  return detail::MajorityTest(m)(k_set);
}

/// Strict per-coordinate majority of '+' among the members of `k_set`.
inline bool is_committee(const TopeSet& m, std::span<const Tope> k_set) {
  if (k_set.empty()) throw Error(ErrorKind::EmptyInput, "a committee has at least one member");
  const Mask mask = m.mask_of(k_set);
  if (popcount(mask) != static_cast<int>(k_set.size()))
    throw Error(ErrorKind::Duplicate, "committee lists a tope twice");
  return is_committee_mask(m, mask);
}

inline bool has_opposite_pair(const TopeSet& m, Mask subset) { return (subset & m.negate(subset)) != 0; }

/// All committees of cardinality k in canonical order.
inline std::vector<Committee> committees_of_size(const TopeSet& m, int k, bool opposite_free) {
  check_cardinality(m, k);
  std::vector<Committee> out;
  detail::MajorityTest test(m);
  for_each_k_subset(m.size(), k, [&](Mask s) {
    if (opposite_free && has_opposite_pair(m, s)) return;
    if (test(s)) out.push_back(Committee{s});
  });
  return out;
}

/// Committee counts by exhaustive enumeration. With threads > 1 the k-subsets
/// are split by their first member.
inline KappaVector kappa_star(const TopeSet& m, bool opposite_free, unsigned threads = 1) {
  const int n = m.size();
  const int half = m.half_size();
  std::vector<Integer> counts(static_cast<std::size_t>(half));
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  for (int k = 1; k <= half; ++k) {
    std::vector<long long> partial(threads, 0);
    auto work = [&](unsigned worker) {
      detail::MajorityTest test(m);
      long long c = 0;
      for (int first = static_cast<int>(worker); first <= n - k; first += static_cast<int>(threads)) {
        detail::for_each_subset_with_first(n, k, first, [&](Mask s) {
          if (opposite_free && has_opposite_pair(m, s)) return;
          if (test(s)) ++c;
        });
      }
      partial[worker] = c;
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (long long c : partial) counts[static_cast<std::size_t>(k - 1)] += c;
  }
  return KappaVector(opposite_free ? Variant::OppositeFree : Variant::General, std::move(counts));
}

/// Recovers the general committee counts from the opposite-free ones: each
/// opposite-free committee of size j extends by (k-j)/2 of its missing
/// opposite pairs.
inline KappaVector expand_ring_to_general(const KappaVector& ring, int tope_count) {
  if (tope_count < 2 || tope_count % 2 != 0 || ring.length() != tope_count / 2)
    throw Error(ErrorKind::LengthMismatch, "vector of length " + std::to_string(ring.length()) +
                                               " does not match " + std::to_string(tope_count) + " topes");
  const int half = tope_count / 2;
  std::vector<Integer> counts(static_cast<std::size_t>(half));
  for (int k = 1; k <= half; ++k) {
    Integer sum = 0;
    for (int j = k; j >= 1; j -= 2) sum += binomial((tope_count - 2 * j) / 2, (k - j) / 2) * ring.at(j);
    counts[static_cast<std::size_t>(k - 1)] = sum;
  }
  return KappaVector(Variant::General, std::move(counts));
}

}  // namespace omc
