#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "omc/bits.hpp"
#include "omc/counting.hpp"
#include "omc/subfamily.hpp"

namespace omc {

inline constexpr int kMaxHalfUniverse = 32;

/// An element of the Boolean lattice of subsets of +-[1,m]. Item +i is bit
/// i-1 and item -i is bit m+i-1, so negation swaps the two halves.
class BLElement {
 public:
  BLElement(int m, Mask bits) : m_(m), bits_(bits) {
    if (m < 1 || m > kMaxHalfUniverse)
      throw Error(ErrorKind::BadRange, "m=" + std::to_string(m) + " outside 1.." + std::to_string(kMaxHalfUniverse));
    if (!is_subset(bits, low_bits(2 * m))) throw Error(ErrorKind::BadRange, "element has items beyond +-[1,m]");
  }

  static BLElement from_items(int m, std::span<const int> items) {
    Mask bits = 0;
    for (int v : items) bits |= item_bit(m, v);
    return BLElement(m, bits);
  }

  /// Parses a comma-separated list of signed integers such as "1,-2,3".
  static BLElement parse(int m, std::string_view text) {
    std::vector<int> items;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      const auto first = token.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      const auto last = token.find_last_not_of(" \t\r");
      token = token.substr(first, last - first + 1);
      char* end = nullptr;
      const long v = std::strtol(token.c_str(), &end, 10);
      if (end == token.c_str() || *end != '\0')
        throw Error(ErrorKind::BadSymbol, "'" + token + "' is not a signed integer");
      items.push_back(static_cast<int>(v));
    }
    return from_items(m, items);
  }

  static Mask item_bit(int m, int v) {
    if (v == 0 || v > m || v < -m)
      throw Error(ErrorKind::BadRange, "item " + std::to_string(v) + " outside +-[1," + std::to_string(m) + "]");
    return v > 0 ? Mask{1} << (v - 1) : Mask{1} << (m - v - 1);
  }

  int universe_half() const { return m_; }
  Mask bits() const { return bits_; }
  int rank() const { return popcount(bits_); }

  BLElement operator-() const { return BLElement(m_, negate_bits(m_, bits_)); }

  static Mask negate_bits(int m, Mask bits) {
    const Mask low = low_bits(m);
    return ((bits & low) << m) | ((bits >> m) & low);
  }

  std::vector<int> items() const {
    std::vector<int> out;
    for (int b : indices_of(bits_)) out.push_back(b < m_ ? b + 1 : -(b - m_ + 1));
    std::sort(out.begin(), out.end(), [](int x, int y) {
      return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x > y;
    });
    return out;
  }

  std::string str() const {
    std::string s;
    for (int v : items()) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    }
    return s;
  }

  friend bool operator==(const BLElement&, const BLElement&) = default;

 private:
  int m_;
  Mask bits_;
};

/// Exact non-negative rational p/q in lowest terms.
class Rational {
 public:
  Rational(long long p, long long q) : p_(p), q_(q) {
    if (q == 0) throw Error(ErrorKind::BadThreshold, "zero denominator");
    if (q < 0) {
      p_ = -p_;
      q_ = -q_;
    }
    const long long g = std::gcd(p_ < 0 ? -p_ : p_, q_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
    }
  }

  /// "P/Q" or an integer "P".
  static Rational parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    auto to_ll = [&](const std::string& part) {
      char* end = nullptr;
      const long long v = std::strtoll(part.c_str(), &end, 10);
      if (part.empty() || *end != '\0') throw Error(ErrorKind::BadThreshold, "cannot parse '" + s + "' as P/Q");
      return v;
    };
    if (slash == std::string::npos) return Rational(to_ll(s), 1);
    return Rational(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
  }

  long long num() const { return p_; }
  long long den() const { return q_; }

  /// floor(r * k) for k >= 0.
  long long floor_times(long long k) const {
    const long long x = p_ * k;
    return x >= 0 ? x / q_ : -((-x + q_ - 1) / q_);
  }

  std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  long long p_;
  long long q_;
};

inline void check_rank_range(int m, int k) {
  if (m < 1 || m > kMaxHalfUniverse)
    throw Error(ErrorKind::BadRange, "m=" + std::to_string(m) + " outside 1.." + std::to_string(kMaxHalfUniverse));
  if (k < 0 || k > m) throw Error(ErrorKind::BadRange, "k=" + std::to_string(k) + " outside 0.." + std::to_string(m));
}

inline Integer crosspolytope_count(int m, int k) {
  check_rank_range(m, k);
  return crosspolytope_faces(m, k);
}

struct OppositePairStats {
  int excess;      // |W u -W| - |W|
  int free_pairs;  // pairs {i,-i} disjoint from W
};

inline OppositePairStats opposite_pair_stats(const BLElement& w) {
  const Mask closed = w.bits() | BLElement::negate_bits(w.universe_half(), w.bits());
  return {popcount(closed) - w.rank(), w.universe_half() - popcount(closed) / 2};
}

/// Opposite-free k-subsets of +-[1,m] disjoint from W.
inline Integer count_disjoint_opposite_free(const BLElement& w, int k) {
  check_rank_range(w.universe_half(), k);
  const auto stats = opposite_pair_stats(w);
  return opposite_free_avoiding(stats.excess, stats.free_pairs, k);
}

/// Validates the hypotheses of relative blocking: 0 <= r < 1, an antichain
/// of elements of B(2m), and floor(r*k) + 1 <= min rank.
inline void check_blocking_instance(int m, const Rational& r, int k, std::span<const BLElement> antichain) {
  check_rank_range(m, k);
  if (k < 1) throw Error(ErrorKind::BadRange, "k must be at least 1");
  if (r.num() < 0 || r.num() >= r.den())
    throw Error(ErrorKind::BadThreshold, "r=" + r.str() + " outside [0,1)");
  const long long floor_rk = r.floor_times(k);
  for (std::size_t i = 0; i < antichain.size(); ++i) {
    const BLElement& a = antichain[i];
    if (a.universe_half() != m)
      throw Error(ErrorKind::BadRange, "antichain element " + std::to_string(i + 1) + " lives in B(2*" +
                                           std::to_string(a.universe_half()) + ")");
    if (a.rank() < floor_rk + 1)
      throw Error(ErrorKind::BadThreshold, "antichain element " + std::to_string(i + 1) + " has rank " +
                                               std::to_string(a.rank()) + " < floor(r*k)+1 = " +
                                               std::to_string(floor_rk + 1));
    for (std::size_t j = i + 1; j < antichain.size(); ++j) {
      const Mask x = a.bits(), y = antichain[j].bits();
      if (is_subset(x, y) || is_subset(y, x))
        throw Error(ErrorKind::BadAntichain, "elements " + std::to_string(i + 1) + " and " +
                                                 std::to_string(j + 1) + " are comparable");
    }
  }
}

/// Rank-k opposite-free b with rank(b meet lambda) > r*k for every lambda,
/// by exhaustive enumeration.
inline Integer relative_blocking_brute(int m, const Rational& r, int k, std::span<const BLElement> antichain) {
  check_blocking_instance(m, r, k, antichain);
  long long count = 0;
  for_each_k_subset(2 * m, k, [&](Mask b) {
    if ((b & BLElement::negate_bits(m, b)) != 0) return;
    for (const BLElement& lambda : antichain)
      if (static_cast<long long>(popcount(b & lambda.bits())) * r.den() <= r.num() * k) return;
    ++count;
  });
  return count;
}

/// b fails lambda exactly when it misses some (rank(lambda) - floor(r*k))-subset
/// of lambda. Returns the minimal such subsets over all lambda.
inline std::vector<Mask> blocking_generators(int m, const Rational& r, int k, std::span<const BLElement> antichain) {
  check_blocking_instance(m, r, k, antichain);
  const long long floor_rk = r.floor_times(k);
  std::vector<Mask> all;
  for (const BLElement& lambda : antichain) {
    auto subsets = k_subsets_of(lambda.bits(), lambda.rank() - static_cast<int>(floor_rk));
    all.insert(all.end(), subsets.begin(), subsets.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Mask> minimal;
  for (Mask x : all) {
    bool has_smaller = false;
    for (Mask y : all)
      if (y != x && is_subset(y, x)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(), index_lex_less);
  return minimal;
}

struct BlockingResult {
  Integer value;
  std::uint64_t terms = 0;
};

namespace detail {

class BlockingTally {
 public:
  BlockingTally(int m, int k) : m_(m), k_(k), tally_(2 * m) {}

  void add(Mask u, std::int64_t coefficient) {
    tally_.add(popcount(u), popcount(u | BLElement::negate_bits(m_, u)), coefficient);
  }

  // At least k opposite pairs must remain not fully covered by u.
  bool alive(Mask u) const {
    const Mask full_pairs = u & BLElement::negate_bits(m_, u);
    return m_ - popcount(full_pairs) / 2 >= k_;
  }

  Integer evaluate() const {
    return tally_.evaluate(
        [this](int u, int uu) { return opposite_free_avoiding(uu - u, m_ - uu / 2, k_); });
  }

 private:
  int m_;
  int k_;
  PairTally tally_;
};

}  // namespace detail

/// Inclusion-exclusion over subsets D of the generators, with the union of D
/// as the set to avoid.
inline BlockingResult relative_blocking_ie(int m, const Rational& r, int k, std::span<const BLElement> antichain,
                                           const Budget& budget = {}, Pruning pruning = {}) {
  const std::vector<Mask> gens = blocking_generators(m, r, k, antichain);
  detail::BlockingTally tally(m, k);
  tally.add(0, 1);
  std::uint64_t nodes = 0;
  walk_subfamilies(
      gens, gens.size(), 0, 1, [&](Mask u) { return tally.alive(u); },
      [&](Mask u, int sign) { tally.add(u, sign); }, pruning, budget.max_nodes, nodes);
  return {tally.evaluate(), nodes};
}

/// One term per join of generators, weighted by its Moebius value.
inline BlockingResult relative_blocking_moebius(int m, const Rational& r, int k,
                                                std::span<const BLElement> antichain, const Budget& budget = {}) {
  const std::vector<Mask> gens = blocking_generators(m, r, k, antichain);
  detail::BlockingTally tally(m, k);
  const UnionSemilattice lattice =
      build_union_semilattice(gens, [&](Mask u) { return tally.alive(u); }, budget.max_elements);
  for (std::size_t i = 0; i < lattice.size(); ++i) tally.add(lattice.elements[i], lattice.moebius[i]);
  return {tally.evaluate(), lattice.size()};
}

}  // namespace omc
