#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omc/blocking.hpp"
#include "omc/committee.hpp"
#include "omc/inclusion_exclusion.hpp"
#include "omc/instances.hpp"
#include "omc/reorientation.hpp"

// Corpus-level checks: every formula against exhaustive enumeration, at
// desk scale, with the time limits pinned per criterion.
namespace omc::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
  std::string detail;
};

namespace detail {

inline std::string vec_str(const KappaVector& v) {
  std::string s = "(";
  for (int k = 1; k <= v.length(); ++k) s += (k > 1 ? "," : "") + v.at(k).str();
  return s + ")";
}

inline KappaVector kappa_of(const std::vector<long long>& values, Variant v) {
  std::vector<Integer> counts(values.begin(), values.end());
  return KappaVector(v, std::move(counts));
}

// Collects failure messages; the check passes when none were recorded.
class Log {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failed_ != 0) {
      out << ", " << failed_ << " failed:";
      for (const auto& f : failures_) out << " [" << f << "]";
    }
    return out.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline CriterionResult timed(int id, std::string name, double limit, const std::function<void(Log&)>& body) {
  CriterionResult r{id, std::move(name), false, 0, limit, {}};
  Log log;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(log);
  } catch (const std::exception& e) {
    log.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = log.ok() && (limit <= 0 || r.seconds < limit);
  r.detail = log.summary();
  if (limit > 0 && r.seconds >= limit) r.detail += "; over time limit";
  return r;
}

inline std::vector<std::vector<int>> all_element_sets(int t) {
  std::vector<std::vector<int>> out;
  for (Mask a = 0; a < (Mask{1} << t); ++a) {
    std::vector<int> elems;
    for (int e : indices_of(a)) elems.push_back(e + 1);
    out.push_back(elems);
  }
  return out;
}

inline std::vector<int> complement_of(const std::vector<int>& a, int t) {
  std::vector<int> out;
  for (int e = 1; e <= t; ++e)
    if (std::find(a.begin(), a.end(), e) == a.end()) out.push_back(e);
  return out;
}

}  // namespace detail

inline CriterionResult criterion_lines3_counts() {
  return detail::timed(1, "lines3 committee counts by every method", 1.0, [](detail::Log& log) {
    const TopeSet m = canonical("lines3");
    const KappaVector general = kappa_star(m, false);
    const KappaVector ring = kappa_star(m, true);
    log.expect(general == detail::kappa_of({1, 0, 3}, Variant::General), "brute general " + detail::vec_str(general));
    log.expect(ring == detail::kappa_of({1, 0, 1}, Variant::OppositeFree), "brute ring " + detail::vec_str(ring));
    for (int k = 1; k <= m.half_size(); ++k) {
      const std::string at = " at k=" + std::to_string(k);
      log.expect(count_committees_ie(m, k, Ell::K).value == general.at(k), "ie ell=k" + at);
      log.expect(count_committees_ie(m, k, Ell::Complement).value == general.at(k), "ie ell=|T|-k" + at);
      log.expect(count_committees_moebius(m, k).value == general.at(k), "moebius general" + at);
      log.expect(count_ring_ie(m, k).value == ring.at(k), "ie ring" + at);
      log.expect(count_ring_moebius(m, k).value == ring.at(k), "moebius ring" + at);
    }
  });
}

inline CriterionResult criterion_lines3_deltas() {
  return detail::timed(2, "lines3 reorientation deltas", 5.0, [](detail::Log& log) {
    const TopeSet m = canonical("lines3");
    const long long expected_a3[] = {-1, 0, -2};
    for (int k = 1; k <= 3; ++k) {
      const Integer d = delta_direct({m, 3, k, Variant::General}).value;
      log.expect(d == expected_a3[k - 1], "direct general a=3 k=" + std::to_string(k) + " gave " + d.str());
    }
    log.expect(delta_direct({m, 1, 3, Variant::OppositeFree}).value == 0, "direct ring a=1 k=3");
    for (int a = 1; a <= m.ground_size(); ++a)
      for (int k = 1; k <= m.half_size(); ++k)
        for (Variant v : {Variant::General, Variant::OppositeFree}) {
          const DeltaRequest req{m, a, k, v};
          const Integer direct = delta_direct(req).value;
          const std::string at = " a=" + std::to_string(a) + " k=" + std::to_string(k) + " " +
                                 std::string(variant_name(v));
          log.expect(delta_ie(req).value == direct, "ie" + at);
          log.expect(delta_moebius(req).value == direct, "moebius" + at);
        }
  });
}

inline CriterionResult criterion_identity_sweep() {
  return detail::timed(3, "corpus identities (expansion, k=2, acyclicity)", 60.0, [](detail::Log& log) {
    for (const auto& name : catalog_names()) {
      const TopeSet base = canonical(name);
      for (const auto& a : detail::all_element_sets(base.ground_size())) {
        const TopeSet m = reorient(base, a);
        const KappaVector general = kappa_star(m, false);
        const KappaVector ring = kappa_star(m, true);
        const std::string at = " on " + name + " reoriented on " + std::to_string(a.size()) + " elements";
        log.expect(expand_ring_to_general(ring, m.size()) == general, "expansion" + at);
        log.expect(general.at(2) == 0 && ring.at(2) == 0, "k=2 vanishes" + at);
        log.expect((general.at(1) == 1) == is_acyclic(m), "acyclicity" + at);
        if (general.at(1) == 0 && m.half_size() >= 3) log.expect(general.at(3) == ring.at(3), "k=3 agreement" + at);
      }
    }
  });
}

inline CriterionResult criterion_complement_reorientation() {
  return detail::timed(4, "complementary reorientations share committee counts", 120.0, [](detail::Log& log) {
    for (const char* name : {"lines3", "lines4"}) {
      const TopeSet m = canonical(name);
      for (const auto& a : detail::all_element_sets(m.ground_size())) {
        const auto rest = detail::complement_of(a, m.ground_size());
        const TopeSet left = reorient(m, a), right = reorient(m, rest);
        log.expect(kappa_star(left, false) == kappa_star(right, false), std::string("general on ") + name);
        log.expect(kappa_star(left, true) == kappa_star(right, true), std::string("ring on ") + name);
      }
    }
  });
}

/// k-sets meeting every h-subset of every positive halfspace, by listing the
/// family and testing each k-set against it.
inline std::set<Mask> blocking_k_sets(const TopeSet& m, int k) {
  const int n = m.size();
  const int h = (n - k + 1) / 2;
  std::vector<Mask> family;
  for (int e = 0; e < m.ground_size(); ++e) {
    Mask half = 0;
    for (int i = 0; i < n; ++i)
      if (m[i][e] == Sign::Plus) half |= Mask{1} << i;
    for (Mask s : k_subsets_of(half, h)) family.push_back(s);
  }
  std::set<Mask> out;
  for_each_k_subset(n, k, [&](Mask cand) {
    for (Mask f : family)
      if ((cand & f) == 0) return;
    out.insert(cand);
  });
  return out;
}

inline CriterionResult criterion_blocking_characterisation() {
  return detail::timed(5, "committees are the blocking k-sets", 0, [](detail::Log& log) {
    for (const char* name : {"lines3", "lines4"}) {
      const TopeSet m = canonical(name);
      for (int k = 1; k <= m.half_size(); ++k) {
        std::set<Mask> committees;
        for (const auto& c : committees_of_size(m, k, false)) committees.insert(c.members);
        log.expect(committees == blocking_k_sets(m, k),
                   std::string(name) + " k=" + std::to_string(k));
      }
    }
  });
}

inline std::vector<BLElement> random_antichain(std::mt19937_64& rng, int m, const Rational& r, int k) {
  const int min_rank = static_cast<int>(r.floor_times(k)) + 1;
  std::uniform_int_distribution<int> count_dist(0, 4);
  std::uniform_int_distribution<Mask> bits_dist(1, low_bits(2 * m));
  std::vector<BLElement> out;
  const int want = count_dist(rng);
  for (int attempt = 0; attempt < 64 && static_cast<int>(out.size()) < want; ++attempt) {
    const Mask x = bits_dist(rng);
    if (popcount(x) < min_rank) continue;
    bool comparable = false;
    for (const auto& y : out)
      if (is_subset(x, y.bits()) || is_subset(y.bits(), x)) comparable = true;
    if (!comparable) out.emplace_back(m, x);
  }
  return out;
}

inline CriterionResult criterion_boolean_lattice(std::uint64_t seed = 20261015, int cases = 240) {
  return detail::timed(6, "Boolean lattice identities and relative blocking", 120.0, [=](detail::Log& log) {
    for (int m = 1; m <= 4; ++m) {
      const int full = 2 * m;
      for (Mask w = 0; w < (Mask{1} << full); ++w) {
        const BLElement elem(m, w);
        int untouched = 0;
        for (int i = 0; i < m; ++i)
          if (((w >> i) & 1) == 0 && ((w >> (m + i)) & 1) == 0) ++untouched;
        const Mask closed = w | BLElement::negate_bits(m, w);
        const auto stats = opposite_pair_stats(elem);
        log.expect(full - elem.rank() - 2 * untouched == popcount(closed) - elem.rank(), "excess identity");
        log.expect(untouched == m - popcount(closed) / 2, "free pair identity");
        log.expect(stats.excess == popcount(closed) - elem.rank() && stats.free_pairs == untouched, "stats");
        for (int k = 0; k <= m; ++k) {
          long long brute = 0;
          for_each_k_subset(full, k, [&](Mask v) {
            if ((v & w) == 0 && (v & BLElement::negate_bits(m, v)) == 0) ++brute;
          });
          log.expect(count_disjoint_opposite_free(elem, k) == brute, "disjoint count m=" + std::to_string(m));
        }
      }
    }
    for (int m = 1; m <= 6; ++m)
      for (int k = 0; k <= m; ++k) {
        long long brute = 0;
        for_each_k_subset(2 * m, k, [&](Mask v) {
          if ((v & BLElement::negate_bits(m, v)) == 0) ++brute;
        });
        log.expect(crosspolytope_count(m, k) == brute, "crosspolytope m=" + std::to_string(m));
      }

    std::mt19937_64 rng(seed);
    const Rational thresholds[] = {Rational(0, 1), Rational(1, 3), Rational(1, 2)};
    for (int c = 0; c < cases; ++c) {
      const int m = std::uniform_int_distribution<int>(1, 4)(rng);
      const int k = std::uniform_int_distribution<int>(1, m)(rng);
      const Rational r = thresholds[c % 3];
      const auto lambda = random_antichain(rng, m, r, k);
      const Integer brute = relative_blocking_brute(m, r, k, lambda);
      const std::string at = "case " + std::to_string(c) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                             " r=" + r.str();
      log.expect(relative_blocking_ie(m, r, k, lambda).value == brute, "ie " + at);
      log.expect(relative_blocking_moebius(m, r, k, lambda).value == brute, "moebius " + at);
    }
  });
}

inline CriterionResult criterion_split_balance() {
  return detail::timed(7, "alpha/beta splits balance", 0, [](detail::Log& log) {
    const TopeSet m = canonical("lines3");
    const KappaVector general = kappa_star(m, false);
    const KappaVector ring = kappa_star(m, true);
    for (int a = 1; a <= m.ground_size(); ++a)
      for (int k = 1; k <= m.half_size(); ++k) {
        const std::string at = " a=" + std::to_string(a) + " k=" + std::to_string(k);
        for (Ell ell : {Ell::K, Ell::Complement})
          log.expect(alpha_split(m, a, k, ell).total() == general.at(k), "alpha" + at);
        log.expect(beta_split(m, a, k).total() == ring.at(k), "beta" + at);
      }
  });
}

inline CriterionResult criterion_pruning_soundness() {
  return detail::timed(8, "pruned and unpruned sums agree", 0, [](detail::Log& log) {
    const TopeSet m = canonical("lines3");
    const Pruning variants[] = {Pruning{}, Pruning{true, false}, Pruning{false, true}, Pruning::none()};
    for (int k = 1; k <= m.half_size(); ++k) {
      const std::string at = " k=" + std::to_string(k);
      const Integer ref_k = count_committees_ie(m, k, Ell::K, {}, Pruning::none()).value;
      const Integer ref_c = count_committees_ie(m, k, Ell::Complement, {}, Pruning::none()).value;
      const Integer ref_r = count_ring_ie(m, k, {}, Pruning::none()).value;
      for (const Pruning& p : variants) {
        log.expect(count_committees_ie(m, k, Ell::K, {}, p).value == ref_k, "ell=k" + at);
        log.expect(count_committees_ie(m, k, Ell::Complement, {}, p).value == ref_c, "ell=|T|-k" + at);
        log.expect(count_ring_ie(m, k, {}, p).value == ref_r, "ring" + at);
        for (int a = 1; a <= m.ground_size(); ++a)
          for (Variant v : {Variant::General, Variant::OppositeFree})
            log.expect(delta_ie({m, a, k, v}, {}, p).value == delta_ie({m, a, k, v}, {}, Pruning::none()).value,
                       "delta" + at);
      }
    }
  });
}

inline std::vector<CriterionResult> run_all() {
  return {criterion_lines3_counts(),          criterion_lines3_deltas(),
          criterion_identity_sweep(),         criterion_complement_reorientation(),
          criterion_blocking_characterisation(), criterion_boolean_lattice(),
          criterion_split_balance(),          criterion_pruning_soundness()};
}

/// Opposite-free committee counts next to the relative-blocking count for
/// the pairs of opposite topes as +-[1,m], r = 1/2 and the positive
/// halfspaces as the antichain. Reported, not asserted.
struct Correspondence {
  std::string instance;
  int k;
  Integer ring;
  Integer blocking;
};

inline std::vector<Correspondence> observe_blocking_correspondence() {
  std::vector<Correspondence> out;
  for (const char* name : {"lines3", "lines4", "lines5"}) {
    const TopeSet m = canonical(name);
    const int half = m.half_size();
    std::vector<BLElement> lambda;
    for (int e = 0; e < m.ground_size(); ++e) {
      Mask bits = 0;
      for (int i : indices_of(m.halfspace_mask(e, Sign::Plus)))
        bits |= i < half ? Mask{1} << i : Mask{1} << (half + (m.size() - 1 - i));
      lambda.emplace_back(half, bits);
    }
    const KappaVector ring = kappa_star(m, true);
    for (int k = 1; k <= half; ++k)
      out.push_back({name, k, ring.at(k), relative_blocking_brute(half, Rational(1, 2), k, lambda)});
  }
  return out;
}

}  // namespace omc::acceptance
