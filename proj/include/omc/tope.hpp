#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omc/bits.hpp"
#include "omc/error.hpp"

namespace omc {

inline constexpr int kMaxGroundSize = 64;
inline constexpr int kMaxTopes = 64;

enum class Sign { Minus, Plus };

constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// A full sign vector over {+,-}^t. Coordinate e (0-based) is bit e of the
/// packed word, set for '+'.
class Tope {
 public:
  constexpr Tope() = default;
  constexpr Tope(Mask plus_bits, int size) : plus_(plus_bits & low_bits(size)), size_(size) {}

  static Tope parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxGroundSize))
      throw Error(ErrorKind::ScaleExceeded, "tope longer than " + std::to_string(kMaxGroundSize));
    Mask bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+')
        bits |= Mask{1} << i;
      else if (text[i] != '-')
        throw Error(ErrorKind::BadSymbol, "unexpected symbol '" + std::string(1, text[i]) +
                                              "' at column " + std::to_string(i + 1));
    }
    return Tope(bits, static_cast<int>(text.size()));
  }

  constexpr int size() const { return size_; }
  constexpr Mask plus_bits() const { return plus_; }

  constexpr Sign operator[](int e) const { return ((plus_ >> e) & 1) != 0 ? Sign::Plus : Sign::Minus; }

  constexpr Tope operator-() const { return Tope(~plus_, size_); }

  /// Flips the coordinates selected by `elements` (0-based ground mask).
  constexpr Tope flipped(Mask elements) const { return Tope(plus_ ^ elements, size_); }

  constexpr bool all_plus() const { return plus_ == low_bits(size_); }

  std::string str() const {
    std::string s(static_cast<std::size_t>(size_), '-');
    for (int e = 0; e < size_; ++e)
      if ((plus_ >> e) & 1) s[static_cast<std::size_t>(e)] = '+';
    return s;
  }

  friend constexpr bool operator==(const Tope&, const Tope&) = default;

  /// Canonical order: lexicographic by coordinate, '-' before '+'.
  friend constexpr bool operator<(const Tope& a, const Tope& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    const Mask diff = a.plus_ ^ b.plus_;
    if (diff == 0) return false;
    return (a.plus_ & diff & (~diff + 1)) == 0;
  }

 private:
  Mask plus_ = 0;
  int size_ = 0;
};

/// The tope set of a simple oriented matroid: symmetric, duplicate free and
/// without parallel or antiparallel elements. Topes are kept in canonical
/// order, so tope i and tope size()-1-i are opposites.
class TopeSet {
 public:
  /// Validates and canonicalises; `rows` are reported 1-based in input order.
  static TopeSet from_topes(int ground_size, std::vector<Tope> rows) {
    if (rows.empty()) throw Error(ErrorKind::EmptyInput, "no topes given");
    if (ground_size < 1 || ground_size > kMaxGroundSize)
      throw Error(ErrorKind::ScaleExceeded, "ground size must lie in 1.." + std::to_string(kMaxGroundSize));
    if (rows.size() > static_cast<std::size_t>(kMaxTopes))
      throw Error(ErrorKind::ScaleExceeded, "more than " + std::to_string(kMaxTopes) + " topes");

    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return rows[x] < rows[y]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (rows[order[i]] == rows[order[i - 1]]) {
        const auto [first, second] = std::minmax(order[i - 1], order[i]);
        throw Error(ErrorKind::Duplicate, "rows " + std::to_string(first + 1) + " and " +
                                              std::to_string(second + 1) + " are both " +
                                              rows[order[i]].str());
      }
    }
    std::vector<Tope> sorted;
    sorted.reserve(rows.size());
    for (std::size_t i : order) sorted.push_back(rows[i]);

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!std::binary_search(sorted.begin(), sorted.end(), -rows[i]))
        throw Error(ErrorKind::NotSymmetric, "row " + std::to_string(i + 1) + " (" + rows[i].str() +
                                                 ") has no opposite " + (-rows[i]).str());
    }

    // Column e as a mask over canonical tope positions.
    std::vector<Mask> columns(static_cast<std::size_t>(ground_size), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (int e = 0; e < ground_size; ++e)
        if (sorted[i][e] == Sign::Plus) columns[static_cast<std::size_t>(e)] |= Mask{1} << i;
    const Mask full = low_bits(static_cast<int>(sorted.size()));
    for (int e = 0; e < ground_size; ++e) {
      for (int f = e + 1; f < ground_size; ++f) {
        const Mask ce = columns[static_cast<std::size_t>(e)];
        const Mask cf = columns[static_cast<std::size_t>(f)];
        if (ce == cf || ce == (~cf & full))
          throw Error(ErrorKind::ParallelElements,
                      "columns " + std::to_string(e + 1) + " and " + std::to_string(f + 1) + " are " +
                          (ce == cf ? "parallel" : "antiparallel"));
      }
    }
    return TopeSet(ground_size, std::move(sorted), std::move(columns));
  }

  int ground_size() const { return ground_size_; }
  int size() const { return static_cast<int>(topes_.size()); }
  int half_size() const { return size() / 2; }
  const std::vector<Tope>& topes() const { return topes_; }
  const Tope& operator[](int i) const { return topes_[static_cast<std::size_t>(i)]; }

  Mask all() const { return low_bits(size()); }

  std::optional<int> index_of(const Tope& tope) const {
    auto it = std::lower_bound(topes_.begin(), topes_.end(), tope);
    if (it == topes_.end() || !(*it == tope)) return std::nullopt;
    return static_cast<int>(it - topes_.begin());
  }

  /// Opposite of a subset of topes, given as a mask over canonical positions.
  Mask negate(Mask subset) const { return reverse_bits(subset) >> (64 - size()); }

  /// Topes with sign `s` at the 0-based element e.
  Mask halfspace_mask(int e, Sign s) const {
    const Mask plus = columns_[static_cast<std::size_t>(e)];
    return s == Sign::Plus ? plus : (~plus & all());
  }

  std::vector<Tope> topes_of(Mask subset) const {
    std::vector<Tope> out;
    for (int i : indices_of(subset & all())) out.push_back(topes_[static_cast<std::size_t>(i)]);
    return out;
  }

  Mask mask_of(std::span<const Tope> subset) const {
    Mask m = 0;
    for (const Tope& t : subset) {
      auto i = index_of(t);
      if (!i) throw Error(ErrorKind::NotSubset, "tope " + t.str() + " is not in the tope set");
      m |= Mask{1} << *i;
    }
    return m;
  }

  friend bool operator==(const TopeSet& a, const TopeSet& b) {
    return a.ground_size_ == b.ground_size_ && a.topes_ == b.topes_;
  }

 private:
  TopeSet(int ground_size, std::vector<Tope> topes, std::vector<Mask> columns)
      : ground_size_(ground_size), topes_(std::move(topes)), columns_(std::move(columns)) {}

  int ground_size_;
  std::vector<Tope> topes_;
  std::vector<Mask> columns_;
};

/// Parses and validates a list of sign strings. Errors name the offending
/// row (1-based, input order) or column.
inline TopeSet validate_tope_set(std::span<const std::string> raw) {
  if (raw.empty()) throw Error(ErrorKind::EmptyInput, "no topes given");
  const std::size_t width = raw.front().size();
  if (width == 0) throw Error(ErrorKind::EmptyInput, "row 1 is empty");
  std::vector<Tope> rows;
  rows.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != width)
      throw Error(ErrorKind::RaggedInput, "row " + std::to_string(i + 1) + " has length " +
                                              std::to_string(raw[i].size()) + ", expected " +
                                              std::to_string(width));
    try {
      rows.push_back(Tope::parse(raw[i]));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::BadSymbol) throw;
      throw Error(ErrorKind::BadSymbol, "row " + std::to_string(i + 1) + ": " + err.what());
    }
  }
  return TopeSet::from_topes(static_cast<int>(width), std::move(rows));
}

struct Halfspace {
  int element;  // 1-based
  Sign sign;
  Mask members;
};

inline void check_element(const TopeSet& m, int e) {
  if (e < 1 || e > m.ground_size())
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(e) + " outside 1.." +
                                                std::to_string(m.ground_size()));
}

/// Halfspace of the 1-based element e.
inline Halfspace halfspace(const TopeSet& m, int e, Sign s) {
  check_element(m, e);
  return Halfspace{e, s, m.halfspace_mask(e - 1, s)};
}

inline std::vector<Tope> negate_set(std::span<const Tope> g) {
  std::vector<Tope> out;
  out.reserve(g.size());
  for (const Tope& t : g) out.push_back(-t);
  std::sort(out.begin(), out.end());
  return out;
}

/// Converts 1-based element indices to a 0-based ground mask.
inline Mask ground_mask(const TopeSet& m, std::span<const int> elements) {
  Mask a = 0;
  for (int e : elements) {
    check_element(m, e);
    a |= Mask{1} << (e - 1);
  }
  return a;
}

inline TopeSet reorient_mask(const TopeSet& m, Mask elements) {
  std::vector<Tope> flipped;
  flipped.reserve(m.topes().size());
  for (const Tope& t : m.topes()) flipped.push_back(t.flipped(elements));
  return TopeSet::from_topes(m.ground_size(), std::move(flipped));
}

/// Reorientation on the 1-based element set `elements`.
inline TopeSet reorient(const TopeSet& m, std::span<const int> elements) {
  return reorient_mask(m, ground_mask(m, elements));
}

inline bool is_acyclic(const TopeSet& m) {
  return m.index_of(Tope(low_bits(m.ground_size()), m.ground_size())).has_value();
}

}  // namespace omc
