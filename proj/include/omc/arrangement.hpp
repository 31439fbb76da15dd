#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "omc/integer.hpp"
#include "omc/tope.hpp"

namespace omc {

inline constexpr int kMaxArrangementDim = 4;
inline constexpr int kMaxArrangementSize = 8;

/// A central hyperplane arrangement given by integer normal vectors.
struct Arrangement {
  int dim = 0;
  std::vector<std::vector<long long>> normals;

  int size() const { return static_cast<int>(normals.size()); }
};

/// Rejects zero normals and proportional (parallel or antiparallel) pairs.
inline void check_arrangement(const Arrangement& arr) {
  if (arr.dim < 1) throw Error(ErrorKind::DegenerateNormals, "dimension must be positive");
  if (arr.normals.empty()) throw Error(ErrorKind::EmptyInput, "no normals given");
  for (std::size_t i = 0; i < arr.normals.size(); ++i) {
    const auto& n = arr.normals[i];
    if (static_cast<int>(n.size()) != arr.dim)
      throw Error(ErrorKind::RaggedInput, "normal " + std::to_string(i + 1) + " has " + std::to_string(n.size()) +
                                              " entries, expected " + std::to_string(arr.dim));
    if (std::all_of(n.begin(), n.end(), [](long long x) { return x == 0; }))
      throw Error(ErrorKind::DegenerateNormals, "normal " + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t i = 0; i < arr.normals.size(); ++i)
    for (std::size_t j = i + 1; j < arr.normals.size(); ++j) {
      const auto& a = arr.normals[i];
      const auto& b = arr.normals[j];
      bool proportional = true;
      for (int p = 0; p < arr.dim && proportional; ++p)
        for (int q = p + 1; q < arr.dim && proportional; ++q)
          if (Integer(a[p]) * b[q] != Integer(a[q]) * b[p]) proportional = false;
      if (proportional)
        throw Error(ErrorKind::DegenerateNormals,
                    "normals " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are proportional");
    }
}

namespace detail {

using Row = std::vector<Integer>;

inline void normalize(Row& row) {
  Integer g = 0;
  for (const Integer& x : row) g = gcd(g, abs(x));
  if (g > 1)
    for (Integer& x : row) x /= g;
}

inline bool is_zero(const Row& row) {
  return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace detail

/// Fourier-Motzkin elimination for the homogeneous strict system
/// rows[i] . x > 0. Combinations use positive multipliers, so strictness is
/// kept; a row reduced to all zeros reads 0 > 0 and proves infeasibility.
inline bool strictly_feasible(std::vector<std::vector<Integer>> rows, int dim) {
  for (auto& r : rows) {
    if (detail::is_zero(r)) return false;
    detail::normalize(r);
  }
  for (int var = dim - 1; var >= 0; --var) {
    std::vector<detail::Row> pos, neg, next;
    for (auto& r : rows) {
      const int s = r[static_cast<std::size_t>(var)].sign();
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Integer cp = p[static_cast<std::size_t>(var)];
        const Integer cq = -q[static_cast<std::size_t>(var)];
        detail::Row combo(p.size());
        for (std::size_t c = 0; c < p.size(); ++c) combo[c] = cq * p[c] + cp * q[c];
        if (detail::is_zero(combo)) return false;
        detail::normalize(combo);
        next.push_back(std::move(combo));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows = std::move(next);
  }
  return rows.empty();
}

/// Sign vectors of the open cones of a central arrangement, each decided by
/// exact strict feasibility.
inline TopeSet topes_of_arrangement(const Arrangement& arr) {
  check_arrangement(arr);
  if (arr.dim > kMaxArrangementDim || arr.size() > kMaxArrangementSize)
    throw Error(ErrorKind::ScaleExceeded, "arrangement limited to d <= " + std::to_string(kMaxArrangementDim) +
                                              ", t <= " + std::to_string(kMaxArrangementSize));
  const int t = arr.size();
  std::vector<Tope> topes;
  for (Mask sigma = 0; sigma < (Mask{1} << t); ++sigma) {
    std::vector<std::vector<Integer>> rows;
    for (int e = 0; e < t; ++e) {
      std::vector<Integer> row;
      const bool plus = ((sigma >> e) & 1) != 0;
      for (long long x : arr.normals[static_cast<std::size_t>(e)]) row.emplace_back(plus ? x : -x);
      rows.push_back(std::move(row));
    }
    if (strictly_feasible(std::move(rows), arr.dim)) topes.emplace_back(sigma, t);
  }
  return TopeSet::from_topes(t, std::move(topes));
}

namespace detail {

struct Vec2 {
  Integer x, y;
};

inline int half_plane(const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

inline Integer cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace detail

/// Planar arrangements: sorts the 2t directions along the lines by angle and
/// samples one direction strictly inside each sector.
inline TopeSet topes_of_planar_arrangement(const Arrangement& arr) {
  if (arr.dim != 2) throw Error(ErrorKind::DegenerateNormals, "angular sweep needs d = 2");
  check_arrangement(arr);
  const int t = arr.size();
  if (2 * t > kMaxTopes) throw Error(ErrorKind::ScaleExceeded, "too many lines");
  using detail::Vec2;
  std::vector<Vec2> dirs;
  for (const auto& n : arr.normals) {
    dirs.push_back(Vec2{Integer(-n[1]), Integer(n[0])});
    dirs.push_back(Vec2{Integer(n[1]), Integer(-n[0])});
  }
  std::sort(dirs.begin(), dirs.end(), [](const Vec2& a, const Vec2& b) {
    const int ha = detail::half_plane(a), hb = detail::half_plane(b);
    if (ha != hb) return ha < hb;
    return detail::cross(a, b) > 0;
  });
  std::vector<Tope> topes;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vec2& u = dirs[i];
    const Vec2& v = dirs[(i + 1) % dirs.size()];
    // With a single line the two directions are opposite; rotate instead.
    const Vec2 w = t == 1 ? Vec2{-u.y, u.x} : Vec2{u.x + v.x, u.y + v.y};
    Mask sigma = 0;
    for (int e = 0; e < t; ++e) {
      const auto& n = arr.normals[static_cast<std::size_t>(e)];
      if (n[0] * w.x + n[1] * w.y > 0) sigma |= Mask{1} << e;
    }
    topes.emplace_back(sigma, t);
  }
  return TopeSet::from_topes(t, std::move(topes));
}

}  // namespace omc
