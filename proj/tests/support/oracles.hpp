#pragma once

// Test-only reference implementations. Everything here works on plain
// integer containers and point sets and shares no code with the library's
// word-packed engines.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Point = std::uint64_t;
using PointSet = std::vector<Point>;  // sorted

inline int bit(Point x, int i) { return static_cast<int>((x >> i) & 1U); }

// Rank by Gaussian elimination on an int matrix.
inline int naive_rank(std::vector<std::vector<int>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c] != 0) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline std::vector<std::vector<int>> to_int_matrix(const std::vector<Point>& rows, int ncols) {
  std::vector<std::vector<int>> out;
  for (Point r : rows) {
    std::vector<int> row(static_cast<std::size_t>(ncols));
    for (int j = 0; j < ncols; ++j) row[static_cast<std::size_t>(j)] = bit(r, j);
    out.push_back(row);
  }
  return out;
}

inline std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& a, int ncols) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(ncols), std::vector<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < ncols; ++j) t[static_cast<std::size_t>(j)][i] = a[i][static_cast<std::size_t>(j)];
  }
  return t;
}

// Span of a list of vectors as a sorted point set.
inline PointSet span(const std::vector<Point>& gens) {
  std::set<Point> pts{0};
  for (Point g : gens) {
    std::set<Point> next = pts;
    for (Point p : pts) next.insert(p ^ g);
    pts = std::move(next);
  }
  return PointSet(pts.begin(), pts.end());
}

// All k-subspaces of F_2^n as point sets, found by spanning every k-tuple.
inline std::set<PointSet> all_subspaces(int n, int k) {
  std::set<PointSet> out;
  const Point size = Point{1} << n;
  std::vector<Point> tuple(static_cast<std::size_t>(k), 0);
  for (;;) {
    PointSet s = span(tuple);
    if (s.size() == (std::size_t{1} << k)) out.insert(std::move(s));
    int i = 0;
    for (; i < k; ++i) {
      auto& t = tuple[static_cast<std::size_t>(i)];
      if (++t < size) break;
      t = 0;
    }
    if (i == k) break;
  }
  return out;
}

// All k-flats of F_2^n as point sets.
inline std::set<PointSet> all_flats(int n, int k) {
  std::set<PointSet> out;
  for (const auto& u : all_subspaces(n, k)) {
    for (Point a = 0; a < (Point{1} << n); ++a) {
      PointSet f;
      for (Point p : u) f.push_back(p ^ a);
      std::sort(f.begin(), f.end());
      out.insert(std::move(f));
    }
  }
  return out;
}

// ANF evaluation straight from the definition.
inline int eval_anf(const std::vector<Point>& masks, Point x) {
  int v = 0;
  for (Point m : masks) v ^= ((x & m) == m) ? 1 : 0;
  return v;
}

inline int dot(Point a, Point b) {
  int v = 0;
  for (Point x = a & b; x != 0; x &= x - 1) v ^= 1;
  return v;
}

// Walsh coefficient from the defining character sum.
inline std::int64_t walsh_by_definition(const std::vector<int>& table, Point a) {
  std::int64_t s = 0;
  for (Point x = 0; x < table.size(); ++x) s += ((table[x] ^ dot(x, a)) != 0) ? -1 : 1;
  return s;
}

// XOR of a value table over a point set.
inline std::uint32_t sum_over(const std::vector<std::uint32_t>& values, const PointSet& pts) {
  std::uint32_t acc = 0;
  for (Point p : pts) acc ^= values[p];
  return acc;
}

// Exact count of nonvanishing k-subspaces and k-flats by point-set
// enumeration. Only for tiny n.
struct Counts {
  std::uint64_t subspaces = 0;
  std::uint64_t flats = 0;
};

inline Counts count_by_point_sets(const std::vector<std::uint32_t>& values, int n, int k) {
  Counts c;
  for (const auto& u : all_subspaces(n, k)) {
    if (sum_over(values, u) != 0) ++c.subspaces;
  }
  for (const auto& f : all_flats(n, k)) {
    if (sum_over(values, f) != 0) ++c.flats;
  }
  return c;
}

// Random k-homogeneous ANF masks in n variables (possibly empty).
inline std::vector<Point> random_homogeneous(int n, int k, std::mt19937_64& rng, double density = 0.5) {
  std::vector<Point> masks;
  std::bernoulli_distribution coin(density);
  for (Point m = 0; m < (Point{1} << n); ++m) {
    if (__builtin_popcountll(m) == k && coin(rng)) masks.push_back(m);
  }
  return masks;
}

}  // namespace oracle
