#pragma once

// Vectorial (n,m)-functions. Coordinate j is output bit j-1; tables are built
// once at construction so values can be shared freely across threads.

#include <cstdint>
#include <span>
#include <vector>

#include "flatlab/boolfun.hpp"
#include "flatlab/f2linalg.hpp"

namespace flatlab {

inline constexpr int kMaxOutputs = 32;

class VectorialFn {
 public:
  VectorialFn() = default;
  // All coordinates must share n; 1 <= m <= 32 and n <= 24.
  explicit VectorialFn(std::vector<AnfPoly> coords);
  // Build from the packed value table (entry x holds F(x) in its low m bits).
  static VectorialFn from_values(int n, int m, std::vector<std::uint32_t> values);
  static VectorialFn boolean(const AnfPoly& f) { return VectorialFn({f}); }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<AnfPoly>& coords() const { return coords_; }
  const AnfPoly& coord(int j) const { return coords_.at(static_cast<std::size_t>(j)); }
  const TruthTable& table(int j) const { return tables_.at(static_cast<std::size_t>(j)); }
  std::span<const std::uint32_t> values() const { return values_; }

  std::uint32_t operator()(Word x) const { return values_[x]; }

  friend bool operator==(const VectorialFn& a, const VectorialFn& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.coords_ == b.coords_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<AnfPoly> coords_;
  std::vector<TruthTable> tables_;
  std::vector<std::uint32_t> values_;
};

BitVector evaluate(const VectorialFn& f, const BitVector& x);
// XOR of F over the given points; the empty set sums to 0.
BitVector set_sum(const VectorialFn& f, std::span<const Word> points);

int algebraic_degree(const VectorialFn& f);
bool is_zero(const VectorialFn& f);
// Every coordinate is k-homogeneous or zero.
bool is_homogeneous(const VectorialFn& f, int k);

// f_b = <b, F>; b = 0 gives the zero function.
AnfPoly component(const VectorialFn& f, const BitVector& b);
// Component truth table for the packed output mask b.
TruthTable component_table(const VectorialFn& f, std::uint32_t b);

// D_a F(x) = F(x) + F(x+a) + F(a) + F(0).
VectorialFn derivative(const VectorialFn& f, const BitVector& a);
// D_{a_l} ... D_{a_1} F, applied in the listed order.
VectorialFn higher_derivative(const VectorialFn& f, std::span<const BitVector> directions);

VectorialFn homogeneous_part(const VectorialFn& f, int k);
VectorialFn strip_below(const VectorialFn& f, int k);
// Coordinate-wise complement_function.
VectorialFn vect_complement(const VectorialFn& f);

VectorialFn operator+(const VectorialFn& a, const VectorialFn& b);

// Coordinates joined by "; ".
std::string to_string(const VectorialFn& f);

}  // namespace flatlab
