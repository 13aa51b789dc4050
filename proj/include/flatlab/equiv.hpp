#pragma once

// Degree-r equivalence G = M o F o L + R with affine permutations L, M and
// deg(R) <= r. r = 1 is EA-equivalence.

#include <cstdint>

#include "flatlab/f2linalg.hpp"
#include "flatlab/vecfun.hpp"

namespace flatlab {

struct AffinePermutation {
  F2Matrix linear;  // invertible, n x n
  BitVector offset;

  static AffinePermutation identity(int n);
  int dim() const { return linear.ncols(); }
  Word operator()(Word x) const;
};

struct DegreeREquivalence {
  AffinePermutation inner;  // L
  AffinePermutation outer;  // M
  VectorialFn addend;       // R
  int r = 0;

  // Throws UsageError if deg(addend) > r or a linear part is singular.
  void validate() const;
};

// Rejection-sampled invertible linear part plus uniform offset, reproducible
// per seed.
AffinePermutation random_affine_permutation(int n, std::uint64_t seed);
// Random (n,m)-function with every term of degree <= r (constant included).
VectorialFn random_function_of_degree(int n, int m, int r, std::uint64_t seed);
DegreeREquivalence random_degree_r_equivalence(int n, int m, int r, std::uint64_t seed);

VectorialFn apply_equivalence(const VectorialFn& f, const DegreeREquivalence& e);

// (L^{-1})^T. Throws UsageError if l is singular.
F2Matrix complement_transport(const F2Matrix& l);

}  // namespace flatlab
