#include "flatlab/equiv.hpp"

#include <bit>
#include <random>
#include <utility>

#include "flatlab/errors.hpp"

namespace flatlab {

AffinePermutation AffinePermutation::identity(int n) {
  return {F2Matrix::identity(n), BitVector::zero(n)};
}

Word AffinePermutation::operator()(Word x) const {
  Word out = offset.word();
  const auto& rows = linear.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out ^= static_cast<Word>(parity(rows[i].word() & x)) << i;
  }
  return out;
}

void DegreeREquivalence::validate() const {
  if (rank(inner.linear) != inner.dim() || inner.linear.nrows() != inner.dim()) {
    throw UsageError("inner map is not a permutation");
  }
  if (rank(outer.linear) != outer.dim() || outer.linear.nrows() != outer.dim()) {
    throw UsageError("outer map is not a permutation");
  }
  if (algebraic_degree(addend) > r) throw UsageError("addend degree exceeds r");
}

AffinePermutation random_affine_permutation(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxBits) throw UsageError("affine permutation dimension must be in 1..64");
  std::mt19937_64 rng(seed);
  const Word mask = low_mask(n);
  for (;;) {
    std::vector<Word> rows(static_cast<std::size_t>(n));
    for (auto& r : rows) r = rng() & mask;
    F2Matrix m = F2Matrix::from_words(n, rows);
    if (rank(m) == n) return {std::move(m), BitVector(n, rng() & mask)};
  }
}

VectorialFn random_function_of_degree(int n, int m, int r, std::uint64_t seed) {
  if (n > kMaxTableN) throw CapacityError("random functions are limited to n <= 24");
  std::mt19937_64 rng(seed);
  std::vector<AnfPoly> coords;
  for (int j = 0; j < m; ++j) {
    std::vector<Word> masks;
    for (Word mask = 0; mask < (Word{1} << n); ++mask) {
      if (std::popcount(mask) <= r && (rng() & 1U)) masks.push_back(mask);
    }
    coords.emplace_back(n, std::move(masks));
  }
  return VectorialFn(std::move(coords));
}

DegreeREquivalence random_degree_r_equivalence(int n, int m, int r, std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  std::uint64_t seeds[3];
  seq.generate(seeds, seeds + 3);
  DegreeREquivalence e{random_affine_permutation(n, seeds[0]), random_affine_permutation(m, seeds[1]),
                       random_function_of_degree(n, m, r, seeds[2]), r};
  return e;
}

VectorialFn apply_equivalence(const VectorialFn& f, const DegreeREquivalence& e) {
  e.validate();
  if (e.inner.dim() != f.n() || e.outer.dim() != f.m() || e.addend.n() != f.n() || e.addend.m() != f.m()) {
    throw UsageError("equivalence dimensions do not match the function");
  }
  const auto values = f.values();
  const auto extra = e.addend.values();
  std::vector<std::uint32_t> out(values.size());
  for (Word x = 0; x < values.size(); ++x) {
    out[x] = static_cast<std::uint32_t>(e.outer(values[e.inner(x)])) ^ extra[x];
  }
  return VectorialFn::from_values(f.n(), f.m(), std::move(out));
}

F2Matrix complement_transport(const F2Matrix& l) { return transpose(inverse(l)); }

}  // namespace flatlab
