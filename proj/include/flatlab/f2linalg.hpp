#pragma once

// Word-packed linear algebra over F2.
//
// Coordinate x_i of F_2^n lives in bit i-1 of a 64-bit word, so a vector,
// a monomial mask and a truth-table index are the same integer.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatlab {

using Word = std::uint64_t;

inline constexpr int kMaxBits = 64;

constexpr Word low_mask(int bits) {
  return bits >= 64 ? ~Word{0} : ((Word{1} << bits) - 1);
}

constexpr int parity(Word w) { return std::popcount(w) & 1; }

// An element of F_2^n, n <= 64. Bits at positions >= length are always zero.
class BitVector {
 public:
  constexpr BitVector() = default;
  // Throws UsageError if length is outside 0..64 or word has bits above it.
  BitVector(int length, Word word);

  static BitVector zero(int length) { return BitVector(length, 0); }
  static BitVector unit(int length, int index);
  // Parses a coordinate string "x1x2...xn", e.g. "1010" is x1 = x3 = 1.
  static BitVector from_string(std::string_view bits);

  constexpr int length() const { return length_; }
  constexpr Word word() const { return word_; }

  bool test(int index) const;
  BitVector with(int index, bool value) const;
  int weight() const { return std::popcount(word_); }
  bool is_zero() const { return word_ == 0; }
  int dot(const BitVector& other) const { return parity(word_ & other.word_); }

  BitVector operator^(const BitVector& other) const;
  BitVector& operator^=(const BitVector& other);

  // x1 first, matching from_string.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  int length_ = 0;
  Word word_ = 0;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(int ncols) : ncols_(ncols) {}
  // All rows must have length ncols.
  F2Matrix(int ncols, std::vector<BitVector> rows);
  // Rows given as raw words; bits above ncols must be clear.
  static F2Matrix from_words(int ncols, std::span<const Word> rows);
  static F2Matrix identity(int n);
  static F2Matrix zero(int nrows, int ncols);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<BitVector>& rows() const { return rows_; }
  const BitVector& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  bool at(int r, int c) const { return row(r).test(c); }
  std::vector<Word> words() const;

  void append_row(const BitVector& row);

  // M * v with v a column vector of length ncols.
  BitVector apply(const BitVector& v) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  int ncols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  F2Matrix matrix;          // zero rows removed
  std::vector<int> pivots;  // 0-based pivot column per row, increasing
};

RrefResult rref(const F2Matrix& m);
int rank(const F2Matrix& m);
// RREF basis of {v : M v = 0}; ncols(M) - rank(M) rows.
F2Matrix kernel_basis(const F2Matrix& m);
// Columns listed in `columns` (0-based), taken in increasing order.
F2Matrix select_columns(const F2Matrix& m, std::span<const int> columns);
F2Matrix transpose(const F2Matrix& m);
F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);
// Throws UsageError if m is not square and invertible.
F2Matrix inverse(const F2Matrix& m);

// Rank of the given rows viewed as vectors; the words are consumed as scratch.
int rank_in_place(std::span<Word> rows);

// True iff the rows restricted to `columns` are linearly independent.
// Equivalent to rank(select_columns(M, columns)) == rows.size() but works on
// raw words. Requires rows.size() <= 64.
bool rows_independent_on(std::span<const Word> rows, Word columns);

}  // namespace flatlab
