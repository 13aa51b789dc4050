#include "flatlab/f2linalg.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "flatlab/errors.hpp"

namespace flatlab {

BitVector::BitVector(int length, Word word) : length_(length), word_(word) {
  if (length < 0 || length > kMaxBits) {
    throw UsageError("BitVector length must be in 0..64, got " + std::to_string(length));
  }
  if ((word & ~low_mask(length)) != 0) {
    throw UsageError("BitVector word has bits above its length");
  }
}

BitVector BitVector::unit(int length, int index) {
  if (index < 0 || index >= length) {
    throw UsageError("unit vector index out of range");
  }
  return BitVector(length, Word{1} << index);
}

BitVector BitVector::from_string(std::string_view bits) {
  if (bits.size() > kMaxBits) throw UsageError("bit string longer than 64");
  Word w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w |= Word{1} << i;
    } else if (bits[i] != '0') {
      throw UsageError("bit string may only contain 0 and 1");
    }
  }
  return BitVector(static_cast<int>(bits.size()), w);
}

bool BitVector::test(int index) const {
  if (index < 0 || index >= length_) throw UsageError("bit index out of range");
  return ((word_ >> index) & 1U) != 0;
}

BitVector BitVector::with(int index, bool value) const {
  if (index < 0 || index >= length_) throw UsageError("bit index out of range");
  Word w = value ? (word_ | (Word{1} << index)) : (word_ & ~(Word{1} << index));
  return BitVector(length_, w);
}

BitVector BitVector::operator^(const BitVector& other) const {
  BitVector r = *this;
  r ^= other;
  return r;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw UsageError("BitVector length mismatch");
  word_ ^= other.word_;
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((word_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

F2Matrix::F2Matrix(int ncols, std::vector<BitVector> rows) : ncols_(ncols), rows_(std::move(rows)) {
  if (ncols < 0 || ncols > kMaxBits) throw UsageError("matrix width must be in 0..64");
  for (const auto& r : rows_) {
    if (r.length() != ncols) throw UsageError("matrix row length differs from ncols");
  }
}

F2Matrix F2Matrix::from_words(int ncols, std::span<const Word> rows) {
  std::vector<BitVector> out;
  out.reserve(rows.size());
  for (Word w : rows) out.emplace_back(ncols, w);
  return F2Matrix(ncols, std::move(out));
}

F2Matrix F2Matrix::identity(int n) {
  std::vector<BitVector> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows.push_back(BitVector::unit(n, i));
  return F2Matrix(n, std::move(rows));
}

F2Matrix F2Matrix::zero(int nrows, int ncols) {
  return F2Matrix(ncols, std::vector<BitVector>(static_cast<std::size_t>(nrows), BitVector::zero(ncols)));
}

std::vector<Word> F2Matrix::words() const {
  std::vector<Word> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.word());
  return out;
}

void F2Matrix::append_row(const BitVector& row) {
  if (row.length() != ncols_) throw UsageError("matrix row length differs from ncols");
  rows_.push_back(row);
}

BitVector F2Matrix::apply(const BitVector& v) const {
  if (v.length() != ncols_) throw UsageError("matrix-vector dimension mismatch");
  Word out = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out |= static_cast<Word>(rows_[i].dot(v)) << i;
  }
  return BitVector(nrows(), out);
}

RrefResult rref(const F2Matrix& m) {
  std::vector<Word> rows = m.words();
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < m.ncols() && next < rows.size(); ++col) {
    const Word bit = Word{1} << col;
    std::size_t found = next;
    while (found < rows.size() && (rows[found] & bit) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r] & bit) != 0) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return {F2Matrix::from_words(m.ncols(), rows), std::move(pivots)};
}

int rank(const F2Matrix& m) {
  std::vector<Word> rows = m.words();
  return rank_in_place(rows);
}

F2Matrix kernel_basis(const F2Matrix& m) {
  const RrefResult r = rref(m);
  Word pivot_mask = 0;
  for (int p : r.pivots) pivot_mask |= Word{1} << p;
  std::vector<Word> basis;
  for (int col = 0; col < m.ncols(); ++col) {
    if ((pivot_mask >> col) & 1U) continue;
    Word v = Word{1} << col;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      if (r.matrix.rows()[i].word() >> col & 1U) v |= Word{1} << r.pivots[i];
    }
    basis.push_back(v);
  }
  return rref(F2Matrix::from_words(m.ncols(), basis)).matrix;
}

F2Matrix select_columns(const F2Matrix& m, std::span<const int> columns) {
  std::vector<int> cols(columns.begin(), columns.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (int c : cols) {
    if (c < 0 || c >= m.ncols()) {
      throw UsageError("select_columns: column " + std::to_string(c) + " out of range");
    }
  }
  const int width = static_cast<int>(cols.size());
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(m.nrows()));
  for (const auto& row : m.rows()) {
    Word w = 0;
    for (int j = 0; j < width; ++j) {
      w |= ((row.word() >> cols[static_cast<std::size_t>(j)]) & 1U) << j;
    }
    out.push_back(w);
  }
  return F2Matrix::from_words(width, out);
}

F2Matrix transpose(const F2Matrix& m) {
  if (m.nrows() > kMaxBits) throw UsageError("transpose: more than 64 rows");
  std::vector<Word> out(static_cast<std::size_t>(m.ncols()), 0);
  for (int r = 0; r < m.nrows(); ++r) {
    const Word w = m.rows()[static_cast<std::size_t>(r)].word();
    for (int c = 0; c < m.ncols(); ++c) {
      if ((w >> c) & 1U) out[static_cast<std::size_t>(c)] |= Word{1} << r;
    }
  }
  return F2Matrix::from_words(m.nrows(), out);
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
  if (a.ncols() != b.nrows()) throw UsageError("multiply: inner dimensions differ");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(a.nrows()));
  for (const auto& row : a.rows()) {
    Word acc = 0;
    for (int j = 0; j < a.ncols(); ++j) {
      if ((row.word() >> j) & 1U) acc ^= b.rows()[static_cast<std::size_t>(j)].word();
    }
    out.push_back(acc);
  }
  return F2Matrix::from_words(b.ncols(), out);
}

F2Matrix inverse(const F2Matrix& m) {
  const int n = m.nrows();
  if (n != m.ncols()) throw UsageError("inverse: matrix is not square");
  std::vector<Word> left = m.words();
  std::vector<Word> right(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) right[static_cast<std::size_t>(i)] = Word{1} << i;
  for (int col = 0; col < n; ++col) {
    const Word bit = Word{1} << col;
    auto c = static_cast<std::size_t>(col);
    std::size_t found = c;
    while (found < left.size() && (left[found] & bit) == 0) ++found;
    if (found == left.size()) throw UsageError("inverse: matrix is singular");
    std::swap(left[c], left[found]);
    std::swap(right[c], right[found]);
    for (std::size_t r = 0; r < left.size(); ++r) {
      if (r != c && (left[r] & bit) != 0) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  return F2Matrix::from_words(n, right);
}

int rank_in_place(std::span<Word> rows) {
  int r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Word v = rows[i];
    for (int j = 0; j < r; ++j) {
      const Word e = rows[static_cast<std::size_t>(j)];
      if (v & e & (~e + 1)) v ^= e;
    }
    if (v != 0) rows[static_cast<std::size_t>(r++)] = v;
  }
  return r;
}

bool rows_independent_on(std::span<const Word> rows, Word columns) {
  std::array<Word, kMaxBits> basis{};
  std::size_t count = 0;
  for (Word row : rows) {
    Word v = row & columns;
    for (std::size_t j = 0; j < count; ++j) {
      const Word e = basis[j];
      if (v & e & (~e + 1)) v ^= e;
    }
    if (v == 0) return false;
    basis[count++] = v;
  }
  return true;
}

}  // namespace flatlab
