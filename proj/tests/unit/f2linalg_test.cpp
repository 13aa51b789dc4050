#include "flatlab/f2linalg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "flatlab/errors.hpp"
#include "oracles.hpp"

namespace flatlab {
namespace {

F2Matrix from_strings(std::initializer_list<const char*> rows) {
  std::vector<BitVector> out;
  for (const char* r : rows) out.push_back(BitVector::from_string(r));
  const int ncols = out.empty() ? 0 : out.front().length();
  return F2Matrix(ncols, out);
}

F2Matrix random_matrix(std::mt19937_64& rng, int nrows, int ncols) {
  std::vector<Word> rows(static_cast<std::size_t>(nrows));
  for (auto& r : rows) r = rng() & low_mask(ncols);
  return F2Matrix::from_words(ncols, rows);
}

TEST(BitVector, StringsAreCoordinateOrdered) {
  const BitVector v = BitVector::from_string("1010");
  EXPECT_EQ(v.word(), 0b0101U);
  EXPECT_TRUE(v.test(0));
  EXPECT_FALSE(v.test(1));
  EXPECT_EQ(v.to_string(), "1010");
  EXPECT_EQ(v.weight(), 2);
}

TEST(BitVector, RejectsBitsAboveLength) {
  EXPECT_THROW(BitVector(3, 0b1000), UsageError);
  EXPECT_THROW(BitVector(65, 0), UsageError);
  EXPECT_THROW(BitVector::from_string("012"), UsageError);
}

TEST(Rref, InvertibleTwoByTwo) {
  const RrefResult r = rref(from_strings({"11", "01"}));
  EXPECT_EQ(r.matrix, from_strings({"10", "01"}));
  EXPECT_EQ(r.pivots, (std::vector<int>{0, 1}));
}

TEST(Rref, DuplicateRowsCollapse) {
  const RrefResult r = rref(from_strings({"110", "110"}));
  EXPECT_EQ(r.matrix, from_strings({"110"}));
  EXPECT_EQ(r.pivots, (std::vector<int>{0}));
}

TEST(Rref, IdentityIsFixed) {
  for (int k = 1; k <= 8; ++k) {
    const RrefResult r = rref(F2Matrix::identity(k));
    EXPECT_EQ(r.matrix, F2Matrix::identity(k));
    ASSERT_EQ(r.pivots.size(), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) EXPECT_EQ(r.pivots[static_cast<std::size_t>(i)], i);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(F2Matrix::zero(3, 3)), 0);
  EXPECT_EQ(rank(F2Matrix::identity(4)), 4);
  EXPECT_EQ(rank(from_strings({"10", "00"})), 1);
}

TEST(KernelBasis, CoordinateSubspace) {
  const F2Matrix ker = kernel_basis(from_strings({"1000", "0100"}));
  EXPECT_EQ(ker, from_strings({"0010", "0001"}));
}

TEST(KernelBasis, FullRankHasTrivialKernel) {
  EXPECT_EQ(kernel_basis(F2Matrix::identity(5)).nrows(), 0);
}

TEST(KernelBasis, SelfOrthogonalLine) {
  EXPECT_EQ(kernel_basis(from_strings({"11"})), from_strings({"11"}));
}

TEST(SelectColumns, Examples) {
  const F2Matrix id = F2Matrix::identity(4);
  const std::vector<int> first_two{0, 1};
  EXPECT_EQ(select_columns(id, first_two), from_strings({"10", "01", "00", "00"}));
  const std::vector<int> all{0, 1, 2, 3};
  EXPECT_EQ(select_columns(id, all), id);
  const F2Matrix none = select_columns(id, std::vector<int>{});
  EXPECT_EQ(none.nrows(), 4);
  EXPECT_EQ(none.ncols(), 0);
}

TEST(SelectColumns, OutOfRangeIsUsageError) {
  const std::vector<int> bad{4};
  EXPECT_THROW(select_columns(F2Matrix::identity(4), bad), UsageError);
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 50) {
    const F2Matrix m = random_matrix(rng, 6, 6);
    if (rank(m) != 6) {
      EXPECT_THROW(inverse(m), UsageError);
      continue;
    }
    EXPECT_EQ(multiply(m, inverse(m)), F2Matrix::identity(6));
    ++checked;
  }
}

// Property checks over random matrices of assorted shapes.
TEST(LinalgProperties, RrefIdempotentRankMatchesTransposeKernelIsNull) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int nrows = static_cast<int>(rng() % 9);
    const int ncols = 1 + static_cast<int>(rng() % 12);
    const F2Matrix m = random_matrix(rng, nrows, ncols);

    const RrefResult once = rref(m);
    EXPECT_EQ(rref(once.matrix).matrix, once.matrix);

    const auto ints = oracle::to_int_matrix(m.words(), ncols);
    const int r = rank(m);
    EXPECT_EQ(r, oracle::naive_rank(ints));
    EXPECT_EQ(r, oracle::naive_rank(oracle::transpose(ints, ncols)));

    const F2Matrix ker = kernel_basis(m);
    EXPECT_EQ(r + ker.nrows(), ncols);
    for (const auto& v : ker.rows()) EXPECT_TRUE(m.apply(v).is_zero());
  }
}

TEST(LinalgProperties, IndependenceOnColumnsMatchesSelectedRank) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int ncols = 2 + static_cast<int>(rng() % 10);
    const int nrows = 1 + static_cast<int>(rng() % 4);
    const F2Matrix m = random_matrix(rng, nrows, ncols);
    const Word columns = rng() & low_mask(ncols);
    std::vector<int> idx;
    for (int c = 0; c < ncols; ++c) {
      if ((columns >> c) & 1U) idx.push_back(c);
    }
    const auto words = m.words();
    EXPECT_EQ(rows_independent_on(words, columns), rank(select_columns(m, idx)) == nrows);
  }
}

}  // namespace
}  // namespace flatlab
