#include "flatlab/subspace.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "flatlab/errors.hpp"

namespace flatlab {

SubspaceRref SubspaceRref::zero(int n) {
  if (n < 0 || n > kMaxBits) throw UsageError("ambient dimension must be in 0..64");
  SubspaceRref u;
  u.n_ = n;
  return u;
}

SubspaceRref SubspaceRref::whole(int n) {
  SubspaceRref u = zero(n);
  for (int i = 0; i < n; ++i) {
    u.rows_.push_back(Word{1} << i);
    u.pivots_.push_back(i);
    u.pivot_mask_ |= Word{1} << i;
  }
  return u;
}

SubspaceRref SubspaceRref::from_rref(int n, std::vector<Word> rows) {
  SubspaceRref u = zero(n);
  Word pivot_mask = 0;
  int last = -1;
  for (Word r : rows) {
    if (r == 0 || (r & ~low_mask(n)) != 0) throw UsageError("from_rref: row is zero or too wide");
    const int p = std::countr_zero(r);
    if (p <= last) throw UsageError("from_rref: pivots not strictly increasing");
    last = p;
    pivot_mask |= Word{1} << p;
    u.pivots_.push_back(p);
  }
  for (Word r : rows) {
    if (std::popcount(r & pivot_mask) != 1) throw UsageError("from_rref: pivot column not cleared");
  }
  u.rows_ = std::move(rows);
  u.pivot_mask_ = pivot_mask;
  return u;
}

void SubspaceRref::reset_block(int n, Word pivot_mask) {
  n_ = n;
  pivot_mask_ = pivot_mask;
  rows_.clear();
  pivots_.clear();
  for (Word m = pivot_mask; m != 0; m &= m - 1) {
    const int p = std::countr_zero(m);
    pivots_.push_back(p);
    rows_.push_back(Word{1} << p);
  }
}

bool SubspaceRref::contains(Word v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((v >> pivots_[i]) & 1U) v ^= rows_[i];
  }
  return v == 0;
}

std::vector<Word> SubspaceRref::points() const {
  std::vector<Word> pts(std::size_t{1} << rows_.size());
  pts[0] = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t j = 0; j < half; ++j) pts[half + j] = pts[j] ^ rows_[i];
  }
  return pts;
}

std::vector<Word> Flat::points() const {
  std::vector<Word> pts = subspace.points();
  for (Word& p : pts) p ^= rep.word();
  return pts;
}

BigInt gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw UsageError("gaussian_binomial requires 0 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow2(static_cast<unsigned>(n - i)) - 1;
    den *= pow2(static_cast<unsigned>(i + 1)) - 1;
  }
  if (num % den != 0) throw InternalError("gaussian_binomial: non-integral quotient");
  return num / den;
}

BigInt flat_total(int n, int k) {
  return gaussian_binomial(n, k) << static_cast<unsigned>(n - k);
}

BitVector canonical_rep(const SubspaceRref& u, const BitVector& a) {
  if (a.length() != u.n()) throw UsageError("canonical_rep: dimension mismatch");
  Word v = a.word();
  const auto rows = u.rows();
  const auto pivots = u.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((v >> pivots[i]) & 1U) v ^= rows[i];
  }
  return BitVector(u.n(), v);
}

Flat make_flat(const SubspaceRref& u, const BitVector& a) {
  return Flat{u, canonical_rep(u, a)};
}

SubspaceRref orthogonal_complement(const SubspaceRref& u) {
  const F2Matrix ker = kernel_basis(u.gen());
  return SubspaceRref::from_rref(u.n(), ker.words());
}

SubspaceRref subspace_from_basis(int n, std::span<const BitVector> vectors) {
  std::vector<BitVector> rows(vectors.begin(), vectors.end());
  for (const auto& v : rows) {
    if (v.length() != n) throw UsageError("subspace_from_basis: vectors differ in length");
  }
  const RrefResult r = rref(F2Matrix(n, std::move(rows)));
  return SubspaceRref::from_rref(n, r.matrix.words());
}

std::vector<Word> pivot_sets(int n, int k) {
  if (k < 0 || k > n || n > kMaxBits) throw UsageError("pivot_sets requires 0 <= k <= n <= 64");
  std::vector<Word> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Word m = 0;
    for (int i : idx) m |= Word{1} << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

void check_enumeration(int n, int k, std::uint64_t budget) {
  if (n < 0 || k < 0 || k > n) {
    throw UsageError("subspace enumeration requires 0 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  if (n > kMaxEnumerationN) {
    throw CapacityError("subspace enumeration is limited to n <= 24, got n=" + std::to_string(n));
  }
  const BigInt count = gaussian_binomial(n, k);
  if (count > budget) {
    throw CapacityError("enumerating " + count.str() + " subspaces exceeds the budget of " +
                        std::to_string(budget));
  }
}

SubspaceStream::SubspaceStream(int n, int k, std::uint64_t budget) : n_(n) {
  check_enumeration(n, k, budget);
  blocks_ = pivot_sets(n, k);
}

bool SubspaceStream::next() {
  if (!started_) {
    started_ = true;
    block_ = 0;
  } else {
    if (block_ >= blocks_.size()) return false;
    // Odometer step within the current block.
    auto& rows = current_.rows_;
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      const Word pivot_bit = Word{1} << current_.pivots_[ui];
      const Word sub = ((rows[ui] & ~pivot_bit) - free_masks_[ui]) & free_masks_[ui];
      rows[ui] = pivot_bit | sub;
      if (sub != 0) return true;
    }
    ++block_;
  }
  if (block_ >= blocks_.size()) return false;
  current_.reset_block(n_, blocks_[block_]);
  const Word nonpivot = low_mask(n_) & ~blocks_[block_];
  free_masks_.clear();
  for (int p : current_.pivots_) free_masks_.push_back(nonpivot & ~low_mask(p + 1));
  return true;
}

}  // namespace flatlab
