#pragma once

// Subspaces and flats of F_2^n, each subspace carried by its unique RREF
// generator matrix.

#include <compare>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "flatlab/bigint.hpp"
#include "flatlab/f2linalg.hpp"

namespace flatlab {

inline constexpr int kMaxEnumerationN = 24;
inline constexpr std::uint64_t kDefaultSubspaceBudget = std::uint64_t{1} << 28;

class SubspaceRref {
 public:
  SubspaceRref() = default;

  static SubspaceRref zero(int n);
  static SubspaceRref whole(int n);
  // Rows must already be a full-rank RREF basis with increasing pivots;
  // throws UsageError otherwise.
  static SubspaceRref from_rref(int n, std::vector<Word> rows);

  int n() const { return n_; }
  int k() const { return static_cast<int>(rows_.size()); }
  std::span<const Word> rows() const { return rows_; }
  std::span<const int> pivots() const { return pivots_; }
  Word pivot_mask() const { return pivot_mask_; }
  F2Matrix gen() const { return F2Matrix::from_words(n_, rows_); }

  bool contains(Word v) const;
  // All 2^k elements; index bits are the coefficients of the generator rows.
  std::vector<Word> points() const;

  friend bool operator==(const SubspaceRref& a, const SubspaceRref& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const SubspaceRref& a, const SubspaceRref& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  template <class Visit>
  friend bool for_each_subspace_in_block(int n, Word pivot_mask, SubspaceRref& scratch, Visit&& visit);

  friend class SubspaceStream;

  void reset_block(int n, Word pivot_mask);

  int n_ = 0;
  std::vector<Word> rows_;
  std::vector<int> pivots_;
  Word pivot_mask_ = 0;
};

// A k-flat U + rep with rep reduced to have zeros on every pivot of U.
struct Flat {
  SubspaceRref subspace;
  BitVector rep;

  std::vector<Word> points() const;
  friend bool operator==(const Flat&, const Flat&) = default;
  friend auto operator<=>(const Flat& a, const Flat& b) {
    if (auto c = a.subspace <=> b.subspace; c != 0) return c;
    return a.rep.word() <=> b.rep.word();
  }
};

BigInt gaussian_binomial(int n, int k);
// |A_{n,k}| = 2^{n-k} * gaussian_binomial(n, k).
BigInt flat_total(int n, int k);

BitVector canonical_rep(const SubspaceRref& u, const BitVector& a);
Flat make_flat(const SubspaceRref& u, const BitVector& a);
SubspaceRref orthogonal_complement(const SubspaceRref& u);
// Zero span gives the 0-dimensional subspace. All vectors must share n.
SubspaceRref subspace_from_basis(int n, std::span<const BitVector> vectors);

// k-subsets of {0..n-1} as masks, ordered lexicographically as sorted index
// lists. These are the pivot sets of RREF generator matrices.
std::vector<Word> pivot_sets(int n, int k);

// Throws UsageError for k outside 0..n and CapacityError for n > 24 or when
// the number of k-subspaces exceeds budget.
void check_enumeration(int n, int k, std::uint64_t budget);

namespace detail {
template <class Visit, class... Args>
bool invoke_visit(Visit& visit, Args&&... args) {
  if constexpr (std::is_same_v<std::invoke_result_t<Visit&, Args...>, bool>) {
    return visit(std::forward<Args>(args)...);
  } else {
    visit(std::forward<Args>(args)...);
    return true;
  }
}
}  // namespace detail

// Visits every subspace with the given pivot set, free entries in counting
// order (last row least significant). `visit` may return bool; false stops
// the walk and makes this return false. `scratch` is rewritten in place.
template <class Visit>
bool for_each_subspace_in_block(int n, Word pivot_mask, SubspaceRref& scratch, Visit&& visit) {
  scratch.reset_block(n, pivot_mask);
  const int k = scratch.k();
  Word free_masks[kMaxBits];
  Word pivot_bits[kMaxBits];
  const Word nonpivot = low_mask(n) & ~pivot_mask;
  for (int i = 0; i < k; ++i) {
    pivot_bits[i] = scratch.rows_[static_cast<std::size_t>(i)];
    free_masks[i] = nonpivot & ~low_mask(scratch.pivots_[static_cast<std::size_t>(i)] + 1);
  }
  Word* rows = scratch.rows_.data();
  for (;;) {
    if (!detail::invoke_visit(visit, static_cast<const SubspaceRref&>(scratch))) return false;
    int i = k - 1;
    for (; i >= 0; --i) {
      const Word sub = ((rows[i] & ~pivot_bits[i]) - free_masks[i]) & free_masks[i];
      rows[i] = pivot_bits[i] | sub;
      if (sub != 0) break;
    }
    if (i < 0) return true;
  }
}

// Every k-subspace exactly once: pivot sets in lexicographic order, then
// free entries in counting order.
template <class Visit>
bool for_each_subspace(int n, int k, Visit&& visit, std::uint64_t budget = kDefaultSubspaceBudget) {
  check_enumeration(n, k, budget);
  SubspaceRref scratch;
  for (Word p : pivot_sets(n, k)) {
    if (!for_each_subspace_in_block(n, p, scratch, visit)) return false;
  }
  return true;
}

// Visits (U, rep) for every coset rep of U with zeros on U's pivots.
template <class Visit>
bool for_each_coset(const SubspaceRref& u, Visit&& visit) {
  const Word cm = low_mask(u.n()) & ~u.pivot_mask();
  Word rep = 0;
  do {
    if (!detail::invoke_visit(visit, u, rep)) return false;
    rep = (rep - cm) & cm;
  } while (rep != 0);
  return true;
}

// Every k-flat exactly once, subspace-major.
template <class Visit>
bool for_each_flat(int n, int k, Visit&& visit, std::uint64_t budget = kDefaultSubspaceBudget) {
  return for_each_subspace(
      n, k, [&](const SubspaceRref& u) { return for_each_coset(u, visit); }, budget);
}

// Pull-style stream over the same order as for_each_subspace. Restartable by
// constructing a new stream.
class SubspaceStream {
 public:
  SubspaceStream(int n, int k, std::uint64_t budget = kDefaultSubspaceBudget);
  // Advances to the next subspace; false once exhausted.
  bool next();
  const SubspaceRref& current() const { return current_; }

 private:
  int n_;
  std::vector<Word> blocks_;
  std::size_t block_ = 0;
  bool started_ = false;
  std::vector<Word> free_masks_;
  SubspaceRref current_;
};

}  // namespace flatlab
