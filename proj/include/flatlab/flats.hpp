#pragma once

// Counting nonvanishing k-flats.
//
// Three independent routes are provided:
//   * brute force: sum F over every flat (definition, no degree assumption);
//   * the rank technique for k-homogeneous f: U is nonvanishing for the
//     monomial x_I iff the columns I of U's RREF generator are independent,
//     and U is nonvanishing for f iff that holds for an odd number of terms;
//   * closed forms for d-intersecting k-homogeneous functions.
// For F of degree k every coset of U has the same sum as U itself, so flat
// counts are 2^{n-k} times subspace counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatlab/bigint.hpp"
#include "flatlab/boolfun.hpp"
#include "flatlab/subspace.hpp"
#include "flatlab/vecfun.hpp"

namespace flatlab {

inline constexpr std::size_t kListingCap = std::size_t{1} << 20;

struct EngineOptions {
  // Worker threads; totals do not depend on this.
  unsigned threads = 1;
  std::uint64_t budget = kDefaultSubspaceBudget;
  // Collect the nonvanishing subspaces/flats (dropped above kListingCap).
  bool collect_listing = false;
};

enum class CountMethod { brute, rank, closed_form, walsh };

const char* to_string(CountMethod m);

struct NonvanishingReport {
  int n = 0;
  int k = 0;
  BigInt subspace_count;  // |N_k(F)|
  BigInt flat_count;      // |N_{A,k}(F)|
  CountMethod method = CountMethod::brute;
  // Every k-flat nonvanishing, i.e. flat_count == |A_{n,k}|.
  bool is_sum_free = false;
  std::optional<std::vector<SubspaceRref>> subspace_listing;
  std::optional<std::vector<Flat>> flat_listing;
};

bool flat_is_nonvanishing(const VectorialFn& f, const Flat& a);

NonvanishingReport count_nonvanishing_flats_brute(const VectorialFn& f, int k,
                                                  const EngineOptions& opts = {});

// rank(G_U[Var(m)]) == k. Throws UsageError unless deg(m) == dim(U).
bool monomial_nonvanishing_test(const SubspaceRref& u, const Monomial& m);

// One-pass parity count over all k-subspaces. Throws UsageError unless f is
// k-homogeneous (strip lower terms with strip_below first).
NonvanishingReport count_nonvanishing_homogeneous(const AnfPoly& f, int k, const EngineOptions& opts = {});
// Vectorial form: every coordinate k-homogeneous or zero; U is nonvanishing
// when any coordinate has an odd number of passing terms.
NonvanishingReport count_nonvanishing_homogeneous(const VectorialFn& f, int k,
                                                  const EngineOptions& opts = {});

// Alternating sum over joint intersections |N_k(m_{i_1}) cap ... cap N_k(m_{i_l})|,
// each computed by joint rank tests. Limited to 20 terms.
BigInt inclusion_exclusion_count(const AnfPoly& f, int k, const EngineOptions& opts = {});

// d + t(k - d) <= n, 0 <= d <= k - 1, t >= 1, k >= 1.
bool d_intersecting_feasible(int n, int k, int d, int t);
BigInt d_intersecting_intersection_count(int n, int k, int d, int t);
BigInt d_intersecting_count(int n, int k, int d, int t);
BigInt zero_intersecting_count(int n, int k, int t);
// The k-homogeneous witness with terms D u B_i, D = {x_1..x_d}, blocks B_i of
// k - d fresh variables each.
AnfPoly d_intersecting_witness(int n, int k, int d, int t);

struct SumFreeResult {
  bool sum_free = false;
  // First vanishing flat in enumeration order, when not sum-free.
  std::optional<Flat> witness;
  // "degree_bound", "subspace" (degree k, one coset per subspace), "flats".
  std::string path;
};

SumFreeResult check_sum_free(const VectorialFn& f, int k, const EngineOptions& opts = {});
bool is_sum_free(const VectorialFn& f, int k, const EngineOptions& opts = {});

// Exhaustively checks U in N_k(f) <=> U^perp in N_{n-k}(complement(f)).
// Throws UsageError unless f is k-homogeneous with k >= 1.
bool duality_check(const AnfPoly& f, int k, const EngineOptions& opts = {});
// Same biconditional for arbitrary constant-free f (no homogeneity check);
// returns the first U where it fails.
std::optional<SubspaceRref> find_duality_violation(const AnfPoly& f, int k, const EngineOptions& opts = {});

// Complement of a k-homogeneous F: F is kth-order sum-free iff the result is
// (n-k)th-order sum-free.
VectorialFn sum_free_complement(const VectorialFn& f, int k);

}  // namespace flatlab
