#include "flatlab/flats.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <mutex>

#include "flatlab/errors.hpp"
#include "parallel.hpp"

namespace flatlab {

namespace {

// XOR of values over the span of `rows` shifted by rep; `points` must hold
// the 2^k span elements.
inline std::uint32_t coset_sum(std::span<const std::uint32_t> values, const std::vector<Word>& points, Word rep) {
  std::uint32_t acc = 0;
  for (Word p : points) acc ^= values[p ^ rep];
  return acc;
}

inline void fill_points(const SubspaceRref& u, std::vector<Word>& points) {
  const auto rows = u.rows();
  points.resize(std::size_t{1} << rows.size());
  points[0] = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t j = 0; j < half; ++j) points[half + j] = points[j] ^ rows[i];
  }
}

struct Tally {
  std::uint64_t subspaces = 0;
  std::uint64_t flats = 0;
};

void finish(NonvanishingReport& r) {
  r.is_sum_free = r.flat_count == flat_total(r.n, r.k);
}

template <class T>
std::optional<std::vector<T>> join_listing(std::vector<std::vector<T>>& per_block) {
  std::size_t total = 0;
  for (const auto& v : per_block) total += v.size();
  if (total > kListingCap) return std::nullopt;
  std::vector<T> out;
  out.reserve(total);
  for (auto& v : per_block) {
    for (auto& item : v) out.push_back(std::move(item));
  }
  return out;
}

// Rank-technique kernel shared by the Boolean and vectorial entry points:
// `monomials[i]` contributes the output bits `outputs[i]` when U passes its
// rank test.
NonvanishingReport rank_engine(int n, int k, const std::vector<Word>& monomials,
                               const std::vector<std::uint32_t>& outputs, const EngineOptions& opts) {
  check_enumeration(n, k, opts.budget);
  const std::vector<Word> blocks = pivot_sets(n, k);
  const unsigned workers = std::max(1U, opts.threads);
  std::vector<Tally> tallies(workers);
  std::vector<std::vector<SubspaceRref>> listing;
  if (opts.collect_listing) listing.resize(blocks.size());

  detail::run_blocks(blocks.size(), workers, [&](unsigned w, std::size_t b) {
    SubspaceRref scratch;
    std::uint64_t hits = 0;
    for_each_subspace_in_block(n, blocks[b], scratch, [&](const SubspaceRref& u) {
      std::uint32_t acc = 0;
      const auto rows = u.rows();
      for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (rows_independent_on(rows, monomials[i])) acc ^= outputs[i];
      }
      if (acc != 0) {
        ++hits;
        if (opts.collect_listing) listing[b].push_back(u);
      }
    });
    tallies[w].subspaces += hits;
  });

  NonvanishingReport r;
  r.n = n;
  r.k = k;
  r.method = CountMethod::rank;
  for (const auto& t : tallies) r.subspace_count += t.subspaces;
  r.flat_count = r.subspace_count << static_cast<unsigned>(n - k);
  if (opts.collect_listing) r.subspace_listing = join_listing(listing);
  finish(r);
  return r;
}

void require_homogeneous_dims(int n, int k) {
  if (k < 1 || k > n) throw UsageError("rank technique needs 1 <= k <= n");
}

}  // namespace

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute:
      return "brute";
    case CountMethod::rank:
      return "rank";
    case CountMethod::closed_form:
      return "closed-form";
    case CountMethod::walsh:
      return "walsh";
  }
  return "brute";
}

bool flat_is_nonvanishing(const VectorialFn& f, const Flat& a) {
  if (a.subspace.n() != f.n()) throw UsageError("flat and function disagree on n");
  return !set_sum(f, a.points()).is_zero();
}

NonvanishingReport count_nonvanishing_flats_brute(const VectorialFn& f, int k, const EngineOptions& opts) {
  const int n = f.n();
  check_enumeration(n, k, opts.budget);
  const std::vector<Word> blocks = pivot_sets(n, k);
  const unsigned workers = std::max(1U, opts.threads);
  std::vector<Tally> tallies(workers);
  std::vector<std::vector<Flat>> listing;
  if (opts.collect_listing) listing.resize(blocks.size());
  const auto values = f.values();

  detail::run_blocks(blocks.size(), workers, [&](unsigned w, std::size_t b) {
    SubspaceRref scratch;
    std::vector<Word> points;
    Tally local;
    for_each_subspace_in_block(n, blocks[b], scratch, [&](const SubspaceRref& u) {
      fill_points(u, points);
      for_each_coset(u, [&](const SubspaceRref&, Word rep) {
        if (coset_sum(values, points, rep) == 0) return;
        ++local.flats;
        if (rep == 0) ++local.subspaces;
        if (opts.collect_listing && listing[b].size() <= kListingCap) {
          listing[b].push_back(Flat{u, BitVector(n, rep)});
        }
      });
    });
    tallies[w].subspaces += local.subspaces;
    tallies[w].flats += local.flats;
  });

  NonvanishingReport r;
  r.n = n;
  r.k = k;
  r.method = CountMethod::brute;
  for (const auto& t : tallies) {
    r.subspace_count += t.subspaces;
    r.flat_count += t.flats;
  }
  if (opts.collect_listing) r.flat_listing = join_listing(listing);
  finish(r);
  return r;
}

bool monomial_nonvanishing_test(const SubspaceRref& u, const Monomial& m) {
  if (m.degree() != u.k()) {
    throw UsageError("monomial degree " + std::to_string(m.degree()) + " differs from subspace dimension " +
                     std::to_string(u.k()));
  }
  if ((m.mask & ~low_mask(u.n())) != 0) throw UsageError("monomial uses variables beyond n");
  std::vector<int> columns;
  for (Word x = m.mask; x != 0; x &= x - 1) columns.push_back(std::countr_zero(x));
  return rank(select_columns(u.gen(), columns)) == u.k();
}

NonvanishingReport count_nonvanishing_homogeneous(const AnfPoly& f, int k, const EngineOptions& opts) {
  require_homogeneous_dims(f.n(), k);
  if (!is_homogeneous(f, k)) {
    throw UsageError("rank technique needs a " + std::to_string(k) +
                     "-homogeneous function; strip lower-degree terms first");
  }
  std::vector<Word> monomials;
  for (const auto& t : f.terms()) monomials.push_back(t.mask);
  const std::vector<std::uint32_t> outputs(monomials.size(), 1U);
  return rank_engine(f.n(), k, monomials, outputs, opts);
}

NonvanishingReport count_nonvanishing_homogeneous(const VectorialFn& f, int k, const EngineOptions& opts) {
  require_homogeneous_dims(f.n(), k);
  if (!is_homogeneous(f, k)) {
    throw UsageError("rank technique needs every coordinate " + std::to_string(k) + "-homogeneous");
  }
  std::map<Word, std::uint32_t> by_monomial;
  for (int j = 0; j < f.m(); ++j) {
    for (const auto& t : f.coord(j).terms()) by_monomial[t.mask] ^= 1U << j;
  }
  std::vector<Word> monomials;
  std::vector<std::uint32_t> outputs;
  for (const auto& [mask, bits] : by_monomial) {
    monomials.push_back(mask);
    outputs.push_back(bits);
  }
  return rank_engine(f.n(), k, monomials, outputs, opts);
}

BigInt inclusion_exclusion_count(const AnfPoly& f, int k, const EngineOptions& opts) {
  require_homogeneous_dims(f.n(), k);
  if (!is_homogeneous(f, k)) throw UsageError("inclusion-exclusion needs a k-homogeneous function");
  const std::size_t t = f.term_count();
  if (t > 20) throw CapacityError("inclusion-exclusion is limited to 20 terms");
  if (t == 0) return 0;
  const int n = f.n();
  check_enumeration(n, k, opts.budget);

  // hist[P] = number of U whose set of passing terms is exactly P.
  std::vector<std::uint64_t> hist(std::size_t{1} << t, 0);
  const auto& terms = f.terms();
  const std::vector<Word> blocks = pivot_sets(n, k);
  const unsigned workers = std::max(1U, opts.threads);
  std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(hist.size(), 0));
  detail::run_blocks(blocks.size(), workers, [&](unsigned w, std::size_t b) {
    SubspaceRref scratch;
    for_each_subspace_in_block(n, blocks[b], scratch, [&](const SubspaceRref& u) {
      std::size_t pass = 0;
      for (std::size_t i = 0; i < t; ++i) {
        if (rows_independent_on(u.rows(), terms[i].mask)) pass |= std::size_t{1} << i;
      }
      ++local[w][pass];
    });
  });
  for (const auto& l : local) {
    for (std::size_t p = 0; p < hist.size(); ++p) hist[p] += l[p];
  }
  // Superset sums: inter[S] = |intersection of N_k(m_i), i in S|.
  std::vector<std::uint64_t>& inter = hist;
  for (std::size_t bit = 1; bit < inter.size(); bit <<= 1) {
    for (std::size_t s = 0; s < inter.size(); ++s) {
      if ((s & bit) == 0) inter[s] += inter[s | bit];
    }
  }
  BigInt total = 0;
  for (std::size_t s = 1; s < inter.size(); ++s) {
    const int size = std::popcount(s);
    BigInt term = BigInt(inter[s]) << static_cast<unsigned>(size - 1);
    if (size % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

bool d_intersecting_feasible(int n, int k, int d, int t) {
  return k >= 1 && t >= 1 && d >= 0 && d <= k - 1 && n >= 1 && d + t * (k - d) <= n;
}

namespace {

void require_feasible(int n, int k, int d, int t) {
  if (!d_intersecting_feasible(n, k, d, t)) {
    throw UsageError("no " + std::to_string(d) + "-intersecting " + std::to_string(k) + "-homogeneous function with " +
                     std::to_string(t) + " terms exists in " + std::to_string(n) + " variables");
  }
}

BigInt block_choices(int k, int d) {
  BigInt p = 1;
  for (int i = 0; i <= k - d - 1; ++i) p *= pow2(static_cast<unsigned>(k)) - pow2(static_cast<unsigned>(i + d));
  return p;
}

BigInt binomial(int n, int r) {
  BigInt c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

BigInt d_intersecting_intersection_count(int n, int k, int d, int t) {
  require_feasible(n, k, d, t);
  const int free_exp = k * (n - t * k + (t - 1) * d);
  return pow2(static_cast<unsigned>(free_exp)) * boost::multiprecision::pow(block_choices(k, d), static_cast<unsigned>(t - 1));
}

BigInt d_intersecting_count(int n, int k, int d, int t) {
  require_feasible(n, k, d, t);
  BigInt total = 0;
  for (int l = 1; l <= t; ++l) {
    BigInt term = binomial(t, l) * d_intersecting_intersection_count(n, k, d, l) << static_cast<unsigned>(l - 1);
    if (l % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

BigInt zero_intersecting_count(int n, int k, int t) {
  require_feasible(n, k, 0, t);
  const BigInt g = block_choices(k, 0);
  const BigRational ratio(g, pow2(static_cast<unsigned>(k * k - 1)));
  const BigRational base = BigRational(1) - ratio;
  BigRational power = 1;
  for (int i = 0; i < t; ++i) power *= base;
  const BigRational value = BigRational(pow2(static_cast<unsigned>(k * n - 1)), g) * (BigRational(1) - power);
  if (boost::multiprecision::denominator(value) != 1) {
    throw InternalError("closed form for 0-intersecting functions is not integral");
  }
  return boost::multiprecision::numerator(value);
}

AnfPoly d_intersecting_witness(int n, int k, int d, int t) {
  require_feasible(n, k, d, t);
  const Word common = low_mask(d);
  std::vector<Word> masks;
  for (int i = 0; i < t; ++i) masks.push_back(common | (low_mask(k - d) << (d + i * (k - d))));
  return AnfPoly(n, std::move(masks));
}

SumFreeResult check_sum_free(const VectorialFn& f, int k, const EngineOptions& opts) {
  const int n = f.n();
  check_enumeration(n, k, opts.budget);
  const int degree = algebraic_degree(f);
  SumFreeResult result;
  const bool subspace_only = k >= 1 && degree == k;
  result.path = degree < k ? "degree_bound" : (subspace_only ? "subspace" : "flats");

  const std::vector<Word> blocks = pivot_sets(n, k);
  const auto values = f.values();
  std::atomic<std::size_t> best_block{std::numeric_limits<std::size_t>::max()};
  std::mutex witness_mutex;
  std::optional<Flat> witness;

  detail::run_blocks(blocks.size(), std::max(1U, opts.threads), [&](unsigned, std::size_t b) {
    if (b > best_block.load()) return;
    SubspaceRref scratch;
    std::vector<Word> points;
    std::optional<Flat> found;
    for_each_subspace_in_block(n, blocks[b], scratch, [&](const SubspaceRref& u) {
      fill_points(u, points);
      if (subspace_only) {
        if (coset_sum(values, points, 0) == 0) found = Flat{u, BitVector::zero(n)};
      } else {
        for_each_coset(u, [&](const SubspaceRref&, Word rep) {
          if (coset_sum(values, points, rep) != 0) return true;
          found = Flat{u, BitVector(n, rep)};
          return false;
        });
      }
      return !found.has_value() && b <= best_block.load();
    });
    if (found) {
      std::lock_guard lock(witness_mutex);
      if (b < best_block.load()) {
        best_block = b;
        witness = std::move(found);
      }
    }
  });

  result.sum_free = !witness.has_value();
  result.witness = std::move(witness);
  return result;
}

bool is_sum_free(const VectorialFn& f, int k, const EngineOptions& opts) {
  return check_sum_free(f, k, opts).sum_free;
}

namespace {

std::optional<SubspaceRref> duality_scan(const AnfPoly& f, int k, const EngineOptions& opts) {
  const int n = f.n();
  if (k < 1 || k > n) throw UsageError("duality check needs 1 <= k <= n");
  check_enumeration(n, k, opts.budget);
  const TruthTable table = truth_table_from_anf(f);
  const TruthTable comp = truth_table_from_anf(complement_function(f));
  std::optional<SubspaceRref> violation;
  for_each_subspace(
      n, k,
      [&](const SubspaceRref& u) {
        bool in_f = false;
        for (Word p : u.points()) in_f ^= table.get(p);
        const SubspaceRref perp = orthogonal_complement(u);
        bool in_comp = false;
        for (Word p : perp.points()) in_comp ^= comp.get(p);
        if (in_f != in_comp) {
          violation = u;
          return false;
        }
        return true;
      },
      opts.budget);
  return violation;
}

}  // namespace

bool duality_check(const AnfPoly& f, int k, const EngineOptions& opts) {
  if (!is_homogeneous(f, k)) {
    throw UsageError("duality holds only for k-homogeneous functions; input is not " + std::to_string(k) +
                     "-homogeneous");
  }
  return !duality_scan(f, k, opts).has_value();
}

std::optional<SubspaceRref> find_duality_violation(const AnfPoly& f, int k, const EngineOptions& opts) {
  return duality_scan(f, k, opts);
}

VectorialFn sum_free_complement(const VectorialFn& f, int k) {
  if (!is_homogeneous(f, k)) {
    throw UsageError("complement transfer needs a " + std::to_string(k) +
                     "-homogeneous function; strip other terms first");
  }
  return vect_complement(f);
}

}  // namespace flatlab
