#include "flatlab/flats.hpp"

#include <gtest/gtest.h>

#include <random>

#include "flatlab/errors.hpp"
#include "flatlab/gf2n.hpp"
#include "oracles.hpp"

namespace flatlab {
namespace {

VectorialFn boolean_of(const char* anf, int n) { return VectorialFn::boolean(parse_anf(anf, n)); }

SubspaceRref span_of(int n, std::initializer_list<const char*> vecs) {
  std::vector<BitVector> v;
  for (const char* s : vecs) v.push_back(BitVector::from_string(s));
  return subspace_from_basis(n, v);
}

std::vector<std::uint32_t> values_of(const VectorialFn& f) {
  return std::vector<std::uint32_t>(f.values().begin(), f.values().end());
}

VectorialFn random_fn(std::mt19937_64& rng, int n, int m) {
  std::vector<std::uint32_t> values(std::size_t{1} << n);
  for (auto& v : values) v = static_cast<std::uint32_t>(rng() & low_mask(m));
  return VectorialFn::from_values(n, m, values);
}

AnfPoly random_below(std::mt19937_64& rng, int n, int k) {
  std::vector<Word> masks;
  for (Word m = 0; m < (Word{1} << n); ++m) {
    if (std::popcount(m) < k && (rng() & 1U)) masks.push_back(m);
  }
  return AnfPoly(n, masks);
}

TEST(FlatIsNonvanishing, Examples) {
  const VectorialFn lin = boolean_of("x1 + x3", 4);
  for_each_flat(4, 2, [&](const SubspaceRref& u, Word rep) {
    EXPECT_FALSE(flat_is_nonvanishing(lin, Flat{u, BitVector(4, rep)}));
  });
  EXPECT_TRUE(flat_is_nonvanishing(boolean_of("x1*x2", 2), Flat{SubspaceRref::whole(2), BitVector::zero(2)}));
  EXPECT_FALSE(flat_is_nonvanishing(boolean_of("x1*x2", 4), Flat{span_of(4, {"1000", "0010"}), BitVector::zero(4)}));
}

TEST(BruteCount, Examples) {
  const NonvanishingReport bent = count_nonvanishing_flats_brute(boolean_of("x1*x2 + x3*x4", 4), 2);
  EXPECT_EQ(bent.flat_count, 80);
  EXPECT_EQ(bent.subspace_count, 20);
  EXPECT_EQ(bent.method, CountMethod::brute);
  EXPECT_FALSE(bent.is_sum_free);

  const NonvanishingReport x7 = count_nonvanishing_flats_brute(power_map(FieldSpec(5), 7), 3);
  EXPECT_EQ(x7.flat_count, 620);
  EXPECT_EQ(flat_total(5, 3), 620);
  EXPECT_TRUE(x7.is_sum_free);

  const NonvanishingReport x9 = count_nonvanishing_flats_brute(power_map(FieldSpec(5), 9), 3);
  EXPECT_EQ(x9.flat_count, 0);
  EXPECT_FALSE(x9.is_sum_free);
}

TEST(BruteCount, MatchesPointSetOracle) {
  std::mt19937_64 rng(51);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      const VectorialFn f = random_fn(rng, n, 2);
      const auto expected = oracle::count_by_point_sets(values_of(f), n, k);
      const NonvanishingReport r = count_nonvanishing_flats_brute(f, k);
      EXPECT_EQ(r.flat_count, expected.flats) << n << " " << k;
      EXPECT_EQ(r.subspace_count, expected.subspaces) << n << " " << k;
    }
  }
}

TEST(BruteCount, ListingMatchesCount) {
  EngineOptions opts;
  opts.collect_listing = true;
  const VectorialFn f = boolean_of("x1*x2*x3 + x2*x4", 5);
  const NonvanishingReport r = count_nonvanishing_flats_brute(f, 3, opts);
  ASSERT_TRUE(r.flat_listing.has_value());
  EXPECT_EQ(BigInt(r.flat_listing->size()), r.flat_count);
  for (const auto& a : *r.flat_listing) EXPECT_TRUE(flat_is_nonvanishing(f, a));
}

TEST(BruteCount, BudgetIsCapacityError) {
  EngineOptions opts;
  opts.budget = 10;
  EXPECT_THROW(count_nonvanishing_flats_brute(boolean_of("x1*x2", 5), 2, opts), CapacityError);
}

TEST(MonomialTest, Examples) {
  const Monomial x1x2{0b11};
  EXPECT_TRUE(monomial_nonvanishing_test(span_of(4, {"1000", "0100"}), x1x2));
  EXPECT_FALSE(monomial_nonvanishing_test(span_of(4, {"1000", "0010"}), x1x2));
  EXPECT_THROW(monomial_nonvanishing_test(span_of(4, {"1000"}), x1x2), UsageError);
}

TEST(MonomialTest, AgreesWithSubspaceSums) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (Word mask = 0; mask < (Word{1} << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        const VectorialFn f = VectorialFn::boolean(AnfPoly::monomial(n, mask));
        for_each_subspace(n, k, [&](const SubspaceRref& u) {
          EXPECT_EQ(monomial_nonvanishing_test(u, Monomial{mask}),
                    flat_is_nonvanishing(f, Flat{u, BitVector::zero(n)}));
        });
      }
    }
  }
}

TEST(RankEngine, Examples) {
  EXPECT_EQ(count_nonvanishing_homogeneous(parse_anf("x1*x2", 4), 2).subspace_count, 16);
  const NonvanishingReport bent = count_nonvanishing_homogeneous(parse_anf("x1*x2 + x3*x4", 4), 2);
  EXPECT_EQ(bent.subspace_count, 20);
  EXPECT_EQ(bent.flat_count, 80);
  EXPECT_EQ(bent.method, CountMethod::rank);
  EXPECT_EQ(count_nonvanishing_homogeneous(parse_anf("x1*x2 + x1*x3", 4), 2).subspace_count, 16);
  EXPECT_THROW(count_nonvanishing_homogeneous(parse_anf("x1*x2 + x3", 4), 2), UsageError);
}

TEST(RankEngine, MatchesBruteForceOnHomogeneousFunctions) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 2);
    const AnfPoly f(n, oracle::random_homogeneous(n, k, rng, 0.3));
    const NonvanishingReport fast = count_nonvanishing_homogeneous(f, k);
    const NonvanishingReport slow = count_nonvanishing_flats_brute(VectorialFn::boolean(f), k);
    EXPECT_EQ(fast.subspace_count, slow.subspace_count) << to_string(f);
    EXPECT_EQ(fast.flat_count, slow.flat_count) << to_string(f);
    EXPECT_EQ(slow.flat_count, slow.subspace_count << static_cast<unsigned>(n - k));
  }
}

TEST(RankEngine, VectorialMatchesBruteForce) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    std::vector<AnfPoly> coords;
    for (int j = 0; j < 3; ++j) coords.emplace_back(n, oracle::random_homogeneous(n, k, rng, 0.3));
    const VectorialFn f(coords);
    EXPECT_EQ(count_nonvanishing_homogeneous(f, k).flat_count, count_nonvanishing_flats_brute(f, k).flat_count);
  }
}

TEST(RankEngine, ThreadCountDoesNotChangeTotals) {
  const AnfPoly f = parse_anf("x1*x2*x3 + x2*x4*x6 + x3*x5*x7 + x1*x5*x6", 8);
  EngineOptions one;
  EngineOptions four;
  four.threads = 4;
  EXPECT_EQ(count_nonvanishing_homogeneous(f, 3, one).subspace_count,
            count_nonvanishing_homogeneous(f, 3, four).subspace_count);
  const VectorialFn g = VectorialFn::boolean(f);
  EXPECT_EQ(count_nonvanishing_flats_brute(g, 3, one).flat_count, count_nonvanishing_flats_brute(g, 3, four).flat_count);
}

TEST(RankEngine, ListingCollected) {
  EngineOptions opts;
  opts.collect_listing = true;
  const AnfPoly f = parse_anf("x1*x2", 4);
  const NonvanishingReport r = count_nonvanishing_homogeneous(f, 2, opts);
  ASSERT_TRUE(r.subspace_listing.has_value());
  EXPECT_EQ(r.subspace_listing->size(), 16U);
  for (const auto& u : *r.subspace_listing) EXPECT_TRUE(monomial_nonvanishing_test(u, Monomial{0b11}));
}

TEST(InclusionExclusion, Examples) {
  EXPECT_EQ(inclusion_exclusion_count(parse_anf("x1*x3", 5), 2), 64);
  EXPECT_EQ(inclusion_exclusion_count(parse_anf("x1*x2 + x3*x4", 4), 2), 20);
  EXPECT_EQ(inclusion_exclusion_count(parse_anf("x1*x2 + x1*x3", 4), 2), 16);
}

TEST(InclusionExclusion, AgreesWithParityEngine) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 2);
    const AnfPoly f(n, oracle::random_homogeneous(n, k, rng, 0.4));
    if (f.term_count() > 12) continue;
    EXPECT_EQ(inclusion_exclusion_count(f, k), count_nonvanishing_homogeneous(f, k).subspace_count) << to_string(f);
  }
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(d_intersecting_intersection_count(4, 2, 0, 2), 6);
  EXPECT_EQ(d_intersecting_intersection_count(4, 2, 1, 2), 8);
  EXPECT_EQ(d_intersecting_intersection_count(6, 3, 1, 1), pow2(9));
  EXPECT_EQ(d_intersecting_count(4, 2, 0, 2), 20);
  EXPECT_EQ(d_intersecting_count(4, 2, 1, 2), 16);
  EXPECT_EQ(d_intersecting_count(6, 2, 0, 3), 336);
  EXPECT_EQ(zero_intersecting_count(4, 2, 2), 20);
  EXPECT_EQ(zero_intersecting_count(6, 2, 3), 336);
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      EXPECT_EQ(zero_intersecting_count(n, k, 1), pow2(static_cast<unsigned>(k * (n - k))));
    }
  }
  EXPECT_THROW(d_intersecting_count(4, 2, 0, 3), UsageError);
  EXPECT_THROW(d_intersecting_count(4, 2, 2, 2), UsageError);
}

TEST(ClosedForms, PairIntersectionMatchesJointRankEnumeration) {
  for (const auto& [n, k, d] : std::vector<std::tuple<int, int, int>>{{4, 2, 0}, {4, 2, 1}, {6, 3, 1}, {5, 3, 2}}) {
    const AnfPoly w = d_intersecting_witness(n, k, d, 2);
    const auto& t = w.terms();
    std::uint64_t both = 0;
    for_each_subspace(n, k, [&](const SubspaceRref& u) {
      if (monomial_nonvanishing_test(u, t[0]) && monomial_nonvanishing_test(u, t[1])) ++both;
    });
    EXPECT_EQ(d_intersecting_intersection_count(n, k, d, 2), both);
  }
}

TEST(ClosedForms, MatchEnumerationOnAllFeasibleWitnesses) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int d = 0; d < k; ++d) {
        for (int t = 1; t <= 3; ++t) {
          if (!d_intersecting_feasible(n, k, d, t)) continue;
          const AnfPoly w = d_intersecting_witness(n, k, d, t);
          ASSERT_EQ(w.term_count(), static_cast<std::size_t>(t));
          if (t >= 2) {
            EXPECT_EQ(intersect_profile(w).d, d);
          }
          const BigInt counted = count_nonvanishing_homogeneous(w, k).subspace_count;
          EXPECT_EQ(d_intersecting_count(n, k, d, t), counted) << n << k << d << t;
          if (d == 0) {
            EXPECT_EQ(zero_intersecting_count(n, k, t), counted);
          }
        }
      }
    }
  }
}

TEST(SumFree, Examples) {
  EXPECT_TRUE(is_sum_free(power_map(FieldSpec(5), 7), 3));
  EXPECT_TRUE(is_sum_free(power_map(FieldSpec(5), 30), 3));
  EXPECT_TRUE(is_sum_free(power_map(FieldSpec(7), 7), 3));

  const SumFreeResult x9 = check_sum_free(power_map(FieldSpec(5), 9), 3);
  EXPECT_FALSE(x9.sum_free);
  EXPECT_EQ(x9.path, "degree_bound");
  ASSERT_TRUE(x9.witness.has_value());
  EXPECT_FALSE(flat_is_nonvanishing(power_map(FieldSpec(5), 9), *x9.witness));
  EXPECT_EQ(check_sum_free(power_map(FieldSpec(5), 7), 3).path, "subspace");
  EXPECT_EQ(check_sum_free(power_map(FieldSpec(5), 30), 3).path, "flats");
}

TEST(SumFree, ApnGoldAgreesWithFullCount) {
  for (int n = 5; n <= 7; ++n) {
    const VectorialFn gold = power_map(FieldSpec(n), 3);
    EXPECT_TRUE(is_sum_free(gold, 2));
    EXPECT_EQ(count_nonvanishing_flats_brute(gold, 2).flat_count, flat_total(n, 2));
  }
}

TEST(SumFree, WitnessIsFirstVanishingFlatRegardlessOfThreads) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const VectorialFn f = random_fn(rng, 6, 4);
    EngineOptions many;
    many.threads = 3;
    const SumFreeResult a = check_sum_free(f, 3);
    const SumFreeResult b = check_sum_free(f, 3, many);
    EXPECT_EQ(a.sum_free, b.sum_free);
    EXPECT_EQ(a.witness, b.witness);
    if (!a.witness) continue;
    // Nothing earlier in enumeration order vanishes.
    bool earlier_vanishes = false;
    for_each_flat(6, 3, [&](const SubspaceRref& u, Word rep) {
      const Flat cur{u, BitVector(6, rep)};
      if (cur == *a.witness) return false;
      if (!flat_is_nonvanishing(f, cur)) earlier_vanishes = true;
      return true;
    });
    EXPECT_FALSE(earlier_vanishes);
  }
}

TEST(Invariants, DegreeBoundGivesZero) {
  std::mt19937_64 rng(79);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<AnfPoly> coords{random_below(rng, n, k), random_below(rng, n, k)};
      EXPECT_EQ(count_nonvanishing_flats_brute(VectorialFn(coords), k).flat_count, 0);
    }
  }
}

TEST(Invariants, LowerTermsDoNotChangeFlatCounts) {
  std::mt19937_64 rng(83);
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const VectorialFn f = random_fn(rng, n, 2);
      const VectorialFn g(std::vector<AnfPoly>{random_below(rng, n, k), random_below(rng, n, k)});
      EXPECT_EQ(count_nonvanishing_flats_brute(f + g, k).flat_count, count_nonvanishing_flats_brute(f, k).flat_count);
    }
  }
}

TEST(Duality, Examples) {
  EXPECT_TRUE(duality_check(parse_anf("x1*x2", 4), 2));
  EXPECT_THROW(duality_check(parse_anf("x1*x2 + x3", 4), 2), UsageError);
  EXPECT_THROW(duality_check(parse_anf("x1*x2", 4), 3), UsageError);
}

TEST(Duality, HoldsForRandomHomogeneousFunctions) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 2);
    if (k >= n) continue;
    const AnfPoly f(n, oracle::random_homogeneous(n, k, rng, 0.4));
    EXPECT_TRUE(duality_check(f, k)) << to_string(f);
    EXPECT_EQ(count_nonvanishing_homogeneous(f, k).subspace_count,
              count_nonvanishing_homogeneous(complement_function(f), n - k).subspace_count);
  }
}

TEST(Duality, FailsForSomeNonHomogeneousFunction) {
  // x1x2 + x3 in four variables: the degree-1 term breaks the correspondence.
  const auto violation = find_duality_violation(parse_anf("x1*x2 + x3", 4), 2);
  ASSERT_TRUE(violation.has_value());
  const AnfPoly f = parse_anf("x1*x2 + x3", 4);
  const bool in_f = flat_is_nonvanishing(VectorialFn::boolean(f), Flat{*violation, BitVector::zero(4)});
  const SubspaceRref perp = orthogonal_complement(*violation);
  const bool in_comp =
      flat_is_nonvanishing(VectorialFn::boolean(complement_function(f)), Flat{perp, BitVector::zero(4)});
  EXPECT_NE(in_f, in_comp);
}

TEST(SumFreeComplement, GoldQuadraticParts) {
  for (int n = 5; n <= 6; ++n) {
    const VectorialFn quad = homogeneous_part(power_map(FieldSpec(n), 3), 2);
    EXPECT_TRUE(is_sum_free(quad, 2));
    const VectorialFn comp = sum_free_complement(quad, 2);
    EXPECT_TRUE(is_homogeneous(comp, n - 2));
    EXPECT_TRUE(is_sum_free(comp, n - 2));
  }
  EXPECT_THROW(sum_free_complement(power_map(FieldSpec(5), 3), 2), UsageError);
}

TEST(SumFreeComplement, NonSumFreeTransfers) {
  const VectorialFn chain(std::vector<AnfPoly>{parse_anf("x1*x2 + x3*x4", 5), parse_anf("x2*x3", 5)});
  EXPECT_FALSE(is_sum_free(chain, 2));
  EXPECT_FALSE(is_sum_free(sum_free_complement(chain, 2), 3));
}

}  // namespace
}  // namespace flatlab
