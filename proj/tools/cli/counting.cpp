#include "cli.hpp"
#include "flatlab/errors.hpp"
#include "flatlab/walsh.hpp"

namespace flatlab::cli {

namespace {

// The intersecting shape (d, t) of f's degree-k part, if it has one.
std::optional<std::pair<int, int>> closed_form_shape(const VectorialFn& f, int k) {
  if (f.m() != 1 || k < 1 || algebraic_degree(f) != k) return std::nullopt;
  const AnfPoly top = homogeneous_part(f.coord(0), k);
  const IntersectProfile p = intersect_profile(top);
  switch (p.kind) {
    case IntersectProfile::Kind::single_term:
      return std::pair{0, 1};
    case IntersectProfile::Kind::intersecting:
      return std::pair{p.d, static_cast<int>(top.term_count())};
    default:
      return std::nullopt;
  }
}

bool has_lower_terms(const VectorialFn& f, int k) {
  for (const auto& c : f.coords()) {
    for (const auto& t : c.terms()) {
      if (t.degree() < k) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<CountMethod> applicable_modes(const VectorialFn& f, int k) {
  std::vector<CountMethod> modes;
  if (k == 2) modes.push_back(CountMethod::walsh);
  if (k >= 1 && algebraic_degree(f) == k) modes.push_back(CountMethod::rank);
  if (closed_form_shape(f, k)) modes.push_back(CountMethod::closed_form);
  modes.push_back(CountMethod::brute);
  return modes;
}

CountOutcome count_with(const VectorialFn& f, int k, CountMethod method, const EngineOptions& opts) {
  const int n = f.n();
  if (k < 0 || k > n) throw UsageError("k must be in 0..n");
  CountOutcome out;
  switch (method) {
    case CountMethod::brute:
      out.report = count_nonvanishing_flats_brute(f, k, opts);
      return out;
    case CountMethod::rank: {
      if (k < 1 || algebraic_degree(f) != k) {
        throw UsageError("rank mode needs a function of degree exactly k = " + std::to_string(k) + " (degree is " +
                         std::to_string(algebraic_degree(f)) + ")");
      }
      out.stripped_lower_terms = has_lower_terms(f, k);
      out.report = count_nonvanishing_homogeneous(homogeneous_part(f, k), k, opts);
      return out;
    }
    case CountMethod::closed_form: {
      const auto shape = closed_form_shape(f, k);
      if (!shape) {
        throw UsageError("closed-form mode needs a single-output function of degree k whose degree-k terms all share "
                         "the same common variables");
      }
      out.stripped_lower_terms = has_lower_terms(f, k);
      NonvanishingReport& r = out.report;
      r.n = n;
      r.k = k;
      r.method = CountMethod::closed_form;
      r.subspace_count = d_intersecting_count(n, k, shape->first, shape->second);
      r.flat_count = r.subspace_count << static_cast<unsigned>(n - k);
      r.is_sum_free = r.flat_count == flat_total(n, k);
      return out;
    }
    case CountMethod::walsh: {
      if (k != 2) throw UsageError("walsh mode counts 2-flats only");
      NonvanishingReport& r = out.report;
      r.n = n;
      r.k = k;
      r.method = CountMethod::walsh;
      r.flat_count = count_nonvanishing_2flats_walsh(f);
      r.is_sum_free = r.flat_count == flat_total(n, k);
      out.subspace_count_known = false;
      return out;
    }
  }
  throw InternalError("unknown count method");
}

}  // namespace flatlab::cli
