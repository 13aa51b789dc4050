#include "flatlab/catalog.hpp"

#include <numeric>

#include "flatlab/errors.hpp"
#include "flatlab/gf2n.hpp"

namespace flatlab {

namespace {

std::int64_t require(const CatalogParams& params, const std::string& name, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError(name + " needs parameter '" + key + "'");
  return it->second;
}

void check_no_extra(const CatalogParams& params, const std::string& name, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw UsageError(name + " has no parameter '" + key + "'");
  }
}

int field_degree(const CatalogParams& params, const std::string& name) {
  const auto n = require(params, name, "n");
  if (n < kMinFieldDegree || n > kMaxFieldDegree) throw UsageError(name + ": n must be in 2..16");
  return static_cast<int>(n);
}

AnfPoly pair_chain(int n, int pairs) {
  std::vector<Word> masks;
  for (int i = 0; i < pairs; ++i) masks.push_back(Word{3} << (2 * i));
  return AnfPoly(n, std::move(masks));
}

}  // namespace

const std::vector<CatalogInfo>& catalog_entries() {
  static const std::vector<CatalogInfo> entries = {
      {"monomial_chain", {"n", "j", "k"}, "x^(1+2^j+...+2^(j(k-1))) on F_(2^n); kth-order sum-free if gcd(j,n)=1"},
      {"inverse", {"n"}, "x^(2^n-2) on F_(2^n); (n-2)th-order sum-free for odd n"},
      {"gold", {"n", "j"}, "x^(1+2^j) on F_(2^n); APN if gcd(j,n)=1"},
      {"bent_chain", {"n"}, "x1x2+x3x4+...+x(n-1)xn for even n; bent"},
      {"semibent_chain", {"n"}, "x1x2+...+x(n-2)x(n-1) for odd n; semi-bent"},
      {"monomial", {"n", "mask"}, "x_I with bit i-1 of mask set for every i in I"},
  };
  return entries;
}

CatalogFunction build(const std::string& name, const CatalogParams& params) {
  return build(name, params, std::nullopt);
}

CatalogFunction build(const std::string& name, const CatalogParams& params, std::optional<std::uint32_t> modulus) {
  CatalogFunction out{name, params, {}, {}, {}};
  if (name == "monomial_chain" || name == "gold") {
    const bool gold = name == "gold";
    if (gold) {
      check_no_extra(params, name, {"n", "j"});
    } else {
      check_no_extra(params, name, {"n", "j", "k"});
    }
    const int n = field_degree(params, name);
    const auto j = require(params, name, "j");
    const auto k = gold ? 2 : require(params, name, "k");
    if (j < 1 || k < 1 || j * (k - 1) >= n) {
      throw UsageError(name + ": need j >= 1, k >= 1 and j(k-1) < n");
    }
    std::uint64_t e = 0;
    for (std::int64_t i = 0; i < k; ++i) e += std::uint64_t{1} << (j * i);
    if (e >= (std::uint64_t{1} << n) - 1) throw UsageError(name + ": exponent out of range");
    out.fn = power_map(FieldSpec(n, modulus), e);
    if (std::gcd(j, static_cast<std::int64_t>(n)) == 1) {
      out.expected.sum_free_orders.push_back(static_cast<int>(k));
    } else {
      out.warnings.push_back("gcd(j, n) != 1: outside the known sum-free family");
    }
    return out;
  }
  if (name == "inverse") {
    check_no_extra(params, name, {"n"});
    const int n = field_degree(params, name);
    out.fn = power_map(FieldSpec(n, modulus), (std::uint64_t{1} << n) - 2);
    if (n % 2 == 1 && n >= 3) out.expected.sum_free_orders.push_back(n - 2);
    return out;
  }
  if (name == "bent_chain" || name == "semibent_chain") {
    check_no_extra(params, name, {"n"});
    const auto n = require(params, name, "n");
    const bool bent = name == "bent_chain";
    if (n < 1 || n > kMaxTableN) throw UsageError(name + ": n must be in 1..24");
    if (bent && (n % 2 != 0 || n < 2)) throw UsageError("bent_chain needs an even n >= 2");
    if (!bent && (n % 2 != 1 || n < 3)) throw UsageError("semibent_chain needs an odd n >= 3");
    const int pairs = static_cast<int>(bent ? n / 2 : (n - 1) / 2);
    out.fn = VectorialFn::boolean(pair_chain(static_cast<int>(n), pairs));
    out.expected.spectrum_class = bent ? SpectrumClass::bent : SpectrumClass::semi_bent;
    return out;
  }
  if (name == "monomial") {
    check_no_extra(params, name, {"n", "mask"});
    const auto n = require(params, name, "n");
    const auto mask = require(params, name, "mask");
    if (n < 1 || n > kMaxTableN) throw UsageError("monomial: n must be in 1..24");
    if (mask < 0 || (static_cast<Word>(mask) & ~low_mask(static_cast<int>(n))) != 0) {
      throw UsageError("monomial: mask uses variables beyond n");
    }
    out.fn = VectorialFn::boolean(AnfPoly::monomial(static_cast<int>(n), static_cast<Word>(mask)));
    return out;
  }
  throw UsageError("unknown catalog entry '" + name + "'");
}

}  // namespace flatlab
