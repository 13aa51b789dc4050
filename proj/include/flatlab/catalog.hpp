#pragma once

// Named reference functions.
//
//   monomial_chain(n, j, k)  x^{1 + 2^j + ... + 2^{j(k-1)}} on F_{2^n}
//   inverse(n)               x^{2^n - 2}
//   gold(n, j)               x^{1 + 2^j}
//   bent_chain(n)            x1x2 + x3x4 + ... + x_{n-1}x_n, n even
//   semibent_chain(n)        x1x2 + ... + x_{n-2}x_{n-1},    n odd
//   monomial(n, vars)        x_I, vars given as a bit mask of 1-based indices

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatlab/vecfun.hpp"
#include "flatlab/walsh.hpp"

namespace flatlab {

using CatalogParams = std::map<std::string, std::int64_t>;

struct ExpectedProperties {
  std::vector<int> sum_free_orders;  // k for which the function is kth-order sum-free
  std::optional<SpectrumClass> spectrum_class;
};

struct CatalogFunction {
  std::string name;
  CatalogParams params;
  VectorialFn fn;
  ExpectedProperties expected;
  std::vector<std::string> warnings;
};

struct CatalogInfo {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<CatalogInfo>& catalog_entries();

// Throws UsageError for unknown names, missing parameters, or invalid parity
// of n for the bent/semi-bent chains. gcd(j, n) != 1 only adds a warning.
CatalogFunction build(const std::string& name, const CatalogParams& params);

// Optional field modulus applied to the univariate families.
CatalogFunction build(const std::string& name, const CatalogParams& params,
                      std::optional<std::uint32_t> modulus);

}  // namespace flatlab
