#include "flatlab/gf2n.hpp"

#include <bit>
#include <string>

#include "flatlab/errors.hpp"

namespace flatlab {

namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(int n) {
  if (n < 1 || n > kMaxFieldDegree) throw UsageError("field degree must be in 1..16");
  for (std::uint32_t p = (1U << n) | 1U; p < (2U << n); p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw InternalError("no irreducible polynomial found");
}

FieldSpec::FieldSpec(int n, std::optional<std::uint32_t> modulus) : n_(n) {
  if (n < kMinFieldDegree || n > kMaxFieldDegree) {
    throw UsageError("field degree must be in 2..16, got " + std::to_string(n));
  }
  modulus_ = modulus.value_or(default_modulus(n));
  if (poly_degree(modulus_) != n || !is_irreducible(modulus_)) {
    throw UsageError("modulus is not an irreducible polynomial of degree " + std::to_string(n));
  }
}

FieldElement field_mul(const FieldSpec& spec, FieldElement a, FieldElement b) {
  std::uint64_t prod = 0;
  for (std::uint64_t x = a, y = b; y != 0; y >>= 1, x <<= 1) {
    if (y & 1U) prod ^= x;
  }
  return static_cast<FieldElement>(poly_mod(prod, spec.modulus()));
}

FieldElement field_pow(const FieldSpec& spec, FieldElement a, std::uint64_t e) {
  FieldElement result = 1;
  for (FieldElement base = a; e != 0; e >>= 1) {
    if (e & 1U) result = field_mul(spec, result, base);
    base = field_mul(spec, base, base);
  }
  return result;
}

VectorialFn power_map(const FieldSpec& spec, std::uint64_t e) {
  const std::uint64_t order = spec.size() - 1;
  if (e >= order) {
    throw UsageError("power_map exponent must be below 2^n - 1, got " + std::to_string(e));
  }
  std::vector<std::uint32_t> values(spec.size());
  for (FieldElement x = 1; x < spec.size(); ++x) values[x] = field_pow(spec, x, e);
  values[0] = 0;
  return VectorialFn::from_values(spec.n(), spec.n(), std::move(values));
}

}  // namespace flatlab
