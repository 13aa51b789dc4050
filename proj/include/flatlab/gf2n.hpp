#pragma once

// Arithmetic in F_{2^n} under a polynomial basis. The coefficient of x^{i-1}
// is identified with coordinate x_i of F_2^n.

#include <cstdint>
#include <optional>

#include "flatlab/vecfun.hpp"

namespace flatlab {

inline constexpr int kMinFieldDegree = 2;
inline constexpr int kMaxFieldDegree = 16;

using FieldElement = std::uint32_t;

bool is_irreducible(std::uint32_t poly);
// Lexicographically smallest irreducible polynomial of degree n, as a bitmask
// (bit i = coefficient of x^i); e.g. n = 5 gives x^5 + x^2 + 1 = 0x25.
std::uint32_t default_modulus(int n);

class FieldSpec {
 public:
  // Throws UsageError if n is outside 2..16 or modulus is not an irreducible
  // polynomial of degree n.
  explicit FieldSpec(int n, std::optional<std::uint32_t> modulus = std::nullopt);

  int n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldElement size() const { return FieldElement{1} << n_; }

 private:
  int n_;
  std::uint32_t modulus_;
};

FieldElement field_mul(const FieldSpec& spec, FieldElement a, FieldElement b);
FieldElement field_pow(const FieldSpec& spec, FieldElement a, std::uint64_t e);

// x -> x^e as an (n,n)-function; 0 maps to 0 (so e = 2^n - 2 is the inverse).
VectorialFn power_map(const FieldSpec& spec, std::uint64_t e);

}  // namespace flatlab
