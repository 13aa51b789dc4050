#pragma once

// Walsh-Hadamard spectra and the spectral count of nonvanishing 2-flats.
// The transform uses the standard dot product <x, a> = popcount(x & a) mod 2.

#include <cstdint>
#include <vector>

#include "flatlab/bigint.hpp"
#include "flatlab/boolfun.hpp"
#include "flatlab/vecfun.hpp"

namespace flatlab {

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;  // W_f(a), indexed by a

  std::int64_t max_abs() const;
  BigInt fourth_power_sum() const;
  BigInt square_sum() const;
};

// Spectra of all nonzero components f_b, entry b - 1 holding W_{f_b}.
struct VectorialSpectrum {
  int n = 0;
  int m = 0;
  std::vector<WalshSpectrum> components;

  std::int64_t max_abs() const;
  BigInt fourth_power_sum() const;
  // The multiset union, components concatenated in order of b.
  std::vector<std::int64_t> flatten() const;
};

enum class SpectrumClass { bent, semi_bent, other };

const char* to_string(SpectrumClass c);

// Fast butterfly on +-1 values, O(n 2^n).
WalshSpectrum wht(const TruthTable& f);
VectorialSpectrum vectorial_spectrum(const VectorialFn& f);

BigInt fourth_power_sum(const WalshSpectrum& s);
BigInt fourth_power_sum(const VectorialSpectrum& s);

// (2^{4n}(2^m - 1) - omega) / (3 * 2^{n+m+3}); throws InternalError if the
// quotient is not integral.
BigInt count_nonvanishing_2flats_walsh(int n, int m, const BigInt& omega);
BigInt count_nonvanishing_2flats_walsh(const VectorialFn& f);

// 2^{n-1} - max|W| / 2 over the vectorial spectrum.
std::int64_t nonlinearity(const VectorialFn& f);

// Bent: every |W| = 2^{n/2} (n even). Semi-bent: values in {0, +-2^{(n+1)/2}}
// (n odd).
SpectrumClass classify(const WalshSpectrum& s);

}  // namespace flatlab
