#include "flatlab/walsh.hpp"

#include <algorithm>
#include <cstdlib>

#include "flatlab/errors.hpp"

namespace flatlab {

namespace {

BigInt to_big(__int128 v) {
  BigInt hi = static_cast<std::int64_t>(v >> 64);
  BigInt lo = static_cast<std::uint64_t>(v);
  return (hi << 64) + lo;
}

}  // namespace

std::int64_t WalshSpectrum::max_abs() const {
  std::int64_t best = 0;
  for (auto v : values) best = std::max(best, std::abs(v));
  return best;
}

BigInt WalshSpectrum::fourth_power_sum() const {
  // |W| <= 2^24, so each W^4 <= 2^96 and 2^24 of them fit below 2^121.
  unsigned __int128 acc = 0;
  for (auto v : values) {
    const auto sq = static_cast<unsigned __int128>(v * v);
    acc += sq * sq;
  }
  return to_big(static_cast<__int128>(acc));
}

BigInt WalshSpectrum::square_sum() const {
  BigInt acc = 0;
  for (auto v : values) acc += BigInt(v * v);
  return acc;
}

std::int64_t VectorialSpectrum::max_abs() const {
  std::int64_t best = 0;
  for (const auto& c : components) best = std::max(best, c.max_abs());
  return best;
}

BigInt VectorialSpectrum::fourth_power_sum() const {
  BigInt acc = 0;
  for (const auto& c : components) acc += c.fourth_power_sum();
  return acc;
}

std::vector<std::int64_t> VectorialSpectrum::flatten() const {
  std::vector<std::int64_t> out;
  for (const auto& c : components) out.insert(out.end(), c.values.begin(), c.values.end());
  return out;
}

const char* to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::bent:
      return "bent";
    case SpectrumClass::semi_bent:
      return "semi_bent";
    case SpectrumClass::other:
      return "other";
  }
  return "other";
}

WalshSpectrum wht(const TruthTable& f) {
  WalshSpectrum s;
  s.n = f.n();
  s.values.resize(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) s.values[x] = f.get(x) ? -1 : 1;
  auto& v = s.values;
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  return s;
}

VectorialSpectrum vectorial_spectrum(const VectorialFn& f) {
  VectorialSpectrum s;
  s.n = f.n();
  s.m = f.m();
  const std::uint32_t count = (f.m() >= 32) ? 0xFFFFFFFFU : ((1U << f.m()) - 1);
  s.components.reserve(count);
  for (std::uint32_t b = 1; b != 0 && b <= count; ++b) s.components.push_back(wht(component_table(f, b)));
  return s;
}

BigInt fourth_power_sum(const WalshSpectrum& s) { return s.fourth_power_sum(); }
BigInt fourth_power_sum(const VectorialSpectrum& s) { return s.fourth_power_sum(); }

BigInt count_nonvanishing_2flats_walsh(int n, int m, const BigInt& omega) {
  const BigInt numerator = (pow2(static_cast<unsigned>(4 * n)) * (pow2(static_cast<unsigned>(m)) - 1)) - omega;
  const BigInt denominator = 3 * pow2(static_cast<unsigned>(n + m + 3));
  if (numerator % denominator != 0) {
    throw InternalError("spectral 2-flat count is not integral: " + numerator.str() + " / " +
                        denominator.str());
  }
  return numerator / denominator;
}

BigInt count_nonvanishing_2flats_walsh(const VectorialFn& f) {
  return count_nonvanishing_2flats_walsh(f.n(), f.m(), vectorial_spectrum(f).fourth_power_sum());
}

std::int64_t nonlinearity(const VectorialFn& f) {
  const std::int64_t max_abs = vectorial_spectrum(f).max_abs();
  return (std::int64_t{1} << (f.n() - 1)) - max_abs / 2;
}

SpectrumClass classify(const WalshSpectrum& s) {
  if (s.n % 2 == 0) {
    const std::int64_t target = std::int64_t{1} << (s.n / 2);
    const bool bent = std::all_of(s.values.begin(), s.values.end(),
                                  [target](std::int64_t v) { return std::abs(v) == target; });
    return bent ? SpectrumClass::bent : SpectrumClass::other;
  }
  const std::int64_t target = std::int64_t{1} << ((s.n + 1) / 2);
  const bool semi = std::all_of(s.values.begin(), s.values.end(),
                                [target](std::int64_t v) { return v == 0 || std::abs(v) == target; });
  return semi ? SpectrumClass::semi_bent : SpectrumClass::other;
}

}  // namespace flatlab
