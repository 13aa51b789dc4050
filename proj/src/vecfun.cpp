#include "flatlab/vecfun.hpp"

#include <algorithm>
#include <utility>

#include "flatlab/errors.hpp"

namespace flatlab {

VectorialFn::VectorialFn(std::vector<AnfPoly> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw UsageError("a vectorial function needs at least one coordinate");
  if (coords_.size() > static_cast<std::size_t>(kMaxOutputs)) {
    throw UsageError("at most 32 output coordinates are supported");
  }
  n_ = coords_.front().n();
  m_ = static_cast<int>(coords_.size());
  for (const auto& c : coords_) {
    if (c.n() != n_) throw UsageError("coordinate functions disagree on the number of variables");
  }
  tables_.reserve(coords_.size());
  for (const auto& c : coords_) tables_.push_back(truth_table_from_anf(c));
  values_.assign(std::size_t{1} << n_, 0);
  for (int j = 0; j < m_; ++j) {
    const auto words = tables_[static_cast<std::size_t>(j)].words();
    const std::size_t size = std::size_t{1} << n_;
    for (std::size_t x = 0; x < size; ++x) {
      values_[x] |= static_cast<std::uint32_t>((words[x >> 6] >> (x & 63)) & 1U) << j;
    }
  }
}

VectorialFn VectorialFn::from_values(int n, int m, std::vector<std::uint32_t> values) {
  if (m < 1 || m > kMaxOutputs) throw UsageError("output dimension must be in 1..32");
  TruthTable probe(n);  // capacity check
  if (values.size() != probe.size()) throw UsageError("value table needs exactly 2^n entries");
  const std::uint32_t allowed = static_cast<std::uint32_t>(low_mask(m));
  std::vector<AnfPoly> coords;
  coords.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    TruthTable t(n);
    for (std::size_t x = 0; x < values.size(); ++x) {
      if ((values[x] & ~allowed) != 0) throw UsageError("value exceeds the output dimension");
      if ((values[x] >> j) & 1U) t.set(x, true);
    }
    coords.push_back(anf_from_truth_table(t));
  }
  return VectorialFn(std::move(coords));
}

BitVector evaluate(const VectorialFn& f, const BitVector& x) {
  if (x.length() != f.n()) throw UsageError("evaluate: input length differs from n");
  return BitVector(f.m(), f(x.word()));
}

BitVector set_sum(const VectorialFn& f, std::span<const Word> points) {
  const Word limit = Word{1} << f.n();
  std::uint32_t acc = 0;
  for (Word p : points) {
    if (p >= limit) throw UsageError("set_sum: point outside F_2^n");
    acc ^= f(p);
  }
  return BitVector(f.m(), acc);
}

int algebraic_degree(const VectorialFn& f) {
  int d = 0;
  for (const auto& c : f.coords()) d = std::max(d, algebraic_degree(c));
  return d;
}

bool is_zero(const VectorialFn& f) {
  return std::all_of(f.coords().begin(), f.coords().end(), [](const AnfPoly& c) { return c.is_zero(); });
}

bool is_homogeneous(const VectorialFn& f, int k) {
  return std::all_of(f.coords().begin(), f.coords().end(),
                     [k](const AnfPoly& c) { return is_homogeneous(c, k); });
}

AnfPoly component(const VectorialFn& f, const BitVector& b) {
  if (b.length() != f.m()) throw UsageError("component: mask length differs from m");
  AnfPoly out(f.n());
  for (int j = 0; j < f.m(); ++j) {
    if (b.test(j)) out = out + f.coord(j);
  }
  return out;
}

TruthTable component_table(const VectorialFn& f, std::uint32_t b) {
  TruthTable t(f.n());
  for (int j = 0; j < f.m(); ++j) {
    if ((b >> j) & 1U) t ^= f.table(j);
  }
  return t;
}

VectorialFn derivative(const VectorialFn& f, const BitVector& a) {
  if (a.length() != f.n()) throw UsageError("derivative: direction length differs from n");
  const Word shift = a.word();
  const auto values = f.values();
  const std::uint32_t offset = values[shift] ^ values[0];
  std::vector<std::uint32_t> out(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) out[x] = values[x] ^ values[x ^ shift] ^ offset;
  return VectorialFn::from_values(f.n(), f.m(), std::move(out));
}

VectorialFn higher_derivative(const VectorialFn& f, std::span<const BitVector> directions) {
  VectorialFn g = f;
  for (const auto& a : directions) g = derivative(g, a);
  return g;
}

namespace {

template <class Op>
VectorialFn map_coords(const VectorialFn& f, Op op) {
  std::vector<AnfPoly> coords;
  coords.reserve(f.coords().size());
  for (const auto& c : f.coords()) coords.push_back(op(c));
  return VectorialFn(std::move(coords));
}

}  // namespace

VectorialFn homogeneous_part(const VectorialFn& f, int k) {
  return map_coords(f, [k](const AnfPoly& c) { return homogeneous_part(c, k); });
}

VectorialFn strip_below(const VectorialFn& f, int k) {
  return map_coords(f, [k](const AnfPoly& c) { return strip_below(c, k); });
}

VectorialFn vect_complement(const VectorialFn& f) {
  return map_coords(f, [](const AnfPoly& c) { return complement_function(c); });
}

VectorialFn operator+(const VectorialFn& a, const VectorialFn& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw UsageError("adding functions of different shape");
  std::vector<AnfPoly> coords;
  for (int j = 0; j < a.m(); ++j) coords.push_back(a.coord(j) + b.coord(j));
  return VectorialFn(std::move(coords));
}

std::string to_string(const VectorialFn& f) {
  std::string out;
  for (const auto& c : f.coords()) {
    if (!out.empty()) out += "; ";
    out += to_string(c);
  }
  return out;
}

}  // namespace flatlab
