#include "flatlab/boolfun.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace flatlab {

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  for (Word m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int AnfPoly::check_n(int n) {
  if (n < 0 || n > kMaxBits) throw UsageError("number of variables must be in 0..64");
  return n;
}

AnfPoly::AnfPoly(int n, std::vector<Word> masks) : n_(check_n(n)) {
  const Word allowed = low_mask(n);
  for (Word m : masks) {
    if ((m & ~allowed) != 0) throw UsageError("monomial uses a variable beyond x" + std::to_string(n));
  }
  std::sort(masks.begin(), masks.end());
  terms_.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size();) {
    std::size_t j = i;
    while (j < masks.size() && masks[j] == masks[i]) ++j;
    if ((j - i) % 2 == 1) terms_.push_back(Monomial{masks[i]});
    i = j;
  }
}

AnfPoly AnfPoly::constant(int n, bool one) {
  return one ? AnfPoly(n, {0}) : AnfPoly(n);
}

AnfPoly AnfPoly::monomial(int n, Word mask) { return AnfPoly(n, {mask}); }

bool AnfPoly::eval(Word x) const {
  bool v = false;
  for (const auto& t : terms_) v ^= t.eval(x);
  return v;
}

AnfPoly AnfPoly::operator+(const AnfPoly& other) const {
  if (other.n_ != n_) throw UsageError("adding functions with different n");
  std::vector<Word> masks;
  masks.reserve(terms_.size() + other.terms_.size());
  for (const auto& t : terms_) masks.push_back(t.mask);
  for (const auto& t : other.terms_) masks.push_back(t.mask);
  return AnfPoly(n_, std::move(masks));
}

TruthTable::TruthTable(int n) : n_(n) {
  if (n < 0) throw UsageError("truth table needs n >= 0");
  if (n > kMaxTableN) {
    throw CapacityError("truth tables are limited to n <= 24, got n=" + std::to_string(n));
  }
  words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
}

TruthTable TruthTable::from_bits(int n, std::span<const std::uint8_t> bits) {
  TruthTable t(n);
  if (bits.size() != t.size()) throw UsageError("truth table needs exactly 2^n entries");
  for (std::size_t x = 0; x < bits.size(); ++x) {
    if (bits[x] > 1) throw UsageError("truth table entries must be 0 or 1");
    if (bits[x]) t.set(x, true);
  }
  return t;
}

std::size_t TruthTable::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.n_ != n_) throw UsageError("truth table size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void moebius_transform(TruthTable& t) {
  static constexpr std::array<Word, 6> kLow = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
  };
  auto words = t.mutable_words();
  const int in_word = std::min(t.n(), 6);
  for (Word& w : words) {
    for (int j = 0; j < in_word; ++j) w ^= (w & kLow[static_cast<std::size_t>(j)]) << (1U << j);
  }
  for (std::size_t stride = 1; stride < words.size(); stride <<= 1) {
    for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
      for (std::size_t i = 0; i < stride; ++i) words[base + stride + i] ^= words[base + i];
    }
  }
}

TruthTable truth_table_from_anf(const AnfPoly& f) {
  TruthTable t(f.n());
  for (const auto& term : f.terms()) t.set(term.mask, true);
  moebius_transform(t);
  return t;
}

AnfPoly anf_from_truth_table(const TruthTable& t) {
  TruthTable coeffs = t;
  moebius_transform(coeffs);
  std::vector<Word> masks;
  const auto words = coeffs.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (Word w = words[i]; w != 0; w &= w - 1) {
      masks.push_back((static_cast<Word>(i) << 6) | static_cast<Word>(std::countr_zero(w)));
    }
  }
  return AnfPoly(t.n(), std::move(masks));
}

int algebraic_degree(const AnfPoly& f) {
  int d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.degree());
  return d;
}

bool is_homogeneous(const AnfPoly& f, int k) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [k](const Monomial& t) { return t.degree() == k; });
}

AnfPoly homogeneous_part(const AnfPoly& f, int k) {
  std::vector<Word> masks;
  for (const auto& t : f.terms()) {
    if (t.degree() == k) masks.push_back(t.mask);
  }
  return AnfPoly(f.n(), std::move(masks));
}

AnfPoly strip_below(const AnfPoly& f, int k) {
  std::vector<Word> masks;
  for (const auto& t : f.terms()) {
    if (t.degree() >= k) masks.push_back(t.mask);
  }
  return AnfPoly(f.n(), std::move(masks));
}

AnfPoly complement_function(const AnfPoly& f) {
  if (f.has_constant_term()) {
    throw DomainError("complement is undefined for a function with a constant term");
  }
  const Word all = low_mask(f.n());
  std::vector<Word> masks;
  masks.reserve(f.term_count());
  for (const auto& t : f.terms()) masks.push_back(all & ~t.mask);
  return AnfPoly(f.n(), std::move(masks));
}

IntersectProfile intersect_profile(const AnfPoly& f) {
  const auto& terms = f.terms();
  IntersectProfile p;
  if (terms.empty()) return p;
  if (terms.size() == 1) {
    p.kind = IntersectProfile::Kind::single_term;
    return p;
  }
  const Word common = terms[0].mask & terms[1].mask;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if ((terms[i].mask & terms[j].mask) != common) {
        p.kind = IntersectProfile::Kind::not_intersecting;
        return p;
      }
    }
  }
  p.kind = IntersectProfile::Kind::intersecting;
  p.common = common;
  p.d = std::popcount(common);
  return p;
}

AnfPoly permute_variables(const AnfPoly& f, std::span<const int> perm) {
  const int n = f.n();
  if (static_cast<int>(perm.size()) != n) throw UsageError("permutation length differs from n");
  Word seen = 0;
  for (int target : perm) {
    if (target < 0 || target >= n || ((seen >> target) & 1U)) {
      throw UsageError("variable map is not a permutation of [n]");
    }
    seen |= Word{1} << target;
  }
  std::vector<Word> masks;
  masks.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Word out = 0;
    for (Word m = t.mask; m != 0; m &= m - 1) {
      out |= Word{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
    }
    masks.push_back(out);
  }
  return AnfPoly(n, std::move(masks));
}

AnfPoly compose_linear(const AnfPoly& f, const F2Matrix& l) {
  const int n = f.n();
  if (l.nrows() != n || l.ncols() != n) throw UsageError("compose_linear: matrix must be n x n");
  const TruthTable t = truth_table_from_anf(f);
  TruthTable out(n);
  for (Word x = 0; x < (Word{1} << n); ++x) {
    if (t.get(l.apply(BitVector(n, x)).word())) out.set(x, true);
  }
  return anf_from_truth_table(out);
}

std::string to_string(const AnfPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.is_constant()) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v : t.vars()) {
      if (!first) out += "*";
      out += "x" + std::to_string(v);
      first = false;
    }
  }
  return out;
}

AnfSyntaxError::AnfSyntaxError(const std::string& what, int line, int column)
    : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class AnfParser {
 public:
  AnfParser(std::string_view text, int n, int line, int column)
      : text_(text), n_(n), line_(line), column_(column) {}

  AnfPoly parse() {
    std::vector<Word> masks;
    skip_space();
    if (at_end()) fail("expected a term");
    if (peek() == '0') {
      advance();
      skip_space();
      if (!at_end()) fail("unexpected input after 0");
      return AnfPoly(n_);
    }
    masks.push_back(term());
    skip_space();
    while (!at_end()) {
      if (peek() != '+') fail(std::string("expected '+', found '") + peek() + "'");
      advance();
      skip_space();
      masks.push_back(term());
      skip_space();
    }
    return AnfPoly(n_, std::move(masks));
  }

 private:
  Word term() {
    if (at_end()) fail("expected a term");
    if (peek() == '1') {
      advance();
      return 0;
    }
    Word mask = var();
    skip_space();
    while (!at_end() && peek() == '*') {
      advance();
      skip_space();
      mask |= var();
      skip_space();
    }
    return mask;
  }

  Word var() {
    if (at_end() || peek() != 'x') fail("expected a variable 'x<index>' or '1'");
    const int line = line_;
    const int column = column_;
    advance();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    long index = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      index = index * 10 + (peek() - '0');
      if (index > 1000) break;
      advance();
    }
    if (index < 1 || index > n_) {
      throw AnfSyntaxError("variable index " + std::to_string(index) + " outside 1.." + std::to_string(n_),
                           line, column);
    }
    return Word{1} << (index - 1);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { throw AnfSyntaxError(what, line_, column_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  int line_;
  int column_;
};

}  // namespace

AnfPoly parse_anf(std::string_view text, int n, int first_line, int first_column) {
  if (n < 0 || n > kMaxBits) throw UsageError("number of variables must be in 0..64");
  return AnfParser(text, n, first_line, first_column).parse();
}

}  // namespace flatlab
