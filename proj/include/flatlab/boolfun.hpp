#pragma once

// Boolean functions in algebraic normal form and as truth tables.
//
// A monomial x_I is stored as the mask with bit i-1 set for every i in I;
// the constant 1 is the empty mask. Truth-table index of the point x is
// sum x_i 2^{i-1}.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatlab/errors.hpp"
#include "flatlab/f2linalg.hpp"

namespace flatlab {

inline constexpr int kMaxTableN = 24;

struct Monomial {
  Word mask = 0;

  int degree() const { return std::popcount(mask); }
  bool is_constant() const { return mask == 0; }
  // 1-based variable indices, increasing.
  std::vector<int> vars() const;
  bool eval(Word x) const { return (x & mask) == mask; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class AnfPoly {
 public:
  AnfPoly() = default;
  explicit AnfPoly(int n) : n_(check_n(n)) {}
  // Duplicate masks cancel in pairs (XOR semantics).
  AnfPoly(int n, std::vector<Word> masks);

  static AnfPoly constant(int n, bool one);
  static AnfPoly monomial(int n, Word mask);

  int n() const { return n_; }
  // Sorted by mask value, no duplicates.
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const { return !terms_.empty() && terms_.front().mask == 0; }
  bool eval(Word x) const;

  AnfPoly operator+(const AnfPoly& other) const;

  friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

 private:
  static int check_n(int n);

  int n_ = 0;
  std::vector<Monomial> terms_;
};

// 2^n evaluations packed 64 per word.
class TruthTable {
 public:
  TruthTable() = default;
  // Throws CapacityError for n > 24.
  explicit TruthTable(int n);
  static TruthTable from_bits(int n, std::span<const std::uint8_t> bits);

  int n() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  bool get(Word x) const { return ((words_[x >> 6] >> (x & 63)) & 1U) != 0; }
  void set(Word x, bool v) {
    const Word bit = Word{1} << (x & 63);
    if (v) {
      words_[x >> 6] |= bit;
    } else {
      words_[x >> 6] &= ~bit;
    }
  }
  void flip(Word x) { words_[x >> 6] ^= Word{1} << (x & 63); }
  std::size_t weight() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> mutable_words() { return words_; }

  TruthTable& operator^=(const TruthTable& other);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_ = 0;
  std::vector<Word> words_;
};

// In-place binary Moebius transform (an involution) on a packed table.
void moebius_transform(TruthTable& t);

TruthTable truth_table_from_anf(const AnfPoly& f);
AnfPoly anf_from_truth_table(const TruthTable& t);

// Maximum term degree; the zero function reports 0 (check is_zero()).
int algebraic_degree(const AnfPoly& f);
bool is_homogeneous(const AnfPoly& f, int k);
AnfPoly homogeneous_part(const AnfPoly& f, int k);
// Terms of degree < k removed.
AnfPoly strip_below(const AnfPoly& f, int k);

// Replaces every term's variable set by its complement in [n]. Throws
// DomainError if f has a constant term.
AnfPoly complement_function(const AnfPoly& f);

struct IntersectProfile {
  enum class Kind {
    empty,             // zero function, no terms
    single_term,       // one term: d-intersecting for any admissible d
    intersecting,      // all pairwise intersections equal `common`
    not_intersecting,
  };
  Kind kind = Kind::empty;
  int d = 0;
  Word common = 0;
};

IntersectProfile intersect_profile(const AnfPoly& f);

// perm[i] is the 0-based image of variable index i. Throws UsageError if perm
// is not a bijection on {0..n-1}.
AnfPoly permute_variables(const AnfPoly& f, std::span<const int> perm);

// Linear change of variables: returns g with g(x) = f(L x).
AnfPoly compose_linear(const AnfPoly& f, const F2Matrix& l);

// Canonical text: terms in mask order joined by " + ", e.g. "x1*x2 + x3";
// the zero function prints as "0".
std::string to_string(const AnfPoly& f);

class AnfSyntaxError : public UsageError {
 public:
  AnfSyntaxError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar: anf := term ('+' term)* ; term := '1' | var ('*' var)* ;
// var := 'x' integer. Whitespace is ignored, duplicate terms cancel. A lone
// "0" is accepted for the zero function. Variable indices are 1-based, <= n.
// Error positions are reported relative to (first_line, first_column), which
// lets callers parse a slice of a larger document.
AnfPoly parse_anf(std::string_view text, int n, int first_line = 1, int first_column = 1);

}  // namespace flatlab
