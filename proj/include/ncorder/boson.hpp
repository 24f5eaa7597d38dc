#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncorder/bigint.hpp"

namespace ncorder {

/// One boson operator symbol. Annihilators are drawn as white vertices,
/// creators as black vertices.
enum class Letter : std::uint8_t { Annihilator = 0, Creator = 1 };

/// Rendering style for creators: `ad` is shell safe, `a†` is for display.
enum class Notation { Ascii, Display };

std::string_view letter_symbol(Letter letter, Notation notation = Notation::Ascii);

/// An ordered sequence of letters. Positions are 1-based in the public API
/// (position i is letters()[i - 1]).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Builds a word from a compact string over {'a', 'd'}: 'a' is an
  /// annihilator, 'd' a creator ("aadd" is a a a† a†).
  static Word from_compact(std::string_view compact);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t position) const { return letters_.at(position - 1); }

  std::size_t annihilators() const;
  std::size_t creators() const;

  Word operator+(const Word& other) const;

  /// Space separated letters, "1" for the empty word.
  std::string render(Notation notation = Notation::Ascii) const;
  /// The compact {'a','d'} spelling accepted by from_compact.
  std::string compact() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

struct Term {
  BigInt coefficient;
  Word word;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A formal integer combination of words. Terms are kept sorted by word,
/// merged, and never carry a zero coefficient.
class Expression {
 public:
  Expression() = default;
  explicit Expression(Word word);
  explicit Expression(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of word lengths over all terms.
  std::size_t total_letters() const;

  std::string render(Notation notation = Notation::Ascii) const;

  friend bool operator==(const Expression&, const Expression&) = default;

 private:
  std::vector<Term> terms_;
};

/// Syntax error in the expression language; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when expansion would exceed the configured letter budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ExpansionBudget {
  /// Upper bound on the total number of letters summed over all expanded terms
  /// (before merging).
  std::uint64_t max_letters = 1'000'000;
};

/// Parses and fully expands an expression.
///
/// Grammar (whitespace insignificant):
///   expr    := term ('+' term)*
///   term    := INT? factor (('*')? factor)*  |  INT
///   factor  := primary ('^' INT)?
///   primary := 'a' | 'ad' | 'a†' | '(' expr ')'
/// The empty string denotes the empty word with coefficient 1.
Expression parse_expression(std::string_view text, const ExpansionBudget& budget = {});

/// The word (a^r (a†)^s)^n.
Word family_word(unsigned r, unsigned s, unsigned n, const ExpansionBudget& budget = {});

/// The expansion of (a^r + (a†)^s)^n: 2^n ordered factor choices.
Expression family_sum(unsigned r, unsigned s, unsigned n, const ExpansionBudget& budget = {});

namespace detail {
/// Noncommutative product with budget accounting. Exposed for tests.
Expression multiply(const Expression& lhs, const Expression& rhs, const ExpansionBudget& budget);
Expression power(const Expression& base, std::uint64_t exponent, const ExpansionBudget& budget);
Expression sum(const Expression& lhs, const Expression& rhs);
}  // namespace detail

}  // namespace ncorder
