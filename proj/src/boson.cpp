#include "ncorder/boson.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace ncorder {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view letter_symbol(Letter letter, Notation notation) {
  if (letter == Letter::Annihilator) return "a";
  return notation == Notation::Ascii ? "ad" : "a†";
}

Word Word::from_compact(std::string_view compact) {
  std::vector<Letter> letters;
  letters.reserve(compact.size());
  for (char c : compact) {
    if (c == 'a') {
      letters.push_back(Letter::Annihilator);
    } else if (c == 'd') {
      letters.push_back(Letter::Creator);
    } else {
      throw std::invalid_argument("compact word may only contain 'a' and 'd'");
    }
  }
  return Word(std::move(letters));
}

std::size_t Word::annihilators() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::Annihilator));
}

std::size_t Word::creators() const { return letters_.size() - annihilators(); }

Word Word::operator+(const Word& other) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(letters));
}

std::string Word::render(Notation notation) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letter_symbol(letters_[i], notation);
  }
  return out;
}

std::string Word::compact() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out += l == Letter::Annihilator ? 'a' : 'd';
  return out;
}

namespace {

std::vector<Term> normalize(std::vector<Term> terms) {
  std::map<Word, BigInt> merged;
  for (auto& term : terms) merged[std::move(term.word)] += term.coefficient;
  std::vector<Term> out;
  out.reserve(merged.size());
  for (auto& [word, coefficient] : merged) {
    if (coefficient != 0) out.push_back({coefficient, word});
  }
  return out;
}

}  // namespace

Expression::Expression(Word word) { terms_.push_back({BigInt(1), std::move(word)}); }

Expression::Expression(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

std::size_t Expression::total_letters() const {
  std::size_t total = 0;
  for (const auto& term : terms_) total += term.word.size();
  return total;
}

std::string Expression::render(Notation notation) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& term = terms_[i];
    if (i) out += " + ";
    if (term.word.empty()) {
      out += to_string(term.coefficient);
      continue;
    }
    if (term.coefficient != 1) out += to_string(term.coefficient) + " ";
    out += term.word.render(notation);
  }
  return out;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace detail {

Expression sum(const Expression& lhs, const Expression& rhs) {
  std::vector<Term> terms = lhs.terms();
  terms.insert(terms.end(), rhs.terms().begin(), rhs.terms().end());
  return Expression(std::move(terms));
}

Expression multiply(const Expression& lhs, const Expression& rhs, const ExpansionBudget& budget) {
  // Letters in the unmerged product: every left word appears |rhs| times and
  // every right word |lhs| times.
  const unsigned __int128 letters =
      static_cast<unsigned __int128>(rhs.size()) * lhs.total_letters() +
      static_cast<unsigned __int128>(lhs.size()) * rhs.total_letters();
  if (letters > budget.max_letters) {
    throw BudgetExceeded("expansion exceeds the letter budget of " + std::to_string(budget.max_letters));
  }
  std::vector<Term> terms;
  terms.reserve(lhs.size() * rhs.size());
  for (const auto& l : lhs.terms()) {
    for (const auto& r : rhs.terms()) terms.push_back({l.coefficient * r.coefficient, l.word + r.word});
  }
  return Expression(std::move(terms));
}

Expression power(const Expression& base, std::uint64_t exponent, const ExpansionBudget& budget) {
  Expression result(Word{});
  Expression square = base;
  // Binary powering; associativity keeps the letter order of repeated products.
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, square, budget);
    exponent >>= 1U;
    if (exponent > 0) square = multiply(square, square, budget);
  }
  return result;
}

}  // namespace detail

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExpansionBudget& budget) : text_(text), budget_(budget) {}

  Expression parse() {
    skip_space();
    if (at_end()) return Expression(Word{});
    Expression result = parse_sum();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool starts_factor() const {
    if (at_end()) return false;
    return text_[pos_] == 'a' || text_[pos_] == '(';
  }

  Expression parse_sum() {
    Expression result = parse_term();
    for (;;) {
      skip_space();
      if (at_end() || text_[pos_] != '+') return result;
      ++pos_;
      result = detail::sum(result, parse_term());
    }
  }

  Expression parse_term() {
    skip_space();
    Expression result(Word{});
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      result = Expression(std::vector<Term>{{parse_integer(), Word{}}});
      any = true;
    }
    for (;;) {
      skip_space();
      bool starred = false;
      if (any && !at_end() && text_[pos_] == '*') {
        ++pos_;
        skip_space();
        starred = true;
      }
      if (!starts_factor()) {
        if (starred) fail("expected a factor after '*'");
        break;
      }
      result = detail::multiply(result, parse_factor(), budget_);
      any = true;
    }
    if (!any) fail(at_end() ? "unexpected end of input" : "expected a term");
    return result;
  }

  Expression parse_factor() {
    Expression base = parse_primary();
    skip_space();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a nonnegative integer exponent");
      }
      const std::size_t start = pos_;
      std::uint64_t exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (exponent > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
          throw BudgetExceeded("exponent overflow at position " + std::to_string(start));
        }
        exponent = exponent * 10 + digit;
        ++pos_;
      }
      base = detail::power(base, exponent, budget_);
    }
    return base;
  }

  Expression parse_primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Expression inner = parse_sum();
      skip_space();
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (text_[pos_] != 'a') fail("expected 'a', 'ad' or '('");
    ++pos_;
    if (!at_end() && text_[pos_] == 'd') {
      ++pos_;
      return Expression(Word({Letter::Creator}));
    }
    static constexpr std::string_view dagger = "†";
    if (text_.substr(pos_, dagger.size()) == dagger) {
      pos_ += dagger.size();
      return Expression(Word({Letter::Creator}));
    }
    return Expression(Word({Letter::Annihilator}));
  }

  BigInt parse_integer() {
    BigInt value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::string_view text_;
  const ExpansionBudget& budget_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text, const ExpansionBudget& budget) {
  return Parser(text, budget).parse();
}

Word family_word(unsigned r, unsigned s, unsigned n, const ExpansionBudget& budget) {
  if (r == 0 || s == 0) throw std::invalid_argument("family_word requires r, s >= 1");
  const std::uint64_t letters = static_cast<std::uint64_t>(r + s) * n;
  if (letters > budget.max_letters) {
    throw BudgetExceeded("expansion exceeds the letter budget of " + std::to_string(budget.max_letters));
  }
  std::vector<Letter> out;
  out.reserve(letters);
  for (unsigned k = 0; k < n; ++k) {
    out.insert(out.end(), r, Letter::Annihilator);
    out.insert(out.end(), s, Letter::Creator);
  }
  return Word(std::move(out));
}

Expression family_sum(unsigned r, unsigned s, unsigned n, const ExpansionBudget& budget) {
  if (r == 0 || s == 0) throw std::invalid_argument("family_sum requires r, s >= 1");
  const Expression factor(std::vector<Term>{{BigInt(1), Word(std::vector<Letter>(r, Letter::Annihilator))},
                                            {BigInt(1), Word(std::vector<Letter>(s, Letter::Creator))}});
  Expression result(Word{});
  for (unsigned k = 0; k < n; ++k) result = detail::multiply(result, factor, budget);
  return result;
}

}  // namespace ncorder
