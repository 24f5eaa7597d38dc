#include <doctest.h>

#include <random>
#include <set>

#include "ncorder/boson.hpp"

using namespace ncorder;

namespace {

Expression words(std::initializer_list<const char*> compact) {
  std::vector<Term> terms;
  for (const char* c : compact) terms.push_back({BigInt(1), Word::from_compact(c)});
  return Expression(std::move(terms));
}

}  // namespace

TEST_CASE("parse simple words") {
  CHECK(parse_expression("a a ad ad") == Expression(Word::from_compact("aadd")));
  CHECK(parse_expression("(a ad)^2") == Expression(Word::from_compact("adad")));
  CHECK(parse_expression("a†a") == Expression(Word::from_compact("da")));
  CHECK(parse_expression("aad") == Expression(Word::from_compact("ad")));
  CHECK(parse_expression("a*ad") == Expression(Word::from_compact("ad")));
}

TEST_CASE("parse expands sums of products") {
  CHECK(parse_expression("(a + ad^2)^2") == words({"aa", "add", "dda", "dddd"}));
  CHECK(parse_expression("2 a + 3 a") == Expression(std::vector<Term>{{BigInt(5), Word::from_compact("a")}}));
  CHECK(parse_expression("a^0") == Expression(Word{}));
  CHECK(parse_expression("") == Expression(Word{}));
  CHECK(parse_expression("  7 ") == Expression(std::vector<Term>{{BigInt(7), Word{}}}));
  CHECK(parse_expression("2*(a+ad)").size() == 2);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_expression("a +"), ParseError);
  CHECK_THROWS_AS(parse_expression("(a"), ParseError);
  CHECK_THROWS_AS(parse_expression("a ^"), ParseError);
  CHECK_THROWS_AS(parse_expression("b"), ParseError);
  try {
    parse_expression("a a x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("budget guards expansion") {
  CHECK_THROWS_AS(parse_expression("(a+ad)^30"), BudgetExceeded);
  CHECK_THROWS_AS(parse_expression("a^99999999999999999999999"), BudgetExceeded);
  CHECK_THROWS_AS(parse_expression("a^2000000"), BudgetExceeded);
  CHECK_NOTHROW(parse_expression("(a+ad)^10"));
}

TEST_CASE("family words and sums") {
  CHECK(family_word(1, 1, 2) == Word::from_compact("adad"));
  CHECK(family_word(2, 1, 1) == Word::from_compact("aad"));
  CHECK(family_word(2, 2, 2) == Word::from_compact("aaddaadd"));
  CHECK(family_word(3, 2, 0).empty());
  CHECK(family_sum(1, 1, 2) == words({"aa", "ad", "da", "dd"}));
  CHECK(family_sum(1, 2, 1) == words({"a", "dd"}));
  CHECK(family_sum(1, 2, 2) == words({"aa", "add", "dda", "dddd"}));
  CHECK_THROWS_AS(family_word(0, 1, 1), std::invalid_argument);
}

TEST_CASE("family vertex counts") {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned s = 1; s <= 3; ++s) {
      for (unsigned n = 0; n <= 4; ++n) {
        const Word w = family_word(r, s, n);
        CHECK(w.annihilators() == r * n);
        CHECK(w.creators() == s * n);
        const Expression e = family_sum(r, s, n);
        CHECK(e.size() == (std::size_t{1} << n));
        for (const auto& t : e.terms()) {
          CHECK(t.word.annihilators() % r == 0);
          CHECK(t.word.creators() % s == 0);
        }
      }
    }
  }
}

TEST_CASE("expansion is linear in term count") {
  const Expression x = parse_expression("a ad + ad + a a");
  for (unsigned n = 0; n <= 5; ++n) {
    std::size_t expected = 1;
    for (unsigned k = 0; k < n; ++k) expected *= x.size();
    const Expression p = detail::power(x, n, {});
    BigInt total = 0;
    for (const auto& t : p.terms()) total += t.coefficient;
    CHECK(total == expected);
  }
}

TEST_CASE("render round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 6), coef(1, 9), count(1, 4);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term> terms;
    for (int k = count(rng); k > 0; --k) {
      std::vector<Letter> letters(static_cast<std::size_t>(len(rng)));
      for (auto& l : letters) l = coin(rng) ? Letter::Creator : Letter::Annihilator;
      terms.push_back({BigInt(coef(rng)), Word(std::move(letters))});
    }
    const Expression e(terms);
    CHECK(parse_expression(e.render()) == e);
    CHECK(parse_expression(e.render(Notation::Display)) == e);
  }
}

TEST_CASE("big coefficients survive") {
  const Expression e = parse_expression("123456789012345678901234567890 a");
  CHECK(to_string(e.terms().front().coefficient) == "123456789012345678901234567890");
  CHECK(parse_bigint("-42") == -42);
  CHECK_THROWS_AS(parse_bigint("4x"), std::invalid_argument);
}
