#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ncorder/contraction.hpp"
#include "ncorder/normal_form.hpp"
#include "oracles.hpp"

using namespace ncorder;

namespace {

std::set<std::vector<Edge>> edge_sets(const std::vector<Contraction>& cs) {
  std::set<std::vector<Edge>> out;
  for (const auto& c : cs) out.insert(c.edges());
  return out;
}

std::set<std::vector<Edge>> oracle_sets(const std::vector<oracle::Matching>& ms) {
  std::set<std::vector<Edge>> out;
  for (const auto& m : ms) {
    std::vector<Edge> edges;
    for (auto [w, b] : m) edges.push_back({w, b});
    std::sort(edges.begin(), edges.end());
    out.insert(edges);
  }
  return out;
}

}  // namespace

TEST_CASE("contractions of a a ad ad") {
  const Word w = Word::from_compact("aadd");
  const auto all = enumerate_contractions(w);
  REQUIRE(all.size() == 7);
  std::set<std::string> labels;
  for (const auto& c : all) labels.insert(c.render_labels());
  CHECK(labels == std::set<std::string>{"∅", "(42)", "(41)", "(32)", "(31)", "(41)(32)", "(42)(31)"});
  CHECK(all.front().is_null());

  const auto nc = enumerate_noncrossing(w);
  CHECK(nc.size() == 6);
  for (const auto& c : nc) CHECK(c.render_labels() != "(42)(31)");
}

TEST_CASE("small words") {
  CHECK(enumerate_contractions(Word::from_compact("da")).size() == 1);
  CHECK(enumerate_contractions(Word::from_compact("adad")).size() == 5);
  CHECK(enumerate_noncrossing(Word::from_compact("adad")).size() == 5);
  const auto empty = enumerate_noncrossing(Word{});
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().is_null());
}

TEST_CASE("enumeration order is by white then black") {
  const auto all = enumerate_contractions(Word::from_compact("aadd"));
  std::vector<std::vector<Edge>> got;
  for (const auto& c : all) got.push_back(c.edges());
  const std::vector<std::vector<Edge>> expected = {
      {}, {{2, 3}}, {{2, 4}}, {{1, 3}}, {{1, 3}, {2, 4}}, {{1, 4}}, {{1, 4}, {2, 3}}};
  CHECK(got == expected);
}

TEST_CASE("stats") {
  const Word w = Word::from_compact("aadd");
  const auto crossing = stats(Contraction(w, {{1, 3}, {2, 4}}));
  CHECK(crossing.crossings == 1);
  CHECK(crossing.nestings == 0);
  const auto nested = stats(Contraction(w, {{1, 4}, {2, 3}}));
  CHECK(nested.crossings == 0);
  CHECK(nested.nestings == 1);
  CHECK(nested.covers == 1);
  const auto null = stats(Contraction(w, {}));
  CHECK(null == ContractionStats{0, 0, 0, 0, 2, 2});
}

TEST_CASE("invalid contractions are rejected") {
  const Word w = Word::from_compact("aadd");
  CHECK_THROWS_AS(Contraction(w, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Contraction(w, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Contraction(w, {{1, 3}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Contraction(w, {{1, 9}}), std::invalid_argument);
}

TEST_CASE("enumeration bound") {
  const Word long_word(std::vector<Letter>(21, Letter::Annihilator));
  CHECK_THROWS_AS(enumerate_contractions(long_word), EnumerationBoundExceeded);
  CHECK_NOTHROW(enumerate_noncrossing(long_word));
  EnumerationLimits tight{4, 4};
  CHECK_THROWS_AS(enumerate_noncrossing(Word::from_compact("aaddd"), tight), EnumerationBoundExceeded);
}

TEST_CASE("canonical sequential forms") {
  const Word w = Word::from_compact("aadd");
  auto form = [&](std::vector<Edge> edges) {
    return render_sequential_form(canonical_sequential_form(Contraction(w, std::move(edges))));
  };
  CHECK(form({}) == "123'4'");
  CHECK(form({{1, 3}, {2, 4}}) == "1212");
  CHECK(form({{1, 3}}) == "123'2");
  CHECK(render_sequential_form(canonical_sequential_form(Contraction(w, {})), Notation::Display) == "123′4′");

  std::set<std::string> forms;
  for (const auto& c : enumerate_contractions(w)) forms.insert(render_sequential_form(canonical_sequential_form(c)));
  CHECK(forms == std::set<std::string>{"123'4'", "123'2", "123'1", "1223'", "1213'", "1221", "1212"});
}

TEST_CASE("canonical form is injective per word") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Word w = oracle::random_word(rng, 10);
    std::set<std::vector<SequentialToken>> seen;
    std::size_t count = 0;
    for_each_contraction(w, [&](const Contraction& c) {
      seen.insert(canonical_sequential_form(c));
      ++count;
    });
    CHECK(seen.size() == count);
  }
}

TEST_CASE("enumerators agree with subset oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Word w = oracle::random_word(rng, 12);
    const auto all = enumerate_contractions(w);
    CHECK(all.size() == edge_sets(all).size());
    CHECK(edge_sets(all) == oracle_sets(oracle::all_matchings(w)));
    const auto nc = enumerate_noncrossing(w);
    CHECK(nc.size() == edge_sets(nc).size());
    CHECK(edge_sets(nc) == oracle_sets(oracle::noncrossing_matchings(w)));
    for (const auto& c : all) {
      const auto s = stats(c);
      CHECK(s.free_white + s.edges == w.annihilators());
      CHECK(s.free_black + s.edges == w.creators());
      CHECK(s.crossings + s.nestings <= s.edges * (s.edges - (s.edges > 0)) / 2);
    }
  }
}

TEST_CASE("normal_order_p of a a ad ad") {
  const auto nf = normal_order_p(parse_expression("a a ad ad"));
  CHECK(nf.coefficient({2, 2}) == PPolynomial{1});
  CHECK(nf.coefficient({1, 1}) == PPolynomial{4});
  CHECK(nf.coefficient({0, 0}) == PPolynomial{1, 1});
  CHECK(nf.entries().size() == 3);
  CHECK(nf.render() == "(a†)^2 a^2 + 4 a† a + (1 + p)");

  const auto at1 = evaluate_at_p(nf, 1);
  CHECK(at1.constant({0, 0}) == 2);
  CHECK(at1.constant({1, 1}) == 4);
  const auto at0 = evaluate_at_p(nf, 0);
  CHECK(at0 == nc_normal_order(parse_expression("a a ad ad")));
  CHECK(at0.constant({0, 0}) == 1);
}

TEST_CASE("introductory example at p = 1") {
  const auto nf = evaluate_at_p(normal_order_p(parse_expression("a ad a a ad a a")), 1);
  NormalFormPolynomial expected;
  expected.add({2, 5}, 0, 1);
  expected.add({1, 4}, 0, 4);
  expected.add({0, 3}, 0, 2);
  CHECK(nf == expected);
}

TEST_CASE("noncrossing normal order") {
  NormalFormPolynomial expected;
  expected.add({1, 1}, 0, 1);
  expected.add({0, 0}, 0, 1);
  CHECK(nc_normal_order(parse_expression("a ad")) == expected);

  const auto sq = nc_normal_order(parse_expression("(a ad)^2"));
  CHECK(sq.constant({2, 2}) == 1);
  CHECK(sq.constant({1, 1}) == 3);
  CHECK(sq.constant({0, 0}) == 1);

  const auto aad = nc_normal_order(parse_expression("a a ad"));
  CHECK(aad.constant({1, 2}) == 1);
  CHECK(aad.constant({0, 1}) == 2);
  CHECK(aad.entries().size() == 2);

  const auto empty = normal_order_p(parse_expression(""));
  CHECK(empty.coefficient({0, 0}) == PPolynomial{1});
}

TEST_CASE("edge count dp") {
  CHECK(nc_edge_counts_dp(Word::from_compact("aadd")) == std::vector<BigInt>{1, 4, 1});
  CHECK(nc_edge_counts_dp(Word::from_compact("adadad")) == std::vector<BigInt>{1, 6, 6, 1});
  CHECK(nc_edge_counts_dp(Word::from_compact("ddd")) == std::vector<BigInt>{1});
  CHECK(nc_edge_counts_dp(Word{}) == std::vector<BigInt>{1});

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = oracle::random_word(rng, 14);
    std::vector<BigInt> tally(1, 0);
    for_each_noncrossing(w, [&](const Contraction& c) {
      if (tally.size() <= c.edges().size()) tally.resize(c.edges().size() + 1, 0);
      ++tally[c.edges().size()];
    });
    CHECK(nc_edge_counts_dp(w) == tally);
  }
}

TEST_CASE("conventional ordering matches commutator rewriting") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const Word w = oracle::random_word(rng, 10);
    const auto nf = evaluate_at_p(normal_order_p(Expression(w)), 1);
    const auto expected = oracle::commutator_normal_order(w);
    CHECK(nf.entries().size() == expected.size());
    for (const auto& [mono, c] : expected) CHECK(nf.constant({mono.first, mono.second}) == c);
  }
}

TEST_CASE("stirling numbers from (ad a)^n") {
  const auto s = oracle::stirling2_table(8);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto nf = evaluate_at_p(normal_order_p(parse_expression("(ad a)^" + std::to_string(n))), 1);
    for (const auto& [m, poly] : nf.entries()) CHECK(m.adag == m.a);
    for (unsigned k = 0; k <= n; ++k) CHECK(nf.constant({k, k}) == s[n][k]);
  }
}

TEST_CASE("coefficient inequality") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const Word w = oracle::random_word(rng, 12);
    const auto nf = normal_order_p(Expression(w));
    for (const auto& [m, poly] : nf.entries()) {
      const BigInt c0 = evaluate(poly, 0);
      const BigInt c1 = evaluate(poly, 1);
      CHECK(c0 >= 0);
      CHECK(c0 <= c1);
    }
  }
}

TEST_CASE("coherent expectation") {
  const auto nf = evaluate_at_p(normal_order_p(parse_expression("(ad a)^2")), 1);
  const auto v = coherent_expectation(nf, {1.0, 1.0});
  CHECK(v.real() == doctest::Approx(6.0));
  CHECK(v.imag() == doctest::Approx(0.0));
  const auto nc = nc_normal_order(parse_expression("a ad"));
  CHECK(coherent_expectation(nc, {2.0, 0.0}).real() == doctest::Approx(5.0));
  CHECK(coherent_expectation(nc, {0.0, 0.0}).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(coherent_expectation(normal_order_p(parse_expression("a a ad ad")), {1.0, 0.0}),
                  std::invalid_argument);
}
