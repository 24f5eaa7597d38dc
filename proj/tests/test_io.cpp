#include <doctest.h>

#include <random>
#include <algorithm>
#include <cmath>

#include "ncorder/gf_system.hpp"
#include "ncorder/json_io.hpp"
#include "ncorder/render.hpp"
#include "ncorder/verify.hpp"

using namespace ncorder;

TEST_CASE("big integers in JSON") {
  CHECK(bigint_to_json(BigInt(42)).is_number_integer());
  const BigInt big = parse_bigint("123456789012345678901234567890");
  CHECK(bigint_to_json(big) == Json("123456789012345678901234567890"));
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(bigint_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(bigint_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("normal form JSON is ordered and round trips") {
  const auto nf = normal_order_p(parse_expression("a a ad ad + 3 a ad"));
  const Json j = normal_form_to_json(nf);
  CHECK(j["schema"] == "ncorder/normal-form/1");
  std::vector<std::pair<int, int>> order;
  for (const auto& t : j["terms"]) order.emplace_back(t["adag"].get<int>(), t["a"].get<int>());
  CHECK(order == std::vector<std::pair<int, int>>{{2, 2}, {1, 1}, {0, 0}});
  CHECK(j["terms"][2]["coeffs"] == Json::array({4, 1}));
  CHECK(normal_form_from_json(j) == nf);
  CHECK(normal_form_from_json(Json::parse(j.dump())) == nf);
}

TEST_CASE("contraction JSON round trips") {
  for (const auto& c : enumerate_contractions(Word::from_compact("aadad"))) {
    const Json j = contraction_to_json(c, {true, true});
    CHECK(contraction_from_json(Json::parse(j.dump())) == c);
    CHECK(j["stats"]["edges"] == c.edges().size());
  }
  const Json bad = {{"word", "a ad"}, {"edges", Json::array({Json::array({2, 1})})}};
  CHECK_THROWS_AS(contraction_from_json(bad), std::invalid_argument);
  CHECK_THROWS(contraction_from_json(Json{{"edges", Json::array()}}));
}

TEST_CASE("tree JSON round trips") {
  for (unsigned k = 1; k <= 3; ++k)
    for (std::size_t n = 0; n <= 5; ++n)
      for (const auto& t : enumerate_kary(k, n)) CHECK(tree_from_json(Json::parse(tree_to_json(t).dump()), k) == t);
  CHECK(tree_to_json(KaryTree::leaf(3)) == Json::parse("[null,null,null]"));
  CHECK_THROWS_AS(tree_from_json(Json::parse("[null]"), 2), std::invalid_argument);
}

TEST_CASE("series JSON rows") {
  const Json j = series_to_json(solve_B(1, 1, 3));
  CHECK(j["schema"] == "ncorder/series/1");
  CHECK(j["rows"].size() == 10);
  CHECK(j["rows"][4] == Json::array({2, 1, 3}));
  const Json a = series_to_json(solve_A(1, 2, 2));
  CHECK(a["columns"].size() == 4);
}

TEST_CASE("contraction drawings") {
  const Word w = Word::from_compact("aadd");
  const std::string null_ascii = render_contraction_ascii(Contraction(w, {}));
  CHECK(null_ascii.find("o   o   *   *") != std::string::npos);
  CHECK(null_ascii.find('+') == std::string::npos);

  const std::string null_svg = render_contraction_svg(Contraction(w, {}));
  CHECK(std::count(null_svg.begin(), null_svg.end(), '\n') > 3);
  auto occurrences = [](const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
    return n;
  };
  CHECK(occurrences(null_svg, "<circle") == 4);
  CHECK(occurrences(null_svg, "<path") == 0);
  CHECK(occurrences(null_svg, "fill:white;stroke") == 2);
  CHECK(occurrences(null_svg, "fill:black;stroke") == 2);

  // (42)(31): arcs 1-3 and 2-4 in left-to-right positions.
  const Contraction crossing(w, {{1, 3}, {2, 4}});
  const std::string svg = render_contraction_svg(crossing);
  CHECK(occurrences(svg, "<path") == 2);
  const std::string ascii = render_contraction_ascii(crossing);
  CHECK(occurrences(ascii, "-|-") == 1);

  const Contraction nested(w, {{1, 4}, {2, 3}});
  const std::string nested_ascii = render_contraction_ascii(nested);
  CHECK(nested_ascii.find("-|-") == std::string::npos);
}

TEST_CASE("semicircle arcs intersect exactly when edges cross") {
  // Circles centered on the line: two semicircles meet above it iff their spans interleave.
  auto meet = [](const Edge& e, const Edge& f) {
    const double c1 = (e.white + e.black) / 2.0, r1 = (e.black - e.white) / 2.0;
    const double c2 = (f.white + f.black) / 2.0, r2 = (f.black - f.white) / 2.0;
    const double d = std::abs(c1 - c2);
    return d < r1 + r2 && d > std::abs(r1 - r2);
  };
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = a + 1; b <= 6; ++b)
      for (std::size_t c = 1; c <= 6; ++c)
        for (std::size_t d = c + 1; d <= 6; ++d) {
          if (a == c || a == d || b == c || b == d) continue;
          CHECK(meet({a, b}, {c, d}) == edges_cross({a, b}, {c, d}));
        }
}

TEST_CASE("path drawings") {
  const std::string ascii = render_path_ascii(LLatticePath::parse("LDD"));
  CHECK(ascii.find("heights: 0 2 1 0") != std::string::npos);
  const std::string svg = render_path_svg(LLatticePath::parse("LDD"));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  const std::string m = render_path_ascii(TwoMotzkinPath::parse("UL'D"));
  CHECK(m.find("heights: 0 1 1 0") != std::string::npos);
  CHECK(render_path_svg(TwoMotzkinPath::parse("UL'D")).find("#999999") != std::string::npos);
}

TEST_CASE("tree drawings") {
  const KaryTree t = KaryTree::node(3, {KaryTree(3), KaryTree::leaf(3), KaryTree(3)});
  CHECK(render_tree_ascii(t) == "3-ary tree, 2 nodes\no\n  [1] o\n");
  const std::string svg = render_tree_svg(t);
  CHECK(std::count(svg.begin(), svg.end(), '<') > 4);
  CHECK(render_tree_ascii(KaryTree(2)).find("(empty)") != std::string::npos);
}

TEST_CASE("verify suites pass and are reproducible") {
  for (auto suite : {VerifySuite::Oracles, VerifySuite::Formulas, VerifySuite::Bijections, VerifySuite::Inequality}) {
    VerifyOptions options;
    options.max_n = suite == VerifySuite::Oracles ? 8 : (suite == VerifySuite::Inequality ? 10 : 4);
    options.samples = 40;
    const auto first = run_verify(suite, options);
    INFO(verify_suite_name(suite));
    CHECK(first.passed());
    CHECK(first.checks > 0);
    CHECK(run_verify(suite, options).checks == first.checks);
  }
  CHECK(parse_verify_suite("formulas") == VerifySuite::Formulas);
  CHECK_THROWS_AS(parse_verify_suite("nope"), std::invalid_argument);
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(random_word(a, 9) == random_word(b, 9));
}
