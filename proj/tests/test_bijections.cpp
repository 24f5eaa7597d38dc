#include <doctest.h>

#include <map>
#include <set>

#include "ncorder/bijections.hpp"
#include "ncorder/closed_forms.hpp"
#include "ncorder/gf_system.hpp"

using namespace ncorder;

TEST_CASE("tree basics") {
  const KaryTree leaf = KaryTree::leaf(3);
  CHECK(leaf.size() == 1);
  const KaryTree t = KaryTree::node(3, {leaf, KaryTree(3), KaryTree::node(3, {KaryTree(3), leaf, KaryTree(3)})});
  CHECK(t.size() == 4);
  CHECK(t.subtree_size(0) == 4);
  CHECK(t.root_slot(2).size() == 2);
  CHECK(t.root_slot(1).empty());
  CHECK(t.root_slot(2) == KaryTree::node(3, {KaryTree(3), leaf, KaryTree(3)}));
  CHECK_THROWS_AS(KaryTree::node(3, {leaf}), std::invalid_argument);
}

TEST_CASE("target enumerators") {
  CHECK(enumerate_motzkin2(2).size() == 5);
  CHECK(enumerate_lpaths(2).size() == 6);
  CHECK(enumerate_kary(3, 2).size() == 3);
  const std::vector<std::size_t> lpath_counts = {1, 2, 6, 21, 80, 322};
  for (std::size_t n = 0; n < lpath_counts.size(); ++n) {
    const auto paths = enumerate_lpaths(n);
    CHECK(paths.size() == lpath_counts[n]);
    for (const auto& p : paths) CHECK(p.valid());
  }
  for (unsigned k = 1; k <= 4; ++k)
    for (std::size_t m = 0; m <= 6; ++m) CHECK(enumerate_kary(k, m).size() == kary(k, m));
  for (std::size_t n = 0; n <= 7; ++n) CHECK(enumerate_motzkin2(n).size() == catalan(n + 1));
  CHECK_THROWS_AS(enumerate_lpaths(11), std::length_error);
}

TEST_CASE("path parsing and validity") {
  CHECK(LLatticePath::parse("LDD").heights() == std::vector<std::int64_t>{0, 2, 1, 0});
  CHECK(LLatticePath::parse("HD").valid());
  CHECK_FALSE(LLatticePath::parse("LDDD").valid());
  CHECK_FALSE(LLatticePath::parse("HHDD").width() % 3 != 0);
  CHECK_THROWS_AS(LLatticePath::parse("HX"), ShapeError);
  const auto m = TwoMotzkinPath::parse("UDL'L");
  CHECK(m.steps().size() == 4);
  CHECK(m.str() == "UDL'L");
  CHECK(m.valid());
  CHECK_FALSE(TwoMotzkinPath::parse("DU").valid());
}

TEST_CASE("phi_tree examples") {
  CHECK(phi_tree(Contraction(Word{}, {}), 2) == KaryTree::leaf(3));
  for (unsigned r = 1; r <= 2; ++r) {
    std::set<KaryTree> images;
    const unsigned n = r == 1 ? 2 : 1;
    for (const auto& c : enumerate_noncrossing(family_word(r, 1, n))) images.insert(phi_tree(c, r));
    CHECK(images.size() == (r == 1 ? 5 : 3));
  }
  CHECK_THROWS_AS(phi_tree(Contraction(Word::from_compact("ad"), {}), 2), ShapeError);
  CHECK_THROWS_AS(phi_tree(Contraction(family_word(2, 1, 2), {{1, 3}, {2, 6}}), 2), ShapeError);
}

TEST_CASE("phi_tree is a bijection onto (r+1)-ary trees with n+1 nodes") {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= 5; ++n) {
      const Word w = family_word(r, 1, n);
      std::set<KaryTree> images;
      std::size_t domain = 0;
      bool round_trip = true;
      // Edge statistic: nodes in the annihilator slots.
      std::map<std::size_t, std::size_t> by_edges, by_stat;
      for_each_noncrossing(w, [&](const Contraction& c) {
        ++domain;
        const KaryTree t = phi_tree(c, r);
        images.insert(t);
        round_trip = round_trip && phi_tree_inverse(t) == c;
        ++by_edges[c.edges().size()];
        std::size_t stat = 0;
        for (std::size_t v = 0; v < t.size(); ++v)
          for (unsigned slot = 0; slot < r; ++slot) stat += t.child(v, slot) != KaryTree::kEmpty;
        ++by_stat[stat];
      });
      INFO("r=" << r << " n=" << n);
      CHECK(round_trip);
      CHECK(images.size() == domain);
      const auto all = enumerate_kary(r + 1, n + 1);
      CHECK(std::set<KaryTree>(all.begin(), all.end()) == images);
      CHECK(by_edges == by_stat);
    }
  }
}

TEST_CASE("tree edge statistic satisfies the B_{r,1} equation") {
  for (unsigned r = 1; r <= 3; ++r) {
    const unsigned top = 5;
    TruncatedSeries g(top, {SeriesFamily::Plain, r, 1, 1});
    for (unsigned n = 0; n <= top; ++n) {
      for (const auto& t : enumerate_kary(r + 1, n + 1)) {
        std::uint32_t stat = 0;
        for (std::size_t v = 0; v < t.size(); ++v)
          for (unsigned slot = 0; slot < r; ++slot) stat += t.child(v, slot) != KaryTree::kEmpty;
        g.add_term({n, stat, 0}, 1);
      }
    }
    CHECK(check_equation_residual(g, Equation::Br1).is_zero());
  }
}

TEST_CASE("phi_lattice examples") {
  CHECK(phi_lattice(Contraction(Word::from_compact("a"), {})).str() == "HD");
  CHECK(phi_lattice(Contraction(Word::from_compact("dd"), {})).str() == "LDD");
  CHECK(phi_lattice(Contraction(Word::from_compact("add"), {{1, 2}})).str() == "LDHDD");
  CHECK(phi_lattice(Contraction(Word::from_compact("add"), {{1, 3}})).str() == "HHDD");
  CHECK_THROWS_AS(phi_lattice(Contraction(Word::from_compact("da"), {})), ShapeError);
  CHECK_THROWS_AS(phi_lattice_inverse(LLatticePath::parse("LDDD")), ShapeError);

  std::set<LLatticePath> images;
  for (const auto& c : noncrossing_domain(family_sum(1, 2, 2))) images.insert(phi_lattice(c));
  const auto p2 = enumerate_lpaths(2);
  CHECK(images == std::set<LLatticePath>(p2.begin(), p2.end()));
}

TEST_CASE("phi_lattice is a bijection with statistic transport") {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto domain = noncrossing_domain(family_sum(1, 2, n));
    std::set<LLatticePath> images;
    for (const auto& c : domain) {
      const auto p = phi_lattice(c);
      CHECK(p.valid());
      CHECK(p.width() == 3 * n);
      CHECK(p.count("HDD") == c.edges().size());
      CHECK(p.count("HD") == c.word().annihilators());
      CHECK(phi_lattice_inverse(p) == c);
      images.insert(p);
    }
    CHECK(images.size() == domain.size());
    const auto all = enumerate_lpaths(n);
    CHECK(images == std::set<LLatticePath>(all.begin(), all.end()));
  }
}

TEST_CASE("psi examples and bijection") {
  CHECK(psi_motzkin(Contraction(Word::from_compact("ad"), {})).str() == "L'");
  CHECK(psi_motzkin(Contraction(Word::from_compact("ad"), {{1, 2}})).str() == "L");
  CHECK(noncrossing_domain(Expression(family_word(1, 1, 3))).size() == 14);
  for (unsigned n = 0; n <= 6; ++n) {
    const auto domain = noncrossing_domain(Expression(family_word(1, 1, n)));
    std::set<TwoMotzkinPath> images;
    std::map<std::size_t, BigInt> edges_by_stat;
    for (const auto& c : domain) {
      const auto p = psi_motzkin(c);
      CHECK(p.steps().size() == n);
      CHECK(psi_motzkin_inverse(p) == c);
      const std::size_t stat = p.count(MotzkinStep::Up) + p.count(MotzkinStep::LevelBlack);
      CHECK(stat == c.edges().size());
      ++edges_by_stat[stat];
      images.insert(p);
    }
    const auto all = enumerate_motzkin2(n);
    CHECK(images == std::set<TwoMotzkinPath>(all.begin(), all.end()));
    for (unsigned j = 0; j <= n; ++j) CHECK(edges_by_stat[j] == narayana(n, j));
  }
}

TEST_CASE("theta examples and bijection") {
  CHECK(theta_motzkin(Contraction(Word::from_compact("ad"), {{1, 2}})).str() == "UD");
  CHECK(theta_motzkin(Contraction(Word::from_compact("da"), {})).str() == "L'L");
  for (unsigned n = 0; n <= 6; ++n) {
    const auto domain = noncrossing_domain(family_sum(1, 1, n));
    std::set<TwoMotzkinPath> images;
    for (const auto& c : domain) {
      const auto p = theta_motzkin(c);
      CHECK(theta_motzkin_inverse(p) == c);
      CHECK(p.count(MotzkinStep::Up) == c.edges().size());
      CHECK(p.count(MotzkinStep::LevelGray) == c.word().annihilators() - c.edges().size());
      images.insert(p);
    }
    CHECK(images.size() == domain.size());
    const auto all = enumerate_motzkin2(n);
    CHECK(images == std::set<TwoMotzkinPath>(all.begin(), all.end()));
  }
}
