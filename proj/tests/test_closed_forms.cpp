#include <doctest.h>

#include "ncorder/closed_forms.hpp"
#include "ncorder/gf_system.hpp"
#include "ncorder/normal_form.hpp"
#include "oracles.hpp"

using namespace ncorder;

namespace {

// Noncrossing normal form straight from the subset oracle.
NormalFormPolynomial oracle_nc(const Expression& e) {
  NormalFormPolynomial out;
  for (const auto& t : e.terms()) {
    for (const auto& m : oracle::noncrossing_matchings(t.word))
      out.add({t.word.creators() - m.size(), t.word.annihilators() - m.size()}, 0, t.coefficient);
  }
  return out;
}

}  // namespace

TEST_CASE("named numbers") {
  CHECK(catalan(3) == 5);
  CHECK(stirling2(3, 2) == 3);
  CHECK(narayana(2, 1) == 3);
  CHECK(kary(3, 2) == 3);
  CHECK(generalized_catalan(3, 2) == 5);
  CHECK(binomial(5, 7) == 0);
  CHECK(number(NumberKind::Catalan, {10}) == 16796);
  CHECK_THROWS_AS(number(NumberKind::Catalan, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(number(NumberKind::Binomial, {3}), std::invalid_argument);
  CHECK_THROWS_AS(narayana(2, 3), std::invalid_argument);
  CHECK(parse_number_kind("kary") == NumberKind::Kary);
  CHECK_THROWS_AS(parse_number_kind("fib"), std::invalid_argument);
  CHECK(to_string(catalan(100)) == "896519947090131496687170070074100632420837521538745909320");
}

TEST_CASE("numbers agree with oracles") {
  const auto c = oracle::pascal(40);
  for (std::uint64_t n = 0; n <= 40; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == c[n][k]);
  const auto s = oracle::stirling2_table(15);
  for (std::uint64_t n = 0; n <= 15; ++n)
    for (std::uint64_t k = 0; k <= 15; ++k) CHECK(stirling2(n, k) == s[n][k]);
  for (std::uint64_t n = 0; n <= 20; ++n) {
    CHECK(catalan(n) * (n + 1) == c[2 * n][n]);
    CHECK(generalized_catalan(n, 2) == catalan(n));
    CHECK(kary(2, n) == catalan(n));
    BigInt row = 0;
    for (std::uint64_t j = 0; j <= n; ++j) row += narayana(n, j);
    CHECK(row == catalan(n + 1));
  }
}

TEST_CASE("coefficient formulas") {
  CHECK(nc_coeff_prod_r1(2, 1, 1) == 2);
  CHECK(nc_coeff_prod_r1(1, 2, 1) == 3);
  for (unsigned r = 1; r <= 4; ++r) CHECK(nc_coeff_prod_r1(r, 5, 0) == 1);
  CHECK(nc_coeff_prod_1r(2, 1, 1) == 2);
  CHECK(nc_coeff_prod_1r(3, 0, 0) == 1);
  CHECK(nc_coeff_sum_1s(2, 2, 1, 1) == 2);
  CHECK(nc_coeff_sum_1s(1, 2, 0, 1) == 2);
  CHECK(nc_coeff_sum_1s(3, 4, 0, 0) == 1);
  CHECK(nc_coeff_sum_11(2, 1, 1) == 1);
  CHECK(nc_coeff_sum_11(2, 0, 1) == 2);
  CHECK(nc_coeff_sum_11(6, 0, 0) == 1);
  CHECK_THROWS_AS(nc_coeff_prod_r1(1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(nc_coeff_sum_1s(1, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(nc_coeff_sum_11(2, 1, 2), std::invalid_argument);
}

TEST_CASE("formula identities") {
  for (unsigned r = 1; r <= 6; ++r)
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned j = 0; j <= n; ++j) CHECK(nc_coeff_prod_1r(r, n, j) == nc_coeff_prod_r1(r, n, j));
  for (unsigned n = 0; n <= 10; ++n) {
    BigInt prod_row = 0, sum_row = 0;
    for (unsigned j = 0; j <= n; ++j) prod_row += nc_coeff_prod_r1(1, n, j);
    for (unsigned j = 0; 2 * j <= n; ++j)
      for (unsigned i = j; i + j <= n; ++i) {
        sum_row += nc_coeff_sum_11(n, j, i);
        CHECK(nc_coeff_sum_11(n, j, i) == nc_coeff_sum_1s(1, n, j, i));
      }
    CHECK(prod_row == catalan(n + 1));
    CHECK(sum_row == catalan(n + 1));
  }
}

TEST_CASE("closed forms match brute force") {
  NormalFormPolynomial p11;
  p11.add({2, 2}, 0, 1);
  p11.add({1, 1}, 0, 3);
  p11.add({0, 0}, 0, 1);
  CHECK(nc_closed_form(ClosedFamily::Prod11, 0, 2) == p11);

  NormalFormPolynomial s21;
  s21.add({2, 0}, 0, 1);
  s21.add({0, 1}, 0, 1);
  CHECK(nc_closed_form(ClosedFamily::Sum1S, 2, 1) == s21);

  NormalFormPolynomial s22;
  s22.add({4, 0}, 0, 1);
  s22.add({2, 1}, 0, 2);
  s22.add({0, 2}, 0, 1);
  s22.add({1, 0}, 0, 2);
  CHECK(nc_closed_form(ClosedFamily::Sum1S, 2, 2) == s22);

  for (unsigned param = 1; param <= 3; ++param) {
    for (unsigned n = 0; n <= 5; ++n) {
      for (ClosedFamily f : {ClosedFamily::ProdR1, ClosedFamily::Prod1R, ClosedFamily::Sum1S}) {
        if (f != ClosedFamily::Sum1S && param * n + n > 14) continue;
        INFO(closed_family_name(f) << " param=" << param << " n=" << n);
        CHECK(nc_closed_form(f, param, n) == oracle_nc(closed_family_expression(f, param, n)));
      }
    }
  }
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(nc_closed_form(ClosedFamily::Prod11, 0, n) == oracle_nc(closed_family_expression(ClosedFamily::Prod11, 0, n)));
    CHECK(nc_closed_form(ClosedFamily::Sum11, 0, n) == nc_closed_form(ClosedFamily::Sum1S, 1, n));
  }
}

TEST_CASE("closed forms match the series solver") {
  for (unsigned r = 1; r <= 3; ++r) {
    const auto b = solve_B(r, 1, 8);
    const auto b_mirror = solve_B(1, r, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        CHECK(coeff(b, n, j) == nc_coeff_prod_r1(r, n, j));
        CHECK(coeff(b_mirror, n, j) == nc_coeff_prod_1r(r, n, j));
      }
    }
  }
  for (unsigned s = 1; s <= 3; ++s) {
    const auto a = solve_A(1, s, 6);
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= i; ++j) CHECK(coeff(a, n, j, i) == nc_coeff_sum_1s(s, n, j, i));
  }
}
