#include "ncorder/closed_forms.hpp"

#include <stdexcept>

namespace ncorder {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string("inexact division in ") + what);
  return num / den;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::uint64_t nonneg(std::int64_t v, const char* name) {
  require(v >= 0, std::string(name) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string number_kind_name(NumberKind kind) {
  switch (kind) {
    case NumberKind::Binomial:
      return "binomial";
    case NumberKind::Catalan:
      return "catalan";
    case NumberKind::Narayana:
      return "narayana";
    case NumberKind::Kary:
      return "kary";
    case NumberKind::Stirling2:
      return "stirling2";
    case NumberKind::GeneralizedCatalan:
      return "generalized_catalan";
  }
  return {};
}

NumberKind parse_number_kind(const std::string& name) {
  for (NumberKind k : {NumberKind::Binomial, NumberKind::Catalan, NumberKind::Narayana, NumberKind::Kary,
                       NumberKind::Stirling2, NumberKind::GeneralizedCatalan}) {
    if (number_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown number kind '" + name + "'");
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt value = 1;
  // Each partial product is itself a binomial coefficient, so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

BigInt catalan(std::uint64_t n) { return exact_div(binomial(2 * n, n), BigInt(n + 1), "catalan"); }

BigInt narayana(std::uint64_t n, std::uint64_t j) {
  require(j <= n, "narayana needs 0 <= j <= n");
  return exact_div(binomial(n + 1, j + 1) * binomial(n + 1, j), BigInt(n + 1), "narayana");
}

BigInt kary(std::uint64_t k, std::uint64_t n) {
  require(k >= 1, "kary needs k >= 1");
  return exact_div(binomial(k * n + 1, n), BigInt(k * n + 1), "kary");
}

BigInt stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  BigInt sum = 0;
  for (std::uint64_t i = 0; i <= k; ++i) {
    const BigInt term = binomial(k, i) * boost::multiprecision::pow(BigInt(k - i), static_cast<unsigned>(n));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt factorial = 1;
  for (std::uint64_t i = 2; i <= k; ++i) factorial *= i;
  return exact_div(sum, factorial, "stirling2");
}

BigInt generalized_catalan(std::uint64_t n, std::uint64_t k) {
  require(k >= 1, "generalized_catalan needs k >= 1");
  return exact_div(binomial(k * n, n), BigInt((k - 1) * n + 1), "generalized_catalan");
}

BigInt number(NumberKind kind, const std::vector<std::int64_t>& args) {
  const std::size_t want = kind == NumberKind::Catalan ? 1 : 2;
  require(args.size() == want, number_kind_name(kind) + " takes " + std::to_string(want) + " argument(s)");
  const std::uint64_t a = nonneg(args[0], "argument");
  const std::uint64_t b = want == 2 ? nonneg(args[1], "argument") : 0;
  switch (kind) {
    case NumberKind::Binomial:
      return binomial(a, b);
    case NumberKind::Catalan:
      return catalan(a);
    case NumberKind::Narayana:
      return narayana(a, b);
    case NumberKind::Kary:
      return kary(a, b);
    case NumberKind::Stirling2:
      return stirling2(a, b);
    case NumberKind::GeneralizedCatalan:
      return generalized_catalan(a, b);
  }
  throw std::invalid_argument("unknown number kind");
}

BigInt nc_coeff_prod_r1(unsigned r, unsigned n, unsigned j) {
  require(r >= 1, "r must be positive");
  require(j <= n, "nc_coeff_prod_r1 needs 0 <= j <= n");
  return exact_div(binomial(n + 1, j + 1) * binomial(std::uint64_t{r} * n + r, j), BigInt(n + 1), "nc_coeff_prod_r1");
}

BigInt nc_coeff_prod_1r(unsigned r, unsigned n, unsigned j) { return nc_coeff_prod_r1(r, n, j); }

BigInt nc_coeff_sum_1s(unsigned s, unsigned n, unsigned j, unsigned i) {
  require(s >= 1, "s must be positive");
  require(j <= i && i <= n, "nc_coeff_sum_1s needs 0 <= j <= i <= n");
  return exact_div(binomial(n + 1, j + 1) * binomial(n - j, n - i) * binomial(std::uint64_t{s} * (n - i), j),
                   BigInt(n + 1), "nc_coeff_sum_1s");
}

BigInt nc_coeff_sum_11(unsigned n, unsigned j, unsigned i) {
  require(j <= i && i + j <= n, "nc_coeff_sum_11 needs 0 <= j <= i <= n - j");
  return catalan(j) * binomial(n, i + j) * binomial(i + j, 2 * j);
}

std::string closed_family_name(ClosedFamily family) {
  switch (family) {
    case ClosedFamily::ProdR1:
      return "prod_r1";
    case ClosedFamily::Prod1R:
      return "prod_1r";
    case ClosedFamily::Sum1S:
      return "sum_1s";
    case ClosedFamily::Prod11:
      return "prod_11";
    case ClosedFamily::Sum11:
      return "sum_11";
  }
  return {};
}

ClosedFamily parse_closed_family(const std::string& name) {
  for (ClosedFamily f : {ClosedFamily::ProdR1, ClosedFamily::Prod1R, ClosedFamily::Sum1S, ClosedFamily::Prod11,
                         ClosedFamily::Sum11}) {
    if (closed_family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "' (expected prod_r1, prod_1r, sum_1s, prod_11 or sum_11)");
}

NormalFormPolynomial nc_closed_form(ClosedFamily family, unsigned param, unsigned n) {
  NormalFormPolynomial out;
  switch (family) {
    case ClosedFamily::ProdR1:
      for (unsigned j = 0; j <= n; ++j) out.add({n - j, std::size_t{param} * n - j}, 0, nc_coeff_prod_r1(param, n, j));
      break;
    case ClosedFamily::Prod1R:
      for (unsigned j = 0; j <= n; ++j) out.add({std::size_t{param} * n - j, n - j}, 0, nc_coeff_prod_1r(param, n, j));
      break;
    case ClosedFamily::Prod11:
      for (unsigned j = 0; j <= n; ++j) out.add({n - j, n - j}, 0, narayana(n, j));
      break;
    case ClosedFamily::Sum1S:
      for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= i; ++j) {
          const std::size_t blacks = std::size_t{param} * (n - i);
          if (j > blacks) continue;
          out.add({blacks - j, i - j}, 0, nc_coeff_sum_1s(param, n, j, i));
        }
      }
      break;
    case ClosedFamily::Sum11:
      for (unsigned j = 0; 2 * j <= n; ++j)
        for (unsigned i = j; i + j <= n; ++i) out.add({n - i - j, i - j}, 0, nc_coeff_sum_11(n, j, i));
      break;
  }
  return out;
}

Expression closed_family_expression(ClosedFamily family, unsigned param, unsigned n) {
  switch (family) {
    case ClosedFamily::ProdR1:
      return Expression(family_word(param, 1, n));
    case ClosedFamily::Prod1R:
      return Expression(family_word(1, param, n));
    case ClosedFamily::Prod11:
      return Expression(family_word(1, 1, n));
    case ClosedFamily::Sum1S:
      return family_sum(1, param, n);
    case ClosedFamily::Sum11:
      return family_sum(1, 1, n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace ncorder
