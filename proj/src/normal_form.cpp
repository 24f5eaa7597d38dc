#include "ncorder/normal_form.hpp"

#include <stdexcept>

#include "contraction_detail.hpp"

namespace ncorder {

namespace {

void trim(PPolynomial& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

std::string render_monomial(const Monomial& m, Notation notation) {
  auto power = [&](std::string_view symbol, std::size_t e) -> std::string {
    if (e == 0) return {};
    std::string s(symbol);
    if (e > 1) {
      if (symbol.size() > 1) s = "(" + s + ")";
      s += "^" + std::to_string(e);
    }
    return s;
  };
  std::string adag = power(letter_symbol(Letter::Creator, notation), m.adag);
  std::string a = power("a", m.a);
  if (!adag.empty() && !a.empty()) return adag + " " + a;
  return adag + a;
}

std::string render_poly(const PPolynomial& poly) {
  std::string out;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += to_string(poly[d]);
      continue;
    }
    if (poly[d] != 1) out += to_string(poly[d]) + " ";
    out += d == 1 ? "p" : "p^" + std::to_string(d);
  }
  return out;
}

}  // namespace

void NormalFormPolynomial::add(Monomial monomial, std::size_t degree, const BigInt& value) {
  if (value == 0) return;
  auto& poly = entries_[monomial];
  if (poly.size() <= degree) poly.resize(degree + 1);
  poly[degree] += value;
  trim(poly);
  if (poly.empty()) entries_.erase(monomial);
}

void NormalFormPolynomial::add(Monomial monomial, const PPolynomial& poly) {
  for (std::size_t d = 0; d < poly.size(); ++d) add(monomial, d, poly[d]);
}

PPolynomial NormalFormPolynomial::coefficient(Monomial monomial) const {
  auto it = entries_.find(monomial);
  return it == entries_.end() ? PPolynomial{} : it->second;
}

BigInt NormalFormPolynomial::constant(Monomial monomial) const {
  auto it = entries_.find(monomial);
  return it == entries_.end() || it->second.empty() ? BigInt(0) : it->second.front();
}

bool NormalFormPolynomial::is_p_constant() const {
  for (const auto& [m, poly] : entries_) {
    if (poly.size() > 1) return false;
  }
  return true;
}

std::string NormalFormPolynomial::render(Notation notation) const {
  if (entries_.empty()) return "0";
  std::string out;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    const auto& [m, poly] = *it;
    if (!out.empty()) out += " + ";
    const std::string mono = render_monomial(m, notation);
    std::string coeff = render_poly(poly);
    const bool compound = poly.size() > 1 && std::count_if(poly.begin(), poly.end(), [](const BigInt& c) { return c != 0; }) > 1;
    if (compound) coeff = "(" + coeff + ")";
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + " " + mono;
    }
  }
  return out;
}

NormalFormPolynomial normal_order_p(const Expression& expr, const EnumerationLimits& limits) {
  NormalFormPolynomial out;
  for (const auto& term : expr.terms()) {
    detail::enumerate_edge_sets(
        term.word,
        [&](const std::vector<Edge>& edges) {
          const auto s = detail::stats_of(term.word, edges);
          out.add({s.free_black, s.free_white}, s.crossings, term.coefficient);
        },
        limits);
  }
  return out;
}

NormalFormPolynomial nc_normal_order(const Expression& expr, const EnumerationLimits& limits) {
  NormalFormPolynomial out;
  for (const auto& term : expr.terms()) {
    const std::size_t whites = term.word.annihilators();
    const std::size_t blacks = term.word.creators();
    detail::enumerate_noncrossing_edge_sets(
        term.word,
        [&](const std::vector<Edge>& edges) {
          out.add({blacks - edges.size(), whites - edges.size()}, 0, term.coefficient);
        },
        limits);
  }
  return out;
}

std::vector<BigInt> nc_edge_counts_dp(const Word& word) {
  const auto& letters = word.letters();
  // table[h][m]: ways to reach the current position with h open arcs and m closed edges.
  const std::size_t n = letters.size();
  std::vector<std::vector<BigInt>> table(1, std::vector<BigInt>(1, BigInt(1)));
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t heights = table.size();
    const std::size_t edges = table.front().size();
    std::vector<std::vector<BigInt>> next(heights + 1, std::vector<BigInt>(edges + 1, BigInt(0)));
    for (std::size_t h = 0; h < heights; ++h) {
      for (std::size_t m = 0; m < edges; ++m) {
        const BigInt& ways = table[h][m];
        if (ways == 0) continue;
        next[h][m] += ways;
        if (letters[pos] == Letter::Annihilator) {
          next[h + 1][m] += ways;
        } else if (h > 0) {
          next[h - 1][m + 1] += ways;
        }
      }
    }
    table = std::move(next);
  }
  std::vector<BigInt> out = table.front();
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

BigInt evaluate(const PPolynomial& poly, const BigInt& p) {
  BigInt value = 0;
  for (std::size_t d = poly.size(); d-- > 0;) value = value * p + poly[d];
  return value;
}

NormalFormPolynomial evaluate_at_p(const NormalFormPolynomial& nf, const BigInt& p) {
  NormalFormPolynomial out;
  for (const auto& [m, poly] : nf.entries()) out.add(m, 0, evaluate(poly, p));
  return out;
}

std::complex<double> coherent_expectation(const NormalFormPolynomial& nf, std::complex<double> gamma) {
  if (!nf.is_p_constant()) {
    throw std::invalid_argument("coherent_expectation needs numeric coefficients; evaluate at p first");
  }
  std::complex<double> total = 0.0;
  const std::complex<double> conj_gamma = std::conj(gamma);
  for (const auto& [m, poly] : nf.entries()) {
    const double c = poly.front().convert_to<double>();
    total += c * std::pow(conj_gamma, static_cast<int>(m.adag)) * std::pow(gamma, static_cast<int>(m.a));
  }
  return total;
}

}  // namespace ncorder
