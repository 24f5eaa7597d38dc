#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncorder/bigint.hpp"
#include "ncorder/boson.hpp"
#include "ncorder/contraction.hpp"

namespace ncorder {

/// Polynomial in p with exact coefficients, little-endian by degree and
/// trimmed (no trailing zeros; the zero polynomial is empty).
using PPolynomial = std::vector<BigInt>;

/// Monomial (a†)^adag a^a.
struct Monomial {
  std::size_t adag = 0;
  std::size_t a = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Normally ordered form: sum over monomials (a†)^k a^l of a coefficient
/// polynomial in p. Entries with a zero polynomial are never stored.
class NormalFormPolynomial {
 public:
  using Entries = std::map<Monomial, PPolynomial>;

  NormalFormPolynomial() = default;

  /// Adds value * p^degree to the coefficient of `monomial`.
  void add(Monomial monomial, std::size_t degree, const BigInt& value);
  void add(Monomial monomial, const PPolynomial& poly);

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Coefficient polynomial of a monomial; empty when absent.
  PPolynomial coefficient(Monomial monomial) const;
  /// Constant-in-p coefficient (the p^0 part); convenient for evaluated forms.
  BigInt constant(Monomial monomial) const;

  /// True when no entry has positive p-degree.
  bool is_p_constant() const;

  /// Human readable sum, e.g. "(a†)^2 a^2 + 4 a† a + (1 + p)".
  std::string render(Notation notation = Notation::Display) const;

  friend bool operator==(const NormalFormPolynomial&, const NormalFormPolynomial&) = default;

 private:
  Entries entries_;
};

/// N_p: every contraction of every term contributes coefficient * p^crossings
/// to the monomial (a†)^free_black a^free_white.
NormalFormPolynomial normal_order_p(const Expression& expr, const EnumerationLimits& limits = {});

/// Noncrossing normal ordering (N_0), from the direct noncrossing generator.
NormalFormPolynomial nc_normal_order(const Expression& expr, const EnumerationLimits& limits = {});

/// Number of noncrossing contractions with m edges, indexed by m. Dynamic
/// programming over (position, open arcs); no contraction is materialized.
std::vector<BigInt> nc_edge_counts_dp(const Word& word);

/// Pointwise evaluation of every coefficient polynomial at p.
NormalFormPolynomial evaluate_at_p(const NormalFormPolynomial& nf, const BigInt& p);

/// <γ|F|γ> = Σ c_{k,l} conj(γ)^k γ^l for a p-constant normal form.
/// Throws std::invalid_argument when a coefficient still depends on p.
std::complex<double> coherent_expectation(const NormalFormPolynomial& nf, std::complex<double> gamma);

/// Evaluates a p-polynomial at an integer point.
BigInt evaluate(const PPolynomial& poly, const BigInt& p);

}  // namespace ncorder
