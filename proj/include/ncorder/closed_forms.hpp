#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncorder/bigint.hpp"
#include "ncorder/boson.hpp"
#include "ncorder/normal_form.hpp"

namespace ncorder {

enum class NumberKind { Binomial, Catalan, Narayana, Kary, Stirling2, GeneralizedCatalan };

std::string number_kind_name(NumberKind kind);
NumberKind parse_number_kind(const std::string& name);

/// C(n,k); zero for k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
/// C(2n,n)/(n+1).
BigInt catalan(std::uint64_t n);
/// (1/(n+1)) C(n+1,j+1) C(n+1,j), 0 <= j <= n: noncrossing contractions of (a a†)^n with j edges.
BigInt narayana(std::uint64_t n, std::uint64_t j);
/// (1/(kn+1)) C(kn+1,n): k-ary trees with n nodes.
BigInt kary(std::uint64_t k, std::uint64_t n);
/// S(n,k), from the inclusion-exclusion sum.
BigInt stirling2(std::uint64_t n, std::uint64_t k);
/// C_{n,k} = (1/((k-1)n+1)) C(kn,n).
BigInt generalized_catalan(std::uint64_t n, std::uint64_t k);

/// Dispatch by kind; argument counts: binomial 2, catalan 1, narayana 2 (n,j),
/// kary 2 (k,n), stirling2 2 (n,k), generalized_catalan 2 (n,k).
BigInt number(NumberKind kind, const std::vector<std::int64_t>& args);

/// Coefficient of (a†)^(n-j) a^(rn-j) in NC((a^r a†)^n).
BigInt nc_coeff_prod_r1(unsigned r, unsigned n, unsigned j);
/// Coefficient of (a†)^(rn-j) a^(n-j) in NC((a (a†)^r)^n).
BigInt nc_coeff_prod_1r(unsigned r, unsigned n, unsigned j);
/// Coefficient of (a†)^(s(n-i)-j) a^(i-j) in NC((a + (a†)^s)^n), 0 <= j <= i <= n.
BigInt nc_coeff_sum_1s(unsigned s, unsigned n, unsigned j, unsigned i);
/// c_j C(n,i+j) C(i+j,2j), 0 <= j <= i <= n-j; the s = 1 case of the above.
BigInt nc_coeff_sum_11(unsigned n, unsigned j, unsigned i);

enum class ClosedFamily { ProdR1, Prod1R, Sum1S, Prod11, Sum11 };

std::string closed_family_name(ClosedFamily family);
ClosedFamily parse_closed_family(const std::string& name);

/// Full noncrossing normal form from the closed formulas. `param` is r for the
/// product families, s for sum_1s, and ignored for prod_11 / sum_11.
NormalFormPolynomial nc_closed_form(ClosedFamily family, unsigned param, unsigned n);

/// The expression whose noncrossing normal form nc_closed_form describes.
Expression closed_family_expression(ClosedFamily family, unsigned param, unsigned n);

}  // namespace ncorder
