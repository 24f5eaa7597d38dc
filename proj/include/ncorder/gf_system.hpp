#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncorder/series.hpp"

namespace ncorder {

/// Every unknown of a solved system. For B the root variable t satisfies
/// x = t^(r+s); for A, x = t^lcm(r,s), z' = t^(lcm/s), z'' = t^(lcm/r).
struct GFSystemState {
  SeriesFamily family = SeriesFamily::B;
  unsigned r = 1;
  unsigned s = 1;
  unsigned order_n = 0;
  /// B_{r,s}(x,y) or A_{r,s}(x,y,z).
  TruncatedSeries main;
  /// by_t[t] for t = 0..s.
  std::vector<TruncatedSeries> by_t;
  /// by_pq[{p,q}] for p = 1..r, q = 1..s.
  std::map<std::pair<unsigned, unsigned>, TruncatedSeries> by_pq;
  /// Sweeps used until every unknown stopped changing.
  unsigned sweeps = 0;
};

/// Solves the B_{r,s} system by fixed-point sweeps from B = 1, auxiliaries 0.
/// Throws std::logic_error if it fails to settle within truncation + 2 sweeps.
GFSystemState solve_B_system(unsigned r, unsigned s, unsigned order_n);
GFSystemState solve_A_system(unsigned r, unsigned s, unsigned order_n);

/// Noncrossing generating function of (a^r (a†)^s)^n: coefficient of x^n y^j
/// counts contractions with j edges.
TruncatedSeries solve_B(unsigned r, unsigned s, unsigned order_n);
/// Same for (a^r + (a†)^s)^n, with z marking annihilators.
TruncatedSeries solve_A(unsigned r, unsigned s, unsigned order_n);

/// Applies one more sweep and reports whether every unknown is unchanged.
bool is_fixed_point(const GFSystemState& state);

enum class Equation {
  /// B_{2,2} = 1 + x(1+y)^2 B + 2xy(1+x(1+y)+xy^2) B^2 + x^2y^2(x(1+y)^2-1) B^3 + x^4y^4 B^4.
  B22Quartic,
  /// A = 1 + x(1+z^r)A + x^2 y z^r A^r (1 - x^r y^r (1+A)^r) / (1 - xy(1+A)), cleared of its
  /// denominator. Diagnostic only: the printed equation is not satisfied.
  Ar1,
  /// A = 1 + xzA + xA(1 + xyzA)^s.
  A1s,
  /// G = (1 + xG)(1 + xyG)^r for G = B_{r,1} = B_{1,r}.
  Br1,
};

std::string equation_name(Equation eq);
Equation parse_equation(const std::string& name);

/// Rewrites a solved series in x (x_degree 1). Throws std::logic_error if a
/// term sits at a t-degree that is not a multiple of x_degree.
TruncatedSeries to_x_series(const TruncatedSeries& series);

/// RHS - LHS of the equation evaluated on the series, truncated at its x-order.
/// Parameters r, s are taken from the series metadata.
TruncatedSeries check_equation_residual(const TruncatedSeries& series, Equation eq);

/// Rows "n,j,coefficient" (B, plain) or "n,j,i,coefficient" (A), sorted, with header.
std::string series_csv(const TruncatedSeries& series);

}  // namespace ncorder
