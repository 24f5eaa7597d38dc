#include "ncorder/gf_system.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncorder {

namespace {

void check_params(unsigned r, unsigned s) {
  if (r == 0 || s == 0) throw std::invalid_argument("r and s must be positive");
}

std::uint32_t checked_truncation(unsigned x_degree, unsigned order_n) {
  const std::uint64_t t = std::uint64_t{x_degree} * order_n;
  if (t > 100000) throw std::invalid_argument("series order too large");
  return static_cast<std::uint32_t>(t);
}

struct Sweeper {
  GFSystemState& st;
  SeriesMeta meta;
  std::uint32_t trunc;

  TruncatedSeries zero() const { return TruncatedSeries(trunc, meta); }
  TruncatedSeries one() const { return TruncatedSeries::one(trunc, meta); }

  // Σ_{j=1..hi} t^{step (top - j)} pq(p, j).
  TruncatedSeries weighted_row(unsigned p, unsigned hi, unsigned top, unsigned step) const {
    TruncatedSeries out = zero();
    for (unsigned j = 1; j <= hi; ++j) out += st.by_pq.at({p, j}).shifted({step * (top - j), 0, 0});
    return out;
  }

  // Σ_{j=1..hi} t^{step (top - j)} z^{z_step (top - j)} pq(j, q).
  TruncatedSeries weighted_column(unsigned q, unsigned hi, unsigned top, unsigned step, unsigned z_step) const {
    TruncatedSeries out = zero();
    for (unsigned j = 1; j <= hi; ++j) out += st.by_pq.at({j, q}).shifted({step * (top - j), 0, z_step * (top - j)});
    return out;
  }

  void sweep_B() {
    const unsigned r = st.r, s = st.s;
    const TruncatedSeries& B = st.main;
    for (unsigned p = 1; p <= r; ++p) {
      for (unsigned q = 1; q <= s; ++q) {
        TruncatedSeries v = zero();
        if (p == 1 && q == 1) {
          v.add_term({2, 1, 0}, 1);
          v += B.shifted({r + s + 2, 1, 0});
        } else if (q == 1) {
          v += st.by_pq.at({p - 1, 1}).shifted({1, 0, 0});
          v += (B * weighted_row(p - 1, s, s, 1)).shifted({r + 2, 1, 0});
        } else if (p == 1) {
          v += st.by_pq.at({1, q - 1}).shifted({1, 0, 0});
          v += (B * weighted_column(q - 1, r, r, 1, 0)).shifted({s + 2, 1, 0});
        } else {
          v += st.by_pq.at({p - 1, q}).shifted({1, 0, 0});
          v += weighted_row(p - 1, q - 1, q - 1, 1).shifted({2, 1, 0});
          v += (st.by_t[q - 1] * weighted_row(p - 1, s, s, 1)).shifted({2, 1, 0});
        }
        st.by_pq[{p, q}] = std::move(v);
      }
    }
    st.by_t[0] = B.shifted({r, 0, 0});
    for (unsigned t = 1; t <= s; ++t) {
      st.by_t[t] = st.by_t[t - 1].shifted({1, 0, 0}) + B * weighted_column(t, r, r, 1, 0);
    }
    st.main = one() + st.by_t[s];
  }

  void sweep_A() {
    const unsigned r = st.r, s = st.s;
    const unsigned L = meta.x_degree;
    const unsigned zp = L / s, zpp = L / r;
    const TruncatedSeries& A = st.main;
    for (unsigned p = 1; p <= r; ++p) {
      for (unsigned q = 1; q <= s; ++q) {
        TruncatedSeries v = zero();
        if (p == 1) {
          v = st.by_t[q - 1].shifted({zp + zpp, 1, 1});
        } else {
          v += st.by_pq.at({p - 1, q}).shifted({zpp, 0, 1});
          v += weighted_row(p - 1, q - 1, q - 1, zp).shifted({zp + zpp, 1, 1});
          v += (st.by_t[q - 1] * weighted_row(p - 1, s, s, zp)).shifted({zp + zpp, 1, 1});
        }
        st.by_pq[{p, q}] = std::move(v);
      }
    }
    st.by_t[0] = A;
    for (unsigned t = 1; t <= s; ++t) {
      st.by_t[t] = st.by_t[t - 1].shifted({zp, 0, 0}) + A * weighted_column(t, r, r, zpp, 1);
    }
    st.main = one() + A.shifted({L, 0, r}) + st.by_t[s];
  }

  void sweep() {
    if (st.family == SeriesFamily::B) {
      sweep_B();
    } else {
      sweep_A();
    }
  }
};

GFSystemState initial_state(SeriesFamily family, unsigned r, unsigned s, unsigned order_n) {
  check_params(r, s);
  const unsigned x_degree = family == SeriesFamily::B ? r + s : std::lcm(r, s);
  const SeriesMeta meta{family, r, s, x_degree};
  const std::uint32_t trunc = checked_truncation(x_degree, order_n);
  GFSystemState st;
  st.family = family;
  st.r = r;
  st.s = s;
  st.order_n = order_n;
  st.main = TruncatedSeries::one(trunc, meta);
  st.by_t.assign(s + 1, TruncatedSeries(trunc, meta));
  for (unsigned p = 1; p <= r; ++p)
    for (unsigned q = 1; q <= s; ++q) st.by_pq.emplace(std::make_pair(p, q), TruncatedSeries(trunc, meta));
  return st;
}

bool same_unknowns(const GFSystemState& a, const GFSystemState& b) {
  return a.main == b.main && a.by_t == b.by_t && a.by_pq == b.by_pq;
}

GFSystemState solve_system(SeriesFamily family, unsigned r, unsigned s, unsigned order_n) {
  GFSystemState st = initial_state(family, r, s, order_n);
  Sweeper sweeper{st, st.main.meta(), st.main.truncation()};
  const unsigned limit = st.main.truncation() + 2;
  for (unsigned k = 1; k <= limit; ++k) {
    GFSystemState before = st;
    sweeper.sweep();
    if (same_unknowns(before, st)) {
      st.sweeps = k;
      return st;
    }
  }
  throw std::logic_error("generating-function system did not settle within " + std::to_string(limit) + " sweeps");
}

}  // namespace

GFSystemState solve_B_system(unsigned r, unsigned s, unsigned order_n) {
  return solve_system(SeriesFamily::B, r, s, order_n);
}

GFSystemState solve_A_system(unsigned r, unsigned s, unsigned order_n) {
  return solve_system(SeriesFamily::A, r, s, order_n);
}

TruncatedSeries solve_B(unsigned r, unsigned s, unsigned order_n) { return solve_B_system(r, s, order_n).main; }

TruncatedSeries solve_A(unsigned r, unsigned s, unsigned order_n) { return solve_A_system(r, s, order_n).main; }

bool is_fixed_point(const GFSystemState& state) {
  GFSystemState next = state;
  Sweeper sweeper{next, next.main.meta(), next.main.truncation()};
  sweeper.sweep();
  return same_unknowns(state, next);
}

std::string equation_name(Equation eq) {
  switch (eq) {
    case Equation::B22Quartic:
      return "B22_quartic";
    case Equation::Ar1:
      return "A_r1";
    case Equation::A1s:
      return "A_1s";
    case Equation::Br1:
      return "B_r1";
  }
  return {};
}

Equation parse_equation(const std::string& name) {
  for (Equation eq : {Equation::B22Quartic, Equation::Ar1, Equation::A1s, Equation::Br1}) {
    if (equation_name(eq) == name) return eq;
  }
  throw std::invalid_argument("unknown equation '" + name + "' (expected B22_quartic, A_r1, A_1s or B_r1)");
}

TruncatedSeries to_x_series(const TruncatedSeries& series) {
  const unsigned d = series.meta().x_degree;
  SeriesMeta meta = series.meta();
  meta.x_degree = 1;
  TruncatedSeries out(series.truncation() / d, meta);
  for (const auto& [k, c] : series.terms()) {
    if (k.t % d != 0) {
      throw std::logic_error("series has a term at t^" + std::to_string(k.t) + ", not a power of x");
    }
    out.add_term({k.t / d, k.y, k.z}, c);
  }
  return out;
}

TruncatedSeries check_equation_residual(const TruncatedSeries& series, Equation eq) {
  const TruncatedSeries G = to_x_series(series);
  const SeriesMeta& m = G.meta();
  const std::uint32_t T = G.truncation();
  const TruncatedSeries one = TruncatedSeries::one(T, m);
  auto mono = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z = 0, const BigInt& c = 1) {
    return TruncatedSeries::monomial(T, m, {x, y, z}, c);
  };
  switch (eq) {
    case Equation::B22Quartic: {
      if (m.family == SeriesFamily::B && (m.r != 2 || m.s != 2)) {
        throw std::invalid_argument("B22_quartic needs the B_{2,2} series");
      }
      const TruncatedSeries one_y = one + mono(0, 1);
      const TruncatedSeries one_y2 = one_y * one_y;
      const TruncatedSeries G2 = G * G;
      const TruncatedSeries G3 = G2 * G;
      const TruncatedSeries G4 = G3 * G;
      TruncatedSeries rhs = one;
      rhs += (one_y2 * G).shifted({1, 0, 0});
      rhs += ((one + one_y.shifted({1, 0, 0}) + mono(1, 2)) * G2).shifted({1, 1, 0}, 2);
      rhs += ((one_y2.shifted({1, 0, 0}) - one) * G3).shifted({2, 2, 0});
      rhs += G4.shifted({4, 4, 0});
      return rhs - G;
    }
    case Equation::Ar1: {
      if (m.s != 1) throw std::invalid_argument("A_r1 needs an A_{r,1} series");
      const unsigned r = m.r;
      const TruncatedSeries one_A = one + G;
      const TruncatedSeries denom = one - (one_A).shifted({1, 1, 0});
      TruncatedSeries lhs_side = (one + (one + mono(0, 0, r)).shifted({1, 0, 0}) * G) * denom;
      lhs_side += (G.power(r) * (one - one_A.power(r).shifted({r, r, 0}))).shifted({2, 1, r});
      return lhs_side - G * denom;
    }
    case Equation::A1s: {
      if (m.r != 1) throw std::invalid_argument("A_1s needs an A_{1,s} series");
      TruncatedSeries rhs = one + G.shifted({1, 0, 1});
      rhs += (G * (one + G.shifted({1, 1, 1})).power(m.s)).shifted({1, 0, 0});
      return rhs - G;
    }
    case Equation::Br1: {
      if (m.r != 1 && m.s != 1) throw std::invalid_argument("B_r1 needs a B_{r,1} or B_{1,r} series");
      const unsigned r = m.r * m.s;
      const TruncatedSeries rhs = (one + G.shifted({1, 0, 0})) * (one + G.shifted({1, 1, 0})).power(r);
      return rhs - G;
    }
  }
  throw std::invalid_argument("unknown equation");
}

std::string series_csv(const TruncatedSeries& series) {
  const TruncatedSeries x = to_x_series(series);
  const bool with_z = series.meta().family == SeriesFamily::A;
  std::ostringstream out;
  out << (with_z ? "n,j,i,coefficient\n" : "n,j,coefficient\n");
  for (const auto& [k, c] : x.terms()) {
    if (with_z) {
      out << k.t << ',' << k.y << ',' << k.z << ',' << c << '\n';
    } else {
      out << k.t << ',' << k.y << ',' << c << '\n';
    }
  }
  return out.str();
}

}  // namespace ncorder
