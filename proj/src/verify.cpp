#include "ncorder/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ncorder/bijections.hpp"
#include "ncorder/closed_forms.hpp"
#include "ncorder/contraction.hpp"
#include "ncorder/gf_system.hpp"
#include "ncorder/normal_form.hpp"

namespace ncorder {

std::string verify_suite_name(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::Oracles:
      return "oracles";
    case VerifySuite::Formulas:
      return "formulas";
    case VerifySuite::Bijections:
      return "bijections";
    case VerifySuite::Inequality:
      return "inequality";
  }
  return {};
}

VerifySuite parse_verify_suite(const std::string& name) {
  for (auto s : {VerifySuite::Oracles, VerifySuite::Formulas, VerifySuite::Bijections, VerifySuite::Inequality}) {
    if (verify_suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + name + "' (expected oracles, formulas, bijections or inequality)");
}

void VerifyReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin(0.5);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = coin(rng) ? Letter::Creator : Letter::Annihilator;
  return Word(std::move(letters));
}

namespace {

using Coefficients = std::map<std::pair<std::size_t, std::size_t>, BigInt>;

/// Normal form at p = 1 by rewriting a a† -> a† a + 1 until no a precedes an a†.
Coefficients commutator_rewrite(const Word& w) {
  std::map<std::vector<Letter>, BigInt> pending{{w.letters(), BigInt(1)}};
  Coefficients done;
  while (!pending.empty()) {
    std::vector<Letter> letters = pending.begin()->first;
    const BigInt coeff = pending.begin()->second;
    pending.erase(pending.begin());
    std::size_t k = 0;
    while (k + 1 < letters.size() && !(letters[k] == Letter::Annihilator && letters[k + 1] == Letter::Creator)) ++k;
    if (k + 1 >= letters.size()) {
      const auto creators = static_cast<std::size_t>(std::count(letters.begin(), letters.end(), Letter::Creator));
      done[{creators, letters.size() - creators}] += coeff;
      continue;
    }
    auto swapped = letters;
    std::swap(swapped[k], swapped[k + 1]);
    pending[swapped] += coeff;
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    pending[letters] += coeff;
  }
  return done;
}

std::string repeat(const std::string& unit, unsigned n) {
  std::string out;
  for (unsigned i = 0; i < n; ++i) out += unit;
  return out;
}

Coefficients constants(const NormalFormPolynomial& nf) {
  Coefficients out;
  for (const auto& [m, poly] : nf.entries()) {
    const BigInt c = evaluate(poly, 0);
    if (c != 0) out[{m.adag, m.a}] = c;
  }
  return out;
}

void check_word_oracles(const Word& w, VerifyReport& report) {
  const std::string tag = "word '" + w.render() + "': ";
  std::set<std::vector<Edge>> filtered;
  for_each_contraction(w, [&](const Contraction& c) {
    if (stats(c).crossings == 0) filtered.insert(c.edges());
  });
  std::set<std::vector<Edge>> generated;
  std::vector<BigInt> tally;
  std::size_t duplicates = 0;
  for_each_noncrossing(w, [&](const Contraction& c) {
    duplicates += !generated.insert(c.edges()).second;
    if (tally.size() <= c.edges().size()) tally.resize(c.edges().size() + 1, BigInt(0));
    ++tally[c.edges().size()];
  });
  report.expect(duplicates == 0, tag + "noncrossing generator repeats a contraction");
  report.expect(filtered == generated, tag + "filter and noncrossing generator disagree");
  auto dp = nc_edge_counts_dp(w);
  while (!dp.empty() && dp.back() == 0) dp.pop_back();
  report.expect(dp == tally, tag + "edge-count DP disagrees with enumeration");
  report.expect(constants(evaluate_at_p(normal_order_p(Expression(w)), 1)) == commutator_rewrite(w),
                tag + "N_1 disagrees with commutator rewriting");
}

void run_oracles(const VerifyOptions& options, VerifyReport& report) {
  const std::size_t exhaustive = std::min<std::size_t>(report.max_n, 10);
  for (std::size_t len = 0; len <= exhaustive; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Letter> letters(len);
      for (std::size_t i = 0; i < len; ++i) letters[i] = (bits >> i) & 1 ? Letter::Creator : Letter::Annihilator;
      check_word_oracles(Word(std::move(letters)), report);
    }
  }
  if (report.max_n > exhaustive) {
    std::mt19937_64 rng(options.seed);
    const std::size_t samples = options.samples ? options.samples : 100;
    for (std::size_t k = 0; k < samples; ++k) check_word_oracles(random_word(rng, report.max_n), report);
  }
}

void run_formulas(VerifyReport& report) {
  const auto top = static_cast<unsigned>(report.max_n);
  for (unsigned param = 1; param <= 3; ++param) {
    for (auto family : {ClosedFamily::ProdR1, ClosedFamily::Prod1R, ClosedFamily::Sum1S}) {
      for (unsigned n = 0; n <= top; ++n) {
        std::ostringstream tag;
        tag << closed_family_name(family) << " param " << param << " n " << n;
        report.expect(nc_closed_form(family, param, n) == nc_normal_order(closed_family_expression(family, param, n)),
                      tag.str() + ": closed form disagrees with enumeration");
      }
    }
  }
  for (auto family : {ClosedFamily::Prod11, ClosedFamily::Sum11}) {
    for (unsigned n = 0; n <= top; ++n) {
      report.expect(nc_closed_form(family, 1, n) == nc_normal_order(closed_family_expression(family, 1, n)),
                    closed_family_name(family) + " n " + std::to_string(n) + ": closed form disagrees with enumeration");
    }
  }

  // Stirling numbers from S(n+1,k) = k S(n,k) + S(n,k-1).
  const unsigned stirling_top = top + 3;
  std::vector<std::vector<BigInt>> s(stirling_top + 1, std::vector<BigInt>(stirling_top + 2, BigInt(0)));
  s[0][0] = 1;
  for (unsigned n = 0; n < stirling_top; ++n)
    for (unsigned k = 1; k <= n + 1; ++k) s[n + 1][k] = BigInt(k) * s[n][k] + s[n][k - 1];
  for (unsigned n = 0; n <= stirling_top; ++n) {
    const Coefficients got = constants(evaluate_at_p(normal_order_p(Expression(Word::from_compact(repeat("da", n)))), 1));
    Coefficients want;
    for (unsigned k = 0; k <= n; ++k) {
      if (s[n][k] != 0) want[{k, k}] = s[n][k];
      report.expect(stirling2(n, k) == s[n][k], "stirling2(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    report.expect(got == want, "N_1((a† a)^" + std::to_string(n) + ") is not the Stirling row");
  }

  for (unsigned n = 0; n <= 2 * top + 2; ++n) {
    const auto dp = nc_edge_counts_dp(family_word(1, 1, n));
    for (unsigned j = 0; j <= n; ++j) {
      report.expect(j < dp.size() && dp[j] == narayana(n, j),
                    "Narayana mismatch at n " + std::to_string(n) + ", j " + std::to_string(j));
    }
  }

  for (unsigned r = 1; r <= 3; ++r) {
    const TruncatedSeries b = solve_B(r, 1, top);
    const TruncatedSeries b_dual = solve_B(1, r, top);
    for (unsigned n = 0; n <= top; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        const std::string tag = "r " + std::to_string(r) + " n " + std::to_string(n) + " j " + std::to_string(j);
        report.expect(coeff(b, n, j) == nc_coeff_prod_r1(r, n, j), "solve_B(r,1) " + tag);
        report.expect(coeff(b_dual, n, j) == nc_coeff_prod_1r(r, n, j), "solve_B(1,r) " + tag);
      }
    }
    report.expect(check_equation_residual(b, Equation::Br1).is_zero(), "B_r1 residual r " + std::to_string(r));
    const TruncatedSeries a = solve_A(1, r, top);
    for (unsigned n = 0; n <= top; ++n)
      for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= i; ++j) {
          report.expect(coeff(a, n, j, i) == nc_coeff_sum_1s(r, n, j, i),
                        "solve_A(1,s) s " + std::to_string(r) + " n " + std::to_string(n) + " j " +
                            std::to_string(j) + " i " + std::to_string(i));
        }
    report.expect(check_equation_residual(a, Equation::A1s).is_zero(), "A_1s residual s " + std::to_string(r));
  }
  report.expect(check_equation_residual(solve_B(2, 2, std::max(top, 8u)), Equation::B22Quartic).is_zero(),
                "B22 quartic residual");
}

template <class Path, class Map, class Inverse>
void check_path_map(const std::string& name, const std::vector<Contraction>& domain, const std::vector<Path>& targets,
                    Map map, Inverse inverse, VerifyReport& report) {
  std::set<Path> images;
  for (const auto& c : domain) {
    const Path p = map(c);
    images.insert(p);
    report.expect(p.valid(), name + ": invalid image " + p.str());
    report.expect(inverse(p) == c, name + ": round trip fails for " + c.render_labels() + " on " + c.word().render());
  }
  report.expect(images.size() == domain.size(), name + ": not injective");
  report.expect(images == std::set<Path>(targets.begin(), targets.end()), name + ": image is not the target set");
}

void run_bijections(VerifyReport& report) {
  const std::size_t top = report.max_n;
  TargetLimits limits;
  limits.max_tree_nodes = std::max<std::size_t>(limits.max_tree_nodes, top + 1);
  limits.max_path_n = std::max<std::size_t>(limits.max_path_n, top);

  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= top; ++n) {
      const std::string tag = "phi_tree r " + std::to_string(r) + " n " + std::to_string(n);
      const auto domain = enumerate_noncrossing(family_word(r, 1, n));
      std::set<KaryTree> images;
      std::map<std::size_t, std::size_t> by_edges, by_slots;
      for (const auto& c : domain) {
        const KaryTree t = phi_tree(c, r);
        images.insert(t);
        report.expect(phi_tree_inverse(t) == c, tag + ": round trip fails for " + c.render_labels());
        ++by_edges[c.edges().size()];
        std::size_t filled = 0;
        for (std::size_t v = 0; v < t.size(); ++v)
          for (unsigned slot = 0; slot < r; ++slot) filled += t.child(v, slot) != KaryTree::kEmpty;
        ++by_slots[filled];
      }
      const auto all = enumerate_kary(r + 1, n + 1, limits);
      report.expect(images.size() == domain.size(), tag + ": not injective");
      report.expect(images == std::set<KaryTree>(all.begin(), all.end()), tag + ": image is not the tree set");
      report.expect(by_edges == by_slots, tag + ": edge statistic not transported");
    }
  }

  for (unsigned n = 0; n <= top; ++n) {
    const std::string sn = " n " + std::to_string(n);
    const auto w12 = noncrossing_domain(family_sum(1, 2, n));
    check_path_map("phi_lattice" + sn, w12, enumerate_lpaths(n, limits), phi_lattice, phi_lattice_inverse, report);
    for (const auto& c : w12) {
      const auto p = phi_lattice(c);
      report.expect(p.count("HDD") == c.edges().size(), "phi_lattice" + sn + ": #HDD != edges");
      report.expect(p.count("HD") == c.word().annihilators(), "phi_lattice" + sn + ": #HD != whites");
    }

    const auto v11 = noncrossing_domain(Expression(family_word(1, 1, n)));
    check_path_map("psi" + sn, v11, enumerate_motzkin2(n, limits), psi_motzkin, psi_motzkin_inverse, report);
    std::map<std::size_t, BigInt> by_edges;
    for (const auto& c : v11) ++by_edges[c.edges().size()];
    for (unsigned j = 0; j <= n; ++j)
      report.expect(by_edges[j] == narayana(n, j), "psi" + sn + ": edge distribution is not Narayana");

    const auto w11 = noncrossing_domain(family_sum(1, 1, n));
    check_path_map("theta" + sn, w11, enumerate_motzkin2(n, limits), theta_motzkin, theta_motzkin_inverse, report);
    for (const auto& c : w11) {
      const auto p = theta_motzkin(c);
      report.expect(p.count(MotzkinStep::Up) == c.edges().size(), "theta" + sn + ": #U != edges");
      report.expect(p.count(MotzkinStep::LevelGray) == c.word().annihilators() - c.edges().size(),
                    "theta" + sn + ": #L' != free whites");
    }
  }
}

void run_inequality(const VerifyOptions& options, VerifyReport& report) {
  std::mt19937_64 rng(options.seed);
  const std::size_t samples = options.samples ? options.samples : 200;
  for (std::size_t k = 0; k < samples; ++k) {
    const Word w = random_word(rng, report.max_n);
    const NormalFormPolynomial nf = normal_order_p(Expression(w));
    for (const auto& [m, poly] : nf.entries()) {
      const BigInt c0 = evaluate(poly, 0), c1 = evaluate(poly, 1);
      std::ostringstream tag;
      tag << "word '" << w.render() << "' monomial (" << m.adag << "," << m.a << "): C(0)=" << c0 << " C(1)=" << c1;
      report.expect(0 <= c0 && c0 <= c1, tag.str());
    }
  }
}

}  // namespace

VerifyReport run_verify(VerifySuite suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = verify_suite_name(suite);
  report.seed = options.seed;
  switch (suite) {
    case VerifySuite::Oracles:
      report.max_n = options.max_n ? options.max_n : 10;
      run_oracles(options, report);
      break;
    case VerifySuite::Formulas:
      report.max_n = options.max_n ? options.max_n : 5;
      run_formulas(report);
      break;
    case VerifySuite::Bijections:
      report.max_n = options.max_n ? options.max_n : 6;
      run_bijections(report);
      break;
    case VerifySuite::Inequality:
      report.max_n = options.max_n ? options.max_n : 12;
      run_inequality(options, report);
      break;
  }
  return report;
}

}  // namespace ncorder
