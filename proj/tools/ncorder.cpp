#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncorder/bijections.hpp"
#include "ncorder/closed_forms.hpp"
#include "ncorder/contraction.hpp"
#include "ncorder/gf_system.hpp"
#include "ncorder/json_io.hpp"
#include "ncorder/normal_form.hpp"
#include "ncorder/render.hpp"
#include "ncorder/verify.hpp"

using namespace ncorder;

namespace {

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("NCORDER_MAX_LETTERS")) {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long value = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument("NCORDER_MAX_LETTERS must be a nonnegative integer");
    limits.max_letters = value;
    limits.max_letters_noncrossing = value;
  }
  return limits;
}

std::string read_stdin() { return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()}; }

/// Nonempty lines of the argument, or of stdin when the argument is empty.
std::vector<std::string> input_lines(const std::string& arg) {
  std::istringstream in(arg.empty() ? read_stdin() : arg);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

// ---- order ----

struct OrderArgs {
  std::string expr;
  bool nc = false;
  std::optional<std::string> at;
  bool poly = false;
  bool text = false;
  bool display = false;
};

int cmd_order(const OrderArgs& args) {
  const EnumerationLimits limits = limits_from_env();
  const Expression e = parse_expression(args.expr);
  NormalFormPolynomial nf;
  if (args.nc) {
    nf = nc_normal_order(e, limits);
  } else if (args.at) {
    nf = evaluate_at_p(normal_order_p(e, limits), parse_bigint(*args.at));
  } else {
    nf = normal_order_p(e, limits);
  }
  if (args.text) {
    std::cout << nf.render(args.display ? Notation::Display : Notation::Ascii) << '\n';
  } else {
    std::cout << normal_form_to_json(nf).dump(2) << '\n';
  }
  return 0;
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string expr;
  bool noncrossing = false;
  bool stats = false;
  bool canonical = false;
};

int cmd_enumerate(const EnumerateArgs& args) {
  const EnumerationLimits limits = limits_from_env();
  const Expression e = parse_expression(args.expr);
  const ContractionJsonOptions options{args.canonical, args.stats};
  for (const auto& term : e.terms()) {
    auto emit = [&](const Contraction& c) {
      Json line = contraction_to_json(c, options);
      if (term.coefficient != 1) line["coefficient"] = bigint_to_json(term.coefficient);
      std::cout << line.dump() << '\n';
    };
    if (args.noncrossing) {
      for_each_noncrossing(term.word, emit, limits);
    } else {
      for_each_contraction(term.word, emit, limits);
    }
  }
  return 0;
}

// ---- series ----

struct SeriesArgs {
  std::string family;
  unsigned r = 1;
  unsigned s = 1;
  unsigned order = 6;
  std::string format = "csv";
  std::optional<std::string> equation;
};

Equation default_equation(const SeriesArgs& args) {
  if (args.family == "B" && args.r == 2 && args.s == 2) return Equation::B22Quartic;
  if (args.family == "B" && (args.r == 1 || args.s == 1)) return Equation::Br1;
  if (args.family == "A" && args.r == 1) return Equation::A1s;
  if (args.family == "A" && args.s == 1) return Equation::Ar1;
  throw std::invalid_argument("no equation is known for " + args.family + " " + std::to_string(args.r) + " " +
                              std::to_string(args.s) + "; name one with --check-equation NAME");
}

int cmd_series(const SeriesArgs& args) {
  TruncatedSeries series;
  if (args.family == "B") {
    series = solve_B(args.r, args.s, args.order);
  } else if (args.family == "A") {
    series = solve_A(args.r, args.s, args.order);
  } else {
    throw std::invalid_argument("family must be B or A");
  }

  std::optional<Equation> eq;
  TruncatedSeries residual;
  if (args.equation) {
    eq = args.equation->empty() ? default_equation(args) : parse_equation(*args.equation);
    residual = check_equation_residual(series, *eq);
  }
  // The A_{r,1} equation is kept as a diagnostic; a nonzero residual is not a failure.
  const bool failed = eq && *eq != Equation::Ar1 && !residual.is_zero();

  if (args.format == "json") {
    Json out = series_to_json(series);
    if (eq) {
      out["residual"] = {{"equation", equation_name(*eq)},
                         {"through", residual.truncation()},
                         {"zero", residual.is_zero()},
                         {"nonzero_terms", residual.terms().size()}};
    }
    std::cout << out.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << series_csv(series);
    if (eq) {
      std::cout << "# residual " << equation_name(*eq) << " through x^" << residual.truncation() << ": "
                << (residual.is_zero() ? "zero" : std::to_string(residual.terms().size()) + " nonzero terms") << '\n';
    }
  } else {
    throw std::invalid_argument("format must be csv or json");
  }
  return failed ? 1 : 0;
}

// ---- closed ----

int cmd_closed(const std::string& name, const std::vector<std::int64_t>& values) {
  auto arg = [&](std::size_t i) {
    if (values[i] < 0) throw std::invalid_argument("arguments must be nonnegative");
    return static_cast<unsigned>(values[i]);
  };
  if (name.rfind("prod_", 0) == 0 || name.rfind("sum_", 0) == 0) {
    const ClosedFamily family = parse_closed_family(name);
    const bool fixed = family == ClosedFamily::Prod11 || family == ClosedFamily::Sum11;
    const std::size_t want = fixed ? 1 : 2;
    if (values.size() != want) {
      throw std::invalid_argument(name + " takes " + (fixed ? std::string("N") : std::string("PARAM N")));
    }
    const unsigned param = fixed ? 1 : arg(0);
    const unsigned n = arg(want - 1);
    Json out = normal_form_to_json(nc_closed_form(family, param, n));
    out["family"] = name;
    out["expression"] = "(" + closed_family_expression(family, param, 1).render() + ")^" + std::to_string(n);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  const NumberKind kind = parse_number_kind(name);
  const Json out = {{"schema", "ncorder/number/1"},
                    {"kind", name},
                    {"args", values},
                    {"value", bigint_to_json(number(kind, values))}};
  std::cout << out.dump() << '\n';
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  VerifyOptions options;
  bool json = false;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<VerifySuite> suites;
  if (args.suite == "all") {
    suites = {VerifySuite::Oracles, VerifySuite::Formulas, VerifySuite::Bijections, VerifySuite::Inequality};
  } else {
    suites = {parse_verify_suite(args.suite)};
  }
  bool ok = true;
  for (auto suite : suites) {
    const VerifyReport report = run_verify(suite, args.options);
    ok = ok && report.passed();
    if (args.json) {
      const Json out = {{"schema", "ncorder/verify/1"}, {"suite", report.suite},   {"max_n", report.max_n},
                        {"seed", report.seed},           {"checks", report.checks}, {"passed", report.passed()},
                        {"failures", report.failures}};
      std::cout << out.dump() << '\n';
      continue;
    }
    std::cout << "verify " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks
              << " checks, " << report.failures.size() << " failed, max-n " << report.max_n << ", seed " << report.seed
              << ")\n";
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "  " << report.failures[i] << '\n';
    if (report.failures.size() > shown) std::cout << "  ... " << report.failures.size() - shown << " more\n";
  }
  return ok ? 0 : 1;
}

// ---- biject ----

struct BijectArgs {
  std::string map;
  std::string input;
  bool inverse = false;
  std::optional<unsigned> n;
  std::optional<unsigned> r;
};

/// Number of annihilators before the first creator.
unsigned leading_whites(const Word& w) {
  unsigned r = 0;
  while (r < w.size() && w.at(r + 1) == Letter::Annihilator) ++r;
  return r;
}

Json path_json(const std::string& kind, const std::string& steps) {
  return {{"schema", "ncorder/path/1"}, {"kind", kind}, {"steps", steps}};
}

Json forward(const std::string& map, const Contraction& c, std::optional<unsigned> r) {
  if (map == "tree") {
    const unsigned arity_r = r ? *r : std::max(1u, leading_whites(c.word()));
    return {{"schema", "ncorder/tree/1"}, {"arity", arity_r + 1}, {"tree", tree_to_json(phi_tree(c, arity_r))}};
  }
  if (map == "lattice") return path_json("lattice", phi_lattice(c).str());
  if (map == "psi") return path_json("motzkin", psi_motzkin(c).str());
  if (map == "theta") return path_json("motzkin", theta_motzkin(c).str());
  throw std::invalid_argument("unknown map '" + map + "' (expected tree, lattice, psi or theta)");
}

std::string path_steps(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.at("steps").get<std::string>();
}

Contraction backward(const std::string& map, const Json& j, std::optional<unsigned> r) {
  if (map == "tree") {
    if (j.is_object()) return phi_tree_inverse(tree_from_json(j.at("tree"), j.at("arity").get<unsigned>()));
    const unsigned arity = r ? *r + 1 : (j.is_array() ? static_cast<unsigned>(j.size()) : 2u);
    return phi_tree_inverse(tree_from_json(j, arity));
  }
  if (map == "lattice") return phi_lattice_inverse(LLatticePath::parse(path_steps(j)));
  if (map == "psi") return psi_motzkin_inverse(TwoMotzkinPath::parse(path_steps(j)));
  if (map == "theta") return theta_motzkin_inverse(TwoMotzkinPath::parse(path_steps(j)));
  throw std::invalid_argument("unknown map '" + map + "' (expected tree, lattice, psi or theta)");
}

Expression map_domain(const std::string& map, unsigned n, unsigned r) {
  if (map == "tree") return Expression(family_word(r, 1, n));
  if (map == "lattice") return family_sum(1, 2, n);
  if (map == "psi") return Expression(family_word(1, 1, n));
  if (map == "theta") return family_sum(1, 1, n);
  throw std::invalid_argument("unknown map '" + map + "' (expected tree, lattice, psi or theta)");
}

/// Parses a JSON value, falling back to a bare step string such as LDD.
Json parse_value(const std::string& line) {
  Json j = Json::parse(line, nullptr, false);
  if (!j.is_discarded()) return j;
  std::string trimmed = line;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
  trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
  if (trimmed.find_first_not_of("HDLU'") == std::string::npos) return Json(trimmed);
  throw std::invalid_argument("malformed JSON: " + line);
}

int cmd_biject(const BijectArgs& args) {
  if (args.n) {
    if (args.inverse) throw std::invalid_argument("--n enumerates the contraction side; drop --inverse");
    const unsigned r = args.r.value_or(1);
    for (const auto& c : noncrossing_domain(map_domain(args.map, *args.n, r), limits_from_env())) {
      std::cout << Json{{"contraction", contraction_to_json(c)}, {"image", forward(args.map, c, r)}}.dump() << '\n';
    }
    return 0;
  }
  for (const auto& line : input_lines(args.input)) {
    const Json j = parse_value(line);
    if (args.inverse) {
      std::cout << contraction_to_json(backward(args.map, j, args.r)).dump() << '\n';
    } else {
      std::cout << forward(args.map, contraction_from_json(j.contains("contraction") ? j.at("contraction") : j), args.r)
                       .dump()
                << '\n';
    }
  }
  return 0;
}

// ---- render ----

struct RenderArgs {
  std::string input;
  std::string format = "ascii";
  std::string kind;
  std::optional<unsigned> arity;
};

std::string render_one(const RenderArgs& args, Json j) {
  const bool svg = args.format == "svg";
  if (j.is_object() && j.contains("image")) j = j.at("image");
  std::string kind = args.kind;
  std::string schema = j.is_object() ? j.value("schema", "") : "";
  if (kind.empty()) {
    if (schema == "ncorder/contraction/1" || (j.is_object() && j.contains("word"))) {
      kind = "contraction";
    } else if (schema == "ncorder/tree/1" || j.is_array() || j.is_null()) {
      kind = "tree";
    } else if (schema == "ncorder/path/1") {
      kind = j.at("kind").get<std::string>();
    } else if (j.is_string()) {
      const std::string s = j.get<std::string>();
      kind = s.find_first_of("U'") != std::string::npos ? "motzkin" : "lattice";
    } else {
      throw std::invalid_argument("cannot tell what to render; pass --kind");
    }
  }
  if (kind == "contraction") {
    const Contraction c = contraction_from_json(j);
    return svg ? render_contraction_svg(c) : render_contraction_ascii(c);
  }
  if (kind == "tree") {
    KaryTree t;
    if (j.is_object()) {
      t = tree_from_json(j.at("tree"), j.at("arity").get<unsigned>());
    } else {
      t = tree_from_json(j, args.arity ? *args.arity : (j.is_array() ? static_cast<unsigned>(j.size()) : 2u));
    }
    return svg ? render_tree_svg(t) : render_tree_ascii(t);
  }
  if (kind == "lattice") {
    const auto p = LLatticePath::parse(path_steps(j));
    return svg ? render_path_svg(p) : render_path_ascii(p);
  }
  if (kind == "motzkin") {
    const auto p = TwoMotzkinPath::parse(path_steps(j));
    return svg ? render_path_svg(p) : render_path_ascii(p);
  }
  throw std::invalid_argument("unknown kind '" + kind + "' (expected contraction, tree, lattice or motzkin)");
}

int cmd_render(const RenderArgs& args) {
  if (args.format != "ascii" && args.format != "svg") throw std::invalid_argument("format must be ascii or svg");
  const auto lines = input_lines(args.input);
  if (lines.empty()) throw std::invalid_argument("nothing to render");
  if (args.format == "svg" && lines.size() != 1) throw std::invalid_argument("svg output takes exactly one object");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << render_one(args, parse_value(lines[i]));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal ordering, noncrossing contractions and their combinatorics"};
  app.require_subcommand(1);

  OrderArgs order;
  auto* order_cmd = app.add_subcommand("order", "Normally ordered form of an expression as JSON");
  order_cmd->add_option("expr", order.expr, "Expression, e.g. \"(a ad)^3\"")->required();
  auto* nc_flag = order_cmd->add_flag("--nc", order.nc, "Noncrossing normal ordering (p = 0)");
  auto* at_opt = order_cmd->add_option("--at", order.at, "Evaluate the crossing weight p at an integer");
  auto* poly_flag = order_cmd->add_flag("--poly", order.poly, "Keep coefficients as polynomials in p (default)");
  nc_flag->excludes(at_opt)->excludes(poly_flag);
  at_opt->excludes(poly_flag);
  order_cmd->add_flag("--text", order.text, "Print the polynomial as text instead of JSON");
  order_cmd->add_flag("--display", order.display, "With --text, write a† instead of ad");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "One JSON line per contraction");
  enumerate_cmd->add_option("expr", enumerate.expr, "Expression")->required();
  enumerate_cmd->add_flag("--noncrossing", enumerate.noncrossing, "Only noncrossing contractions");
  enumerate_cmd->add_flag("--stats", enumerate.stats, "Include edge, crossing, nesting and cover counts");
  enumerate_cmd->add_flag("--canonical", enumerate.canonical, "Include the canonical sequential form");

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Noncrossing generating function of (a^r (ad)^s)^n (B) or (a^r + (ad)^s)^n (A)");
  series_cmd->add_option("family", series.family, "B or A")->required()->check(CLI::IsMember({"A", "B"}));
  series_cmd->add_option("r", series.r, "Annihilator power")->required()->check(CLI::PositiveNumber);
  series_cmd->add_option("s", series.s, "Creator power")->required()->check(CLI::PositiveNumber);
  series_cmd->add_option("--order", series.order, "Highest power of x kept")->capture_default_str();
  series_cmd->add_option("--format", series.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  series_cmd->add_option("--check-equation", series.equation,
                         "Report the residual of a functional equation (B22_quartic, A_r1, A_1s, B_r1; default by family)")
      ->expected(0, 1)
      ->default_str("");

  std::string closed_name;
  std::vector<std::int64_t> closed_values;
  auto* closed_cmd = app.add_subcommand(
      "closed", "Closed-form normal forms (prod_r1, prod_1r, sum_1s, prod_11, sum_11) or numbers (binomial, catalan, "
                "narayana, kary, stirling2, generalized_catalan)");
  closed_cmd->add_option("name", closed_name, "Family or number kind")->required();
  closed_cmd->add_option("args", closed_values, "Integer arguments");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check suites; exit status 1 on any failure");
  verify_cmd->add_option("suite", verify.suite, "oracles, formulas, bijections, inequality or all")
      ->required()
      ->check(CLI::IsMember({"oracles", "formulas", "bijections", "inequality", "all"}));
  verify_cmd->add_option("--max-n", verify.options.max_n, "Largest word length or family size (0: suite default)");
  verify_cmd->add_option("--seed", verify.options.seed, "Seed for sampled words")->capture_default_str();
  verify_cmd->add_option("--samples", verify.options.samples, "Number of sampled words (0: suite default)");
  verify_cmd->add_flag("--json", verify.json, "One JSON report per suite");

  BijectArgs biject;
  auto* biject_cmd = app.add_subcommand("biject", "Apply a bijection to contractions (JSON lines) or, with --inverse, to trees and paths");
  biject_cmd->add_option("map", biject.map, "tree, lattice, psi or theta")
      ->required()
      ->check(CLI::IsMember({"tree", "lattice", "psi", "theta"}));
  biject_cmd->add_option("input", biject.input, "JSON input; read from stdin when omitted");
  biject_cmd->add_flag("--inverse", biject.inverse, "Map a tree or path back to its contraction");
  biject_cmd->add_option("--n", biject.n, "Map the whole domain of size n instead of reading input");
  biject_cmd->add_option("--r", biject.r, "Annihilator power for the tree map")->check(CLI::PositiveNumber);

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Draw a contraction, tree or path");
  render_cmd->add_option("input", render.input, "JSON object or step string; read from stdin when omitted");
  render_cmd->add_option("--format", render.format, "ascii or svg")->capture_default_str()->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--kind", render.kind, "contraction, tree, lattice or motzkin (default: detected)")
      ->check(CLI::IsMember({"contraction", "tree", "lattice", "motzkin"}));
  render_cmd->add_option("--arity", render.arity, "Slots per node for bare tree arrays")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*order_cmd) return cmd_order(order);
    if (*enumerate_cmd) return cmd_enumerate(enumerate);
    if (*series_cmd) return cmd_series(series);
    if (*closed_cmd) return cmd_closed(closed_name, closed_values);
    if (*verify_cmd) return cmd_verify(verify);
    if (*biject_cmd) return cmd_biject(biject);
    if (*render_cmd) return cmd_render(render);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
