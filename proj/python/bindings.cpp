#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ncorder/bijections.hpp"
#include "ncorder/closed_forms.hpp"
#include "ncorder/contraction.hpp"
#include "ncorder/gf_system.hpp"
#include "ncorder/json_io.hpp"
#include "ncorder/normal_form.hpp"
#include "ncorder/render.hpp"
#include "ncorder/verify.hpp"

namespace py = pybind11;
using namespace ncorder;

// Python int <-> BigInt through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = parse_bigint(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    const std::string text = v.str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
using Monomials = std::map<std::pair<std::size_t, std::size_t>, BigInt>;

Word single_word(const std::string& text) {
  const Expression e = parse_expression(text);
  if (e.size() != 1 || e.terms().front().coefficient != 1) throw py::value_error("expected a single word");
  return e.terms().front().word;
}

Contraction make_contraction(const std::string& word, const EdgeList& edges) {
  std::vector<Edge> es;
  for (auto [w, b] : edges) es.push_back({w, b});
  return Contraction(single_word(word), std::move(es));
}

std::pair<std::string, EdgeList> unpack(const Contraction& c) {
  EdgeList edges;
  for (const auto& e : c.edges()) edges.emplace_back(e.white, e.black);
  return {c.word().render(), edges};
}

Monomials at_zero(const NormalFormPolynomial& nf) {
  Monomials out;
  for (const auto& [m, poly] : nf.entries()) {
    const BigInt c = evaluate(poly, 0);
    if (c != 0) out[{m.adag, m.a}] = c;
  }
  return out;
}

py::object tree_to_py(const KaryTree& t, std::int32_t node) {
  if (node == KaryTree::kEmpty) return py::none();
  py::list slots;
  for (unsigned s = 0; s < t.arity(); ++s) slots.append(tree_to_py(t, t.child(static_cast<std::size_t>(node), s)));
  return std::move(slots);
}

KaryTree tree_from_py(const py::handle& h, unsigned arity) {
  if (h.is_none()) return KaryTree(arity);
  const auto items = h.cast<py::list>();
  if (items.size() != arity) throw py::value_error("every tree node needs " + std::to_string(arity) + " slots");
  std::vector<KaryTree> children;
  for (const auto& item : items) children.push_back(tree_from_py(item, arity));
  return KaryTree::node(arity, children);
}

}  // namespace

PYBIND11_MODULE(_ncorder, m) {
  m.doc() = "Normal ordering of boson expressions, noncrossing contractions and their combinatorics";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);

  m.def(
      "parse_expression",
      [](const std::string& text) {
        std::vector<std::pair<BigInt, std::string>> out;
        const Expression e = parse_expression(text);
        for (const auto& t : e.terms()) out.emplace_back(t.coefficient, t.word.render());
        return out;
      },
      py::arg("text"), "Expanded terms as (coefficient, word) pairs.");

  m.def(
      "normal_order",
      [](const std::string& text) {
        std::map<std::pair<std::size_t, std::size_t>, std::vector<BigInt>> out;
        const NormalFormPolynomial nf = normal_order_p(parse_expression(text));
        for (const auto& [mono, poly] : nf.entries()) out[{mono.adag, mono.a}] = poly;
        return out;
      },
      py::arg("expr"), "{(adag, a): [c0, c1, ...]}, coefficients as polynomials in p.");
  m.def(
      "normal_order_at",
      [](const std::string& text, const BigInt& p) { return at_zero(evaluate_at_p(normal_order_p(parse_expression(text)), p)); },
      py::arg("expr"), py::arg("p"), "{(adag, a): coefficient} at an integer p.");
  m.def(
      "nc_normal_order", [](const std::string& text) { return at_zero(nc_normal_order(parse_expression(text))); },
      py::arg("expr"), "Noncrossing normal form {(adag, a): coefficient}.");
  m.def(
      "normal_form_json",
      [](const std::string& text, bool nc) {
        const Expression e = parse_expression(text);
        return normal_form_to_json(nc ? nc_normal_order(e) : normal_order_p(e)).dump();
      },
      py::arg("expr"), py::arg("nc") = false);

  m.def(
      "enumerate_contractions",
      [](const std::string& word, bool noncrossing) {
        std::vector<EdgeList> out;
        const Word w = single_word(word);
        for (const auto& c : noncrossing ? enumerate_noncrossing(w) : enumerate_contractions(w)) out.push_back(unpack(c).second);
        return out;
      },
      py::arg("word"), py::arg("noncrossing") = false, "Edge lists [(white, black), ...], 1-based positions.");
  m.def(
      "contraction_stats",
      [](const std::string& word, const EdgeList& edges) {
        const auto s = stats(make_contraction(word, edges));
        return std::map<std::string, std::size_t>{{"edges", s.edges},         {"crossings", s.crossings},
                                                  {"nestings", s.nestings},   {"covers", s.covers},
                                                  {"free_black", s.free_black}, {"free_white", s.free_white}};
      },
      py::arg("word"), py::arg("edges"));
  m.def(
      "canonical_form",
      [](const std::string& word, const EdgeList& edges) {
        return render_sequential_form(canonical_sequential_form(make_contraction(word, edges)));
      },
      py::arg("word"), py::arg("edges"));
  m.def(
      "nc_edge_counts", [](const std::string& word) { return nc_edge_counts_dp(single_word(word)); }, py::arg("word"),
      "Noncrossing contractions by edge count, from the dynamic program.");

  m.def(
      "solve_B",
      [](unsigned r, unsigned s, unsigned order) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt> out;
        const TruncatedSeries x = to_x_series(solve_B(r, s, order));
        for (const auto& [k, c] : x.terms()) out[{k.t, k.y}] = c;
        return out;
      },
      py::arg("r"), py::arg("s"), py::arg("order"), "{(n, edges): count} for (a^r (a†)^s)^n.");
  m.def(
      "solve_A",
      [](unsigned r, unsigned s, unsigned order) {
        std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, BigInt> out;
        const TruncatedSeries x = to_x_series(solve_A(r, s, order));
        for (const auto& [k, c] : x.terms()) out[{k.t, k.y, k.z}] = c;
        return out;
      },
      py::arg("r"), py::arg("s"), py::arg("order"), "{(n, edges, annihilators): count} for (a^r + (a†)^s)^n.");
  m.def(
      "equation_residual_is_zero",
      [](const std::string& family, unsigned r, unsigned s, unsigned order, const std::string& equation) {
        const TruncatedSeries series = family == "A" ? solve_A(r, s, order) : solve_B(r, s, order);
        return check_equation_residual(series, parse_equation(equation)).is_zero();
      },
      py::arg("family"), py::arg("r"), py::arg("s"), py::arg("order"), py::arg("equation"));

  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("catalan", &catalan, py::arg("n"));
  m.def("narayana", &narayana, py::arg("n"), py::arg("j"));
  m.def("kary", &kary, py::arg("k"), py::arg("n"));
  m.def("stirling2", &stirling2, py::arg("n"), py::arg("k"));
  m.def("generalized_catalan", &generalized_catalan, py::arg("n"), py::arg("k"));
  m.def(
      "nc_closed_form",
      [](const std::string& family, unsigned param, unsigned n) {
        return at_zero(nc_closed_form(parse_closed_family(family), param, n));
      },
      py::arg("family"), py::arg("param"), py::arg("n"));

  m.def(
      "phi_tree",
      [](const std::string& word, const EdgeList& edges, unsigned r) {
        const KaryTree t = phi_tree(make_contraction(word, edges), r);
        return tree_to_py(t, t.empty() ? KaryTree::kEmpty : 0);
      },
      py::arg("word"), py::arg("edges"), py::arg("r"), "Nested lists, one entry per slot, None when empty.");
  m.def(
      "phi_tree_inverse",
      [](const py::object& tree, unsigned arity) { return unpack(phi_tree_inverse(tree_from_py(tree, arity))); },
      py::arg("tree"), py::arg("arity"));
  m.def(
      "phi_lattice", [](const std::string& word, const EdgeList& edges) { return phi_lattice(make_contraction(word, edges)).str(); },
      py::arg("word"), py::arg("edges"));
  m.def(
      "phi_lattice_inverse", [](const std::string& path) { return unpack(phi_lattice_inverse(LLatticePath::parse(path))); },
      py::arg("path"));
  m.def(
      "psi", [](const std::string& word, const EdgeList& edges) { return psi_motzkin(make_contraction(word, edges)).str(); },
      py::arg("word"), py::arg("edges"));
  m.def(
      "psi_inverse", [](const std::string& path) { return unpack(psi_motzkin_inverse(TwoMotzkinPath::parse(path))); },
      py::arg("path"));
  m.def(
      "theta", [](const std::string& word, const EdgeList& edges) { return theta_motzkin(make_contraction(word, edges)).str(); },
      py::arg("word"), py::arg("edges"));
  m.def(
      "theta_inverse", [](const std::string& path) { return unpack(theta_motzkin_inverse(TwoMotzkinPath::parse(path))); },
      py::arg("path"));

  m.def(
      "render_contraction",
      [](const std::string& word, const EdgeList& edges, const std::string& format) {
        const Contraction c = make_contraction(word, edges);
        if (format == "svg") return render_contraction_svg(c);
        if (format == "ascii") return render_contraction_ascii(c);
        throw py::value_error("format must be ascii or svg");
      },
      py::arg("word"), py::arg("edges"), py::arg("format") = "ascii");

  m.def(
      "verify",
      [](const std::string& suite, std::size_t max_n, std::uint64_t seed) {
        VerifyOptions options;
        options.max_n = max_n;
        options.seed = seed;
        const VerifyReport r = run_verify(parse_verify_suite(suite), options);
        py::dict out;
        out["suite"] = r.suite;
        out["passed"] = r.passed();
        out["checks"] = r.checks;
        out["failures"] = r.failures;
        return out;
      },
      py::arg("suite"), py::arg("max_n") = 0, py::arg("seed") = 7);
}
