#include "ncorder/json_io.hpp"

#include <limits>
#include <stdexcept>

#include "ncorder/gf_system.hpp"

namespace ncorder {

Json bigint_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(to_string(value));
}

BigInt bigint_from_json(const Json& value) {
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_string()) return parse_bigint(value.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json normal_form_to_json(const NormalFormPolynomial& nf) {
  Json terms = Json::array();
  for (auto it = nf.entries().rbegin(); it != nf.entries().rend(); ++it) {
    Json coeffs = Json::array();
    for (const auto& c : it->second) coeffs.push_back(bigint_to_json(c));
    terms.push_back({{"adag", it->first.adag}, {"a", it->first.a}, {"coeffs", coeffs}});
  }
  return {{"schema", "ncorder/normal-form/1"}, {"terms", terms}};
}

NormalFormPolynomial normal_form_from_json(const Json& j) {
  NormalFormPolynomial nf;
  for (const auto& term : j.at("terms")) {
    const Monomial m{term.at("adag").get<std::size_t>(), term.at("a").get<std::size_t>()};
    const auto& coeffs = term.at("coeffs");
    for (std::size_t d = 0; d < coeffs.size(); ++d) nf.add(m, d, bigint_from_json(coeffs[d]));
  }
  return nf;
}

Json contraction_to_json(const Contraction& c, const ContractionJsonOptions& options) {
  Json edges = Json::array();
  for (const auto& e : c.edges()) edges.push_back({e.white, e.black});
  Json out = {{"schema", "ncorder/contraction/1"},
              {"word", c.word().render()},
              {"edges", edges},
              {"labels", c.render_labels()}};
  if (options.canonical) out["canonical"] = render_sequential_form(canonical_sequential_form(c));
  if (options.stats) {
    const auto s = stats(c);
    out["stats"] = {{"edges", s.edges},         {"crossings", s.crossings},   {"nestings", s.nestings},
                    {"covers", s.covers},       {"free_black", s.free_black}, {"free_white", s.free_white}};
  }
  return out;
}

Contraction contraction_from_json(const Json& j) {
  const Json& word_field = j.at("word");
  Word word;
  if (word_field.is_string()) {
    const Expression e = parse_expression(word_field.get<std::string>());
    if (e.size() != 1 || e.terms().front().coefficient != 1) {
      throw std::invalid_argument("contraction word must be a single word");
    }
    word = e.terms().front().word;
  } else {
    throw std::invalid_argument("contraction word must be a string");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be [white, black]");
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  return Contraction(word, std::move(edges));
}

namespace {

std::string family_name(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::B:
      return "B";
    case SeriesFamily::A:
      return "A";
    case SeriesFamily::Plain:
      return "plain";
  }
  return {};
}

}  // namespace

Json series_to_json(const TruncatedSeries& series) {
  const TruncatedSeries x = to_x_series(series);
  const bool with_z = series.meta().family == SeriesFamily::A;
  Json rows = Json::array();
  for (const auto& [k, c] : x.terms()) {
    Json row = Json::array({k.t, k.y});
    if (with_z) row.push_back(k.z);
    row.push_back(bigint_to_json(c));
    rows.push_back(row);
  }
  return {{"schema", "ncorder/series/1"},
          {"family", family_name(series.meta().family)},
          {"r", series.meta().r},
          {"s", series.meta().s},
          {"order", x.truncation()},
          {"columns", with_z ? Json::array({"n", "j", "i", "coefficient"}) : Json::array({"n", "j", "coefficient"})},
          {"rows", rows}};
}

namespace {

Json node_to_json(const KaryTree& tree, std::size_t node) {
  Json out = Json::array();
  for (unsigned slot = 0; slot < tree.arity(); ++slot) {
    const std::int32_t c = tree.child(node, slot);
    out.push_back(c == KaryTree::kEmpty ? Json(nullptr) : node_to_json(tree, static_cast<std::size_t>(c)));
  }
  return out;
}

}  // namespace

Json tree_to_json(const KaryTree& tree) { return tree.empty() ? Json(nullptr) : node_to_json(tree, 0); }

KaryTree tree_from_json(const Json& j, unsigned arity) {
  if (j.is_null()) return KaryTree(arity);
  if (!j.is_array() || j.size() != arity) {
    throw std::invalid_argument("tree node must be an array of " + std::to_string(arity) + " slots");
  }
  std::vector<KaryTree> children;
  for (const auto& slot : j) children.push_back(tree_from_json(slot, arity));
  return KaryTree::node(arity, children);
}

}  // namespace ncorder
