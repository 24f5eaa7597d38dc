#include "ncorder/contraction.hpp"

#include <algorithm>

#include "contraction_detail.hpp"

namespace ncorder {

Contraction::Contraction(Word word, std::vector<Edge> edges) : word_(std::move(word)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<bool> used(word_.size() + 1, false);
  for (const auto& e : edges_) {
    if (e.white == 0 || e.black == 0 || e.white > word_.size() || e.black > word_.size()) {
      throw std::invalid_argument("edge position out of range");
    }
    if (word_.at(e.white) != Letter::Annihilator || word_.at(e.black) != Letter::Creator) {
      throw std::invalid_argument("edge must join an annihilator to a creator");
    }
    if (e.white >= e.black) throw std::invalid_argument("edge annihilator must precede its creator");
    if (used[e.white] || used[e.black]) throw std::invalid_argument("edges must not share a position");
    used[e.white] = used[e.black] = true;
  }
}

std::vector<std::size_t> Contraction::partner() const {
  std::vector<std::size_t> out(word_.size(), 0);
  for (const auto& e : edges_) {
    out[e.white - 1] = e.black;
    out[e.black - 1] = e.white;
  }
  return out;
}

std::string Contraction::render_labels() const {
  if (edges_.empty()) return "∅";
  const std::size_t n = word_.size();
  std::string out;
  for (const auto& e : edges_) {
    out += '(' + std::to_string(n + 1 - e.white);
    if (n >= 10) out += ',';
    out += std::to_string(n + 1 - e.black) + ')';
  }
  return out;
}

bool edges_cross(const Edge& e, const Edge& f) {
  return (e.white < f.white && f.white < e.black && e.black < f.black) ||
         (f.white < e.white && e.white < f.black && f.black < e.black);
}

bool edge_covers(const Edge& outer, const Edge& inner) {
  return outer.white < inner.white && inner.black < outer.black;
}

namespace detail {

ContractionStats stats_of(const Word& word, const std::vector<Edge>& edges) {
  ContractionStats out;
  out.edges = edges.size();
  out.free_black = word.creators() - edges.size();
  out.free_white = word.annihilators() - edges.size();
  std::vector<bool> covering(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(edges[i], edges[j])) {
        ++out.crossings;
      } else if (edge_covers(edges[i], edges[j])) {
        ++out.nestings;
        covering[i] = true;
      } else if (edge_covers(edges[j], edges[i])) {
        ++out.nestings;
        covering[j] = true;
      }
    }
  }
  out.covers = static_cast<std::size_t>(std::count(covering.begin(), covering.end(), true));
  return out;
}

namespace {

void check_bound(const Word& word, std::size_t bound, const char* what) {
  if (word.size() > bound) {
    throw EnumerationBoundExceeded(std::string(what) + " enumeration refused: word has " + std::to_string(word.size()) +
                                   " letters, bound is " + std::to_string(bound));
  }
}

struct AllMatchings {
  const std::vector<Letter>& letters;
  const EdgeSetVisitor& visit;
  std::vector<bool> used;
  std::vector<Edge> edges;

  void run(std::size_t pos) {
    while (pos < letters.size() && letters[pos] != Letter::Annihilator) ++pos;
    if (pos == letters.size()) {
      visit(edges);
      return;
    }
    run(pos + 1);
    for (std::size_t b = pos + 1; b < letters.size(); ++b) {
      if (letters[b] != Letter::Creator || used[b]) continue;
      used[b] = true;
      edges.push_back({pos + 1, b + 1});
      run(pos + 1);
      edges.pop_back();
      used[b] = false;
    }
  }
};

struct NoncrossingMatchings {
  const std::vector<Letter>& letters;
  const EdgeSetVisitor& visit;
  std::vector<std::size_t> open;
  std::vector<Edge> edges;
  std::vector<std::size_t> creators_after;

  void run(std::size_t pos) {
    if (open.size() > creators_after[pos]) return;
    if (pos == letters.size()) {
      std::vector<Edge> sorted = edges;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    if (letters[pos] == Letter::Annihilator) {
      run(pos + 1);
      open.push_back(pos + 1);
      run(pos + 1);
      open.pop_back();
    } else {
      run(pos + 1);
      if (!open.empty()) {
        const std::size_t white = open.back();
        open.pop_back();
        edges.push_back({white, pos + 1});
        run(pos + 1);
        edges.pop_back();
        open.push_back(white);
      }
    }
  }
};

std::vector<std::size_t> count_creators_after(const std::vector<Letter>& letters) {
  std::vector<std::size_t> out(letters.size() + 1, 0);
  for (std::size_t i = letters.size(); i-- > 0;) out[i] = out[i + 1] + (letters[i] == Letter::Creator ? 1 : 0);
  return out;
}

}  // namespace

void enumerate_edge_sets(const Word& word, const EdgeSetVisitor& visit, const EnumerationLimits& limits) {
  check_bound(word, limits.max_letters, "contraction");
  AllMatchings walker{word.letters(), visit, std::vector<bool>(word.size(), false), {}};
  walker.run(0);
}

void enumerate_noncrossing_edge_sets(const Word& word, const EdgeSetVisitor& visit, const EnumerationLimits& limits) {
  check_bound(word, limits.max_letters_noncrossing, "noncrossing contraction");
  NoncrossingMatchings walker{word.letters(), visit, {}, {}, count_creators_after(word.letters())};
  walker.run(0);
}

}  // namespace detail

ContractionStats stats(const Contraction& contraction) {
  return detail::stats_of(contraction.word(), contraction.edges());
}

void for_each_contraction(const Word& word, const ContractionVisitor& visit, const EnumerationLimits& limits) {
  detail::enumerate_edge_sets(
      word, [&](const std::vector<Edge>& edges) { visit(Contraction(word, edges)); }, limits);
}

std::vector<Contraction> enumerate_contractions(const Word& word, const EnumerationLimits& limits) {
  std::vector<Contraction> out;
  for_each_contraction(word, [&](const Contraction& c) { out.push_back(c); }, limits);
  return out;
}

void for_each_noncrossing(const Word& word, const ContractionVisitor& visit, const EnumerationLimits& limits) {
  detail::enumerate_noncrossing_edge_sets(
      word, [&](const std::vector<Edge>& edges) { visit(Contraction(word, edges)); }, limits);
}

std::vector<Contraction> enumerate_noncrossing(const Word& word, const EnumerationLimits& limits) {
  std::vector<Contraction> out;
  for_each_noncrossing(word, [&](const Contraction& c) { out.push_back(c); }, limits);
  return out;
}

std::vector<SequentialToken> canonical_sequential_form(const Contraction& contraction) {
  const auto& word = contraction.word();
  const auto partner = contraction.partner();
  const std::size_t n = word.size();
  std::vector<std::size_t> label(n + 1, 0);
  std::vector<SequentialToken> out;
  out.reserve(n);
  std::size_t fresh = 1;
  for (std::size_t pos = n; pos >= 1; --pos) {
    const std::size_t mate = partner[pos - 1];
    if (word.at(pos) == Letter::Creator) {
      label[pos] = fresh++;
      out.push_back({label[pos], false});
    } else if (mate == 0) {
      out.push_back({fresh++, true});
    } else {
      out.push_back({label[mate], false});
    }
  }
  return out;
}

std::string render_sequential_form(const std::vector<SequentialToken>& tokens, Notation notation) {
  const bool spaced = std::any_of(tokens.begin(), tokens.end(), [](const auto& t) { return t.label >= 10; });
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (spaced && i) out += ' ';
    out += std::to_string(tokens[i].label);
    if (tokens[i].primed) out += notation == Notation::Ascii ? "'" : "′";
  }
  return out;
}

}  // namespace ncorder
