#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncorder/boson.hpp"

namespace ncorder {

/// An arc of a contraction, stored white-first: `white` is the position of an
/// annihilator, `black` the position of a later creator (1-based, white < black).
struct Edge {
  std::size_t white = 0;
  std::size_t black = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A partial matching of annihilators to later creators on a word. The empty
/// edge set is the null contraction. Edges are kept sorted by white position.
class Contraction {
 public:
  Contraction() = default;

  /// Validates and normalizes; throws std::invalid_argument on a bad edge set.
  Contraction(Word word, std::vector<Edge> edges);

  const Word& word() const { return word_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_null() const { return edges_.empty(); }

  /// partner()[i - 1] is the position matched with position i, 0 when free.
  std::vector<std::size_t> partner() const;

  /// Edge list with right-to-left vertex labels, white label first, e.g.
  /// "(42)(31)"; "∅" for the null contraction.
  std::string render_labels() const;

  friend bool operator==(const Contraction&, const Contraction&) = default;
  friend auto operator<=>(const Contraction& lhs, const Contraction& rhs) {
    if (auto c = lhs.word_ <=> rhs.word_; c != 0) return c;
    return lhs.edges_ <=> rhs.edges_;
  }

 private:
  Word word_;
  std::vector<Edge> edges_;
};

struct ContractionStats {
  std::size_t edges = 0;
  std::size_t crossings = 0;
  /// Unordered edge pairs where one arc lies strictly inside the other.
  std::size_t nestings = 0;
  /// Number of edges that cover at least one other edge.
  std::size_t covers = 0;
  std::size_t free_black = 0;
  std::size_t free_white = 0;

  friend bool operator==(const ContractionStats&, const ContractionStats&) = default;
};

ContractionStats stats(const Contraction& contraction);

bool edges_cross(const Edge& e, const Edge& f);
/// True when `outer` covers `inner`: outer.white < inner.white < inner.black < outer.black.
bool edge_covers(const Edge& outer, const Edge& inner);

/// Word length limits for the enumerators.
struct EnumerationLimits {
  std::size_t max_letters = 20;
  std::size_t max_letters_noncrossing = 40;
};

class EnumerationBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

using ContractionVisitor = std::function<void(const Contraction&)>;

/// Visits every contraction of `word` once, null contraction first. Whites are
/// decided in increasing position; each is left free or matched to an unused
/// later creator in increasing position.
void for_each_contraction(const Word& word, const ContractionVisitor& visit, const EnumerationLimits& limits = {});
std::vector<Contraction> enumerate_contractions(const Word& word, const EnumerationLimits& limits = {});

/// Visits the noncrossing contractions only, generated left to right with a
/// stack: a white is left free or opens an arc, a creator is left free or
/// closes the most recently opened arc.
void for_each_noncrossing(const Word& word, const ContractionVisitor& visit, const EnumerationLimits& limits = {});
std::vector<Contraction> enumerate_noncrossing(const Word& word, const EnumerationLimits& limits = {});

/// One token of the canonical sequential form: a label, primed for free whites.
struct SequentialToken {
  std::size_t label = 0;
  bool primed = false;

  friend bool operator==(const SequentialToken&, const SequentialToken&) = default;
  friend auto operator<=>(const SequentialToken&, const SequentialToken&) = default;
};

/// Reads the contraction right to left. Free creators and matched creators
/// take the next fresh label; free annihilators take the next fresh label
/// primed; matched annihilators repeat their partner's label. The first token
/// describes the rightmost letter.
std::vector<SequentialToken> canonical_sequential_form(const Contraction& contraction);

/// Concatenated tokens, e.g. "123'4'" (ASCII) or "123′4′" (display).
std::string render_sequential_form(const std::vector<SequentialToken>& tokens, Notation notation = Notation::Ascii);

}  // namespace ncorder
