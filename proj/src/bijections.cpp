#include "ncorder/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ncorder {

// ---- KaryTree ---------------------------------------------------------------

KaryTree KaryTree::leaf(unsigned arity) {
  KaryTree t(arity);
  t.slots_.emplace_back(arity, kEmpty);
  return t;
}

KaryTree KaryTree::node(unsigned arity, const std::vector<KaryTree>& children) {
  if (children.size() != arity) throw std::invalid_argument("a node needs exactly one entry per slot");
  KaryTree t = leaf(arity);
  for (unsigned i = 0; i < arity; ++i) {
    if (children[i].arity_ != arity) throw std::invalid_argument("child arity mismatch");
    if (!children[i].empty()) t.append(children[i], 0, i);
  }
  return t;
}

void KaryTree::append(const KaryTree& other, std::size_t parent, unsigned slot) {
  const auto offset = static_cast<std::int32_t>(slots_.size());
  slots_[parent][slot] = offset;
  for (const auto& row : other.slots_) {
    auto& copy = slots_.emplace_back(row);
    for (auto& c : copy)
      if (c != kEmpty) c += offset;
  }
}

std::size_t KaryTree::subtree_size(std::size_t node) const {
  std::size_t total = 1;
  for (std::int32_t c : slots_.at(node))
    if (c != kEmpty) total += subtree_size(static_cast<std::size_t>(c));
  return total;
}

KaryTree KaryTree::subtree(std::size_t node) const {
  const std::size_t n = subtree_size(node);
  KaryTree t(arity_);
  // Preorder keeps a subtree contiguous.
  for (std::size_t i = node; i < node + n; ++i) {
    auto& row = t.slots_.emplace_back(slots_[i]);
    for (auto& c : row)
      if (c != kEmpty) c -= static_cast<std::int32_t>(node);
  }
  return t;
}

KaryTree KaryTree::root_slot(unsigned slot) const {
  if (empty()) throw std::invalid_argument("empty tree has no root");
  const std::int32_t c = child(0, slot);
  return c == kEmpty ? KaryTree(arity_) : subtree(static_cast<std::size_t>(c));
}

// ---- paths --------------------------------------------------------------------

LLatticePath LLatticePath::parse(const std::string& text) {
  std::vector<LStep> steps;
  for (char c : text) {
    switch (c) {
      case 'H':
        steps.push_back(LStep::H);
        break;
      case 'D':
        steps.push_back(LStep::D);
        break;
      case 'L':
        steps.push_back(LStep::L);
        break;
      default:
        throw ShapeError(std::string("lattice path step must be H, D or L, got '") + c + "'");
    }
  }
  return LLatticePath(std::move(steps));
}

std::string LLatticePath::str() const {
  std::string out;
  for (LStep s : steps_) out += s == LStep::H ? 'H' : s == LStep::D ? 'D' : 'L';
  return out;
}

std::size_t LLatticePath::width() const {
  std::size_t x = 0;
  for (LStep s : steps_) x += s == LStep::H ? 2 : 1;
  return x;
}

std::vector<std::int64_t> LLatticePath::heights() const {
  std::vector<std::int64_t> out{0};
  for (LStep s : steps_) out.push_back(out.back() + (s == LStep::H ? 1 : s == LStep::D ? -1 : 2));
  return out;
}

bool LLatticePath::valid() const {
  const auto h = heights();
  if (h.back() != 0 || width() % 3 != 0) return false;
  if (std::any_of(h.begin(), h.end(), [](std::int64_t v) { return v < 0; })) return false;
  return count("DDD") == 0;
}

std::size_t LLatticePath::count(const std::string& pattern) const {
  const std::string s = str();
  std::size_t total = 0;
  for (std::size_t i = 0; i + pattern.size() <= s.size(); ++i) total += s.compare(i, pattern.size(), pattern) == 0;
  return total;
}

TwoMotzkinPath TwoMotzkinPath::parse(const std::string& text) {
  std::vector<MotzkinStep> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U':
        steps.push_back(MotzkinStep::Up);
        break;
      case 'D':
        steps.push_back(MotzkinStep::Down);
        break;
      case 'L':
        if (i + 1 < text.size() && text[i + 1] == '\'') {
          steps.push_back(MotzkinStep::LevelGray);
          ++i;
        } else {
          steps.push_back(MotzkinStep::LevelBlack);
        }
        break;
      default:
        throw ShapeError(std::string("Motzkin step must be U, D, L or L', got '") + text[i] + "'");
    }
  }
  return TwoMotzkinPath(std::move(steps));
}

std::string TwoMotzkinPath::str() const {
  std::string out;
  for (MotzkinStep s : steps_) {
    switch (s) {
      case MotzkinStep::Up:
        out += 'U';
        break;
      case MotzkinStep::Down:
        out += 'D';
        break;
      case MotzkinStep::LevelBlack:
        out += 'L';
        break;
      case MotzkinStep::LevelGray:
        out += "L'";
        break;
    }
  }
  return out;
}

std::vector<std::int64_t> TwoMotzkinPath::heights() const {
  std::vector<std::int64_t> out{0};
  for (MotzkinStep s : steps_) out.push_back(out.back() + (s == MotzkinStep::Up ? 1 : s == MotzkinStep::Down ? -1 : 0));
  return out;
}

bool TwoMotzkinPath::valid() const {
  const auto h = heights();
  return h.back() == 0 && std::none_of(h.begin(), h.end(), [](std::int64_t v) { return v < 0; });
}

std::size_t TwoMotzkinPath::count(MotzkinStep step) const {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), step));
}

// ---- shared helpers -----------------------------------------------------------

namespace {

void require_noncrossing(const Contraction& c) {
  const auto& e = c.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (edges_cross(e[i], e[j])) throw ShapeError("contraction has a crossing");
}

/// Letters and edges assembled piece by piece; positions are 1-based.
struct Assembly {
  std::vector<Letter> letters;
  std::vector<Edge> edges;

  std::size_t push(Letter l) {
    letters.push_back(l);
    return letters.size();
  }
  void append(const Assembly& other) {
    const std::size_t offset = letters.size();
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    for (const auto& e : other.edges) edges.push_back({e.white + offset, e.black + offset});
  }
  Contraction finish() const { return Contraction(Word(letters), edges); }
};

}  // namespace

// ---- trees --------------------------------------------------------------------

namespace {

struct TreeEncoder {
  unsigned r;
  std::vector<std::size_t> partner;

  std::size_t white(std::size_t factor, unsigned slot) const { return (factor - 1) * (r + 1) + slot + 1; }
  std::size_t factor_of(std::size_t position) const { return (position - 1) / (r + 1) + 1; }

  KaryTree encode(std::size_t lo, std::size_t hi) const {
    if (lo > hi) return KaryTree::leaf(r + 1);
    std::vector<KaryTree> children(r + 1, KaryTree(r + 1));
    std::vector<std::pair<unsigned, std::size_t>> opened;
    for (unsigned i = 0; i < r; ++i) {
      const std::size_t mate = partner[white(lo, i) - 1];
      if (mate != 0) opened.push_back({i, factor_of(mate)});
    }
    if (opened.empty()) {
      children[r] = encode(lo + 1, hi);
      return KaryTree::node(r + 1, children);
    }
    for (std::size_t l = 0; l + 1 < opened.size(); ++l) {
      if (opened[l].second <= opened[l + 1].second) throw ShapeError("contraction has a crossing");
    }
    const std::size_t last = opened.back().second;
    if (last != lo) children[r] = encode(lo + 1, last - 1);
    children[opened.front().first] = encode(opened.front().second + 1, hi);
    for (std::size_t l = 1; l < opened.size(); ++l) {
      children[opened[l].first] = encode(opened[l].second + 1, opened[l - 1].second - 1);
    }
    return KaryTree::node(r + 1, children);
  }
};

struct TreeDecoder {
  const KaryTree& tree;
  unsigned r;
  std::vector<Edge> edges;

  std::size_t white(std::size_t factor, unsigned slot) const { return (factor - 1) * (r + 1) + slot + 1; }
  std::size_t black(std::size_t factor) const { return factor * (r + 1); }
  std::size_t size_of(std::int32_t node) const {
    return node == KaryTree::kEmpty ? 0 : tree.subtree_size(static_cast<std::size_t>(node));
  }

  // Factors lo..hi are described by `node`, whose subtree has hi - lo + 2 nodes.
  void decode(std::size_t node, std::size_t lo, std::size_t hi) {
    std::vector<unsigned> opened;
    for (unsigned i = 0; i < r; ++i)
      if (tree.child(node, i) != KaryTree::kEmpty) opened.push_back(i);
    const std::int32_t rest = tree.child(node, r);
    if (opened.empty()) {
      if (rest == KaryTree::kEmpty) return;
      decode(static_cast<std::size_t>(rest), lo + 1, hi);
      return;
    }
    std::size_t upper = hi;
    std::size_t k = 0;
    for (unsigned slot : opened) {
      const std::int32_t c = tree.child(node, slot);
      k = upper - size_of(c) + 1;
      decode(static_cast<std::size_t>(c), k + 1, upper);
      edges.push_back({white(lo, slot), black(k)});
      upper = k - 1;
    }
    if (rest != KaryTree::kEmpty) {
      if (k != lo + size_of(rest)) throw ShapeError("tree does not describe a contraction");
      decode(static_cast<std::size_t>(rest), lo + 1, k - 1);
    } else if (k != lo) {
      throw ShapeError("tree does not describe a contraction");
    }
  }
};

}  // namespace

KaryTree phi_tree(const Contraction& c, unsigned r) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  const Word& w = c.word();
  if (w.size() % (r + 1) != 0 || w != family_word(r, 1, static_cast<unsigned>(w.size() / (r + 1)))) {
    throw ShapeError("phi_tree needs a contraction of (a^" + std::to_string(r) + " a†)^n");
  }
  require_noncrossing(c);
  TreeEncoder enc{r, c.partner()};
  return enc.encode(1, w.size() / (r + 1));
}

Contraction phi_tree_inverse(const KaryTree& tree) {
  if (tree.empty() || tree.arity() < 2) throw ShapeError("phi_tree_inverse needs a nonempty tree of arity >= 2");
  const unsigned r = tree.arity() - 1;
  const std::size_t n = tree.size() - 1;
  TreeDecoder dec{tree, r, {}};
  dec.decode(0, 1, n);
  return Contraction(family_word(r, 1, static_cast<unsigned>(n)), dec.edges);
}

// ---- lattice paths -------------------------------------------------------------

namespace {

enum class FactorKind { A, DD };

struct LatticeEncoder {
  std::vector<FactorKind> kinds;
  std::vector<std::size_t> first;  // first position of each factor (1-based factors)
  std::vector<std::size_t> factor_at;
  std::vector<std::size_t> partner;
  std::vector<LStep> out;

  void emit(std::initializer_list<LStep> steps) { out.insert(out.end(), steps); }

  void encode(std::size_t lo, std::size_t hi) {
    if (lo > hi) return;
    if (kinds[hi] == FactorKind::A) {
      emit({LStep::H, LStep::D});
      encode(lo, hi - 1);
      return;
    }
    const std::size_t b1 = first[hi], b2 = b1 + 1;
    const std::size_t m1 = partner[b1 - 1], m2 = partner[b2 - 1];
    if (m1 == 0 && m2 == 0) {
      emit({LStep::L, LStep::D, LStep::D});
      encode(lo, hi - 1);
    } else if (m2 == 0) {
      const std::size_t f = factor_at[m1];
      emit({LStep::L, LStep::D});
      encode(f + 1, hi - 1);
      emit({LStep::H, LStep::D, LStep::D});
      encode(lo, f - 1);
    } else if (m1 == 0) {
      const std::size_t f = factor_at[m2];
      emit({LStep::H});
      encode(f + 1, hi - 1);
      emit({LStep::H, LStep::D, LStep::D});
      encode(lo, f - 1);
    } else {
      const std::size_t f1 = factor_at[m1], f2 = factor_at[m2];
      emit({LStep::L});
      encode(f1 + 1, hi - 1);
      emit({LStep::H, LStep::D, LStep::D});
      encode(f2 + 1, f1 - 1);
      emit({LStep::H, LStep::D, LStep::D});
      encode(lo, f2 - 1);
    }
  }
};

struct LatticeDecoder {
  const std::vector<LStep>& s;

  // End (exclusive) of the first excursion starting at `from`, which returns to
  // the starting height.
  std::size_t first_return(std::size_t from, std::size_t to) const {
    std::int64_t h = 0;
    for (std::size_t i = from; i < to; ++i) {
      h += s[i] == LStep::H ? 1 : s[i] == LStep::D ? -1 : 2;
      if (h < 0) throw ShapeError("lattice path goes below its base line");
      if (h == 0) return i + 1;
    }
    throw ShapeError("lattice path does not return to its base line");
  }

  // First index at or after `from` where the running height relative to
  // s[from..] drops to `target` (negative), returning the index after that step.
  std::size_t first_drop(std::size_t from, std::size_t to, std::int64_t target) const {
    std::int64_t h = 0;
    for (std::size_t i = from; i < to; ++i) {
      h += s[i] == LStep::H ? 1 : s[i] == LStep::D ? -1 : 2;
      if (h == target) return i + 1;
    }
    throw ShapeError("lattice path is malformed");
  }

  bool is_hdd(std::size_t i, std::size_t to) const {
    return i + 3 <= to && s[i] == LStep::H && s[i + 1] == LStep::D && s[i + 2] == LStep::D;
  }

  Assembly decode(std::size_t from, std::size_t to) const {
    Assembly out;
    if (from == to) return out;
    const std::size_t end = first_return(from, to);
    out = decode(end, to);
    const std::size_t len = end - from;
    auto expect_hdd_tail = [&](std::size_t stop) {
      if (stop < from + 3 || !is_hdd(stop - 3, stop)) throw ShapeError("lattice path is not in P_n");
    };
    if (s[from] == LStep::H) {
      if (len == 2) {
        out.push(Letter::Annihilator);
        return out;
      }
      // H P' HDD
      expect_hdd_tail(end);
      const std::size_t w = out.push(Letter::Annihilator);
      out.append(decode(from + 1, end - 3));
      out.push(Letter::Creator);
      const std::size_t b2 = out.push(Letter::Creator);
      out.edges.push_back({w, b2});
      return out;
    }
    if (s[from + 1] == LStep::D) {
      if (len == 3) {
        out.push(Letter::Creator);
        out.push(Letter::Creator);
        return out;
      }
      // LD T' HDD
      expect_hdd_tail(end);
      const std::size_t w = out.push(Letter::Annihilator);
      out.append(decode(from + 2, end - 3));
      const std::size_t b1 = out.push(Letter::Creator);
      out.push(Letter::Creator);
      out.edges.push_back({w, b1});
      return out;
    }
    // L S' HDD T' HDD, where S' HDD ends where the path first reaches height 1.
    const std::size_t mid = first_drop(from, end, 1);
    expect_hdd_tail(mid);
    expect_hdd_tail(end);
    const std::size_t w2 = out.push(Letter::Annihilator);
    out.append(decode(mid, end - 3));
    const std::size_t w1 = out.push(Letter::Annihilator);
    out.append(decode(from + 1, mid - 3));
    const std::size_t b1 = out.push(Letter::Creator);
    const std::size_t b2 = out.push(Letter::Creator);
    out.edges.push_back({w1, b1});
    out.edges.push_back({w2, b2});
    return out;
  }
};

}  // namespace

LLatticePath phi_lattice(const Contraction& c) {
  const Word& w = c.word();
  LatticeEncoder enc;
  enc.kinds.push_back(FactorKind::A);
  enc.first.push_back(0);
  enc.factor_at.assign(w.size() + 1, 0);
  for (std::size_t pos = 1; pos <= w.size();) {
    enc.first.push_back(pos);
    if (w.at(pos) == Letter::Annihilator) {
      enc.kinds.push_back(FactorKind::A);
      enc.factor_at[pos] = enc.kinds.size() - 1;
      ++pos;
    } else {
      if (pos == w.size() || w.at(pos + 1) != Letter::Creator) {
        throw ShapeError("phi_lattice needs a word made of a and a†a† factors");
      }
      enc.kinds.push_back(FactorKind::DD);
      enc.factor_at[pos] = enc.factor_at[pos + 1] = enc.kinds.size() - 1;
      pos += 2;
    }
  }
  require_noncrossing(c);
  enc.partner = c.partner();
  enc.encode(1, enc.kinds.size() - 1);
  return LLatticePath(std::move(enc.out));
}

Contraction phi_lattice_inverse(const LLatticePath& path) {
  if (!path.valid()) throw ShapeError("path '" + path.str() + "' is not in P_n");
  LatticeDecoder dec{path.steps()};
  return dec.decode(0, path.steps().size()).finish();
}

// ---- 2-Motzkin paths -----------------------------------------------------------

TwoMotzkinPath psi_motzkin(const Contraction& c) {
  const Word& w = c.word();
  if (w.size() % 2 != 0 || w != family_word(1, 1, static_cast<unsigned>(w.size() / 2))) {
    throw ShapeError("psi_motzkin needs a contraction of (a a†)^n");
  }
  require_noncrossing(c);
  const auto partner = c.partner();
  std::vector<MotzkinStep> steps;
  for (std::size_t f = w.size() / 2; f >= 1; --f) {
    const std::size_t white = 2 * f - 1, black = 2 * f;
    const std::size_t mw = partner[white - 1], mb = partner[black - 1];
    if (mw == black) {
      steps.push_back(MotzkinStep::LevelBlack);
    } else if (mw == 0 && mb == 0) {
      steps.push_back(MotzkinStep::LevelGray);
    } else if (mw == 0) {
      steps.push_back(MotzkinStep::Up);
    } else if (mb == 0) {
      steps.push_back(MotzkinStep::Down);
    } else {
      throw ShapeError("contraction has a crossing");
    }
  }
  return TwoMotzkinPath(std::move(steps));
}

Contraction psi_motzkin_inverse(const TwoMotzkinPath& path) {
  if (!path.valid()) throw ShapeError("path '" + path.str() + "' is not a 2-Motzkin path");
  const std::size_t n = path.steps().size();
  std::vector<std::size_t> open;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t f = n - k;
    switch (path.steps()[k]) {
      case MotzkinStep::Up:
        open.push_back(2 * f);
        break;
      case MotzkinStep::Down:
        edges.push_back({2 * f - 1, open.back()});
        open.pop_back();
        break;
      case MotzkinStep::LevelBlack:
        edges.push_back({2 * f - 1, 2 * f});
        break;
      case MotzkinStep::LevelGray:
        break;
    }
  }
  return Contraction(family_word(1, 1, static_cast<unsigned>(n)), std::move(edges));
}

TwoMotzkinPath theta_motzkin(const Contraction& c) {
  require_noncrossing(c);
  const Word& w = c.word();
  const auto partner = c.partner();
  std::vector<MotzkinStep> steps;
  for (std::size_t pos = w.size(); pos >= 1; --pos) {
    const bool matched = partner[pos - 1] != 0;
    if (w.at(pos) == Letter::Creator) {
      steps.push_back(matched ? MotzkinStep::Up : MotzkinStep::LevelBlack);
    } else {
      steps.push_back(matched ? MotzkinStep::Down : MotzkinStep::LevelGray);
    }
  }
  return TwoMotzkinPath(std::move(steps));
}

Contraction theta_motzkin_inverse(const TwoMotzkinPath& path) {
  if (!path.valid()) throw ShapeError("path '" + path.str() + "' is not a 2-Motzkin path");
  const std::size_t n = path.steps().size();
  std::vector<Letter> letters(n);
  std::vector<std::size_t> open;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pos = n - k;
    switch (path.steps()[k]) {
      case MotzkinStep::Up:
        letters[pos - 1] = Letter::Creator;
        open.push_back(pos);
        break;
      case MotzkinStep::LevelBlack:
        letters[pos - 1] = Letter::Creator;
        break;
      case MotzkinStep::Down:
        letters[pos - 1] = Letter::Annihilator;
        edges.push_back({pos, open.back()});
        open.pop_back();
        break;
      case MotzkinStep::LevelGray:
        letters[pos - 1] = Letter::Annihilator;
        break;
    }
  }
  return Contraction(Word(std::move(letters)), std::move(edges));
}

// ---- target enumeration --------------------------------------------------------

namespace {

void check_target_bound(std::size_t value, std::size_t bound, const char* what) {
  if (value > bound) {
    throw std::length_error(std::string(what) + " enumeration refused: size " + std::to_string(value) +
                            " exceeds the bound " + std::to_string(bound));
  }
}

}  // namespace

std::vector<KaryTree> enumerate_kary(unsigned k, std::size_t nodes, const TargetLimits& limits) {
  if (k == 0) throw std::invalid_argument("arity must be positive");
  check_target_bound(nodes, limits.max_tree_nodes, "tree");
  std::vector<std::vector<KaryTree>> by_size(nodes + 1);
  by_size[0] = {KaryTree(k)};
  for (std::size_t m = 1; m <= nodes; ++m) {
    // Distribute m - 1 nodes over the k slots, slot by slot.
    std::vector<KaryTree> children(k, KaryTree(k));
    std::function<void(unsigned, std::size_t)> fill = [&](unsigned slot, std::size_t left) {
      if (slot + 1 == k) {
        for (const auto& t : by_size[left]) {
          children[slot] = t;
          by_size[m].push_back(KaryTree::node(k, children));
        }
        return;
      }
      for (std::size_t here = 0; here <= left; ++here) {
        for (const auto& t : by_size[here]) {
          children[slot] = t;
          fill(slot + 1, left - here);
        }
      }
    };
    fill(0, m - 1);
  }
  return by_size[nodes];
}

std::vector<LLatticePath> enumerate_lpaths(std::size_t n, const TargetLimits& limits) {
  check_target_bound(n, limits.max_path_n, "lattice path");
  const std::int64_t width = static_cast<std::int64_t>(3 * n);
  std::vector<LLatticePath> out;
  std::vector<LStep> steps;
  std::function<void(std::int64_t, std::int64_t, int)> walk = [&](std::int64_t x, std::int64_t h, int trailing_d) {
    if (h > width - x) return;
    if (x == width) {
      if (h == 0) out.emplace_back(steps);
      return;
    }
    for (LStep s : {LStep::D, LStep::H, LStep::L}) {
      if (s == LStep::D && (h == 0 || trailing_d == 2)) continue;
      const std::int64_t dx = s == LStep::H ? 2 : 1;
      if (x + dx > width) continue;
      steps.push_back(s);
      walk(x + dx, h + (s == LStep::H ? 1 : s == LStep::D ? -1 : 2), s == LStep::D ? trailing_d + 1 : 0);
      steps.pop_back();
    }
  };
  walk(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TwoMotzkinPath> enumerate_motzkin2(std::size_t n, const TargetLimits& limits) {
  check_target_bound(n, limits.max_path_n, "Motzkin path");
  std::vector<TwoMotzkinPath> out;
  std::vector<MotzkinStep> steps;
  std::function<void(std::size_t)> walk = [&](std::size_t h) {
    const std::size_t left = n - steps.size();
    if (h > left) return;
    if (left == 0) {
      out.emplace_back(steps);
      return;
    }
    for (MotzkinStep s : {MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::LevelBlack, MotzkinStep::LevelGray}) {
      if (s == MotzkinStep::Down && h == 0) continue;
      steps.push_back(s);
      walk(s == MotzkinStep::Up ? h + 1 : s == MotzkinStep::Down ? h - 1 : h);
      steps.pop_back();
    }
  };
  walk(0);
  return out;
}

std::vector<Contraction> noncrossing_domain(const Expression& expr, const EnumerationLimits& limits) {
  std::vector<Contraction> out;
  for (const auto& term : expr.terms()) {
    for_each_noncrossing(term.word, [&](const Contraction& c) { out.push_back(c); }, limits);
  }
  return out;
}

}  // namespace ncorder
