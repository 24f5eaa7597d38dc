#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncorder/boson.hpp"
#include "ncorder/contraction.hpp"

namespace ncorder {

/// Rooted tree in which every node has `arity` ordered slots, each empty or
/// holding a subtree. Nodes are stored in preorder, so structurally equal
/// trees compare equal.
class KaryTree {
 public:
  static constexpr std::int32_t kEmpty = -1;

  explicit KaryTree(unsigned arity = 2) : arity_(arity) {}

  /// A single node with all slots empty.
  static KaryTree leaf(unsigned arity);
  /// A root whose slot i holds children[i] (an empty tree leaves the slot empty).
  static KaryTree node(unsigned arity, const std::vector<KaryTree>& children);

  unsigned arity() const { return arity_; }
  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  /// Index of the node in `slot` of node `node`, or kEmpty.
  std::int32_t child(std::size_t node, unsigned slot) const { return slots_.at(node).at(slot); }
  std::size_t subtree_size(std::size_t node) const;
  KaryTree subtree(std::size_t node) const;
  /// The subtree in a slot of the root; empty tree when the slot is empty.
  KaryTree root_slot(unsigned slot) const;

  friend bool operator==(const KaryTree&, const KaryTree&) = default;
  friend auto operator<=>(const KaryTree&, const KaryTree&) = default;

 private:
  void append(const KaryTree& other, std::size_t parent, unsigned slot);

  unsigned arity_;
  std::vector<std::vector<std::int32_t>> slots_;
};

enum class LStep : std::uint8_t { H, D, L };

/// Steps H = (2,1), D = (1,-1), L = (1,2).
class LLatticePath {
 public:
  LLatticePath() = default;
  explicit LLatticePath(std::vector<LStep> steps) : steps_(std::move(steps)) {}

  /// Parses a string over {H, D, L}.
  static LLatticePath parse(const std::string& text);

  const std::vector<LStep>& steps() const { return steps_; }
  std::string str() const;
  /// Final x coordinate.
  std::size_t width() const;
  /// Heights after each step, starting with 0.
  std::vector<std::int64_t> heights() const;
  /// Starts at the origin, never below the axis, ends on the axis at a
  /// multiple of 3, and has no three consecutive D steps.
  bool valid() const;
  std::size_t count(const std::string& pattern) const;

  friend bool operator==(const LLatticePath&, const LLatticePath&) = default;
  friend auto operator<=>(const LLatticePath&, const LLatticePath&) = default;

 private:
  std::vector<LStep> steps_;
};

enum class MotzkinStep : std::uint8_t { Up, Down, LevelBlack, LevelGray };

/// Path over U, D and two colors of level step; written "U", "D", "L" (black), "L'" (gray).
class TwoMotzkinPath {
 public:
  TwoMotzkinPath() = default;
  explicit TwoMotzkinPath(std::vector<MotzkinStep> steps) : steps_(std::move(steps)) {}

  static TwoMotzkinPath parse(const std::string& text);

  const std::vector<MotzkinStep>& steps() const { return steps_; }
  std::string str() const;
  std::vector<std::int64_t> heights() const;
  /// Heights nonnegative throughout and zero at the end.
  bool valid() const;
  std::size_t count(MotzkinStep step) const;

  friend bool operator==(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;
  friend auto operator<=>(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;

 private:
  std::vector<MotzkinStep> steps_;
};

/// Input does not have the shape a map requires (wrong word, crossing contraction, bad path).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Noncrossing contraction of (a^r a†)^n to an (r+1)-ary tree with n+1 nodes.
/// Slots 0..r-1 follow the annihilators of a factor, slot r is the remainder.
KaryTree phi_tree(const Contraction& c, unsigned r);
Contraction phi_tree_inverse(const KaryTree& tree);

/// Noncrossing contraction of a word in a and a†a† factors to a path in P_n.
LLatticePath phi_lattice(const Contraction& c);
Contraction phi_lattice_inverse(const LLatticePath& path);

/// Noncrossing contraction of (a a†)^n to a 2-Motzkin path of length n, two
/// letters per step read right to left. Paired factors give black level steps.
TwoMotzkinPath psi_motzkin(const Contraction& c);
Contraction psi_motzkin_inverse(const TwoMotzkinPath& path);

/// Noncrossing contraction of any word of length n to a 2-Motzkin path, one
/// letter per step read right to left.
TwoMotzkinPath theta_motzkin(const Contraction& c);
Contraction theta_motzkin_inverse(const TwoMotzkinPath& path);

struct TargetLimits {
  std::size_t max_tree_nodes = 12;
  std::size_t max_path_n = 10;
};

/// All k-ary trees with the given node count.
std::vector<KaryTree> enumerate_kary(unsigned k, std::size_t nodes, const TargetLimits& limits = {});
/// All paths of P_n.
std::vector<LLatticePath> enumerate_lpaths(std::size_t n, const TargetLimits& limits = {});
/// All 2-Motzkin paths of length n.
std::vector<TwoMotzkinPath> enumerate_motzkin2(std::size_t n, const TargetLimits& limits = {});

/// Every noncrossing contraction of every term of an expression.
std::vector<Contraction> noncrossing_domain(const Expression& expr, const EnumerationLimits& limits = {});

}  // namespace ncorder
