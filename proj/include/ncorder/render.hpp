#pragma once

#include <string>

#include "ncorder/bijections.hpp"
#include "ncorder/contraction.hpp"

namespace ncorder {

/// Arc diagram: vertices on a line ('o' white, '*' black), arcs drawn above.
std::string render_contraction_ascii(const Contraction& c);
/// Same picture as a standalone SVG document with semicircular arcs.
std::string render_contraction_svg(const Contraction& c);

/// Indented outline, one line per nonempty slot.
std::string render_tree_ascii(const KaryTree& tree);
std::string render_tree_svg(const KaryTree& tree);

/// Height profile plus a character plot on the unit grid.
std::string render_path_ascii(const LLatticePath& path);
std::string render_path_ascii(const TwoMotzkinPath& path);
std::string render_path_svg(const LLatticePath& path);
std::string render_path_svg(const TwoMotzkinPath& path);

}  // namespace ncorder
