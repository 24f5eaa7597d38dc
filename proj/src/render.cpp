#include "ncorder/render.hpp"

#include <algorithm>
#include <sstream>

namespace ncorder {

namespace {

constexpr int kColumn = 4;

std::string svg_header(int width, int height) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" style=\"fill:white\"/>\n";
  return out.str();
}

/// Arc levels: shorter arcs first, each one level above every arc its span touches.
std::vector<int> arc_levels(const std::vector<Edge>& edges) {
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return edges[x].black - edges[x].white < edges[y].black - edges[y].white;
  });
  std::vector<int> level(edges.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Edge& e = edges[order[k]];
    int top = 0;
    for (std::size_t m = 0; m < k; ++m) {
      const Edge& g = edges[order[m]];
      if (g.white <= e.black && e.white <= g.black) top = std::max(top, level[order[m]]);
    }
    level[order[k]] = top + 1;
  }
  return level;
}

}  // namespace

std::string render_contraction_ascii(const Contraction& c) {
  const Word& w = c.word();
  const auto& edges = c.edges();
  const auto level = arc_levels(edges);
  const int levels = edges.empty() ? 0 : *std::max_element(level.begin(), level.end());
  const std::size_t width = w.empty() ? 1 : (w.size() - 1) * kColumn + 2;
  // Row 0 is the highest arc; row `levels` sits just above the vertices.
  std::vector<std::string> grid(static_cast<std::size_t>(levels) + 1, std::string(width, ' '));
  auto col = [](std::size_t pos) { return (pos - 1) * kColumn; };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& row = grid[static_cast<std::size_t>(levels - level[i])];
    for (std::size_t x = col(edges[i].white); x <= col(edges[i].black); ++x) row[x] = '-';
    row[col(edges[i].white)] = '+';
    row[col(edges[i].black)] = '+';
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t r = static_cast<std::size_t>(levels - level[i]) + 1; r < grid.size(); ++r) {
      grid[r][col(edges[i].white)] = '|';
      grid[r][col(edges[i].black)] = '|';
    }
  }
  std::ostringstream out;
  out << "contraction " << c.render_labels() << '\n';
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line = grid[r];
    line.erase(line.find_last_not_of(' ') + 1);
    if (r + 1 < grid.size() || !line.empty()) out << line << '\n';
  }
  std::string vertices(width, ' '), letters(width, ' ');
  for (std::size_t pos = 1; pos <= w.size(); ++pos) {
    const bool white = w.at(pos) == Letter::Annihilator;
    vertices[col(pos)] = white ? 'o' : '*';
    letters.replace(col(pos), white ? 1 : 2, white ? "a" : "ad");
  }
  vertices.erase(vertices.find_last_not_of(' ') + 1);
  letters.erase(letters.find_last_not_of(' ') + 1);
  out << vertices << '\n' << letters << '\n';
  return out.str();
}

std::string render_contraction_svg(const Contraction& c) {
  const Word& w = c.word();
  const int step = 40;
  std::size_t longest = 0;
  for (const auto& e : c.edges()) longest = std::max(longest, e.black - e.white);
  const int width = static_cast<int>(std::max<std::size_t>(w.size(), 1) + 1) * step;
  const int base = static_cast<int>(longest) * step / 2 + 30;
  const int height = base + 40;
  auto x_of = [&](std::size_t pos) { return static_cast<int>(pos) * step; };

  std::ostringstream out;
  out << svg_header(width, height);
  out << "<title>contraction " << c.render_labels() << "</title>\n";
  if (!w.empty()) {
    out << "<line x1=\"" << x_of(1) << "\" y1=\"" << base << "\" x2=\"" << x_of(w.size()) << "\" y2=\"" << base
        << "\" style=\"stroke:#bbbbbb;stroke-width:1\"/>\n";
  }
  for (const auto& e : c.edges()) {
    const int r = (x_of(e.black) - x_of(e.white)) / 2;
    out << "<path d=\"M " << x_of(e.white) << ' ' << base << " A " << r << ' ' << r << " 0 0 1 " << x_of(e.black)
        << ' ' << base << "\" style=\"fill:none;stroke:black;stroke-width:1.5\"/>\n";
  }
  for (std::size_t pos = 1; pos <= w.size(); ++pos) {
    const bool white = w.at(pos) == Letter::Annihilator;
    out << "<circle cx=\"" << x_of(pos) << "\" cy=\"" << base << "\" r=\"6\" style=\"fill:"
        << (white ? "white" : "black") << ";stroke:black;stroke-width:1.5\"/>\n";
    out << "<text x=\"" << x_of(pos) << "\" y=\"" << base + 24
        << "\" style=\"font-family:monospace;font-size:12px;text-anchor:middle\">" << (white ? "a" : "a&#8224;")
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

// ---- trees ----

namespace {

void tree_outline(const KaryTree& t, std::size_t node, int depth, std::ostringstream& out) {
  for (unsigned slot = 0; slot < t.arity(); ++slot) {
    const auto c = t.child(node, slot);
    if (c == KaryTree::kEmpty) continue;
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "[" << slot << "] o\n";
    tree_outline(t, static_cast<std::size_t>(c), depth + 1, out);
  }
}

struct TreeLayout {
  const KaryTree& tree;
  std::vector<double> x;
  std::vector<int> depth;
  std::vector<double> width;

  double measure(std::size_t node) {
    double w = 0;
    for (unsigned slot = 0; slot < tree.arity(); ++slot) {
      const auto c = tree.child(node, slot);
      w += c == KaryTree::kEmpty ? 1.0 : measure(static_cast<std::size_t>(c));
    }
    return width[node] = w;
  }

  void place(std::size_t node, double left, int d) {
    x[node] = left + width[node] / 2;
    depth[node] = d;
    for (unsigned slot = 0; slot < tree.arity(); ++slot) {
      const auto c = tree.child(node, slot);
      if (c == KaryTree::kEmpty) {
        left += 1.0;
      } else {
        place(static_cast<std::size_t>(c), left, d + 1);
        left += width[static_cast<std::size_t>(c)];
      }
    }
  }
};

}  // namespace

std::string render_tree_ascii(const KaryTree& tree) {
  std::ostringstream out;
  out << tree.arity() << "-ary tree, " << tree.size() << " nodes\n";
  if (tree.empty()) return out.str() + "(empty)\n";
  out << "o\n";
  tree_outline(tree, 0, 1, out);
  return out.str();
}

std::string render_tree_svg(const KaryTree& tree) {
  const int unit = 24, level = 50, margin = 20;
  if (tree.empty()) {
    return svg_header(2 * margin, 2 * margin) + "<title>empty tree</title>\n</svg>\n";
  }
  TreeLayout layout{tree, std::vector<double>(tree.size()), std::vector<int>(tree.size()),
                    std::vector<double>(tree.size())};
  layout.measure(0);
  layout.place(0, 0.0, 0);
  const int max_depth = *std::max_element(layout.depth.begin(), layout.depth.end());
  const int width = static_cast<int>(layout.width[0] * unit) + 2 * margin;
  const int height = (max_depth + 1) * level + 2 * margin;
  auto px = [&](double x) { return margin + x * unit; };
  auto py = [&](int d) { return margin + 10 + d * level; };

  std::ostringstream out;
  out << svg_header(width, height);
  out << "<title>" << tree.arity() << "-ary tree with " << tree.size() << " nodes</title>\n";
  for (std::size_t v = 0; v < tree.size(); ++v) {
    double left = layout.x[v] - layout.width[v] / 2;
    for (unsigned slot = 0; slot < tree.arity(); ++slot) {
      const auto c = tree.child(v, slot);
      if (c == KaryTree::kEmpty) {
        const double sx = left + 0.5;
        out << "<line x1=\"" << px(layout.x[v]) << "\" y1=\"" << py(layout.depth[v]) << "\" x2=\"" << px(sx)
            << "\" y2=\"" << py(layout.depth[v]) + level / 3
            << "\" style=\"stroke:#cccccc;stroke-width:1;stroke-dasharray:3,3\"/>\n";
        left += 1.0;
      } else {
        const auto u = static_cast<std::size_t>(c);
        out << "<line x1=\"" << px(layout.x[v]) << "\" y1=\"" << py(layout.depth[v]) << "\" x2=\"" << px(layout.x[u])
            << "\" y2=\"" << py(layout.depth[u]) << "\" style=\"stroke:black;stroke-width:1.5\"/>\n";
        left += layout.width[u];
      }
    }
  }
  for (std::size_t v = 0; v < tree.size(); ++v) {
    out << "<circle cx=\"" << px(layout.x[v]) << "\" cy=\"" << py(layout.depth[v])
        << "\" r=\"6\" style=\"fill:black;stroke:black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

// ---- paths ----

namespace {

struct Segment {
  int dx = 0;
  int dy = 0;
  std::string name;
  bool gray = false;
};

std::vector<Segment> segments(const LLatticePath& path) {
  std::vector<Segment> out;
  for (auto s : path.steps()) {
    switch (s) {
      case LStep::H:
        out.push_back({2, 1, "H"});
        break;
      case LStep::D:
        out.push_back({1, -1, "D"});
        break;
      case LStep::L:
        out.push_back({1, 2, "L"});
        break;
    }
  }
  return out;
}

std::vector<Segment> segments(const TwoMotzkinPath& path) {
  std::vector<Segment> out;
  for (auto s : path.steps()) {
    switch (s) {
      case MotzkinStep::Up:
        out.push_back({1, 1, "U"});
        break;
      case MotzkinStep::Down:
        out.push_back({1, -1, "D"});
        break;
      case MotzkinStep::LevelBlack:
        out.push_back({1, 0, "L"});
        break;
      case MotzkinStep::LevelGray:
        out.push_back({1, 0, "L'", true});
        break;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> vertices(const std::vector<Segment>& segs) {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  for (const auto& s : segs) pts.emplace_back(pts.back().first + s.dx, pts.back().second + s.dy);
  return pts;
}

std::string path_ascii(const std::string& kind, const std::string& text, const std::vector<Segment>& segs) {
  const auto pts = vertices(segs);
  int max_x = 0, min_y = 0, max_y = 0;
  for (const auto& [x, y] : pts) {
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  std::ostringstream out;
  out << kind << ' ' << (text.empty() ? "(empty)" : text) << "\nheights:";
  for (const auto& p : pts) out << ' ' << p.second;
  out << '\n';
  for (int y = max_y; y >= min_y; --y) {
    std::string row;
    for (int x = 0; x <= max_x; ++x) {
      char ch = y == 0 ? '-' : '.';
      for (const auto& p : pts)
        if (p.first == x && p.second == y) ch = '*';
      row += ch;
      if (x < max_x) row += ' ';
    }
    out << row << '\n';
  }
  return out.str();
}

std::string path_svg(const std::string& kind, const std::string& text, const std::vector<Segment>& segs) {
  const auto pts = vertices(segs);
  int max_x = 0, min_y = 0, max_y = 0;
  for (const auto& [x, y] : pts) {
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const int unit = 30, margin = 20;
  const int width = max_x * unit + 2 * margin;
  const int height = (max_y - min_y) * unit + 2 * margin;
  auto px = [&](int x) { return margin + x * unit; };
  auto py = [&](int y) { return margin + (max_y - y) * unit; };

  std::ostringstream out;
  out << svg_header(width, height);
  out << "<title>" << kind << ' ' << text << "</title>\n";
  for (int x = 0; x <= max_x; ++x) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << py(max_y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(min_y)
        << "\" style=\"stroke:#e0e0e0;stroke-width:1\"/>\n";
  }
  for (int y = min_y; y <= max_y; ++y) {
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(max_x) << "\" y2=\"" << py(y)
        << "\" style=\"stroke:" << (y == 0 ? "#888888" : "#e0e0e0") << ";stroke-width:1\"/>\n";
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    out << "<line x1=\"" << px(pts[i].first) << "\" y1=\"" << py(pts[i].second) << "\" x2=\"" << px(pts[i + 1].first)
        << "\" y2=\"" << py(pts[i + 1].second) << "\" style=\"stroke:" << (segs[i].gray ? "#999999" : "black")
        << ";stroke-width:2.5\"><title>" << segs[i].name << "</title></line>\n";
  }
  for (const auto& [x, y] : pts) {
    out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" style=\"fill:black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_path_ascii(const LLatticePath& path) { return path_ascii("lattice", path.str(), segments(path)); }
std::string render_path_ascii(const TwoMotzkinPath& path) { return path_ascii("motzkin", path.str(), segments(path)); }
std::string render_path_svg(const LLatticePath& path) { return path_svg("lattice", path.str(), segments(path)); }
std::string render_path_svg(const TwoMotzkinPath& path) { return path_svg("motzkin", path.str(), segments(path)); }

}  // namespace ncorder
