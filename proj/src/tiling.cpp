#include "opset/tiling.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace opset {

namespace {

std::vector<std::size_t> support_of(const Vec& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) idx.push_back(i);
  return idx;
}

bool intersects(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

std::string tile_letter(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  if (i < 52) return std::string(1, static_cast<char>('a' + i - 26));
  return "#";
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                          "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                          "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

}  // namespace

TilingDiagram build_tiling(const StateSet& s) {
  if (s.num_parties() != 2)
    throw PreconditionError("tiling diagrams require a bipartite set");
  TilingDiagram d;
  if (s.dims[1] > s.dims[0]) {
    d.col_party = 1;
    d.row_party = 0;
  } else {
    d.col_party = 0;
    d.row_party = 1;
  }
  d.n_rows = s.dims[d.row_party];
  d.n_cols = s.dims[d.col_party];
  for (const ProductState& st : s.states) {
    std::vector<std::size_t> rows = support_of(st.factors[d.row_party].coords);
    std::vector<std::size_t> cols = support_of(st.factors[d.col_party].coords);
    bool merged = false;
    for (Tile& t : d.tiles) {
      if (t.rows == rows && t.cols == cols) {
        t.labels.push_back(st.label);
        merged = true;
        break;
      }
    }
    if (!merged) d.tiles.push_back(Tile{std::move(rows), std::move(cols), {st.label}});
  }
  for (std::size_t i = 0; i < d.tiles.size() && !d.overlapping; ++i)
    for (std::size_t j = i + 1; j < d.tiles.size() && !d.overlapping; ++j)
      d.overlapping = intersects(d.tiles[i].rows, d.tiles[j].rows) &&
                      intersects(d.tiles[i].cols, d.tiles[j].cols);
  return d;
}

namespace {

std::vector<std::vector<std::string>> cell_texts(const TilingDiagram& d) {
  std::vector<std::vector<std::string>> cells(d.n_rows,
                                              std::vector<std::string>(d.n_cols));
  for (std::size_t t = 0; t < d.tiles.size(); ++t)
    for (std::size_t r : d.tiles[t].rows)
      for (std::size_t c : d.tiles[t].cols) cells[r][c] += tile_letter(t);
  return cells;
}

std::set<std::size_t> highlight_indices(const Projector& p) {
  std::set<std::size_t> idx;
  for (const Vec& v : p.ortho_basis())
    for (std::size_t i : support_of(v)) idx.insert(i);
  return idx;
}

std::string render_ascii(const TilingDiagram& d, const Projector* highlight) {
  std::set<std::size_t> marked;
  bool mark_cols = false;
  if (highlight) {
    marked = highlight_indices(*highlight);
    mark_cols = highlight->party() == d.col_party;
  }
  auto cells = cell_texts(d);
  std::size_t width = 2;
  for (const auto& row : cells)
    for (const auto& cell : row) width = std::max(width, cell.size() + 1);
  std::ostringstream os;
  os << "tiling " << d.n_rows << "x" << d.n_cols << " (rows: party " << d.row_party + 1
     << ", columns: party " << d.col_party + 1 << ")\n";
  std::string sep = "+";
  for (std::size_t c = 0; c < d.n_cols; ++c) sep += std::string(width + 1, '-') + "+";
  for (std::size_t r = 0; r < d.n_rows; ++r) {
    os << sep << "\n|";
    for (std::size_t c = 0; c < d.n_cols; ++c) {
      std::string text = cells[r][c];
      bool hl = highlight && (mark_cols ? marked.count(c) : marked.count(r)) > 0;
      if (hl) text += "*";
      os << text << std::string(width + 1 - text.size(), ' ') << "|";
    }
    os << "\n";
  }
  if (d.n_rows > 0) os << sep << "\n";
  if (d.overlapping) os << "warning: tiles overlap\n";
  for (std::size_t t = 0; t < d.tiles.size(); ++t) {
    os << tile_letter(t) << ":";
    for (const std::string& l : d.tiles[t].labels) os << " " << l;
    os << " (rows {" << join_indices(d.tiles[t].rows) << "} x cols {"
       << join_indices(d.tiles[t].cols) << "})\n";
  }
  return os.str();
}

std::string render_svg(const TilingDiagram& d, const Projector* highlight) {
  constexpr std::size_t kCell = 40;
  constexpr std::size_t kLegendLine = 16;
  std::size_t grid_w = d.n_cols * kCell;
  std::size_t grid_h = d.n_rows * kCell;
  std::size_t legend_h = (d.tiles.size() + (d.overlapping ? 1 : 0)) * kLegendLine + 8;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << grid_w + 2 << "\" height=\""
     << grid_h + legend_h + 2 << "\">\n";
  for (std::size_t t = 0; t < d.tiles.size(); ++t)
    for (std::size_t r : d.tiles[t].rows)
      for (std::size_t c : d.tiles[t].cols)
        os << "<rect x=\"" << c * kCell + 1 << "\" y=\"" << r * kCell + 1 << "\" width=\""
           << kCell << "\" height=\"" << kCell << "\" fill=\""
           << kPalette[t % (sizeof(kPalette) / sizeof(kPalette[0]))]
           << "\" fill-opacity=\"0.6\"/>\n";
  if (highlight) {
    std::set<std::size_t> marked = highlight_indices(*highlight);
    bool mark_cols = highlight->party() == d.col_party;
    for (std::size_t i : marked) {
      if (mark_cols && i < d.n_cols)
        os << "<rect x=\"" << i * kCell + 1 << "\" y=\"1\" width=\"" << kCell
           << "\" height=\"" << grid_h << "\" fill=\"red\" fill-opacity=\"0.35\"/>\n";
      if (!mark_cols && i < d.n_rows)
        os << "<rect x=\"1\" y=\"" << i * kCell + 1 << "\" width=\"" << grid_w
           << "\" height=\"" << kCell << "\" fill=\"red\" fill-opacity=\"0.35\"/>\n";
    }
  }
  for (std::size_t r = 0; r <= d.n_rows; ++r)
    os << "<line x1=\"1\" y1=\"" << r * kCell + 1 << "\" x2=\"" << grid_w + 1 << "\" y2=\""
       << r * kCell + 1 << "\" stroke=\"black\"/>\n";
  for (std::size_t c = 0; c <= d.n_cols; ++c)
    os << "<line x1=\"" << c * kCell + 1 << "\" y1=\"1\" x2=\"" << c * kCell + 1
       << "\" y2=\"" << grid_h + 1 << "\" stroke=\"black\"/>\n";
  auto cells = cell_texts(d);
  for (std::size_t r = 0; r < d.n_rows; ++r)
    for (std::size_t c = 0; c < d.n_cols; ++c)
      if (!cells[r][c].empty())
        os << "<text x=\"" << c * kCell + 1 + kCell / 2 << "\" y=\""
           << r * kCell + 1 + kCell / 2 + 5
           << "\" text-anchor=\"middle\" font-size=\"13\">" << cells[r][c] << "</text>\n";
  std::size_t y = grid_h + kLegendLine + 4;
  if (d.overlapping) {
    os << "<text x=\"2\" y=\"" << y << "\" font-size=\"12\">warning: tiles overlap</text>\n";
    y += kLegendLine;
  }
  for (std::size_t t = 0; t < d.tiles.size(); ++t) {
    os << "<text x=\"2\" y=\"" << y << "\" font-size=\"12\">" << tile_letter(t) << ":";
    for (const std::string& l : d.tiles[t].labels) os << " " << l;
    os << "</text>\n";
    y += kLegendLine;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_tiling(const StateSet& s, RenderFormat format,
                          const Projector* highlight) {
  TilingDiagram d = build_tiling(s);
  if (highlight && highlight->party() >= 2)
    throw DimensionError("highlight projector party out of range");
  if (format == RenderFormat::ASCII) return render_ascii(d, highlight);
  return render_svg(d, highlight);
}

}  // namespace opset
