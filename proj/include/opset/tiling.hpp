// Grid diagrams for bipartite sets whose factors live on standard-basis
// supports: each state occupies the rectangle (row support) x (column
// support); states with identical rectangles merge into one tile (e.g. the
// ± superposition pairs). The wider party runs horizontally; ties put
// party 1 horizontal.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opset/measurement.hpp"
#include "opset/state_set.hpp"

namespace opset {

struct Tile {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::string> labels;
};

struct TilingDiagram {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::size_t row_party = 0;  // 0-based
  std::size_t col_party = 0;
  std::vector<Tile> tiles;
  bool overlapping = false;
};

enum class RenderFormat { ASCII, SVG };

TilingDiagram build_tiling(const StateSet& s);

/// Deterministic diagram; `highlight`, when given, shades every cell inside
/// the projector's support on its party. Errors on non-bipartite input;
/// overlapping tiles produce a warning line, not an error.
std::string render_tiling(const StateSet& s, RenderFormat format,
                          const Projector* highlight = nullptr);

}  // namespace opset
