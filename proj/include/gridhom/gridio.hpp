#pragma once

#include <string>

#include "gridhom/grid.hpp"

namespace gridhom {

// Grid file formats.
//   JSON:  {"n": 2, "X": [1,0], "O": [0,1]}   (column-indexed row arrays)
//   Text:  line 1 "n", line 2 "X: r0 .. r(n-1)", line 3 "O: ...";
//          '%'-prefixed comment lines are ignored.
// Format is sniffed from the content (leading '{' means JSON).
GridDiagram parse_grid(const std::string& content, const std::string& origin);
GridDiagram load_grid(const std::string& path);

std::string grid_to_json(const GridDiagram& G);

}  // namespace gridhom
