#pragma once

// CNF encodings of the degree-1 conditions, over two vocabularies:
//  - grid form: variable 6*cell + rank(label) + 1, labels A B C X Y Z, with
//    exactly-one-per-cell clauses (so models are saturated, never full);
//  - vertex form: variable point_index + 1, membership of each lattice point.
// Plus the skew encoding: a saturated degree-1 grid whose origin cell holds X
// while every coordinate plane through the origin avoids the four canonical
// corner patterns.

#include <vector>

#include "hd1/cnf.hpp"
#include "hd1/grid.hpp"
#include "hd1/lattice.hpp"

namespace hd1 {

inline int grid_var(int cell_idx, CellLabel l) { return 6 * cell_idx + int(l) + 1; }
inline int vertex_var(int point_idx) { return point_idx + 1; }

// Saturated degree-1 grids over Z_3^m, one label variable block per cell.
CnfFormula encode_grid_deg1(int m);

// Induced degree <= 1 for a plain vertex subset of Z_3^n (no saturation).
CnfFormula encode_vertex_deg1(int n);

// Grid degree-1 plus: origin cell = X, and for every plane spanned by the
// skew direction i and another coordinate direction through the origin the
// four corner patterns that would make the restriction canonical are blocked.
// Needs 2 <= m <= 6 and 1 <= i <= m.
CnfFormula encode_skew(int m, int skew_dir = 1);

// Projection variables (the label block / the membership block).
std::vector<int> grid_projection(int m);
std::vector<int> vertex_projection(int n);

// Model -> object, insisting on exactly one label per cell.
LabelGrid decode_grid(const std::vector<uint8_t>& model, int m, int collapse_axis = 1);
VertexSet decode_set(const std::vector<uint8_t>& model, int n);

// Same, from a model projected onto grid_projection/vertex_projection.
LabelGrid decode_grid_projected(const std::vector<uint8_t>& proj, int m, int collapse_axis = 1);
VertexSet decode_set_projected(const std::vector<uint8_t>& proj, int n);

} // namespace hd1
