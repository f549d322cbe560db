#pragma once

// Collapsed representation of a vertex set: pick an axis, and record for each
// point of Z_3^(n-1) which of the three values along the collapsed axis are
// present. Cells are named by that subset of Z_3:
//   A={0} B={1} C={2} X={1,2} Y={0,2} Z={0,1} EMPTY={} FULL=Z_3.
// Includes the degree-1 cell rules, saturation, extra cells, canonical paths,
// canonical-set testing, affine restrictions and the one-dimension lift.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hd1/lattice.hpp"

namespace hd1 {

enum class CellLabel : uint8_t { A = 0, B, C, X, Y, Z, Empty, Full };

inline constexpr int kLabelCount = 6;  // storable labels A..Z (solver alphabet)

// Subset of Z_3 as a 3-bit mask, bit v = value v present.
uint8_t label_mask(CellLabel l);
CellLabel label_from_mask(uint8_t mask);
char label_char(CellLabel l);
CellLabel label_from_char(char c);

struct LabelGrid {
    int m = 0;                    // grid dimension (ambient sets live in Z_3^(m+1))
    int collapse_axis = 1;        // original coordinate that was collapsed
    std::vector<CellLabel> cells; // length 3^m, point codec order

    CellLabel at(int idx) const { return cells[size_t(idx)]; }

    std::string to_json() const;  // {"m":..,"collapse_axis":..,"cells":"..."}
    static LabelGrid from_json(const std::string& text);
    static LabelGrid from_cells(int m, const std::string& cells, int axis = 1);
    std::string cell_string() const;

    bool operator==(const LabelGrid&) const = default;
};

LabelGrid collapse(const VertexSet& s, int axis = 1);
VertexSet expand(const LabelGrid& g);

// Degree-1 validation. ok == true iff expand(g) has max induced degree <= 1.
// On failure, reports the first violated rule in cell-index order.
struct Degree1Report {
    bool ok = true;
    std::string rule;            // "full-cell" | "pair-overlap" | "value-shared-twice"
    std::vector<int> cell_idx;   // grid indices involved (1, 2 or 3 cells)
    std::string message;
};
Degree1Report validate_degree1(const LabelGrid& g);

bool grid_is_saturated(const LabelGrid& g);  // no EMPTY cell

std::vector<int> extra_cells(const LabelGrid& g);   // indices with label X/Y/Z
int extra_point(const LabelGrid& g);                // unique extra cell, else structure error

// Canonical walk: at x, take the first direction (in policy priority order)
// whose line through x has a neighbour cell equal to U_f(x), and step to the
// OTHER point of that line; stop when no direction qualifies.
struct PathPolicy {
    std::vector<int> priority;  // permutation of 1..m; empty = ascending
};
struct CanonicalPath {
    std::vector<Point> steps;   // grid points, starting point included
    bool terminated = false;    // false if the 3^m step cap was hit
};
CanonicalPath canonical_path(const LabelGrid& g, const Point& start, const PathPolicy& policy = {});

// A set is canonical when it has size >= 3^(n-1)+1, induced degree <= 1 and
// is disjoint from some maximum independent set (the witness).
struct CanonicalCheck {
    bool canonical = false;
    std::optional<CosetParams> witness;
};
CanonicalCheck is_canonical(const VertexSet& s);

// The unique direction with 3^(n-2) two-point lines; degeneracy error when
// not unique (always the case at n = 2).
int popular_direction(const VertexSet& s);

// Axis-aligned affine subset: coordinates in `fixed` are pinned, the rest are
// free; free directions keep their relative order under restriction.
struct AffineSubset {
    int n = 0;
    std::vector<std::pair<int, uint8_t>> fixed;  // (1-based coordinate, value), sorted

    int dim() const { return n - int(fixed.size()); }
    std::vector<int> free_directions() const;
    bool contains(const Point& p) const;
};

VertexSet restrict_set(const VertexSet& s, const AffineSubset& h);
LabelGrid restrict_grid(const LabelGrid& g, const AffineSubset& h);

// Lift along a new first grid coordinate, preserving degree-1 validity,
// saturation and the extra-cell count:
//   X->(X,A,A)  Y->(Y,B,B)  Z->(Z,C,C)  A->(A,C,B)  B->(B,A,C)  C->(C,B,A)
LabelGrid lift(const LabelGrid& g);

// Text rendering: rows sweep coordinate 1 (columns) with one line per value
// of coordinate 2, and a blank line between blocks of the combined index of
// coordinates 3..m.
std::string render_grid(const LabelGrid& g);
LabelGrid parse_grid(const std::string& text, int collapse_axis = 1);

// Point diagram of a set ('#' member, '.' non-member): columns x1, rows x2,
// blocks tiled horizontally by x3 and vertically by x4, wider gaps for x5/x6.
std::string render_set(const VertexSet& s);

} // namespace hd1
