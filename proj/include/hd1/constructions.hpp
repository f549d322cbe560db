#pragma once

// Named constructions: the canonical degree-1 family D_n, its degree-d
// generalisation, and the bundled example sets and grids under data/fixtures
// (looked up via the HD1_DATA_DIR environment variable, falling back to the
// build-time default).

#include <string>
#include <vector>

#include "hd1/grid.hpp"
#include "hd1/lattice.hpp"

namespace hd1 {

// D_1 = {1, 2}; D_{n+1} appends a last coordinate as
//   (D_n, 0)  u  (A_n, 1)  u  (A_n, 2)
// giving 3^(n-1)+1 points of induced degree <= 1 disjoint from A_n.
VertexSet canonical_dn(int n);

// Degree-d generalisation over the last d coordinates:
//   n <= d: everything outside A_n;
//   else  : (U_{n-d}, t) for t in A_d  u  (A_{n-d}, t) for t outside A_d.
// Coincides with canonical_dn at d = 1.
VertexSet degree_d_set(int n, int d);

std::string fixture_dir();
const std::vector<std::string>& fixture_names();
bool is_fixture(const std::string& name);

// Grid-backed fixtures (everything except t3); validated on load.
LabelGrid fixture_grid(const std::string& name);

// Any fixture as an expanded vertex set; validated to degree <= 1 on load.
VertexSet fixture_set(const std::string& name);

} // namespace hd1
