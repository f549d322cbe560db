#include <functional>
#include <random>

#include "doctest.h"

#include "hd1/constructions.hpp"
#include "hd1/error.hpp"
#include "hd1/grid.hpp"
#include "hd1/lattice.hpp"

using namespace hd1;

namespace {

errc kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return errc::usage;
}

} // namespace

TEST_SUITE("grid") {

TEST_CASE("label characters and masks line up") {
    const char* chars = "ABCXYZ";
    for (int i = 0; i < 6; ++i) {
        const CellLabel l = CellLabel(i);
        CHECK(label_char(l) == chars[i]);
        CHECK(label_from_char(chars[i]) == l);
    }
    CHECK(label_mask(CellLabel::A) == 0b001);
    CHECK(label_mask(CellLabel::B) == 0b010);
    CHECK(label_mask(CellLabel::C) == 0b100);
    CHECK(label_mask(CellLabel::X) == 0b110);  // values 1 and 2
    CHECK(label_mask(CellLabel::Y) == 0b101);
    CHECK(label_mask(CellLabel::Z) == 0b011);
    CHECK(label_char(CellLabel::Empty) == '.');
    CHECK(label_char(CellLabel::Full) == 'F');
    for (uint8_t mk = 0; mk < 8; ++mk) CHECK(label_mask(label_from_mask(mk)) == mk);
}

TEST_CASE("collapse and expand are inverse") {
    for (int n = 2; n <= 6; ++n) {
        const VertexSet d = canonical_dn(n);
        for (int axis = 1; axis <= n; ++axis) {
            const LabelGrid g = collapse(d, axis);
            CHECK(g.m == n - 1);
            CHECK(g.collapse_axis == axis);
            CHECK(expand(g) == d);
        }
    }
}

TEST_CASE("the iterated construction collapses to the documented grids") {
    CHECK(collapse(canonical_dn(2)).cell_string() == "XAA");
    CHECK(collapse(canonical_dn(3)).cell_string() == "XAAACBACB");
    CHECK(collapse(canonical_dn(4)).cell_string() ==
          "XAAACBACB"
          "ACBCBABAC"
          "ACBCBABAC");
}

TEST_CASE("grid JSON and cell-string round trips") {
    const LabelGrid g = collapse(canonical_dn(4));
    CHECK(LabelGrid::from_json(g.to_json()) == g);
    CHECK(LabelGrid::from_cells(g.m, g.cell_string()) == g);
    const LabelGrid p = parse_grid(" XAA\nACB ACB ");
    CHECK(p.m == 2);
    CHECK(p.cell_string() == "XAAACBACB");
    CHECK_THROWS_AS(parse_grid("XA"), error);
}

TEST_CASE("degree validation equals the point-level degree bound at m=1") {
    // all 216 grids over one line of cells
    for (int code = 0; code < 216; ++code) {
        LabelGrid g;
        g.m = 1;
        g.cells = {CellLabel(code % 6), CellLabel((code / 6) % 6), CellLabel((code / 36) % 6)};
        const Degree1Report rep = validate_degree1(g);
        const bool valid = max_induced_degree(expand(g)) <= 1;
        CHECK(rep.ok == valid);
        if (!rep.ok) CHECK(!rep.rule.empty());
    }
}

TEST_CASE("each violation rule fires on its minimal example") {
    LabelGrid full;
    full.m = 0;
    full.cells = {CellLabel::Full};
    CHECK(validate_degree1(full).rule == "full-cell");

    // two stacked doubletons share both values
    const Degree1Report overlap = validate_degree1(parse_grid("XXA"));
    CHECK(!overlap.ok);
    CHECK(overlap.rule == "pair-overlap");
    CHECK(overlap.cell_idx == std::vector<int>{0, 1});

    // a singleton whose value recurs in two neighbouring cells
    const Degree1Report shared = validate_degree1(parse_grid("AAA"));
    CHECK(!shared.ok);
    CHECK(shared.rule == "value-shared-twice");

    CHECK(validate_degree1(collapse(canonical_dn(5))).ok);
}

TEST_CASE("saturation means no empty cell") {
    CHECK(grid_is_saturated(collapse(canonical_dn(3))));
    LabelGrid g = collapse(canonical_dn(3));
    g.cells[4] = CellLabel::Empty;
    CHECK(!grid_is_saturated(g));
}

TEST_CASE("extra cells are the two-value cells") {
    const LabelGrid d4 = collapse(canonical_dn(4));
    CHECK(extra_cells(d4) == std::vector<int>{0});
    CHECK(extra_point(d4) == 0);

    const LabelGrid x4 = fixture_grid("x4");
    CHECK(extra_cells(x4).size() == 2);
    CHECK(kind_of([&] { extra_point(x4); }) == errc::structure);
}

TEST_CASE("canonical descent reaches the origin cell") {
    // documented walk on the m=3 grid of the n=4 construction
    const LabelGrid g = collapse(canonical_dn(4));
    Point start;
    start.n = 3;
    start.x = {2, 1, 2};
    const CanonicalPath path = canonical_path(g, start);
    REQUIRE(path.terminated);
    std::vector<int> idxs;
    for (const Point& p : path.steps) idxs.push_back(point_index(p));
    CHECK(idxs == std::vector<int>{point_index(start), 2 + 3 * 1, 2, 0});

    // every start, default policy, larger grid
    const LabelGrid g5 = collapse(canonical_dn(6));
    for (int idx = 0; idx < pow3(g5.m); ++idx) {
        const CanonicalPath p = canonical_path(g5, point_at(idx, g5.m));
        REQUIRE(p.terminated);
        CHECK(point_index(p.steps.back()) == 0);
    }
}

TEST_CASE("path policies must be permutations") {
    const LabelGrid g = collapse(canonical_dn(3));
    CHECK_THROWS_AS(canonical_path(g, point_at(4, 2), PathPolicy{{1, 1}}), error);
    CHECK_THROWS_AS(canonical_path(g, point_at(4, 2), PathPolicy{{1, 2, 3}}), error);
    const CanonicalPath p = canonical_path(g, point_at(4, 2), PathPolicy{{2, 1}});
    CHECK(point_index(p.steps.back()) == 0);
}

TEST_CASE("canonical sets: the construction qualifies, the sporadic set does not") {
    for (int n = 2; n <= 5; ++n) {
        const CanonicalCheck c = is_canonical(canonical_dn(n));
        CHECK(c.canonical);
    }
    // no maximum independent set is disjoint from the sporadic extremal set
    CHECK(!is_canonical(fixture_set("t3")).canonical);
    // too small
    CHECK(!is_canonical(coset_independent_set(enumerate_coset_params(3)[0], 3)).canonical);
}

TEST_CASE("popular direction is the last one for the construction") {
    for (int n = 3; n <= 6; ++n) CHECK(popular_direction(canonical_dn(n)) == n);
    CHECK(kind_of([] { popular_direction(canonical_dn(2)); }) == errc::degeneracy);
}

TEST_CASE("restriction of grids matches restriction of sets") {
    const VertexSet d5 = canonical_dn(5);
    const LabelGrid g = collapse(d5);

    AffineSubset h;
    h.n = 5;
    h.fixed = {{2, 0}, {4, 1}};
    CHECK(h.dim() == 3);
    CHECK(h.free_directions() == std::vector<int>{1, 3, 5});

    const VertexSet rs = restrict_set(d5, h);
    CHECK(rs.n() == 3);
    for (int idx = 0; idx < rs.universe(); ++idx) {
        // rebuild the full point: free coordinates keep their order
        Point full;
        full.n = 5;
        const Point low = point_at(idx, 3);
        full.x[0] = low.x[0];
        full.x[2] = low.x[1];
        full.x[4] = low.x[2];
        full.x[1] = 0;
        full.x[3] = 1;
        CHECK(rs.test(idx) == d5.test(point_index(full)));
    }

    // grid restriction on the collapsed axis keeps cell labels
    AffineSubset hg;
    hg.n = 4;  // grid coordinates of g
    hg.fixed = {{1, 0}};
    const LabelGrid rg = restrict_grid(g, hg);
    CHECK(rg.m == 3);
    for (int idx = 0; idx < pow3(3); ++idx) {
        const Point low = point_at(idx, 3);
        Point fullc;
        fullc.n = 4;
        fullc.x = {0, low.x[0], low.x[1], low.x[2]};
        CHECK(rg.cells[size_t(idx)] == g.cells[size_t(point_index(fullc))]);
    }
}

TEST_CASE("affine subset membership") {
    AffineSubset h;
    h.n = 3;
    h.fixed = {{3, 2}};
    Point in;
    in.n = 3;
    in.x = {1, 0, 2};
    Point out = in;
    out.x[2] = 0;
    CHECK(h.contains(in));
    CHECK(!h.contains(out));
}

TEST_CASE("lift of the construction grid gives the next construction grid") {
    for (int n = 2; n <= 6; ++n) {
        const LabelGrid lifted = lift(collapse(canonical_dn(n)));
        CHECK(lifted == collapse(canonical_dn(n + 1)));
    }
}

TEST_CASE("lift preserves degree validity on the large fixture") {
    const LabelGrid g = fixture_grid("extra18_n6");
    const LabelGrid lifted = lift(g);
    CHECK(lifted.m == g.m + 1);
    CHECK(validate_degree1(lifted).ok);
    CHECK(extra_cells(lifted).size() == extra_cells(g).size());
}

TEST_CASE("lift rejects unsaturated and full cells") {
    LabelGrid g = collapse(canonical_dn(3));
    g.cells[2] = CellLabel::Empty;
    CHECK(kind_of([&] { lift(g); }) == errc::precondition);
    g.cells[2] = CellLabel::Full;
    CHECK(kind_of([&] { lift(g); }) == errc::precondition);
}

TEST_CASE("point diagrams render rows by the second coordinate") {
    CHECK(render_set(canonical_dn(3)) ==
          ".## #.. #..\n"
          "#.. ..# ..#\n"
          "#.. .#. .#.\n");
    // grid text groups blocks of three rows
    CHECK(render_grid(collapse(canonical_dn(3))) == "XAA\nACB\nACB\n");
    const std::string big = render_grid(collapse(canonical_dn(4)));
    CHECK(big == "XAA\nACB\nACB\n\nACB\nCBA\nBAC\n\nACB\nCBA\nBAC\n");
    CHECK_THROWS_AS(render_set(canonical_dn(7)), error);
}

} // TEST_SUITE
