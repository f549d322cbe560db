#include <set>

#include "doctest.h"

#include "hd1/constructions.hpp"
#include "hd1/encode.hpp"
#include "hd1/error.hpp"
#include "hd1/grid.hpp"
#include "hd1/solver.hpp"

using namespace hd1;

TEST_SUITE("encode") {

TEST_CASE("variable numbering is dense and 1-based") {
    CHECK(grid_var(0, CellLabel::A) == 1);
    CHECK(grid_var(0, CellLabel::Z) == 6);
    CHECK(grid_var(1, CellLabel::A) == 7);
    CHECK(vertex_var(0) == 1);
    CHECK(vertex_var(80) == 81);
    CHECK(grid_projection(2) == ([] {
              std::vector<int> v;
              for (int i = 1; i <= 54; ++i) v.push_back(i);
              return v;
          })());
    CHECK(vertex_projection(3).size() == 27);
}

TEST_CASE("grid formula sizes follow from the cell structure") {
    // one line of three cells: 3*(1+15) choice clauses, 6 deduplicated
    // not-all-equal clauses (one per label), 3*2*3 pair implications
    const CnfFormula f1 = encode_grid_deg1(1);
    CHECK(f1.vars == 18);
    CHECK(f1.clauses.size() == 48 + 6 + 18);

    // nine cells: per cell 16 choice clauses; not-all-equal triples split
    // into 6 lines (deduplicated to one clause per label) plus 9*4 bent
    // corners, all times 6 labels; 9*4 ordered pairs times 3 implications
    const CnfFormula f2 = encode_grid_deg1(2);
    CHECK(f2.vars == 54);
    CHECK(f2.clauses.size() == 144 + (36 + 216) + 108);
}

TEST_CASE("vertex formula sizes count collinear and bent triples") {
    const CnfFormula f1 = encode_vertex_deg1(1);
    CHECK(f1.vars == 3);
    CHECK(f1.clauses.size() == 1);

    // 81 vertices: 108 lines shared three ways plus 81*24 bent pairs
    const CnfFormula f4 = encode_vertex_deg1(4);
    CHECK(f4.vars == 81);
    CHECK(f4.clauses.size() == 108 + 81 * 24);
}

TEST_CASE("encoding is deterministic") {
    CHECK(encode_grid_deg1(3).dimacs() == encode_grid_deg1(3).dimacs());
    CHECK(encode_skew(3, 2).dimacs() == encode_skew(3, 2).dimacs());
}

TEST_CASE("clauses carry no duplicates") {
    const CnfFormula f = encode_grid_deg1(2);
    std::set<std::vector<int>> seen;
    for (auto cl : f.clauses) {
        std::sort(cl.begin(), cl.end());
        CHECK(seen.insert(cl).second);
    }
}

TEST_CASE("skew instance pins the origin and blocks corner rectangles") {
    // base grid constraints plus the origin unit plus 4 corner clauses for
    // the single off-direction plane
    const CnfFormula f = encode_skew(2, 1);
    CHECK(f.vars == 54);
    CHECK(f.clauses.size() == 504 + 1 + 4);
    CHECK(f.clauses[504] == std::vector<int>{grid_var(0, CellLabel::X)});

    // direction 2 at m=3 sees planes (2,1) and (2,3)
    const CnfFormula g = encode_skew(3, 2);
    CHECK(g.clauses.size() == encode_grid_deg1(3).clauses.size() + 1 + 8);

    CHECK_THROWS_AS(encode_skew(1, 1), error);
    CHECK_THROWS_AS(encode_skew(7, 1), error);
    CHECK_THROWS_AS(encode_skew(3, 0), error);
    CHECK_THROWS_AS(encode_skew(3, 4), error);
}

TEST_CASE("grid models decode to valid grids") {
    const CnfFormula f = encode_grid_deg1(1);
    const ModelList ml = enumerate_models(f, grid_projection(1));
    CHECK(ml.models.size() == 33);  // matches the exhaustive 6^3 scan
    CHECK(!ml.truncated);
    for (const auto& pm : ml.models) {
        const LabelGrid g = decode_grid_projected(pm, 1);
        CHECK(validate_degree1(g).ok);
        CHECK(grid_is_saturated(g));
    }
}

TEST_CASE("decoding rejects assignments without exactly one label per cell") {
    std::vector<uint8_t> none(size_t(6 * 3), 0);
    CHECK_THROWS_AS(decode_grid_projected(none, 1), error);
    std::vector<uint8_t> twice(size_t(6 * 3), 0);
    twice[0] = twice[1] = 1;  // A and B on cell 0
    for (size_t c = 1; c < 3; ++c) twice[6 * c] = 1;
    CHECK_THROWS_AS(decode_grid_projected(twice, 1), error);
}

TEST_CASE("full assignments decode through the unprojected readers") {
    // build the assignment matching the n=3 construction grid
    const LabelGrid want = collapse(canonical_dn(3));
    const CnfFormula f = encode_grid_deg1(2);
    std::vector<uint8_t> assign(size_t(f.vars) + 1, 0);
    for (int c = 0; c < 9; ++c) assign[size_t(grid_var(c, want.cells[size_t(c)]))] = 1;
    CHECK(decode_grid(assign, 2) == want);

    const VertexSet d2 = canonical_dn(2);
    std::vector<uint8_t> vassign(size_t(9) + 1, 0);
    for (int v : d2.indices()) vassign[size_t(vertex_var(v))] = 1;
    CHECK(decode_set(vassign, 2) == d2);
}

TEST_CASE("the two-dimensional skew instance has exactly its two models") {
    const ModelList ml = enumerate_models(encode_skew(2, 1), grid_projection(2));
    CHECK(ml.models.size() == 2);
    for (const auto& pm : ml.models) {
        const LabelGrid g = decode_grid_projected(pm, 2);
        CHECK(g.cells[0] == CellLabel::X);
        CHECK(validate_degree1(g).ok);
    }
}

} // TEST_SUITE
