#include <algorithm>
#include <set>

#include "doctest.h"

#include "hd1/constructions.hpp"
#include "hd1/error.hpp"
#include "hd1/grid.hpp"
#include "hd1/lattice.hpp"

using namespace hd1;

TEST_SUITE("constructions") {

TEST_CASE("iterated construction sizes and base case") {
    CHECK(canonical_dn(1) == VertexSet::from_indices(1, {1, 2}));
    for (int n = 1; n <= 10; ++n) CHECK(canonical_dn(n).size() == pow3(n - 1) + 1);
    CHECK_THROWS_AS(canonical_dn(0), error);
    CHECK_THROWS_AS(canonical_dn(11), error);
}

TEST_CASE("construction recurrence appends the new coordinate last") {
    for (int n = 2; n <= 5; ++n) {
        const VertexSet prev = canonical_dn(n - 1);
        const SumClasses sc = abc_and_aprime(n - 1);
        VertexSet manual(n);
        for (int v : prev.indices()) manual.set(v);  // new coordinate 0
        for (int v : sc.a.indices()) {
            manual.set(v + pow3(n - 1));      // new coordinate 1
            manual.set(v + 2 * pow3(n - 1));  // new coordinate 2
        }
        CHECK(manual == canonical_dn(n));
    }
}

TEST_CASE("construction avoids the zero-sum class and has degree one") {
    for (int n = 1; n <= 7; ++n) {
        const VertexSet d = canonical_dn(n);
        CHECK(max_induced_degree(d) <= 1);
        const SumClasses sc = abc_and_aprime(n);
        for (int v : d.indices()) CHECK(!sc.a.test(v));
    }
}

TEST_CASE("degree-one instance of the relaxed construction is the construction") {
    for (int n = 1; n <= 6; ++n) CHECK(degree_d_set(n, 1) == canonical_dn(n));
}

TEST_CASE("relaxed construction meets its degree and size guarantees") {
    for (int n = 1; n <= 5; ++n) {
        for (int d = 1; d <= 3; ++d) {
            const VertexSet u = degree_d_set(n, d);
            CHECK(max_induced_degree(u) <= d);
            CHECK(u.size() >= pow3(n - 1) + pow3(((d - 1) * n) / d));
            const SumClasses sc = abc_and_aprime(n);
            for (int v : u.indices()) CHECK(!sc.a.test(v));
        }
    }
}

TEST_CASE("fixture inventory") {
    const std::vector<std::string>& names = fixture_names();
    CHECK(names.size() == 28);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* name : {"x4", "extra6_n5", "extra18_n6", "twin_canonical_n6", "skew2",
                             "t3", "skew3_01", "skew3_11A", "skew3_14Z"})
        CHECK(is_fixture(name));
    CHECK(!is_fixture("skew3_15"));
    CHECK(!is_fixture(""));
    CHECK_THROWS_AS(fixture_grid("nope"), error);
    CHECK_THROWS_AS(fixture_grid("t3"), error);  // point-set fixture, no grid form
}

TEST_CASE("fixtures load validated") {
    for (const std::string& name : fixture_names()) {
        const VertexSet s = fixture_set(name);
        CHECK(s.size() > 0);
        CHECK(max_induced_degree(s) <= 1);
    }
    CHECK(fixture_grid("x4").m == 3);
    CHECK(fixture_grid("extra6_n5").m == 4);
    CHECK(fixture_grid("extra18_n6").m == 5);
    CHECK(fixture_grid("twin_canonical_n6").m == 5);
    CHECK(fixture_grid("skew2").m == 2);
    CHECK(fixture_set("t3").n() == 3);
}

TEST_CASE("the skew catalog extends the two-dimensional grid") {
    const std::string base = fixture_grid("skew2").cell_string();
    // the third variant of each lettered template picks up a second
    // two-value cell and one more point
    const std::set<std::string> wide = {"skew3_11Y", "skew3_12Y", "skew3_13Z", "skew3_14Z"};
    int count = 0;
    for (const std::string& name : fixture_names()) {
        if (name.rfind("skew3_", 0) != 0) continue;
        ++count;
        const LabelGrid g = fixture_grid(name);
        CHECK(g.m == 3);
        CHECK(g.cell_string().substr(0, 9) == base);
        const std::vector<int> extras = extra_cells(g);
        REQUIRE(!extras.empty());
        CHECK(extras.front() == 0);
        if (wide.count(name)) {
            CHECK(expand(g).size() == 29);
            CHECK(extras.size() == 2);
        } else {
            CHECK(expand(g).size() == 28);
            CHECK(extras == std::vector<int>{0});
        }
    }
    CHECK(count == 22);
}

} // TEST_SUITE
