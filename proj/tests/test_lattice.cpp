#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "hd1/error.hpp"
#include "hd1/lattice.hpp"

using namespace hd1;

TEST_SUITE("lattice") {

TEST_CASE("index codec is a little-endian base-3 bijection") {
    // coordinate 1 is the least significant digit
    Point p;
    p.n = 3;
    p.x = {2, 1, 0};
    CHECK(point_index(p) == 5);
    CHECK(point_at(5, 3) == p);

    for (int n = 1; n <= 4; ++n)
        for (int idx = 0; idx < pow3(n); ++idx)
            CHECK(point_index(point_at(idx, n)) == idx);

    CHECK_THROWS_AS(point_at(pow3(3), 3), error);
    CHECK_THROWS_AS(point_at(-1, 2), error);
}

TEST_CASE("neighbors are the 2n points at Hamming distance one") {
    for (int n = 1; n <= 4; ++n) {
        for (int idx = 0; idx < pow3(n); ++idx) {
            const Point p = point_at(idx, n);
            const std::vector<Point> nbrs = neighbors(p);
            CHECK(int(nbrs.size()) == 2 * n);
            std::set<int> seen;
            for (const Point& q : nbrs) {
                int diff = 0;
                for (int i = 0; i < n; ++i)
                    if (p.x[size_t(i)] != q.x[size_t(i)]) ++diff;
                CHECK(diff == 1);
                seen.insert(point_index(q));
            }
            CHECK(int(seen.size()) == 2 * n);  // all distinct

            int buf[2 * kMaxDim];
            const int cnt = neighbor_indices(idx, n, buf);
            REQUIRE(cnt == 2 * n);
            std::set<int> via_buf(buf, buf + cnt);
            CHECK(via_buf == seen);
        }
    }
}

TEST_CASE("adjacency is symmetric") {
    const int n = 3;
    int buf[2 * kMaxDim];
    for (int idx = 0; idx < pow3(n); ++idx) {
        const int cnt = neighbor_indices(idx, n, buf);
        for (int k = 0; k < cnt; ++k) {
            int back[2 * kMaxDim];
            const int bcnt = neighbor_indices(buf[k], n, back);
            CHECK(std::count(back, back + bcnt, idx) == 1);
        }
    }
}

TEST_CASE("vertex set bit array and JSON round trip") {
    VertexSet s(3);
    CHECK(s.universe() == 27);
    CHECK(s.size() == 0);
    s.set(0);
    s.set(13);
    s.set(26);
    CHECK(s.size() == 3);
    CHECK(s.test(13));
    s.reset(13);
    CHECK(!s.test(13));
    s.set(13);

    CHECK(s.indices() == std::vector<int>{0, 13, 26});
    const VertexSet t = VertexSet::from_json(s.to_json());
    CHECK(t == s);
    CHECK(VertexSet::from_indices(3, {26, 0, 13}) == s);
}

TEST_CASE("lexicographic set order treats an absent vertex as smaller") {
    const VertexSet empty(2);
    const VertexSet zero = VertexSet::from_indices(2, {0});
    const VertexSet one = VertexSet::from_indices(2, {1});
    CHECK(VertexSet::lex_less(empty, zero));
    CHECK(!VertexSet::lex_less(zero, empty));
    CHECK(VertexSet::lex_less(one, zero));  // differ first at vertex 0
    CHECK(!VertexSet::lex_less(zero, zero));
}

TEST_CASE("induced degrees on hand-built sets") {
    CHECK(max_induced_degree(VertexSet(2)) == 0);
    CHECK(max_induced_degree(VertexSet::from_indices(2, {4})) == 0);
    // 0 and 1 differ in coordinate 1 only
    CHECK(max_induced_degree(VertexSet::from_indices(2, {0, 1})) == 1);
    // a full line: every member sees the other two
    CHECK(max_induced_degree(VertexSet::from_indices(2, {0, 1, 2})) == 2);

    const DegreeProfile prof = induced_degree_profile(VertexSet::from_indices(2, {0, 1, 5}));
    REQUIRE(prof.member_index == std::vector<int>{0, 1, 5});
    CHECK(prof.degree == std::vector<int>{1, 1, 0});
    CHECK(prof.max_degree == 1);
}

TEST_CASE("cosets enumerate all maximum independent sets") {
    for (int n = 1; n <= 4; ++n) {
        const std::vector<CosetParams> params = enumerate_coset_params(n);
        const std::vector<VertexSet> sets = enumerate_max_independent_sets(n);
        REQUIRE(int(params.size()) == 3 * (1 << (n - 1)));
        REQUIRE(sets.size() == params.size());

        std::set<std::vector<int>> distinct;
        for (size_t i = 0; i < params.size(); ++i) {
            const VertexSet& m = sets[i];
            CHECK(m == coset_independent_set(params[i], n));
            CHECK(m.size() == pow3(n - 1));
            CHECK(max_induced_degree(m) == 0);
            for (int dir = 1; dir <= n; ++dir) CHECK(is_saturated(m, dir));
            distinct.insert(m.indices());
        }
        CHECK(distinct.size() == params.size());
    }
}

TEST_CASE("coset order fixes b = 1..1 first and varies c fastest") {
    const std::vector<CosetParams> params = enumerate_coset_params(3);
    REQUIRE(params.size() == 12);
    CHECK(params[0].b == std::vector<uint8_t>{1, 1, 1});
    CHECK(params[0].c == 0);
    CHECK(params[1].b == std::vector<uint8_t>{1, 1, 1});
    CHECK(params[1].c == 1);
    CHECK(params[3].b == std::vector<uint8_t>{1, 1, 2});
    CHECK(params[3].c == 0);
    CHECK(params[11].b == std::vector<uint8_t>{1, 2, 2});
    CHECK(params[11].c == 2);
}

TEST_CASE("sum classes match their defining congruences") {
    for (int n = 2; n <= 5; ++n) {
        const SumClasses sc = abc_and_aprime(n);
        for (int idx = 0; idx < pow3(n); ++idx) {
            const Point p = point_at(idx, n);
            int sum = 0, skewed = 0;
            for (int i = 0; i < n; ++i) {
                sum += p.x[size_t(i)];
                skewed += (i == n - 1 ? 2 : 1) * p.x[size_t(i)];
            }
            CHECK(sc.a.test(idx) == (sum % 3 == 0));
            CHECK(sc.b.test(idx) == (sum % 3 == 1));
            CHECK(sc.c.test(idx) == (sum % 3 == 2));
            CHECK(sc.aprime.test(idx) == (skewed % 3 == 0));
        }
    }
}

TEST_CASE("saturation detects directions with an empty line") {
    const VertexSet lone = VertexSet::from_indices(2, {0});
    CHECK(!is_saturated(lone, 1));
    CHECK(!is_saturated(lone, 2));
    // one point per direction-1 line
    const VertexSet diag = VertexSet::from_indices(2, {0, 4, 8});
    CHECK(is_saturated(diag, 1));
    CHECK(is_saturated(diag, 2));
}

TEST_CASE("two-point line counts agree with a naive line scan") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            VertexSet s(n);
            for (int idx = 0; idx < pow3(n); ++idx)
                if (rng() % 3 == 0) s.set(idx);
            for (int dir = 1; dir <= n; ++dir) {
                int naive = 0;
                const int step = pow3(dir - 1);
                for (int idx = 0; idx < pow3(n); ++idx) {
                    if ((idx / step) % 3 != 0) continue;  // base point of the line
                    const int members =
                        s.test(idx) + s.test(idx + step) + s.test(idx + 2 * step);
                    if (members == 2) ++naive;
                }
                CHECK(count_two_point_lines(s, dir) == naive);
            }
        }
    }
}

} // TEST_SUITE
