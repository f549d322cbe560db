#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "hd1/constructions.hpp"
#include "hd1/error.hpp"
#include "hd1/symmetry.hpp"

using namespace hd1;

namespace {

// uniform random group element, avoiding enumerate_group's small-n cap
Automorphism random_auto(int n, std::mt19937& rng) {
    Automorphism g = Automorphism::identity(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(g.perm[size_t(i)], g.perm[size_t(rng() % uint32_t(i + 1))]);
    for (int j = 0; j < n; ++j) {
        g.signs[size_t(j)] = uint8_t(1 + rng() % 2);
        g.shift[size_t(j)] = uint8_t(rng() % 3);
    }
    return g;
}

} // namespace

TEST_SUITE("symmetry") {

TEST_CASE("group order is 3^n n! 2^n") {
    CHECK(group_order(1) == 6);
    CHECK(group_order(2) == 72);
    CHECK(group_order(3) == 1296);
    CHECK(group_order(4) == 31104);
}

TEST_CASE("the full n=2 group has 72 distinct actions") {
    const std::vector<Automorphism> group = enumerate_group(2);
    REQUIRE(group.size() == 72);

    std::set<std::vector<int>> images;
    for (const Automorphism& g : group) {
        std::vector<int> img(9);
        for (int idx = 0; idx < 9; ++idx) img[size_t(idx)] = point_index(apply(g, point_at(idx, 2)));
        // a bijection on the 9 vertices
        CHECK(std::set<int>(img.begin(), img.end()).size() == 9);
        images.insert(img);
    }
    CHECK(images.size() == 72);
    CHECK_THROWS_AS(enumerate_group(5), error);
}

TEST_CASE("composition applies right-hand factor first") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Automorphism s = random_auto(3, rng);
        const Automorphism t = random_auto(3, rng);
        const Automorphism st = compose(s, t);
        for (int idx = 0; idx < 27; ++idx) {
            const Point p = point_at(idx, 3);
            CHECK(apply(st, p) == apply(s, apply(t, p)));
        }
    }
}

TEST_CASE("inverse undoes apply") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Automorphism g = random_auto(4, rng);
        const Automorphism gi = inverse(g);
        for (int idx = 0; idx < 81; idx += 5) {
            const Point p = point_at(idx, 4);
            CHECK(apply(gi, apply(g, p)) == p);
            CHECK(apply(g, apply(gi, p)) == p);
        }
    }
}

TEST_CASE("automorphisms preserve adjacency and set size") {
    std::mt19937 rng(17);
    const VertexSet d3 = canonical_dn(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Automorphism g = random_auto(3, rng);
        const VertexSet img = apply_set(g, d3);
        CHECK(img.size() == d3.size());
        CHECK(max_induced_degree(img) == max_induced_degree(d3));
    }
}

TEST_CASE("automorphism JSON round trip") {
    std::mt19937 rng(19);
    const Automorphism g = random_auto(3, rng);
    const Automorphism h = Automorphism::from_json(g.to_json());
    CHECK(h.perm == g.perm);
    CHECK(h.signs == g.signs);
    CHECK(h.shift == g.shift);
}

TEST_CASE("canonical form is orbit-invariant and idempotent") {
    std::mt19937 rng(23);
    const VertexSet d3 = canonical_dn(3);
    const VertexSet form = canonical_form(d3);
    CHECK(canonical_form(form) == form);
    for (int trial = 0; trial < 30; ++trial)
        CHECK(canonical_form(apply_set(random_auto(3, rng), d3)) == form);
}

TEST_CASE("the two n=3 extremal classes have different forms") {
    const VertexSet d3 = canonical_dn(3);
    const VertexSet t3 = fixture_set("t3");
    CHECK(d3.size() == t3.size());
    CHECK(canonical_form(d3) != canonical_form(t3));
    CHECK(!are_isomorphic(d3, t3));
}

TEST_CASE("isomorphism witness maps one set onto the other") {
    std::mt19937 rng(29);
    const VertexSet d3 = canonical_dn(3);
    const VertexSet img = apply_set(random_auto(3, rng), d3);
    REQUIRE(are_isomorphic(d3, img));
    Automorphism w = Automorphism::identity(3);
    REQUIRE(find_isomorphism(d3, img, w));
    CHECK(apply_set(w, d3) == img);
}

TEST_CASE("canonical form refuses dimensions beyond its scan cap") {
    CHECK_THROWS_AS(canonical_form(canonical_dn(7)), error);
}

} // TEST_SUITE
