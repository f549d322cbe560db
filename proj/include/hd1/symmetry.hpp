#pragma once

// Automorphisms of H(n,3): sigma(x)_j = c_j * x_{perm^-1(j)} + y_j with a
// coordinate permutation, per-coordinate signs in {1,2} and a translation.
// Canonical forms are computed by full orbit minimisation.

#include <cstdint>
#include <string>
#include <vector>

#include "hd1/lattice.hpp"

namespace hd1 {

struct Automorphism {
    // perm[i] = image of coordinate i+1, 0-based value; signs/shift are
    // indexed by the TARGET coordinate j of the formula above.
    std::vector<int> perm;
    std::vector<uint8_t> signs;  // entries 1 or 2
    std::vector<uint8_t> shift;  // entries 0..2

    int n() const { return int(perm.size()); }
    static Automorphism identity(int n);

    std::string to_json() const;  // {"perm":[1-based],"signs":[...],"shift":[...]}
    static Automorphism from_json(const std::string& text);
};

Point apply(const Automorphism& s, const Point& p);
VertexSet apply_set(const Automorphism& s, const VertexSet& set);
Automorphism compose(const Automorphism& s, const Automorphism& t);  // s after t
Automorphism inverse(const Automorphism& s);

// Number of group elements: 3^n * n! * 2^n.
uint64_t group_order(int n);

// All group elements in (perm lexicographic, signs lexicographic, shift
// index) order. Intended for small n; refuses n > 4 (31104 elements).
std::vector<Automorphism> enumerate_group(int n);

// Lexicographically smallest bit array over the full orbit of S (cap n <= 6;
// n = 6 takes tens of seconds per call).
VertexSet canonical_form(const VertexSet& s);

bool are_isomorphic(const VertexSet& a, const VertexSet& b);

// Finds a witness g with apply_set(g, a) == b, or returns false. Same cap as
// canonical_form; full group scan.
bool find_isomorphism(const VertexSet& a, const VertexSet& b, Automorphism& witness);

} // namespace hd1
