#pragma once

// Points, vertex sets, adjacency, independent sets, lines and induced-degree
// computations on the ternary Hamming graph H(n,3): vertices Z_3^n, edges
// between points at Hamming distance 1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hd1/error.hpp"

namespace hd1 {

inline constexpr int kMaxDim = 12;

// 3^0 .. 3^12
inline constexpr std::array<int32_t, kMaxDim + 1> kPow3 = [] {
    std::array<int32_t, kMaxDim + 1> p{};
    p[0] = 1;
    for (int i = 1; i <= kMaxDim; ++i) p[i] = 3 * p[i - 1];
    return p;
}();

inline int pow3(int n) {
    if (n < 0 || n > kMaxDim) fail(errc::dimension, "pow3: exponent out of range");
    return kPow3[n];
}

// A point of Z_3^n. Coordinates are 1-based in the API surface (direction i
// means coordinate i) but stored 0-based in x[0..n).
struct Point {
    int n = 0;
    std::array<uint8_t, kMaxDim> x{};

    bool operator==(const Point&) const = default;
};

// Index codec: index = sum_i x_i * 3^(i-1), coordinate 1 least significant.
int point_index(const Point& p);
Point point_at(int index, int n);

// The 2n neighbours of x (Hamming distance exactly 1).
std::vector<Point> neighbors(const Point& p);

// Neighbour indices of the vertex with the given index, written into out
// (size >= 2n); returns the count (2n).
int neighbor_indices(int index, int n, int* out);

// A subset of Z_3^n as a bit array of length 3^n over the index codec.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    static VertexSet from_points(int n, const std::vector<Point>& pts);
    static VertexSet from_indices(int n, const std::vector<int>& idxs);

    int n() const { return n_; }
    int universe() const { return kPow3[n_]; }
    bool test(int index) const { return (bits_[index >> 6] >> (index & 63)) & 1; }
    void set(int index) { bits_[index >> 6] |= uint64_t(1) << (index & 63); }
    void reset(int index) { bits_[index >> 6] &= ~(uint64_t(1) << (index & 63)); }
    int size() const;

    std::vector<int> indices() const;     // sorted ascending
    std::vector<Point> points() const;    // in index order

    const std::vector<uint64_t>& words() const { return bits_; }
    std::vector<uint64_t>& words() { return bits_; }

    bool operator==(const VertexSet&) const = default;

    // Order used for canonical forms: the set whose earliest differing vertex
    // is absent compares smaller (bitwise lexicographic from index 0 up).
    static bool lex_less(const VertexSet& a, const VertexSet& b);

    std::string to_json() const;                  // {"n":..,"points":[..]} sorted
    static VertexSet from_json(const std::string& text);

private:
    int n_ = 0;
    std::vector<uint64_t> bits_;
};

// Per-member induced degrees inside S, plus the maximum (0 for empty S).
struct DegreeProfile {
    std::vector<int> member_index;   // indices of members, ascending
    std::vector<int> degree;         // parallel to member_index
    int max_degree = 0;
};
DegreeProfile induced_degree_profile(const VertexSet& s);
int max_induced_degree(const VertexSet& s);

// A line {x, x+e_i, x+2e_i}: base has coordinate `direction` equal to 0.
struct Line {
    Point base;
    int direction = 1;  // 1-based
};

// Coset parameters b in {1,2}^n with b_1 = 1 and c in Z_3; the coset is the
// maximum independent set {x : sum b_i x_i == c (mod 3)} of size 3^(n-1).
struct CosetParams {
    std::vector<uint8_t> b;  // length n, entries 1 or 2, b[0] == 1
    uint8_t c = 0;
};

VertexSet coset_independent_set(const CosetParams& p, int n);
// All 3 * 2^(n-1) maximum independent sets, in lexicographic (b, c) order.
std::vector<VertexSet> enumerate_max_independent_sets(int n);
std::vector<CosetParams> enumerate_coset_params(int n);

// The three coordinate-sum classes and the skewed variant:
// A_n: sum == 0, B_n: sum == 1, C_n: sum == 2,
// A'_n: x_1 + ... + x_{n-1} + 2 x_n == 0.
struct SumClasses {
    VertexSet a, b, c, aprime;
};
SumClasses abc_and_aprime(int n);

// True iff every line in direction i (1-based) meets S.
bool is_saturated(const VertexSet& s, int direction);

// Number of direction-k lines containing exactly two members of S.
int count_two_point_lines(const VertexSet& s, int direction);

} // namespace hd1
